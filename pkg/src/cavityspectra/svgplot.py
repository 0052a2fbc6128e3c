"""Tiny dependency-free SVG renderings for the CLI (convenience only, CSV is the contract)."""
from __future__ import annotations

import math

_MARGIN = 50.0
_WIDTH = 640.0
_HEIGHT = 420.0


def _finite(values):
    return [v for v in values if v is not None and math.isfinite(v)]


def _scale(lo, hi):
    if hi <= lo:
        hi = lo + 1.0
    return lo, hi


def render_line_plot(path, xs, series, labels=(), title=""):
    """Polyline plot of one or more (same-x) series; gaps where a value is None."""
    flat = _finite([v for ys in series for v in ys])
    if not flat:
        flat = [0.0, 1.0]
    x_lo, x_hi = _scale(min(xs), max(xs))
    y_lo, y_hi = _scale(min(flat), max(flat))
    inner_w = _WIDTH - 2 * _MARGIN
    inner_h = _HEIGHT - 2 * _MARGIN

    def px(x):
        return _MARGIN + (x - x_lo) / (x_hi - x_lo) * inner_w

    def py(y):
        return _HEIGHT - _MARGIN - (y - y_lo) / (y_hi - y_lo) * inner_h

    colors = ("#000000", "#888888", "#444444", "#bbbbbb")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH:.0f}" height="{_HEIGHT:.0f}">',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{inner_w}" height="{inner_h}" fill="none" stroke="black"/>',
        f'<text x="{_WIDTH / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<text x="{_MARGIN}" y="{_HEIGHT - 8}" font-size="11">x: [{x_lo:g}, {x_hi:g}]  y: [{y_lo:g}, {y_hi:g}]</text>',
    ]
    for i, ys in enumerate(series):
        color = colors[i % len(colors)]
        dash = "" if i % 2 == 0 else ' stroke-dasharray="6,4"'
        run = []
        for x, y in zip(xs, ys):
            if y is None or not math.isfinite(y):
                if len(run) > 1:
                    pts = " ".join(f"{a:.2f},{b:.2f}" for a, b in run)
                    parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}"{dash}/>')
                run = []
                continue
            run.append((px(x), py(y)))
        if len(run) > 1:
            pts = " ".join(f"{a:.2f},{b:.2f}" for a, b in run)
            parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}"{dash}/>')
        if i < len(labels):
            parts.append(
                f'<text x="{_WIDTH - _MARGIN}" y="{_MARGIN + 16 * (i + 1)}" text-anchor="end" '
                f'font-size="11" fill="{color}">{labels[i]}</text>'
            )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")


def render_heatmap(path, xs, ys, grid, title=""):
    """Grayscale cell map of grid[i][j] at (xs[i], ys[j]); nonpositive cells are black."""
    nx, ny = len(xs), len(ys)
    vmax = max((v for row in grid for v in row if math.isfinite(v) and v > 0.0), default=1.0)
    inner_w = _WIDTH - 2 * _MARGIN
    inner_h = _HEIGHT - 2 * _MARGIN
    cw = inner_w / nx
    ch = inner_h / ny
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH:.0f}" height="{_HEIGHT:.0f}">',
        f'<text x="{_WIDTH / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
    ]
    for i in range(nx):
        for j in range(ny):
            v = grid[i][j]
            if not math.isfinite(v) or v <= 0.0:
                shade = 0
            else:
                shade = int(round(255 * min(v / vmax, 1.0)))
            parts.append(
                f'<rect x="{_MARGIN + i * cw:.2f}" y="{_HEIGHT - _MARGIN - (j + 1) * ch:.2f}" '
                f'width="{cw + 0.5:.2f}" height="{ch + 0.5:.2f}" '
                f'fill="rgb({shade},{shade},{shade})"/>'
            )
    parts.append(
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{inner_w}" height="{inner_h}" fill="none" stroke="black"/>'
    )
    parts.append(
        f'<text x="{_MARGIN}" y="{_HEIGHT - 8}" font-size="11">x: [{min(xs):g}, {max(xs):g}]  '
        f'y: [{min(ys):g}, {max(ys):g}]  white = {vmax:.4g}, black &#8804; 0</text>'
    )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
