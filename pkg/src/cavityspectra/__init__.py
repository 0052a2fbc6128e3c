"""Ground-state electric-field spectra in a plane-mirror cavity and homodyne detection."""

from .errors import (
    ExtrapolationDivergence,
    LightConeProximity,
    NumericalGuardError,
    QuadratureFailure,
    TailTooLarge,
)
from .units import (
    CavityGeometry,
    FieldPoint,
    FrequencyGrid,
    build_grid,
    from_internal,
    near_discontinuity,
    rescale_frequency,
    rescale_geometry,
    rescale_point,
    to_internal,
    validate_point,
)
from .imagesum import (
    GUARD_BAND,
    ImageDistances,
    SpacetimePoint,
    TruncationPolicy,
    image_distances,
    image_sum,
    two_point_yy_closed,
    two_point_yy_fd,
    two_point_yy_vacuum,
)
from .spectral import (
    SERIES_THRESHOLD,
    SpectralSample,
    SuppressionValue,
    normalized_difference,
    q_kernel,
    sigma_vacuum,
    sigma_vacuum_from_kernels,
    sigma_yy,
    sigma_yy_diag,
    suppression_db,
    w_kernel,
)
from .bhd import (
    ClassicalComponent,
    DetectorConfig,
    LOKernel,
    LOMode,
    QuadratureSpec,
    check_balance,
    dispersion_omega,
    lo_mode_fields,
    mean_current,
    mode_field_components,
    smeared_density,
    variance_approx,
    variance_current,
)
from .oracle import OracleConfig, convergence_report, sigma_via_numeric_ft

__version__ = "0.1.0"

__all__ = [
    "CavityGeometry",
    "ClassicalComponent",
    "DetectorConfig",
    "ExtrapolationDivergence",
    "FieldPoint",
    "FrequencyGrid",
    "GUARD_BAND",
    "ImageDistances",
    "LOKernel",
    "LOMode",
    "LightConeProximity",
    "NumericalGuardError",
    "OracleConfig",
    "QuadratureFailure",
    "QuadratureSpec",
    "SERIES_THRESHOLD",
    "SpacetimePoint",
    "SpectralSample",
    "SuppressionValue",
    "TailTooLarge",
    "TruncationPolicy",
    "build_grid",
    "check_balance",
    "convergence_report",
    "dispersion_omega",
    "from_internal",
    "image_distances",
    "image_sum",
    "lo_mode_fields",
    "mean_current",
    "mode_field_components",
    "near_discontinuity",
    "normalized_difference",
    "q_kernel",
    "rescale_frequency",
    "rescale_geometry",
    "rescale_point",
    "sigma_vacuum",
    "sigma_vacuum_from_kernels",
    "sigma_via_numeric_ft",
    "sigma_yy",
    "sigma_yy_diag",
    "smeared_density",
    "suppression_db",
    "to_internal",
    "two_point_yy_closed",
    "two_point_yy_fd",
    "two_point_yy_vacuum",
    "validate_point",
    "w_kernel",
    "variance_approx",
    "variance_current",
]
