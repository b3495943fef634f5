"""Numerical laboratory for constant mean curvature surfaces in hyperbolic
3-space.

Surfaces are built from conformal-factor data by integrating a moving-frame
system at a spectral value, then pushed to the hyperboloid model through the
Hermitian matrix representation.  The geometry of the result (metric, Hopf
differential, mean curvature, parallel-surface distance) is measured by
finite differences and checked against closed forms.
"""

from .errors import (
    CmcLabError,
    ConfigError,
    DegenerateSpectralValueError,
    IncompatibleDataError,
    IntegrationBlowupError,
    IntegrationFailureError,
    InternalConsistencyError,
    InvalidInputError,
    NumericalError,
    OutOfDomainError,
)
from .minkowski import (
    from_hermitian,
    h3_defect,
    hermitian_defect,
    minkowski_inner,
    to_hermitian,
)
from .surface_data import (
    GridSpec,
    SurfaceData,
    cylinder_data,
    delaunay_data,
    delaunay_profile,
    dual_data,
    gauss_residual,
    load_surface_data,
    max_gauss_residual,
    save_surface_data,
)
from .frames import (
    ExtendedFrame,
    SpectralParam,
    cylinder_frame_closed_form,
    cylinder_frame_lax_gauge,
    integrate_frame,
    lax_matrices,
    shift_frame,
    spectral_shift_matrix,
    two_path_discrepancy,
)
from .surfaces import (
    H3SurfaceGrid,
    NormalField,
    distance_grid,
    equidistance_defect,
    hyperbolic_distance,
    normal_field,
    parallel_identity_residual,
    surface_primary,
    surface_shifted,
)
from .measure import (
    ClosedFormData,
    MeasuredData,
    closed_form_primary,
    closed_form_shifted,
    homothety_scale,
    lawson_data,
    measure,
)
from .report import (
    CheckRecord,
    VerificationReport,
    default_tolerances,
    parse_machine,
    registry_names,
    render_machine,
    render_text,
)
from .verify import verify_theorem
from .config import RunConfig, load_config
from .pipeline import poincare_ball, run

__all__ = [
    "CmcLabError",
    "ConfigError",
    "DegenerateSpectralValueError",
    "IncompatibleDataError",
    "IntegrationBlowupError",
    "IntegrationFailureError",
    "InternalConsistencyError",
    "InvalidInputError",
    "NumericalError",
    "OutOfDomainError",
    "from_hermitian",
    "h3_defect",
    "hermitian_defect",
    "minkowski_inner",
    "to_hermitian",
    "GridSpec",
    "SurfaceData",
    "cylinder_data",
    "delaunay_data",
    "delaunay_profile",
    "dual_data",
    "gauss_residual",
    "load_surface_data",
    "max_gauss_residual",
    "save_surface_data",
    "ExtendedFrame",
    "SpectralParam",
    "cylinder_frame_closed_form",
    "cylinder_frame_lax_gauge",
    "integrate_frame",
    "lax_matrices",
    "shift_frame",
    "spectral_shift_matrix",
    "two_path_discrepancy",
    "H3SurfaceGrid",
    "NormalField",
    "distance_grid",
    "equidistance_defect",
    "hyperbolic_distance",
    "normal_field",
    "parallel_identity_residual",
    "surface_primary",
    "surface_shifted",
    "ClosedFormData",
    "MeasuredData",
    "closed_form_primary",
    "closed_form_shifted",
    "homothety_scale",
    "lawson_data",
    "measure",
    "CheckRecord",
    "VerificationReport",
    "default_tolerances",
    "parse_machine",
    "registry_names",
    "render_machine",
    "render_text",
    "verify_theorem",
    "RunConfig",
    "load_config",
    "poincare_ball",
    "run",
]
