"""End-to-end verification of the parallel-surface statement.

Given normalized surface data and its integrated frame at one spectral
value, this assembles every registered check: the compatibility residual,
frame unimodularity, normal-field algebra, the exact parallel identity and
equidistance, measured-versus-closed-form geometry on both surfaces, the
homothety match with the Euclidean data, and the opposite-sign bookkeeping
for the measured mean curvatures.
"""

from __future__ import annotations

from .errors import ConfigError, InvalidInputError
from .frames import ExtendedFrame, shift_frame
from .measure import (
    closed_form_max_diff,
    closed_form_primary,
    closed_form_shifted,
    conformality_defect,
    homothety_scale,
    hopf_constancy,
    hopf_match,
    hopf_phase_defect,
    isothermic_defect,
    lawson_data,
    mean_constancy,
    mean_match,
    mean_sign,
    measure,
    metric_match,
)
from .report import CheckRecord, VerificationReport, default_tolerances, registry_names
from .surface_data import SurfaceData, max_gauss_residual
from .surfaces import (
    equidistance_defect,
    normal_field,
    normal_orthogonality_defect,
    normal_unit_defect,
    parallel_identity_residual,
    surface_primary,
    surface_shifted,
)


def resolve_tolerances(overrides: dict[str, float] | None = None) -> dict[str, float]:
    """Default tolerances with overrides applied; unknown names are refused."""
    tols = default_tolerances()
    if overrides:
        unknown = sorted(set(overrides) - set(tols))
        if unknown:
            raise ConfigError(f"unknown tolerance names: {', '.join(unknown)}")
        for name, val in overrides.items():
            val = float(val)
            if not val > 0.0:
                raise ConfigError(f"tolerance {name} must be positive, got {val}")
            tols[name] = val
    return tols


def verify_theorem(
    data: SurfaceData,
    frame: ExtendedFrame,
    tolerances: dict[str, float] | None = None,
) -> VerificationReport:
    """Run every registered check and return the report.

    Failures are carried in the report, never raised; only structural
    problems (mismatched grids, non-normalized data, unknown tolerance
    names) raise.
    """
    if data.grid != frame.grid:
        raise InvalidInputError("data and frame live on different grids")
    if not data.normalized:
        raise InvalidInputError(
            "verification requires normalized isothermic data with H = 2Q; "
            f"got H = {data.H}, Q = {data.Q}"
        )
    tols = resolve_tolerances(tolerances)
    lam = frame.lam

    frame_s = shift_frame(frame)
    sur_p = surface_primary(frame)
    sur_s = surface_shifted(frame)
    nor_p = normal_field(frame)
    nor_s = normal_field(frame_s)
    mea_p = measure(sur_p, nor_p)
    mea_s = measure(sur_s, nor_s)
    clo_p = closed_form_primary(data, lam)
    clo_s = closed_form_shifted(data, lam)
    s_hom = homothety_scale(data.H, lam)

    sign_p = mean_sign(mea_p)
    sign_s = mean_sign(mea_s)

    values = {
        "gauss_residual_max": max_gauss_residual(data),
        "det_drift_max": max(frame.max_det_drift(), frame_s.max_det_drift()),
        "normal_unit_max_dev": max(normal_unit_defect(nor_p), normal_unit_defect(nor_s)),
        "normal_orthogonality_max_dev": max(
            normal_orthogonality_defect(sur_p, nor_p),
            normal_orthogonality_defect(sur_s, nor_s),
        ),
        "parallel_identity_residual": parallel_identity_residual(frame),
        "equidistance_max_dev": equidistance_defect(sur_p, sur_s),
        "metric_match_primary": metric_match(mea_p, clo_p),
        "hopf_match_primary": hopf_match(mea_p, clo_p),
        "mean_match_primary": mean_match(mea_p, clo_p),
        "conformality_primary": conformality_defect(mea_p),
        "isothermic_primary": isothermic_defect(mea_p),
        "mean_constancy_primary": mean_constancy(mea_p),
        "hopf_constancy_primary": hopf_constancy(mea_p),
        "hopf_phase_primary": hopf_phase_defect(mea_p),
        "lawson_match_primary": closed_form_max_diff(
            lawson_data(data, s_hom, "of-dual"), clo_p
        ),
        "metric_match_shifted": metric_match(mea_s, clo_s),
        "hopf_match_shifted": hopf_match(mea_s, clo_s),
        "mean_match_shifted": mean_match(mea_s, clo_s),
        "conformality_shifted": conformality_defect(mea_s),
        "isothermic_shifted": isothermic_defect(mea_s),
        "mean_constancy_shifted": mean_constancy(mea_s),
        "hopf_constancy_shifted": hopf_constancy(mea_s),
        "hopf_phase_shifted": hopf_phase_defect(mea_s),
        "lawson_match_shifted": closed_form_max_diff(
            lawson_data(data, homothety_scale(data.H, lam, shifted=True), "of-f"), clo_s
        ),
        # 0 when the two measured signs are opposite, 2 when equal
        "mean_sign_opposite": abs(sign_p + sign_s),
    }

    records = tuple(
        CheckRecord(name, float(values[name]), tols[name]) for name in registry_names()
    )
    g = data.grid
    metadata = {
        "lambda": f"{lam:.17g}",
        "q": f"{frame.spectral.q:.17g}",
        "r": f"{frame.spectral.r:.17g}",
        "H": f"{data.H:.17g}",
        "Q": f"{data.Q:.17g}",
        "nx": str(g.nx),
        "ny": str(g.ny),
        "hx": f"{g.hx:.17g}",
        "hy": f"{g.hy:.17g}",
        "homothety_scale": f"{s_hom:.17g}",
        "mean_sign_primary": f"{sign_p:+.0f}",
        "mean_sign_shifted": f"{sign_s:+.0f}",
        "conformal_warning_primary": str(mea_p.conformal_warning).lower(),
        "conformal_warning_shifted": str(mea_s.conformal_warning).lower(),
    }
    return VerificationReport(records=records, metadata=metadata)
