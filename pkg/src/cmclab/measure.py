"""Discrete measurement of surface geometry and the closed-form targets.

First fundamental form, Hopf differential function and mean curvature are
recovered from a surface grid by second-order central differences, using the
exact algebraic normal rather than a reconstructed one so that all
finite-difference error is isolated in derivatives of the position f.
Because <f, N> = 0, the ambient second derivatives may be paired with N
directly: the components along f that distinguish ambient from intrinsic
second derivatives are annihilated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSpectralValueError,
    InvalidInputError,
    NumericalError,
)
from .minkowski import mink_dot
from .surface_data import GridSpec, SurfaceData, _locked
from .surfaces import H3SurfaceGrid, NormalField

# |Fc|/E beyond this marks the parametrization as visibly non-conformal
CONFORMAL_WARN_RATIO = 0.05

LAWSON_PRIMARY = "of-f"
LAWSON_DUAL = "of-dual"


@dataclass(frozen=True, eq=False)
class MeasuredData:
    """Per-point measured geometry; boundary ring is NaN."""

    grid: GridSpec
    E: np.ndarray
    Fc: np.ndarray
    G: np.ndarray
    Qm: np.ndarray
    Hm: np.ndarray
    conformal_warning: bool

    def __post_init__(self):
        shape = (self.grid.nx, self.grid.ny)
        for name in ("E", "Fc", "G", "Hm"):
            a = np.asarray(getattr(self, name), dtype=float)
            if a.shape != shape:
                raise InvalidInputError(f"{name} shape {a.shape} != {shape}")
            object.__setattr__(self, name, _locked(a))
        Qm = np.asarray(self.Qm, dtype=complex)
        if Qm.shape != shape:
            raise InvalidInputError(f"Qm shape {Qm.shape} != {shape}")
        object.__setattr__(self, "Qm", _locked(Qm, dtype=complex))


@dataclass(frozen=True, eq=False)
class ClosedFormData:
    """Target data: conformal metric factor per point, constant Hopf value
    and constant mean curvature."""

    metric_factor: np.ndarray
    hopf: float
    mean: float

    def __post_init__(self):
        mf = np.asarray(self.metric_factor, dtype=float)
        if np.any(mf <= 0.0):
            raise InvalidInputError("metric factor must be positive")
        object.__setattr__(self, "metric_factor", _locked(mf))


def _interior(a: np.ndarray) -> np.ndarray:
    return a[1:-1, 1:-1]


def measure(surface: H3SurfaceGrid, normal: NormalField) -> MeasuredData:
    """Measure E, Fc, G, Qm, Hm on the interior of a surface grid.

    Uses f_zz = (f_xx - f_yy - 2i f_xy)/4 and f_zzbar = (f_xx + f_yy)/4,
    then Qm = <f_zz, N> and Hm = 2 <f_zzbar, N> / E with the conformal
    factor read off from the measured E.
    """
    if surface.grid != normal.grid:
        raise InvalidInputError("surface and normal live on different grids")
    g = surface.grid
    f = surface.points
    hx, hy = g.hx, g.hy

    fx = (f[2:, 1:-1] - f[:-2, 1:-1]) / (2.0 * hx)
    fy = (f[1:-1, 2:] - f[1:-1, :-2]) / (2.0 * hy)
    fxx = (f[2:, 1:-1] - 2.0 * f[1:-1, 1:-1] + f[:-2, 1:-1]) / hx**2
    fyy = (f[1:-1, 2:] - 2.0 * f[1:-1, 1:-1] + f[1:-1, :-2]) / hy**2
    fxy = (f[2:, 2:] - f[2:, :-2] - f[:-2, 2:] + f[:-2, :-2]) / (4.0 * hx * hy)

    N = _interior(normal.vectors)
    E = mink_dot(fx, fx)
    Fc = mink_dot(fx, fy)
    G = mink_dot(fy, fy)
    f_zz = 0.25 * (fxx - fyy - 2.0j * fxy)
    f_zzb = 0.25 * (fxx + fyy)
    Qm = mink_dot(f_zz, N)
    Hm = 2.0 * mink_dot(f_zzb, N) / E

    def full(interior, dtype=float):
        out = np.full((g.nx, g.ny), np.nan, dtype=dtype)
        out[1:-1, 1:-1] = interior
        return out

    warn = bool(np.max(np.abs(Fc) / E) > CONFORMAL_WARN_RATIO)
    return MeasuredData(
        grid=g,
        E=full(E),
        Fc=full(Fc),
        G=full(G),
        Qm=full(Qm, dtype=complex),
        Hm=full(Hm.real),
        conformal_warning=warn,
    )


def _check_lam(lam: float) -> None:
    if not lam > 0:
        raise InvalidInputError("spectral value must be positive")
    if lam == 1.0:
        raise DegenerateSpectralValueError(
            "spectral value 1 collapses the metric factor"
        )


def closed_form_primary(data: SurfaceData, lam: float) -> ClosedFormData:
    """Closed-form data of the primary surface at spectral value lam.

    Metric factor Q^2 e^{-2u} (lam - 1/lam)^2, Hopf value QH(1/lam - lam)/2,
    mean curvature (1/lam + lam)/(1/lam - lam).  The formulas describe the
    measured surfaces under the H = 2Q normalization.
    """
    _check_lam(lam)
    d = lam - 1.0 / lam
    return ClosedFormData(
        metric_factor=data.Q**2 * np.exp(-2.0 * data.u) * d**2,
        hopf=0.5 * data.Q * data.H * (-d),
        mean=(1.0 / lam + lam) / (1.0 / lam - lam),
    )


def closed_form_shifted(data: SurfaceData, lam: float) -> ClosedFormData:
    """Closed-form data of the shifted surface: metric factor
    Q^2 e^{2u} (lam - 1/lam)^2, Hopf value QH(lam - 1/lam)/2, mean
    curvature (lam + 1/lam)/(lam - 1/lam)."""
    _check_lam(lam)
    d = lam - 1.0 / lam
    return ClosedFormData(
        metric_factor=data.Q**2 * np.exp(2.0 * data.u) * d**2,
        hopf=0.5 * data.Q * data.H * d,
        mean=(lam + 1.0 / lam) / (lam - 1.0 / lam),
    )


def homothety_scale(H: float, lam: float, shifted: bool = False) -> float:
    """The scale s = H(1/lam - lam)/2 relating the hyperbolic surface's data
    to Euclidean data; negated for the shifted surface."""
    if H == 0:
        raise InvalidInputError("mean curvature H must be nonzero")
    if not 0.0 < lam < 1.0:
        raise InvalidInputError(f"spectral value must lie in (0, 1), got {lam}")
    s = 0.5 * H * (1.0 / lam - lam)
    return -s if shifted else s


def lawson_data(data: SurfaceData, s: float, which: str) -> ClosedFormData:
    """Euclidean data scaled by a homothety s: metric factor s^2 e^{2u}
    ("of-f") or s^2 e^{-2u} ("of-dual"), Hopf value sQ, mean curvature
    sqrt((H/s)^2 + 1)."""
    if s == 0:
        raise InvalidInputError("homothety scale must be nonzero")
    if which == LAWSON_PRIMARY:
        mf = s**2 * np.exp(2.0 * data.u)
    elif which == LAWSON_DUAL:
        mf = s**2 * np.exp(-2.0 * data.u)
    else:
        raise InvalidInputError(f"unknown Lawson side {which!r}")
    return ClosedFormData(
        metric_factor=mf,
        hopf=s * data.Q,
        mean=float(np.sqrt((data.H / s) ** 2 + 1.0)),
    )


def closed_form_max_diff(a: ClosedFormData, b: ClosedFormData) -> float:
    """Largest absolute difference between two closed-form data sets,
    comparing Hopf and mean curvature by modulus."""
    return max(
        float(np.max(np.abs(a.metric_factor - b.metric_factor))),
        abs(abs(a.hopf) - abs(b.hopf)),
        abs(abs(a.mean) - abs(b.mean)),
    )


def metric_match(measured: MeasuredData, closed: ClosedFormData) -> float:
    """Max relative deviation of measured E from the closed-form factor."""
    E = _interior(measured.E)
    mf = _interior(np.broadcast_to(closed.metric_factor, measured.E.shape))
    return float(np.max(np.abs(E - mf) / mf))


def hopf_match(measured: MeasuredData, closed: ClosedFormData) -> float:
    """Max relative deviation of |Qm| from the closed-form Hopf modulus."""
    target = abs(closed.hopf)
    return float(np.max(np.abs(np.abs(_interior(measured.Qm)) - target)) / target)


def mean_match(measured: MeasuredData, closed: ClosedFormData) -> float:
    """Max relative deviation of |Hm| from the closed-form mean modulus.

    Moduli are compared; the measured sign relative to the normal choice is
    reported separately.
    """
    target = abs(closed.mean)
    return float(np.max(np.abs(np.abs(_interior(measured.Hm)) - target)) / target)


def conformality_defect(measured: MeasuredData) -> float:
    """Max |Fc| / E over the interior."""
    return float(np.max(np.abs(_interior(measured.Fc)) / _interior(measured.E)))


def isothermic_defect(measured: MeasuredData) -> float:
    """Max |E - G| / E over the interior."""
    E = _interior(measured.E)
    return float(np.max(np.abs(E - _interior(measured.G)) / E))


def mean_constancy(measured: MeasuredData) -> float:
    """Standard deviation of Hm over the interior."""
    return float(np.std(_interior(measured.Hm)))


def hopf_constancy(measured: MeasuredData) -> float:
    """Standard deviation of |Qm| over the interior."""
    return float(np.std(np.abs(_interior(measured.Qm))))


def hopf_phase_defect(measured: MeasuredData) -> float:
    """Max angular deviation of arg(Qm) from its grid mean, modulo pi.

    The angle is doubled before averaging so that a phase jump of pi (an
    orientation artifact of the discretization) does not register.
    """
    w = _interior(measured.Qm) ** 2
    mags = np.abs(w)
    if np.min(mags) == 0.0:
        raise NumericalError("vanishing Hopf value; phase undefined")
    ref = np.mean(w / mags)
    if ref == 0.0:
        raise NumericalError("Hopf phases cancel; no mean direction")
    return float(np.max(np.abs(np.angle(w * np.conj(ref)))) / 2.0)


def mean_sign(measured: MeasuredData) -> float:
    """Sign of the interior average of Hm."""
    return float(np.sign(np.mean(_interior(measured.Hm))))


def numeric_normal(surface: H3SurfaceGrid) -> np.ndarray:
    """Reconstruct the unit normal from the surface grid alone.

    Solves <N, f> = <N, f_x> = <N, f_y> = 0, <N, N> = 1 per interior point
    via the null space of a 3x4 system; boundary ring is NaN.  The sign is
    whatever the solver returns; compare with numeric_normal_max_deviation.
    """
    g = surface.grid
    f = surface.points
    fx = (f[2:, 1:-1] - f[:-2, 1:-1]) / (2.0 * g.hx)
    fy = (f[1:-1, 2:] - f[1:-1, :-2]) / (2.0 * g.hy)
    eta = np.array([1.0, 1.0, 1.0, -1.0])
    rows = np.stack([_interior(f) * eta, fx * eta, fy * eta], axis=-2)
    _, _, vh = np.linalg.svd(rows)
    null = vh[..., -1, :]
    nn = mink_dot(null, null)
    if np.any(nn <= 0.0):
        raise NumericalError("reconstructed normal is not spacelike")
    null = null / np.sqrt(nn)[..., None]
    out = np.full((g.nx, g.ny, 4), np.nan)
    out[1:-1, 1:-1] = null
    return out


def numeric_normal_max_deviation(surface: H3SurfaceGrid, normal: NormalField) -> float:
    """Max deviation between the reconstructed normal and the algebraic one,
    after aligning the reconstruction's per-point sign."""
    if surface.grid != normal.grid:
        raise InvalidInputError("surface and normal live on different grids")
    Nn = numeric_normal(surface)[1:-1, 1:-1]
    Nr = _interior(normal.vectors)
    sign = np.sign(mink_dot(Nn, Nr))
    sign[sign == 0.0] = 1.0
    return float(np.max(np.abs(Nn * sign[..., None] - Nr)))
