"""Extended frames at a fixed spectral value.

The moving frame F solves F_z = F U, F_zbar = F V with

    U = 1/2 [[-u_z, 2 e^{-u} lambda^{-1} Q], [-H e^u, u_z]]
    V = 1/2 [[u_zbar, H e^u], [-2 e^{-u} lambda Q, -u_zbar]]

whose compatibility condition is the Gauss equation enforced by
surface_data.gauss_residual.  Integration runs in real coordinates,

    F_x = F (U + V),   F_y = F i (U - V),

by classical RK4 along the base row and then up and down each column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    IncompatibleDataError,
    IntegrationFailureError,
    InvalidInputError,
    OutOfDomainError,
)
from .surface_data import (
    GridSpec,
    SurfaceData,
    _locked,
    grid_derivatives,
    max_gauss_residual,
)

DET_DRIFT_TOL = 1e-8
COMPAT_TOL = 0.1


@dataclass(frozen=True)
class SpectralParam:
    """Spectral value lam with annulus radius r, constrained to 0 < r < lam < 1."""

    lam: float
    r: float | None = None

    def __post_init__(self):
        if self.r is None:
            object.__setattr__(self, "r", 0.5 * self.lam)
        if not 0.0 < self.r < self.lam < 1.0:
            raise InvalidInputError(
                f"need 0 < r < lambda < 1, got r = {self.r}, lambda = {self.lam}"
            )

    @property
    def q(self) -> float:
        # lam = e^q with q < 0
        return math.log(self.lam)


@dataclass(frozen=True, eq=False)
class ExtendedFrame:
    """Grid of unimodular 2x2 frames at one spectral value.

    F has shape (nx, ny, 2, 2).  Frames produced by integrate_frame equal the
    identity at base_index; frames produced by shift_frame carry the constant
    right factor D there instead.
    """

    grid: GridSpec
    F: np.ndarray
    spectral: SpectralParam
    base_index: tuple[int, int]

    def __post_init__(self):
        F = np.asarray(self.F, dtype=complex)
        if F.shape != (self.grid.nx, self.grid.ny, 2, 2):
            raise InvalidInputError(
                f"frame shape {F.shape} does not match grid "
                f"({self.grid.nx}, {self.grid.ny}, 2, 2)"
            )
        object.__setattr__(self, "F", _locked(F, dtype=complex))
        i, j = self.base_index
        if not (0 <= i < self.grid.nx and 0 <= j < self.grid.ny):
            raise OutOfDomainError(f"base index {self.base_index} outside grid")

    @property
    def lam(self) -> float:
        return self.spectral.lam

    def det_drift(self) -> np.ndarray:
        """|det F - 1| at every grid point."""
        return np.abs(np.linalg.det(self.F) - 1.0)

    def max_det_drift(self) -> float:
        return float(self.det_drift().max())


def lax_matrices(u, u_z, u_zbar, Q, H, lam):
    """The frame-system coefficient matrices (U, V) at one point.

    Both are traceless.  lam may be complex; on the unit circle with real u
    the pair satisfies V = -conj(U)^t, the unitary-frame relation.
    """
    if lam == 0:
        raise InvalidInputError("spectral value must be nonzero")
    eu = np.exp(u)
    emu = np.exp(-u)
    U = np.array(
        [[-0.5 * u_z, emu * Q / lam], [-0.5 * H * eu, 0.5 * u_z]], dtype=complex
    )
    V = np.array(
        [[0.5 * u_zbar, 0.5 * H * eu], [-emu * lam * Q, -0.5 * u_zbar]], dtype=complex
    )
    return U, V


def cylinder_frame_closed_form(z, lam):
    """Reference closed form of the flat-cylinder frame.

    Returns [[cosh g, lam^{-1/2} sinh g], [lam^{1/2} sinh g, cosh g]] with
    g = (i/4)(lam^{-1/2} z + lam^{1/2} zbar).  Determinant is identically 1
    and F(0) is the identity.

    Note: this form does not itself solve the frame system integrated here;
    direct substitution leaves constant factors of -i and i on the two
    off-diagonal entries.  The constant gauge diag(1, i), which fixes the
    initial value and the determinant, reconciles the two conventions; see
    cylinder_frame_lax_gauge.
    """
    if not lam > 0:
        raise InvalidInputError("spectral value must be positive")
    z = np.asarray(z, dtype=complex)
    sq = math.sqrt(lam)
    g = 0.25j * (z / sq + sq * np.conj(z))
    ch, sh = np.cosh(g), np.sinh(g)
    F = np.empty(z.shape + (2, 2), dtype=complex)
    F[..., 0, 0] = ch
    F[..., 0, 1] = sh / sq
    F[..., 1, 0] = sq * sh
    F[..., 1, 1] = ch
    return F


def cylinder_frame_lax_gauge(z, lam):
    """Cylinder frame in the gauge of the frame system.

    Equals diag(1, i) cylinder_frame_closed_form(z, lam) diag(1, -i), i.e.
    [[cosh g, -i lam^{-1/2} sinh g], [i lam^{1/2} sinh g, cosh g]]; this is
    the solution of F_z = F U, F_zbar = F V with F(0) = I for u = 0, H = 2Q
    (checked by finite-difference substitution).  Same determinant and same
    initial value as the reference form.
    """
    F = cylinder_frame_closed_form(z, lam)
    out = F.copy()
    out[..., 0, 1] *= -1j
    out[..., 1, 0] *= 1j
    return out


def spectral_shift_matrix(lam: float) -> np.ndarray:
    """D = diag(lam^{-1/2}, lam^{1/2}); det D = 1."""
    if not lam > 0:
        raise InvalidInputError("spectral value must be positive")
    sq = math.sqrt(lam)
    return np.array([[1.0 / sq, 0.0], [0.0, sq]], dtype=complex)


def _lax_arrays(u, uz, uzb, Q, H, lam):
    """Vectorized (U, V) over grids of u and its z-derivatives."""
    eu = np.exp(u)
    emu = np.exp(-u)
    U = np.empty(np.shape(u) + (2, 2), dtype=complex)
    U[..., 0, 0] = -0.5 * uz
    U[..., 0, 1] = emu * Q / lam
    U[..., 1, 0] = -0.5 * H * eu
    U[..., 1, 1] = 0.5 * uz
    V = np.empty_like(U)
    V[..., 0, 0] = 0.5 * uzb
    V[..., 0, 1] = 0.5 * H * eu
    V[..., 1, 0] = -emu * lam * Q
    V[..., 1, 1] = -0.5 * uzb
    return U, V


# cubic-interpolation weights for values at cell midpoints
_MID_CENTER = np.array([-1.0, 9.0, 9.0, -1.0]) / 16.0
_MID_LEFT = np.array([5.0, 15.0, -5.0, 1.0]) / 16.0


def _half_samples(a: np.ndarray, axis: int) -> np.ndarray:
    """Midpoint values along one axis via cubic interpolation, O(h^4)."""
    a = np.moveaxis(a, axis, 0)
    n = a.shape[0]
    out = np.empty((n - 1,) + a.shape[1:], dtype=a.dtype)
    w = _MID_CENTER
    out[1 : n - 2] = w[0] * a[: n - 3] + w[1] * a[1 : n - 2]
    out[1 : n - 2] += w[2] * a[2 : n - 1] + w[3] * a[3:]
    w = _MID_LEFT
    out[0] = w[0] * a[0] + w[1] * a[1] + w[2] * a[2] + w[3] * a[3]
    out[n - 2] = w[3] * a[n - 4] + w[2] * a[n - 3] + w[1] * a[n - 2] + w[0] * a[n - 1]
    return np.moveaxis(out, 0, axis)


def _coefficient_arrays(data: SurfaceData, lam: float):
    """A_x, A_y at grid nodes plus midpoint arrays along each direction."""

    def build(u, ux, uy):
        uz = 0.5 * (ux - 1j * uy)
        uzb = 0.5 * (ux + 1j * uy)
        U, V = _lax_arrays(u, uz, uzb, data.Q, data.H, lam)
        return U + V, 1j * (U - V)

    ux, uy = grid_derivatives(data.u, data.grid.hx, data.grid.hy)
    Ax, Ay = build(data.u, ux, uy)
    # coefficients at half-steps come from interpolated u, u_x, u_y
    Axm, _ = build(
        _half_samples(data.u, 0), _half_samples(ux, 0), _half_samples(uy, 0)
    )
    _, Aym = build(
        _half_samples(data.u, 1), _half_samples(ux, 1), _half_samples(uy, 1)
    )
    return Ax, Ay, Axm, Aym


def _rk4_cell(A0, Am, A1, h):
    """RK4 transition matrix for F' = F A across one cell; batched over
    leading axes."""
    eye = np.eye(2, dtype=complex)
    k1 = A0
    k2 = (eye + (0.5 * h) * k1) @ Am
    k3 = (eye + (0.5 * h) * k2) @ Am
    k4 = (eye + h * k3) @ A1
    return eye + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)


def _sweep(Ax, Ay, Axm, Aym, grid: GridSpec, base, order: str) -> np.ndarray:
    nx, ny = grid.nx, grid.ny
    hx, hy = grid.hx, grid.hy
    i0, j0 = base
    F = np.empty((nx, ny, 2, 2), dtype=complex)
    F[i0, j0] = np.eye(2)

    def row_sweep(js):
        # x-direction cells, batched over the j-slice
        for i in range(i0, nx - 1):
            M = _rk4_cell(Ax[i, js], Axm[i, js], Ax[i + 1, js], hx)
            F[i + 1, js] = F[i, js] @ M
        for i in range(i0, 0, -1):
            M = _rk4_cell(Ax[i, js], Axm[i - 1, js], Ax[i - 1, js], -hx)
            F[i - 1, js] = F[i, js] @ M

    def col_sweep(isl):
        for j in range(j0, ny - 1):
            M = _rk4_cell(Ay[isl, j], Aym[isl, j], Ay[isl, j + 1], hy)
            F[isl, j + 1] = F[isl, j] @ M
        for j in range(j0, 0, -1):
            M = _rk4_cell(Ay[isl, j], Aym[isl, j - 1], Ay[isl, j - 1], -hy)
            F[isl, j - 1] = F[isl, j] @ M

    if order == "xy":
        row_sweep(j0)
        col_sweep(slice(None))
    elif order == "yx":
        col_sweep(i0)
        row_sweep(slice(None))
    else:
        raise InvalidInputError(f"unknown sweep order {order!r}")
    return F


def integrate_frame(
    data: SurfaceData,
    spectral: SpectralParam,
    base_index: tuple[int, int] | None = None,
    compat_tol: float = COMPAT_TOL,
    det_tol: float = DET_DRIFT_TOL,
) -> ExtendedFrame:
    """Integrate the frame system over the grid of ``data`` at one spectral
    value.

    The base row through base_index (default: grid center) is integrated
    first, then every column, so the result is single-valued by construction;
    path independence is a property to be measured, see
    two_path_discrepancy.  Unimodularity is monitored, never restored by
    projection.
    """
    grid = data.grid
    if base_index is None:
        base_index = grid.center_index()
    i0, j0 = base_index
    if not (0 <= i0 < grid.nx and 0 <= j0 < grid.ny):
        raise OutOfDomainError(f"base index {base_index} outside grid")
    res = max_gauss_residual(data)
    if not res <= compat_tol:
        raise IncompatibleDataError(
            f"compatibility residual {res:.3e} exceeds {compat_tol:.3e}; "
            "the frame system would not be integrable"
        )
    Ax, Ay, Axm, Aym = _coefficient_arrays(data, spectral.lam)
    F = _sweep(Ax, Ay, Axm, Aym, grid, (i0, j0), "xy")
    drift = np.abs(np.linalg.det(F) - 1.0)
    worst = float(drift.max())
    if worst > det_tol:
        i, j = np.unravel_index(int(np.argmax(drift)), drift.shape)
        raise IntegrationFailureError(
            f"determinant drift {worst:.3e} at grid index ({i}, {j}) "
            f"exceeds {det_tol:g}"
        )
    return ExtendedFrame(grid=grid, F=F, spectral=spectral, base_index=(i0, j0))


def two_path_discrepancy(
    data: SurfaceData,
    spectral: SpectralParam,
    base_index: tuple[int, int] | None = None,
    target_index: tuple[int, int] | None = None,
) -> float:
    """Max entry difference at the target corner between row-first and
    column-first integration.

    Vanishes (to integrator order) exactly when the data satisfies the
    compatibility condition, so no residual precondition is applied here.
    """
    grid = data.grid
    if base_index is None:
        base_index = grid.center_index()
    if target_index is None:
        target_index = (grid.nx - 1, grid.ny - 1)
    Ax, Ay, Axm, Aym = _coefficient_arrays(data, spectral.lam)
    F_xy = _sweep(Ax, Ay, Axm, Aym, grid, base_index, "xy")
    F_yx = _sweep(Ax, Ay, Axm, Aym, grid, base_index, "yx")
    ti, tj = target_index
    return float(np.max(np.abs(F_xy[ti, tj] - F_yx[ti, tj])))


def shift_frame(frame: ExtendedFrame) -> ExtendedFrame:
    """Right-multiply every frame by D = diag(lam^{-1/2}, lam^{1/2}).

    det D = 1, so unimodularity is preserved exactly; the value at the base
    index becomes D instead of the identity.
    """
    D = spectral_shift_matrix(frame.lam)
    return ExtendedFrame(
        grid=frame.grid,
        F=frame.F @ D,
        spectral=frame.spectral,
        base_index=frame.base_index,
    )


def frame_left_multiply(frame: ExtendedFrame, G) -> ExtendedFrame:
    """Apply a constant unimodular gauge G on the left: F -> G F pointwise."""
    G = np.asarray(G, dtype=complex)
    if G.shape != (2, 2):
        raise InvalidInputError(f"gauge must be 2x2, got shape {G.shape}")
    detG = G[0, 0] * G[1, 1] - G[0, 1] * G[1, 0]
    if abs(detG - 1.0) > 1e-9:
        raise InvalidInputError(f"gauge must be unimodular, det = {detG}")
    return ExtendedFrame(
        grid=frame.grid,
        F=G @ frame.F,
        spectral=frame.spectral,
        base_index=frame.base_index,
    )
