"""Scalar data (u, Q, H) of normalized isothermic CMC immersions on grids.

A surface with metric e^{2u}(dx^2 + dy^2), Hopf differential function Q and
mean curvature H is *normalized* when H = 2Q, which makes its Christoffel
dual carry the reciprocal conformal factor e^{-2u}.  The conformal exponent
must satisfy the Gauss equation

    4 u_{z zbar} - 4 Q^2 e^{-2u} + H^2 e^{2u} = 0,

with 4 u_{z zbar} = u_xx + u_yy.  Built-in generators cover the round
cylinder (u = 0, H = 1/2, Q = 1/4) and translation-invariant Delaunay-type
profiles u = u(x) obtained by integrating the reduced ODE; arbitrary u
grids can be loaded from a plain text file (see `load_surface_data`).

Arrays are indexed [i, j] with i along x and j along y.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    IntegrationBlowupError,
    InvalidInputError,
    OutOfDomainError,
)

# |u| beyond this makes e^{2u} useless in double precision; treat as blowup.
BLOWUP_LIMIT = 200.0


def _locked(a, dtype=float):
    a = np.array(a, dtype=dtype)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class GridSpec:
    """Rectangular sampling of the conformal coordinate z = x + i y."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 5 or self.ny < 5:
            raise InvalidInputError("grids need nx, ny >= 5 for interior stencils")
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise InvalidInputError("grid extents must have positive length")

    @property
    def hx(self):
        return (self.x_max - self.x_min) / (self.nx - 1)

    @property
    def hy(self):
        return (self.y_max - self.y_min) / (self.ny - 1)

    def xs(self):
        return np.linspace(self.x_min, self.x_max, self.nx)

    def ys(self):
        return np.linspace(self.y_min, self.y_max, self.ny)

    def mesh(self):
        """Coordinate arrays X, Y of shape (nx, ny)."""
        return np.meshgrid(self.xs(), self.ys(), indexing="ij")

    def center_index(self):
        return (self.nx // 2, self.ny // 2)

    def is_interior(self, index):
        i, j = index
        return 1 <= i <= self.nx - 2 and 1 <= j <= self.ny - 2


@dataclass(frozen=True, eq=False)
class SurfaceData:
    """Conformal exponent grid with the constants Q and H (H nonzero)."""

    grid: GridSpec
    u: np.ndarray
    Q: float
    H: float

    def __post_init__(self):
        if self.H == 0.0:
            raise InvalidInputError("mean curvature H must be nonzero")
        u = np.asarray(self.u, dtype=float)
        if u.shape != (self.grid.nx, self.grid.ny):
            raise InvalidInputError(
                f"u has shape {u.shape}, expected {(self.grid.nx, self.grid.ny)}"
            )
        object.__setattr__(self, "u", _locked(u))

    @property
    def normalized(self):
        """True when H = 2Q holds exactly."""
        return self.H == 2.0 * self.Q


def cylinder_data(grid):
    """Round-cylinder data: u = 0, H = 1/2, Q = 1/4 on the whole grid."""
    return SurfaceData(grid, np.zeros((grid.nx, grid.ny)), Q=0.25, H=0.5)


@dataclass(frozen=True, eq=False)
class DelaunayProfile:
    """Dense solution of the reduced Gauss equation u'' = 4Q^2 e^{-2u} - H^2 e^{2u}."""

    xs: np.ndarray
    us: np.ndarray
    dus: np.ndarray
    Q: float
    H: float

    def energy(self):
        """Conserved energy (1/2) u'^2 + 2 Q^2 e^{-2u} + (1/2) H^2 e^{2u}."""
        return (
            0.5 * self.dus**2
            + 2.0 * self.Q**2 * np.exp(-2.0 * self.us)
            + 0.5 * self.H**2 * np.exp(2.0 * self.us)
        )

    def energy_drift(self):
        e = self.energy()
        return float(np.max(np.abs(e - e[0])))


def _profile_rhs(u, v, Q, H):
    return v, 4.0 * Q**2 * math.exp(-2.0 * u) - H**2 * math.exp(2.0 * u)


def _profile_step(u, v, h, Q, H):
    # classical RK4 on (u, v)
    k1u, k1v = _profile_rhs(u, v, Q, H)
    k2u, k2v = _profile_rhs(u + 0.5 * h * k1u, v + 0.5 * h * k1v, Q, H)
    k3u, k3v = _profile_rhs(u + 0.5 * h * k2u, v + 0.5 * h * k2v, Q, H)
    k4u, k4v = _profile_rhs(u + h * k3u, v + h * k3v, Q, H)
    return (
        u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
        v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v),
    )


def _integrate_profile(H, x0, x1, u0, du0, n_steps):
    Q = 0.5 * H
    h = (x1 - x0) / n_steps
    us = np.empty(n_steps + 1)
    dus = np.empty(n_steps + 1)
    us[0], dus[0] = u0, du0
    u, v = u0, du0
    for k in range(n_steps):
        try:
            u, v = _profile_step(u, v, h, Q, H)
        except OverflowError:
            raise IntegrationBlowupError(
                f"profile overflowed near x = {x0 + (k + 1) * h:.6g}",
                x=x0 + (k + 1) * h,
            ) from None
        if abs(u) > BLOWUP_LIMIT:
            raise IntegrationBlowupError(
                f"profile left the representable range near x = {x0 + (k + 1) * h:.6g}",
                x=x0 + (k + 1) * h,
            )
        us[k + 1], dus[k + 1] = u, v
    return us, dus


def delaunay_profile(H, x_range, u0, du0, step=1e-3):
    """Integrate the translation-invariant Gauss equation along x.

    Initial data (u0, du0) is imposed at x_range[0]; Q = H/2 is forced by
    the normalization.  The step is shrunk so the range divides evenly.
    """
    if H == 0.0:
        raise InvalidInputError("H must be nonzero")
    if step <= 0.0:
        raise InvalidInputError("step must be positive")
    x0, x1 = float(x_range[0]), float(x_range[1])
    if not x1 > x0:
        raise InvalidInputError("x_range must be increasing")
    n = max(1, math.ceil((x1 - x0) / step))
    us, dus = _integrate_profile(H, x0, x1, u0, du0, n)
    xs = np.linspace(x0, x1, n + 1)
    return DelaunayProfile(
        xs=_locked(xs), us=_locked(us), dus=_locked(dus), Q=0.5 * H, H=H
    )


def delaunay_data(grid, H, u0, du0, step=1e-3):
    """Sample a Delaunay-type profile onto a grid, constant in y.

    The ODE is integrated with a step that lands exactly on every grid
    node, so the sampled values carry no interpolation error.
    """
    if H == 0.0:
        raise InvalidInputError("H must be nonzero")
    if step <= 0.0:
        raise InvalidInputError("step must be positive")
    per_cell = max(1, math.ceil(grid.hx / step))
    n = per_cell * (grid.nx - 1)
    us, _ = _integrate_profile(H, grid.x_min, grid.x_max, u0, du0, n)
    profile = us[::per_cell]
    u = np.repeat(profile[:, None], grid.ny, axis=1)
    return SurfaceData(grid, u, Q=0.5 * H, H=H)


def gauss_residual(data):
    """Gauss-equation residual (u_xx + u_yy) - 4Q^2 e^{-2u} + H^2 e^{2u}.

    Second-order central differences on interior points; the boundary ring
    is NaN so that reports exclude it uniformly.
    """
    u, Q, H = data.u, data.Q, data.H
    hx, hy = data.grid.hx, data.grid.hy
    out = np.full(u.shape, np.nan)
    lap = (u[2:, 1:-1] - 2.0 * u[1:-1, 1:-1] + u[:-2, 1:-1]) / hx**2 + (
        u[1:-1, 2:] - 2.0 * u[1:-1, 1:-1] + u[1:-1, :-2]
    ) / hy**2
    core = u[1:-1, 1:-1]
    out[1:-1, 1:-1] = lap - 4.0 * Q**2 * np.exp(-2.0 * core) + H**2 * np.exp(2.0 * core)
    return out


def max_gauss_residual(data):
    """Largest interior residual magnitude."""
    r = gauss_residual(data)
    return float(np.max(np.abs(r[1:-1, 1:-1])))


def dual_data(data):
    """Christoffel-dual data: u -> -u with Q and H unchanged (involution)."""
    return SurfaceData(data.grid, -data.u, Q=data.Q, H=data.H)


def grid_derivatives(u, hx, hy):
    """Second-order u_x and u_y on the whole grid.

    Central differences inside, one-sided three-point stencils on the two
    boundary lines of each axis.
    """
    ux = np.empty_like(u)
    uy = np.empty_like(u)
    ux[1:-1, :] = (u[2:, :] - u[:-2, :]) / (2.0 * hx)
    ux[0, :] = (-3.0 * u[0, :] + 4.0 * u[1, :] - u[2, :]) / (2.0 * hx)
    ux[-1, :] = (3.0 * u[-1, :] - 4.0 * u[-2, :] + u[-3, :]) / (2.0 * hx)
    uy[:, 1:-1] = (u[:, 2:] - u[:, :-2]) / (2.0 * hy)
    uy[:, 0] = (-3.0 * u[:, 0] + 4.0 * u[:, 1] - u[:, 2]) / (2.0 * hy)
    uy[:, -1] = (3.0 * u[:, -1] - 4.0 * u[:, -2] + u[:, -3]) / (2.0 * hy)
    return ux, uy


def derivative_samples(data, index):
    """(u, u_z, u_zbar) at an interior grid point via central differences.

    u_z = (u_x - i u_y)/2 and u_zbar = (u_x + i u_y)/2; for the real grids
    handled here u_zbar is the conjugate of u_z.
    """
    i, j = index
    if not data.grid.is_interior(index):
        raise OutOfDomainError(f"index {index!r} is not an interior grid point")
    u = data.u
    ux = (u[i + 1, j] - u[i - 1, j]) / (2.0 * data.grid.hx)
    uy = (u[i, j + 1] - u[i, j - 1]) / (2.0 * data.grid.hy)
    return u[i, j], 0.5 * (ux - 1j * uy), 0.5 * (ux + 1j * uy)


def save_surface_data(path, data):
    """Write the plain text tabular format read by `load_surface_data`."""
    with open(path, "w") as fh:
        fh.write("# surface data: header 'Q H nx ny', then rows 'x y u' (x fastest)\n")
        fh.write(f"{data.Q:.17g} {data.H:.17g} {data.grid.nx} {data.grid.ny}\n")
        xs, ys = data.grid.xs(), data.grid.ys()
        for j in range(data.grid.ny):
            for i in range(data.grid.nx):
                fh.write(f"{xs[i]:.17g} {ys[j]:.17g} {data.u[i, j]:.17g}\n")


def load_surface_data(path):
    """Read a u-grid from the documented tabular format.

    Format: optional '#' comment lines, one header line `Q H nx ny`, then
    nx*ny rows `x y u` with x varying fastest.  H and Q are taken as given,
    so loaded data may be non-normalized; check `SurfaceData.normalized`
    before verification runs.
    """
    with open(path) as fh:
        rows = [ln.split() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not rows:
        raise InvalidInputError(f"{path}: empty surface data file")
    try:
        Q, H = float(rows[0][0]), float(rows[0][1])
        nx, ny = int(rows[0][2]), int(rows[0][3])
    except (IndexError, ValueError) as exc:
        raise InvalidInputError(f"{path}: malformed header line") from exc
    body = rows[1:]
    if len(body) != nx * ny:
        raise InvalidInputError(
            f"{path}: expected {nx * ny} data rows, found {len(body)}"
        )
    table = np.array([[float(v) for v in row[:3]] for row in body])
    xs = table[:nx, 0]
    ys = table[::nx, 1]
    grid = GridSpec(
        x_min=float(xs[0]), x_max=float(xs[-1]),
        y_min=float(ys[0]), y_max=float(ys[-1]),
        nx=nx, ny=ny,
    )
    u = table[:, 2].reshape(ny, nx).T
    return SurfaceData(grid, u, Q=Q, H=H)
