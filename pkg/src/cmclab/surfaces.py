"""The two parallel surfaces in hyperbolic 3-space.

From an extended frame F the primary surface is f = F conj(F)^t and the
shifted surface is (FD) conj(FD)^t with D = diag(lam^{-1/2}, lam^{1/2}).
Writing lam = e^q, the two satisfy the exact pointwise identity

    (FD) conj(FD)^t = cosh(q) F conj(F)^t - sinh(q) N

where N = F diag(1, -1) conj(F)^t is the unit normal of the primary
surface, so the shifted surface lies at constant geodesic distance -q
along the normal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .frames import ExtendedFrame, SpectralParam, shift_frame, spectral_shift_matrix
from .minkowski import conj_transpose, from_hermitian, mink_dot, require_h3, to_hermitian
from .surface_data import GridSpec, _locked

PRIMARY_KIND = "primary-surface"
SHIFTED_KIND = "shifted-surface"

# |det - 1| allowed for surface points; inherited from frame det drift
SURFACE_DET_TOL = 1e-8

# -<p,s> this far below 1 means the points are not an H3 pair
DISTANCE_CLAMP_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class H3SurfaceGrid:
    """Grid of hyperboloid points, coordinates (x1, x2, x3, x0)."""

    grid: GridSpec
    points: np.ndarray
    spectral: SpectralParam
    kind: str

    def __post_init__(self):
        if self.kind not in (PRIMARY_KIND, SHIFTED_KIND):
            raise InvalidInputError(f"unknown surface kind {self.kind!r}")
        pts = np.asarray(self.points, dtype=float)
        if pts.shape != (self.grid.nx, self.grid.ny, 4):
            raise InvalidInputError(
                f"points shape {pts.shape} does not match grid "
                f"({self.grid.nx}, {self.grid.ny}, 4)"
            )
        require_h3(pts, tol=SURFACE_DET_TOL, what=self.kind)
        object.__setattr__(self, "points", _locked(pts))

    def hermitian(self) -> np.ndarray:
        """Points as Hermitian matrices, shape (nx, ny, 2, 2)."""
        return to_hermitian(self.points)


@dataclass(frozen=True, eq=False)
class NormalField:
    """Grid of spacelike unit vectors normal to a surface grid."""

    grid: GridSpec
    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=float)
        if v.shape != (self.grid.nx, self.grid.ny, 4):
            raise InvalidInputError(
                f"vectors shape {v.shape} does not match grid "
                f"({self.grid.nx}, {self.grid.ny}, 4)"
            )
        object.__setattr__(self, "vectors", _locked(v))


def _surface_points(F: np.ndarray) -> np.ndarray:
    return from_hermitian(F @ conj_transpose(F))


def surface_primary(frame: ExtendedFrame) -> H3SurfaceGrid:
    """The surface F conj(F)^t as hyperboloid points."""
    return H3SurfaceGrid(
        grid=frame.grid,
        points=_surface_points(frame.F),
        spectral=frame.spectral,
        kind=PRIMARY_KIND,
    )


def surface_shifted(frame: ExtendedFrame) -> H3SurfaceGrid:
    """The parallel surface (FD) conj(FD)^t as hyperboloid points."""
    return H3SurfaceGrid(
        grid=frame.grid,
        points=_surface_points(shift_frame(frame).F),
        spectral=frame.spectral,
        kind=SHIFTED_KIND,
    )


def _normal_matrices(F: np.ndarray) -> np.ndarray:
    # F diag(1,-1) conj(F)^t without forming diag explicitly
    Fs = F.copy()
    Fs[..., :, 1] = -Fs[..., :, 1]
    return Fs @ conj_transpose(F)


def normal_field(frame: ExtendedFrame) -> NormalField:
    """Unit normal N = F diag(1, -1) conj(F)^t of the frame's surface.

    Applied to a shifted frame this gives the shifted surface's normal.
    """
    return NormalField(grid=frame.grid, vectors=from_hermitian(_normal_matrices(frame.F)))


def normal_unit_defect(normal: NormalField) -> float:
    """Max deviation of <N, N> from +1 over the grid."""
    v = normal.vectors
    return float(np.max(np.abs(mink_dot(v, v) - 1.0)))


def normal_orthogonality_defect(surface: H3SurfaceGrid, normal: NormalField) -> float:
    """Max deviation of <N, f> from 0 over the grid."""
    if surface.grid != normal.grid:
        raise InvalidInputError("surface and normal live on different grids")
    return float(np.max(np.abs(mink_dot(normal.vectors, surface.points))))


def parallel_identity_residual(frame: ExtendedFrame) -> float:
    """Grid maximum of |(FD)conj(FD)^t - (cosh q F conj(F)^t - sinh q N)|,
    relative to the largest matrix entry.

    The identity is exact matrix algebra (D^2 = cosh q I - sinh q diag(1,-1)),
    so the result must sit at round-off scale for any unimodular frame.
    """
    q = frame.spectral.q
    F = frame.F
    M_primary = F @ conj_transpose(F)
    FD = F @ spectral_shift_matrix(frame.lam)
    M_shifted = FD @ conj_transpose(FD)
    N = _normal_matrices(F)
    R = M_shifted - (np.cosh(q) * M_primary - np.sinh(q) * N)
    scale = float(np.max(np.abs(M_shifted)))
    return float(np.max(np.abs(R))) / scale


def hyperbolic_distance(p, s):
    """Geodesic distance arccosh(-<p, s>) between hyperboloid points.

    Accepts single coordinate 4-vectors or broadcastable batches.  Values of
    -<p, s> within DISTANCE_CLAMP_TOL below 1 (round-off at coincident
    points) are clamped to distance zero; anything lower is rejected.
    """
    p = np.asarray(p, dtype=float)
    s = np.asarray(s, dtype=float)
    c = -mink_dot(p, s)
    if np.any(c < 1.0 - DISTANCE_CLAMP_TOL):
        worst = float(np.min(c))
        raise InvalidInputError(
            f"-<p, s> = {worst:.12g} < 1; points are not a hyperboloid pair"
        )
    out = np.arccosh(np.maximum(c, 1.0))
    return float(out) if out.ndim == 0 else out


def distance_grid(primary: H3SurfaceGrid, shifted: H3SurfaceGrid) -> np.ndarray:
    """Pointwise hyperbolic distance between two surface grids."""
    if primary.grid != shifted.grid:
        raise InvalidInputError("surface grids do not match")
    return hyperbolic_distance(primary.points, shifted.points)


def equidistance_defect(primary: H3SurfaceGrid, shifted: H3SurfaceGrid) -> float:
    """Max deviation of the pointwise distance from -q = -ln(lam)."""
    expected = -primary.spectral.q
    return float(np.max(np.abs(distance_grid(primary, shifted) - expected)))
