"""Hermitian-matrix model of Minkowski 4-space and hyperbolic 3-space.

Points of R^{3,1} (signature +++-) are 4-vectors stored in the fixed
coordinate order (x1, x2, x3, x0), with x0 the timelike coordinate.
The equivalent Hermitian form is

    X = [[x0 + x3, x1 - i*x2],
         [x1 + i*x2, x0 - x3]],

so det X = -<X, X>, and the unimodular 2x2 group acts isometrically by
X -> G X conj(G)^T.  Hyperbolic 3-space is the sheet det X = 1, x0 > 0.

The Minkowski product in matrix form is

    <X, Y> = -1/2 tr(X s Y^T s),   s = [[0, -i], [i, 0]],

where Y^T is the plain transpose.  Matrices are numpy complex arrays with
the two matrix axes last; every routine broadcasts over leading grid axes.
"""

import numpy as np

from .errors import InternalConsistencyError, InvalidInputError

SIGMA = np.array([[0.0, -1.0j], [1.0j, 0.0]])

# Hermiticity slack absorbs accumulated RK4 round-off without masking
# logic errors; H3 checks share the same scale.
HERMITIAN_RTOL = 1e-9
H3_TOL = 1e-9
IDENTITY2 = np.eye(2, dtype=complex)


def mat2(a, b, c, d):
    """Assemble [[a, b], [c, d]] as a complex array (entries may broadcast)."""
    a, b, c, d = np.broadcast_arrays(a, b, c, d)
    out = np.empty(a.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = a
    out[..., 0, 1] = b
    out[..., 1, 0] = c
    out[..., 1, 1] = d
    return out


def mat_mul(A, B):
    """Matrix product over the trailing axes (same as the @ operator)."""
    return A @ B


def scalar_mul(s, M):
    """Scalar multiple of a matrix (same as the * operator)."""
    return np.asarray(s)[..., None, None] * M if np.ndim(s) else s * M


def conj_transpose(M):
    """Conjugate transpose over the trailing matrix axes."""
    return np.conj(np.swapaxes(M, -1, -2))


def det2(M):
    """Determinant over the trailing matrix axes."""
    return M[..., 0, 0] * M[..., 1, 1] - M[..., 0, 1] * M[..., 1, 0]


def hermitian_defect(M):
    """Largest entrywise deviation of M from its conjugate transpose."""
    return float(np.max(np.abs(M - conj_transpose(M))))


def require_hermitian(M, what="matrix"):
    """Raise InvalidInputError unless M is Hermitian within tolerance.

    Tolerance is HERMITIAN_RTOL * (1 + max entry magnitude).
    """
    M = np.asarray(M, dtype=complex)
    scale = 1.0 + float(np.max(np.abs(M))) if M.size else 1.0
    defect = hermitian_defect(M) if M.size else 0.0
    if defect > HERMITIAN_RTOL * scale:
        raise InvalidInputError(
            f"{what} is not Hermitian: defect {defect:.3e} exceeds "
            f"{HERMITIAN_RTOL * scale:.3e}"
        )
    return M


def to_hermitian(p):
    """Map coordinate points (..., 4) = (x1, x2, x3, x0) to Hermitian matrices."""
    p = np.asarray(p, dtype=float)
    x1, x2, x3, x0 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    return mat2(x0 + x3, x1 - 1j * x2, x1 + 1j * x2, x0 - x3)


def from_hermitian(M):
    """Invert `to_hermitian`, validating hermiticity first.

    Imaginary round-off within the Hermitian tolerance is discarded.
    """
    M = require_hermitian(M)
    a = M[..., 0, 0].real
    d = M[..., 1, 1].real
    b = M[..., 0, 1]
    c = M[..., 1, 0]
    out = np.empty(M.shape[:-2] + (4,), dtype=float)
    out[..., 0] = 0.5 * (b + c).real
    out[..., 1] = 0.5 * (c - b).imag
    out[..., 2] = 0.5 * (a - d)
    out[..., 3] = 0.5 * (a + d)
    return out


def minkowski_inner(X, Y):
    """Minkowski product -1/2 tr(X s Y^T s) of two Hermitian matrices.

    Equals x1*y1 + x2*y2 + x3*y3 - x0*y0 in coordinates.  Both arguments
    must be Hermitian within tolerance.
    """
    X = require_hermitian(X, "first argument")
    Y = require_hermitian(Y, "second argument")
    T = X @ SIGMA @ np.swapaxes(Y, -1, -2) @ SIGMA
    return np.real(-0.5 * (T[..., 0, 0] + T[..., 1, 1]))


def mink_dot(p, q):
    """Coordinate bilinear form p1*q1 + p2*q2 + p3*q3 - p0*q0.

    Bilinear (no conjugation), so complex-valued vectors such as Wirtinger
    derivatives of a real grid are handled correctly.
    """
    p = np.asarray(p)
    q = np.asarray(q)
    return (
        p[..., 0] * q[..., 0]
        + p[..., 1] * q[..., 1]
        + p[..., 2] * q[..., 2]
        - p[..., 3] * q[..., 3]
    )


def h3_defect(p):
    """Largest deviation of <p, p> from -1 over a batch of points."""
    return float(np.max(np.abs(mink_dot(p, p) + 1.0)))


def require_h3(p, tol=H3_TOL, what="point"):
    """Validate hyperboloid membership: x0 > 0 and <p, p> = -1 within tol."""
    p = np.asarray(p, dtype=float)
    if np.any(p[..., 3] <= 0.0):
        raise InternalConsistencyError(f"{what} has non-positive x0")
    defect = h3_defect(p)
    if defect > tol:
        raise InvalidInputError(
            f"{what} is off the unit hyperboloid: defect {defect:.3e} > {tol:.3e}"
        )
    return p
