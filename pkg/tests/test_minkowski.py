"""Tests for the Hermitian model of R^{3,1}."""

import numpy as np
import pytest

from cmclab.errors import InternalConsistencyError, InvalidInputError
from cmclab.minkowski import (
    IDENTITY2,
    conj_transpose,
    det2,
    from_hermitian,
    h3_defect,
    mat2,
    mat_mul,
    minkowski_inner,
    mink_dot,
    require_h3,
    require_hermitian,
    scalar_mul,
    to_hermitian,
)

DIAG_1_M1 = np.diag([1.0, -1.0]).astype(complex)


def random_hermitian(rng, n=1):
    x = rng.standard_normal((n, 4)) * 2.0
    return to_hermitian(x), x


def random_unimodular(rng, n=1):
    """Random SL2(C) samples: scale a generic matrix to determinant one."""
    M = rng.standard_normal((n, 2, 2)) + 1j * rng.standard_normal((n, 2, 2))
    d = det2(M)
    return M / np.sqrt(d)[..., None, None]


class TestTraceForm:
    def test_identity_is_timelike_unit(self):
        assert minkowski_inner(IDENTITY2, IDENTITY2) == pytest.approx(-1.0, abs=1e-14)

    def test_diag_1_m1_is_spacelike_unit(self):
        # expanded by hand: X s = [[0,-i],[-i,0]], (X s)^2 = -I, trace -2
        assert minkowski_inner(DIAG_1_M1, DIAG_1_M1) == pytest.approx(1.0, abs=1e-14)

    def test_orthogonal_axes(self):
        assert minkowski_inner(IDENTITY2, DIAG_1_M1) == pytest.approx(0.0, abs=1e-14)

    def test_matches_coordinate_form(self):
        rng = np.random.default_rng(7)
        X, x = random_hermitian(rng, 50)
        Y, y = random_hermitian(rng, 50)
        got = minkowski_inner(X, Y)
        want = mink_dot(x, y)
        assert np.max(np.abs(got - want)) <= 1e-12 * np.max(1.0 + np.abs(want))

    def test_symmetry_and_bilinearity(self):
        rng = np.random.default_rng(8)
        X, _ = random_hermitian(rng, 20)
        Y, _ = random_hermitian(rng, 20)
        Z, _ = random_hermitian(rng, 20)
        np.testing.assert_allclose(
            minkowski_inner(X, Y), minkowski_inner(Y, X), atol=1e-12
        )
        np.testing.assert_allclose(
            minkowski_inner(X, 2.0 * Y + Z),
            2.0 * minkowski_inner(X, Y) + minkowski_inner(X, Z),
            atol=1e-11,
        )

    def test_unimodular_action_is_isometric(self):
        rng = np.random.default_rng(9)
        X, _ = random_hermitian(rng, 40)
        Y, _ = random_hermitian(rng, 40)
        G = random_unimodular(rng, 40)
        GX = G @ X @ conj_transpose(G)
        GY = G @ Y @ conj_transpose(G)
        before = minkowski_inner(X, Y)
        after = minkowski_inner(GX, GY)
        scale = np.max(1.0 + np.abs(before))
        assert np.max(np.abs(after - before)) <= 1e-10 * scale

    def test_rejects_non_hermitian(self):
        M = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        with pytest.raises(InvalidInputError):
            minkowski_inner(M, IDENTITY2)


class TestHermitianMap:
    def test_template_points(self):
        np.testing.assert_array_equal(to_hermitian([0, 0, 0, 1]), IDENTITY2)
        np.testing.assert_array_equal(
            to_hermitian([1, 0, 0, 0]), np.array([[0, 1], [1, 0]], dtype=complex)
        )
        np.testing.assert_array_equal(
            to_hermitian([0, 1, 0, 0]), np.array([[0, -1j], [1j, 0]])
        )

    def test_round_trip(self):
        rng = np.random.default_rng(10)
        p = rng.standard_normal((30, 4)) * 3.0
        np.testing.assert_allclose(from_hermitian(to_hermitian(p)), p, atol=1e-14)

    def test_det_is_minus_inner(self):
        rng = np.random.default_rng(11)
        p = rng.standard_normal((30, 4)) * 2.0
        d = det2(to_hermitian(p)).real
        np.testing.assert_allclose(d, -mink_dot(p, p), atol=1e-12)

    def test_from_hermitian_rejects_non_hermitian(self):
        with pytest.raises(InvalidInputError):
            from_hermitian(np.array([[0.0, 1.0], [0.5, 0.0]], dtype=complex))

    def test_tolerates_roundoff_defect(self):
        M = IDENTITY2 + 1e-12 * np.array([[0, 1j], [0, 0]])
        from_hermitian(M)  # within tolerance, must not raise


class TestMatrixHelpers:
    def test_det_identity(self):
        assert det2(IDENTITY2) == 1.0

    def test_conj_transpose(self):
        M = np.array([[0.0, 1j], [0.0, 0.0]])
        np.testing.assert_array_equal(
            conj_transpose(M), np.array([[0.0, 0.0], [-1j, 0.0]])
        )
        rng = np.random.default_rng(12)
        A = rng.standard_normal((5, 2, 2)) + 1j * rng.standard_normal((5, 2, 2))
        np.testing.assert_array_equal(conj_transpose(conj_transpose(A)), A)

    def test_det_of_spectral_diagonal(self):
        lam = 0.37
        D = np.diag([lam**-0.5, lam**0.5]).astype(complex)
        assert det2(D) == pytest.approx(1.0, abs=1e-15)

    def test_det_multiplicative(self):
        rng = np.random.default_rng(13)
        A = rng.standard_normal((8, 2, 2)) + 1j * rng.standard_normal((8, 2, 2))
        B = rng.standard_normal((8, 2, 2)) + 1j * rng.standard_normal((8, 2, 2))
        np.testing.assert_allclose(det2(mat_mul(A, B)), det2(A) * det2(B), atol=1e-12)

    def test_scalar_mul_and_mat2(self):
        M = mat2(1.0, 2.0, 3.0, 4.0)
        np.testing.assert_array_equal(scalar_mul(2.0, M), 2.0 * M)
        assert M[0, 1] == 2.0


class TestH3Validation:
    def test_identity_point(self):
        require_h3(np.array([0.0, 0.0, 0.0, 1.0]))

    def test_rejects_negative_x0(self):
        with pytest.raises(InternalConsistencyError):
            require_h3(np.array([0.0, 0.0, 0.0, -1.0]))

    def test_rejects_off_sheet(self):
        with pytest.raises(InvalidInputError):
            require_h3(np.array([0.0, 0.0, 0.0, 2.0]))

    def test_defect_of_boosted_point(self):
        t = 0.8
        p = np.array([np.sinh(t), 0.0, 0.0, np.cosh(t)])
        assert h3_defect(p) < 1e-12
