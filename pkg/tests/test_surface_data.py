"""Tests for grid data generation, the Gauss residual, and duality."""

import numpy as np
import pytest

from cmclab.errors import (
    IntegrationBlowupError,
    InvalidInputError,
    OutOfDomainError,
)
from cmclab.surface_data import (
    GridSpec,
    SurfaceData,
    cylinder_data,
    delaunay_data,
    delaunay_profile,
    derivative_samples,
    dual_data,
    gauss_residual,
    load_surface_data,
    max_gauss_residual,
    save_surface_data,
)


def small_grid(n=11, half=1.0):
    return GridSpec(-half, half, -half, half, n, n)


def bisect_root(f, lo, hi, tol=1e-12):
    """Plain bisection; independent oracle for turning-point levels."""
    flo = f(lo)
    assert flo * f(hi) < 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
            flo = f(lo)
    return 0.5 * (lo + hi)


class TestGridSpec:
    def test_spacing(self):
        g = GridSpec(-1.0, 1.0, -2.0, 2.0, 101, 41)
        assert g.hx == pytest.approx(0.02)
        assert g.hy == pytest.approx(0.1)

    def test_rejects_tiny_grid(self):
        with pytest.raises(InvalidInputError):
            GridSpec(-1.0, 1.0, -1.0, 1.0, 4, 11)

    def test_rejects_empty_extent(self):
        with pytest.raises(InvalidInputError):
            GridSpec(1.0, -1.0, -1.0, 1.0, 11, 11)


class TestCylinderData:
    def test_values(self):
        d = cylinder_data(small_grid())
        assert np.all(d.u == 0.0)
        assert d.Q == 0.25 and d.H == 0.5
        assert d.H == 2.0 * d.Q
        assert d.normalized

    def test_residual_is_exactly_zero(self):
        r = gauss_residual(cylinder_data(small_grid()))
        assert np.all(r[1:-1, 1:-1] == 0.0)
        assert np.all(np.isnan(r[0, :])) and np.all(np.isnan(r[:, -1]))


class TestDelaunayProfile:
    def test_equilibrium_stays_constant(self):
        p = delaunay_profile(0.5, (0.0, 5.0), 0.0, 0.0, step=1e-2)
        assert np.max(np.abs(p.us)) < 1e-14

    def test_energy_conservation(self):
        p = delaunay_profile(0.5, (0.0, 10.0), 0.3, 0.0, step=1e-3)
        assert p.energy_drift() <= 1e-8

    def test_oscillation_extrema_match_bisection(self):
        p = delaunay_profile(0.5, (0.0, 20.0), 0.3, 0.0, step=1e-3)
        assert np.max(p.us) == pytest.approx(0.3, abs=1e-6)
        # independent oracle: the lower turning point solves
        # 2 Q^2 e^{-2u} + H^2 e^{2u} / 2 = E(0) for u < 0
        Q, H = 0.25, 0.5
        e0 = 2.0 * Q**2 * np.exp(-0.6) + 0.5 * H**2 * np.exp(0.6)
        root = bisect_root(
            lambda u: 2.0 * Q**2 * np.exp(-2 * u) + 0.5 * H**2 * np.exp(2 * u) - e0,
            -1.0,
            -0.05,
        )
        assert root == pytest.approx(-0.3, abs=1e-9)
        assert np.min(p.us) == pytest.approx(root, abs=1e-6)

    def test_blowup_is_reported_with_location(self):
        with pytest.raises(IntegrationBlowupError) as err:
            delaunay_profile(0.5, (0.0, 400.0), 150.0, 0.0, step=1e-2)
        assert err.value.x > 0.0

    def test_rejects_zero_h(self):
        with pytest.raises(InvalidInputError):
            delaunay_profile(0.0, (0.0, 1.0), 0.1, 0.0)


class TestGaussResidual:
    def test_delaunay_residual_small(self):
        d = delaunay_data(small_grid(n=51), 0.5, 0.3, 0.0)
        assert max_gauss_residual(d) < 1e-3

    def test_residual_second_order(self):
        coarse = delaunay_data(GridSpec(-1, 1, -1, 1, 51, 51), 0.5, 0.3, 0.0)
        fine = delaunay_data(GridSpec(-1, 1, -1, 1, 101, 101), 0.5, 0.3, 0.0)
        order = np.log2(max_gauss_residual(coarse) / max_gauss_residual(fine))
        assert order >= 1.9

    def test_point_perturbation_is_local(self):
        d = cylinder_data(small_grid())
        u = d.u.copy()
        u[5, 5] += 0.1
        perturbed = SurfaceData(d.grid, u, Q=d.Q, H=d.H)
        r = gauss_residual(perturbed)[1:-1, 1:-1]
        nonzero = np.argwhere(np.abs(r) > 0.0) + 1
        touched = {tuple(ij) for ij in nonzero}
        assert touched == {(5, 5), (4, 5), (6, 5), (5, 4), (5, 6)}


class TestDualData:
    def test_cylinder_self_dual(self):
        d = cylinder_data(small_grid())
        assert np.array_equal(dual_data(d).u, d.u)

    def test_involution_and_constants(self):
        d = delaunay_data(small_grid(n=21), 0.5, 0.3, 0.0)
        dd = dual_data(d)
        assert dd.Q == d.Q and dd.H == d.H
        assert np.array_equal(dual_data(dd).u, d.u)

    def test_dual_preserves_gauss_equation(self):
        # substituting -u maps the equation to itself when 4Q^2 = H^2,
        # i.e. under the H = 2Q normalization (residual flips sign)
        d = delaunay_data(small_grid(n=31), 0.5, 0.3, 0.0)
        r = gauss_residual(d)[1:-1, 1:-1]
        rd = gauss_residual(dual_data(d))[1:-1, 1:-1]
        np.testing.assert_allclose(rd, -r, atol=1e-12)


class TestDerivativeSamples:
    def test_cylinder(self):
        d = cylinder_data(small_grid())
        assert derivative_samples(d, (3, 4)) == (0.0, 0.0, 0.0)

    def test_linear_in_x(self):
        g = small_grid()
        X, _ = g.mesh()
        d = SurfaceData(g, X, Q=0.25, H=0.5)
        u, uz, uzb = derivative_samples(d, (4, 4))
        assert uz == pytest.approx(0.5, abs=1e-13)
        assert uzb == pytest.approx(0.5, abs=1e-13)

    def test_linear_in_y(self):
        g = small_grid()
        _, Y = g.mesh()
        d = SurfaceData(g, Y, Q=0.25, H=0.5)
        _, uz, uzb = derivative_samples(d, (4, 4))
        assert uz == pytest.approx(-0.5j, abs=1e-13)
        assert uzb == pytest.approx(0.5j, abs=1e-13)

    def test_conjugate_symmetry(self):
        d = delaunay_data(small_grid(n=15), 0.5, 0.3, 0.0)
        _, uz, uzb = derivative_samples(d, (7, 7))
        assert uzb == pytest.approx(np.conj(uz), abs=1e-15)

    def test_boundary_rejected(self):
        d = cylinder_data(small_grid())
        with pytest.raises(OutOfDomainError):
            derivative_samples(d, (0, 4))


class TestFileRoundTrip:
    def test_round_trip_exact(self, tmp_path):
        d = delaunay_data(small_grid(n=9), 0.5, 0.2, 0.1)
        path = tmp_path / "surface.dat"
        save_surface_data(path, d)
        back = load_surface_data(path)
        assert back.grid == d.grid
        assert np.array_equal(back.u, d.u)
        assert back.Q == d.Q and back.H == d.H
        assert back.normalized

    def test_non_normalized_is_flagged(self, tmp_path):
        path = tmp_path / "surface.dat"
        g = small_grid(n=5)
        save_surface_data(path, SurfaceData(g, np.zeros((5, 5)), Q=0.3, H=0.5))
        assert not load_surface_data(path).normalized

    def test_malformed_header(self, tmp_path):
        path = tmp_path / "bad.dat"
        path.write_text("0.25 0.5\n")
        with pytest.raises(InvalidInputError):
            load_surface_data(path)
