import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chronon import snyder_rep as sr
from chronon.gamma_algebra import PhysicalParams


@pytest.fixture(scope="module")
def params():
    return PhysicalParams()


@pytest.fixture(scope="module")
def grid2():
    return sr.GridSpec1D(n=256, p_max=12.0)


@pytest.fixture(scope="module")
def grid():
    return sr.GridSpec1D(n=1024, p_max=20.0)


class TestGridSpec:
    def test_spacing(self, grid):
        assert grid.dp == pytest.approx(40.0 / 1024)
        assert grid.points[0] == -20.0
        assert np.allclose(np.diff(grid.points), grid.dp)

    @pytest.mark.parametrize("n", [7, 12, 100, 4])
    def test_rejects_non_power_of_two(self, n):
        with pytest.raises(ValueError):
            sr.GridSpec1D(n=n, p_max=1.0)

    def test_rejects_bad_pmax(self):
        with pytest.raises(ValueError):
            sr.GridSpec1D(n=16, p_max=0.0)


class TestSpectralDerivative:
    def test_constant(self, grid):
        f = np.ones(grid.n, dtype=complex)
        assert np.max(np.abs(sr.spectral_derivative(f, grid))) <= 1e-12

    def test_fundamental_mode_exact(self, grid):
        k0 = 2 * np.pi / (2 * grid.p_max)
        f = np.sin(k0 * grid.points)
        expected = k0 * np.cos(k0 * grid.points)
        np.testing.assert_allclose(sr.spectral_derivative(f, grid).real, expected, atol=1e-12)

    def test_gaussian_matches_analytic(self, grid):
        p = grid.points
        f = np.exp(-p**2 / 2)
        expected = -p * f
        err = np.max(np.abs(sr.spectral_derivative(f, grid) - expected))
        assert err <= 1e-8

    def test_size_mismatch_rejected(self, grid):
        with pytest.raises(ValueError):
            sr.spectral_derivative(np.ones(16), grid)


class TestPositionApply1D:
    def test_undeformed_limit_bitwise(self, grid):
        p0 = PhysicalParams(a=0.0)
        f = sr.gaussian_1d(grid, center=0.3, width=1.2)
        deformed = sr.snyder_position_apply_1d(f, grid, p0)
        canonical = 1j * p0.hbar * sr.spectral_derivative(f, grid)
        np.testing.assert_array_equal(deformed, canonical)

    def test_constant_maps_to_zero(self, grid, params):
        f = np.ones(grid.n, dtype=complex)
        assert np.max(np.abs(sr.snyder_position_apply_1d(f, grid, params))) <= 1e-10

    def test_gaussian_analytic_oracle(self, grid, params):
        p = grid.points
        f = np.exp(-p**2 / 2).astype(complex)
        expected = 1j * (1 + p**2) * (-p) * np.exp(-p**2 / 2)
        got = sr.snyder_position_apply_1d(f, grid, params)
        assert np.max(np.abs(got - expected)) <= 1e-8


class TestHeisenbergResidual1D:
    def test_undeformed(self, grid):
        p0 = PhysicalParams(a=0.0)
        f = sr.gaussian_1d(grid)
        assert sr.heisenberg_residual_1d(grid, p0, f) <= 1e-8

    def test_deformed_default(self, grid, params):
        f = sr.gaussian_1d(grid)
        assert sr.heisenberg_residual_1d(grid, params, f) <= 1e-7

    def test_spectral_convergence(self, params):
        # Residual drops >= 4x per doubling until the discretization error
        # sinks below the 1e-12 floor.
        residuals = []
        for n in (32, 64, 128):
            g = sr.GridSpec1D(n=n, p_max=20.0)
            residuals.append(sr.heisenberg_residual_1d(g, params, sr.gaussian_1d(g)))
        for prev, nxt in zip(residuals, residuals[1:]):
            assert nxt <= prev / 4 or nxt <= 1e-12
        assert residuals[-1] <= 1e-12

    @pytest.mark.parametrize("center", [-5.0, -1.7, 0.0, 2.3, 5.0])
    def test_translation_invariance(self, grid, params, center):
        # Identity holds pointwise; translating the witness by <= p_max/4
        # leaves the residual within tolerance.
        f = sr.gaussian_1d(grid, center=center)
        assert sr.heisenberg_residual_1d(grid, params, f) <= 1e-7

    def test_random_witnesses(self, grid, params):
        rng = np.random.default_rng(1)
        for _ in range(10):
            center = rng.uniform(-5, 5)
            width = rng.uniform(0.5, 2.0)
            f = sr.gaussian_1d(grid, center=center, width=width)
            assert sr.heisenberg_residual_1d(grid, params, f) <= 1e-7


class TestPositionApply2D:
    def test_undeformed_limit(self, grid2):
        p0 = PhysicalParams(a=0.0)
        f = sr.gaussian_2d(grid2, center=(0.5, -0.3))
        got = sr.snyder_position_apply_2d(f, grid2, p0, axis=0)
        expected = 1j * p0.hbar * sr.spectral_derivative(f, grid2, axis=0)
        np.testing.assert_array_equal(got, expected)

    def test_cross_term_vanishes_on_axis(self, grid2, params):
        # At p_x = 0 the p_x p_y coefficient vanishes, so x acts as the
        # deformed-diagonal term alone there.
        f = sr.gaussian_2d(grid2)
        got = sr.snyder_position_apply_2d(f, grid2, params, axis=0)
        ix = grid2.n // 2  # p_x = 0 row
        diag_only = 1j * params.hbar * sr.spectral_derivative(f, grid2, axis=0)[ix]
        np.testing.assert_allclose(got[ix], diag_only, atol=1e-10)

    def test_gaussian_analytic_oracle(self, grid2, params):
        px = grid2.points[:, None]
        py = grid2.points[None, :]
        f = np.exp(-(px**2 + py**2) / 2).astype(complex)
        expected = 1j * ((1 + px**2) * (-px) + px * py * (-py)) * f
        got = sr.snyder_position_apply_2d(f, grid2, params, axis=0)
        assert np.max(np.abs(got - expected)) <= 1e-8

    def test_bad_axis_rejected(self, grid2, params):
        with pytest.raises(ValueError):
            sr.snyder_position_apply_2d(sr.gaussian_2d(grid2), grid2, params, axis=2)


class TestCommutatorResidual2D:
    def test_undeformed_coordinates_commute(self, grid2):
        p0 = PhysicalParams(a=0.0)
        r_xy, r_mixed = sr.coordinate_commutator_residual_2d(grid2, p0, sr.gaussian_2d(grid2))
        assert r_xy <= 1e-8
        assert r_mixed <= 1e-8

    def test_deformed_default(self, grid2, params):
        r_xy, r_mixed = sr.coordinate_commutator_residual_2d(grid2, params, sr.gaussian_2d(grid2))
        assert r_xy <= 1e-6
        assert r_mixed <= 1e-6

    def test_rotationally_symmetric_witness_annihilated(self, grid2, params):
        f = sr.gaussian_2d(grid2)
        lz = sr.angular_momentum_apply_2d(f, grid2, params.hbar)
        assert np.max(np.abs(lz)) <= 1e-9

    def test_spectral_convergence(self, params):
        # The composed 2-D operator amplifies roundoff by the coefficient
        # magnitude 1 + (a p_max/hbar)^2, so the attainable floor is that
        # multiple of 1e-12 rather than 1e-12 itself.
        floor = 1e-12 * (1 + (params.a * 12.0 / params.hbar) ** 2)
        residuals = []
        for n in (16, 32, 64):
            g = sr.GridSpec1D(n=n, p_max=12.0)
            r_xy, _ = sr.coordinate_commutator_residual_2d(g, params, sr.gaussian_2d(g))
            residuals.append(r_xy)
        for prev, nxt in zip(residuals, residuals[1:]):
            assert nxt <= prev / 4 or nxt <= floor
        assert residuals[-1] <= floor

    def test_offset_witness(self, grid2, params):
        f = sr.gaussian_2d(grid2, center=(1.5, -2.0))
        r_xy, r_mixed = sr.coordinate_commutator_residual_2d(grid2, params, f)
        assert r_xy <= 1e-6
        assert r_mixed <= 1e-6


class TestLinearity:
    @given(st.floats(-2, 2, allow_nan=False), st.floats(-2, 2, allow_nan=False))
    @settings(max_examples=20, deadline=None)
    def test_position_apply_linear(self, alpha, beta):
        grid = sr.GridSpec1D(n=128, p_max=10.0)
        params = PhysicalParams()
        f = sr.gaussian_1d(grid, center=-1.0)
        g = sr.gaussian_1d(grid, center=1.5, width=0.8)
        lhs = sr.snyder_position_apply_1d(alpha * f + beta * g, grid, params)
        rhs = (alpha * sr.snyder_position_apply_1d(f, grid, params)
               + beta * sr.snyder_position_apply_1d(g, grid, params))
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(abs(alpha) + abs(beta), 1.0) * 100
