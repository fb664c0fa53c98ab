"""Norm, entropy and rate-fitting tests against closed-form oracles."""
import math

import numpy as np
import pytest

from slvp import diagnostics as diag
from slvp.core import DistributionField
from conftest import make_grid

SQRT2PI = np.sqrt(2.0 * np.pi)


def maxwellian_field(grid):
    v = grid.v_centers[None, :]
    vals = np.broadcast_to(np.exp(-0.5 * v * v) / SQRT2PI,
                           (grid.n_x, grid.n_v)).copy()
    return DistributionField(vals, 0.0)


def truncated_gaussian_mass(v_max):
    return math.erf(v_max / math.sqrt(2.0))


def truncated_gaussian_second_moment(v_max):
    # integrate by parts: int v^2 M dv = erf(a/sqrt(2)) - 2 a M(a)
    return math.erf(v_max / math.sqrt(2.0)) \
        - 2.0 * v_max * math.exp(-0.5 * v_max ** 2) / SQRT2PI


class TestLpNorm:
    def test_zero(self, grid):
        f = DistributionField(np.zeros((grid.n_x, grid.n_v)), 0.0)
        assert diag.lp_norm(f, grid, 1.0) == 0.0

    def test_unit_field_volume(self):
        grid = make_grid(32, 32, length=4 * np.pi, v_max=6.0)
        f = DistributionField(np.ones((32, 32)), 0.0)
        assert diag.lp_norm(f, grid, 1.0) == pytest.approx(48 * np.pi,
                                                           rel=1e-13)

    def test_maxwellian_l1(self):
        # n_v = 256 pushes the midpoint-rule remainder below 1e-10
        grid = make_grid(16, 256)
        f = maxwellian_field(grid)
        exact = 4 * np.pi * truncated_gaussian_mass(grid.v_max)
        assert diag.lp_norm(f, grid, 1.0) == pytest.approx(exact, abs=1e-10)
        assert diag.lp_norm(f, grid, 1.0) == pytest.approx(4 * np.pi,
                                                           abs=1e-7)

    def test_homogeneity(self, rng):
        grid = make_grid(16, 16)
        vals = rng.random((16, 16))
        f = DistributionField(vals, 0.0)
        fc = DistributionField(3.5 * vals, 0.0)
        for p in (1.0, 2.0, 3.0):
            assert diag.lp_norm(fc, grid, p) == pytest.approx(
                3.5 * diag.lp_norm(f, grid, p), rel=1e-12)

    def test_rejects_bad_p(self, grid):
        f = DistributionField(np.ones((grid.n_x, grid.n_v)), 0.0)
        with pytest.raises(ValueError):
            diag.lp_norm(f, grid, 0.5)


class TestEnergy:
    def test_zero(self, grid):
        f = DistributionField(np.zeros((grid.n_x, grid.n_v)), 0.0)
        assert diag.energy(f, np.zeros(grid.n_x), grid) == 0.0

    def test_maxwellian_kinetic_part(self):
        grid = make_grid(16, 256)
        f = maxwellian_field(grid)
        exact = 4 * np.pi * truncated_gaussian_second_moment(grid.v_max)
        got = diag.energy(f, np.zeros(grid.n_x), grid)
        assert got == pytest.approx(exact, abs=1e-8)
        assert got == pytest.approx(4 * np.pi, abs=1e-5)

    def test_pure_field_energy(self):
        k = 0.5
        grid = make_grid(64, 16, length=2 * np.pi / k)
        f = DistributionField(np.zeros((64, 16)), 0.0)
        E = np.sin(k * grid.x_centers)
        assert diag.energy(f, E, grid) == pytest.approx(np.pi / k, rel=1e-12)


class TestEntropy:
    def test_unit_field(self, grid):
        f = DistributionField(np.ones((grid.n_x, grid.n_v)), 0.0)
        assert diag.entropy(f, grid) == pytest.approx(0.0, abs=1e-12)

    def test_constant_e(self):
        grid = make_grid(16, 16, length=2.0, v_max=3.0)
        f = DistributionField(np.full((16, 16), np.e), 0.0)
        area = 2.0 * 6.0
        assert diag.entropy(f, grid) == pytest.approx(area * np.e, rel=1e-12)

    def test_negative_entries_floored(self, grid):
        vals = np.ones((grid.n_x, grid.n_v))
        vals[3, 4] = -2.0
        f = DistributionField(vals, 0.0)
        out = diag.entropy(f, grid, floor=1e-14)
        assert np.isfinite(out)
        floor_term = grid.dx * grid.dv * 1e-14 * np.log(1e-14)
        assert out == pytest.approx(floor_term, abs=1e-12)

    def test_rejects_nonpositive_floor(self, grid):
        f = DistributionField(np.ones((grid.n_x, grid.n_v)), 0.0)
        with pytest.raises(ValueError):
            diag.entropy(f, grid, floor=0.0)


class TestEl2:
    def test_zero(self, grid):
        assert diag.e_l2(np.zeros(grid.n_x), grid) == 0.0

    def test_sine_over_period(self):
        k = 0.5
        grid = make_grid(64, 16, length=2 * np.pi / k)
        E = np.sin(k * grid.x_centers)
        assert diag.e_l2(E, grid) == pytest.approx(np.sqrt(np.pi / k),
                                                   rel=1e-12)

    def test_weak_landau_initial_value(self):
        from slvp import field
        from slvp.problems import init_landau
        alpha, k = 0.01, 0.5
        grid = make_grid(128, 128)
        f = init_landau(grid, alpha, k)
        st = field.compute_fields(f.values, grid)
        expected = (alpha / k) * np.sqrt(np.pi / k)
        assert diag.e_l2(st.E, grid) == pytest.approx(expected, rel=1e-8)


class TestRecord:
    def test_zero_deviation_at_baseline(self):
        grid = make_grid(16, 16)
        f = maxwellian_field(grid)
        E = np.zeros(grid.n_x)
        base = diag.baseline(f, E, grid)
        rec = diag.record(f, E, grid, base)
        assert rec.rel_dev_l1 == 0.0
        assert rec.rel_dev_l2 == 0.0
        assert rec.rel_dev_energy == 0.0
        assert rec.rel_dev_entropy == 0.0

    def test_row_matches_columns(self):
        grid = make_grid(16, 16)
        f = maxwellian_field(grid)
        base = diag.baseline(f, np.zeros(grid.n_x), grid)
        rec = diag.record(f, np.zeros(grid.n_x), grid, base)
        row = rec.as_row()
        assert len(row) == len(diag.DiagnosticsRecord.CSV_COLUMNS)
        assert row[0] == rec.t


class TestFitRate:
    def test_exact_exponential(self):
        t = np.linspace(0.0, 30.0, 200)
        rate = diag.fit_rate(t, np.exp(0.3 * t), (0.0, 30.0))
        assert rate == pytest.approx(0.3, abs=1e-8)

    def test_damped_oscillation_envelope(self):
        t = np.arange(0.0, 40.0, 0.1)
        series = np.exp(-0.15 * t) * np.abs(np.cos(1.4 * t + 0.2))
        rate = diag.fit_rate(t, series, (0.0, 40.0))
        assert rate == pytest.approx(-0.15, rel=0.02)

    def test_scale_invariance(self):
        t = np.arange(0.0, 40.0, 0.1)
        series = np.exp(-0.15 * t) * np.abs(np.cos(1.4 * t + 0.2))
        a = diag.fit_rate(t, series, (0.0, 40.0))
        b = diag.fit_rate(t, 137.0 * series, (0.0, 40.0))
        assert a == pytest.approx(b, abs=1e-12)

    def test_insufficient_samples(self):
        t = np.linspace(0.0, 1.0, 5)
        with pytest.raises(ValueError, match="samples"):
            diag.fit_rate(t, np.exp(t), (0.0, 1.0))

    def test_nonpositive_values(self):
        t = np.linspace(0.0, 10.0, 30)
        y = np.linspace(1.0, 0.0, 30)
        with pytest.raises(ValueError, match="positive"):
            diag.fit_rate(t, y, (0.0, 10.0))


class TestGrowthWindow:
    def test_detects_clean_growth_phase(self):
        t = np.arange(0.0, 50.0, 0.5)
        gamma = 0.35
        values = 0.01 * np.exp(gamma * np.minimum(t, 20.0))
        ta, tb = diag.growth_window(t, values)
        assert ta >= np.log(10.0) / gamma - 1.0
        assert tb <= 20.0 + 0.5
        rate = diag.fit_rate(t, values, (ta, tb))
        assert rate == pytest.approx(gamma, rel=0.02)

    def test_flat_series_rejected(self):
        t = np.arange(0.0, 20.0, 0.5)
        with pytest.raises(ValueError):
            diag.growth_window(t, np.ones_like(t))
