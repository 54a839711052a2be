"""Local central-charge estimates, extrapolation, constant fitting."""

import math

import numpy as np
import pytest

from singlecopy.analytic import FiniteChainCut, HalfInfiniteEnd, InfiniteLineInterval
from singlecopy.free_fermion import single_particle_energies, xx_correlations_infinite
from singlecopy.entanglement import summary_from_single_particle
from singlecopy.scaling import (
    CEstimateSeries,
    ScanPoint,
    extrapolate_c,
    fit_conformal_constants,
    geometry_factor,
    local_c_estimates,
)


def line_points(slope, intercept, Ls):
    return [ScanPoint(L=L, S1=slope * math.log(L) + intercept) for L in Ls]


def quadratic_series(c, alpha, beta, Ls):
    entries = []
    for L in Ls:
        x = 1.0 / math.log(L)
        entries.append((float(L), c + alpha * x + beta * x * x))
    return CEstimateSeries(entries=tuple(entries), geometry_factor=12.0)


LADDER = [64, 128, 256, 512, 1024]


class TestScanPoint:
    def test_w1_defaults_to_exp_minus_s1(self):
        p = ScanPoint(L=10, S1=0.7)
        assert p.w1 == pytest.approx(math.exp(-0.7), abs=1e-15)

    def test_inconsistent_w1_rejected(self):
        with pytest.raises(ValueError):
            ScanPoint(L=10, S1=0.7, w1=0.6)
        with pytest.raises(ValueError):
            ScanPoint(L=-1, S1=0.7)


class TestGeometryFactor:
    def test_mapping(self):
        assert geometry_factor(InfiniteLineInterval(10)) == 6.0
        assert geometry_factor(HalfInfiniteEnd(10)) == 12.0
        assert geometry_factor(FiniteChainCut(10, 5)) == 12.0
        assert geometry_factor(3) == 3.0

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            geometry_factor(0)


class TestLocalEstimates:
    def test_exact_line_factor_twelve(self):
        points = line_points(1.0 / 12, 0.3, LADDER)
        series = local_c_estimates(points, 12)
        assert all(abs(c - 1.0) < 1e-12 for _, c in series.entries)
        mids = [m for m, _ in series.entries]
        assert mids[0] == pytest.approx(math.sqrt(64 * 128))

    def test_exact_line_factor_six(self):
        points = line_points(1.0 / 6, 0.0, LADDER)
        series = local_c_estimates(points, InfiniteLineInterval(1.0))
        assert all(abs(c - 1.0) < 1e-12 for _, c in series.entries)

    def test_three_point_variant(self):
        points = line_points(1.0 / 6, 0.1, LADDER)
        series = local_c_estimates(points, 6, three_point=True)
        assert len(series.entries) == len(LADDER) - 2
        assert all(abs(c - 1.0) < 1e-12 for _, c in series.entries)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            local_c_estimates(line_points(1, 0, [64]), 6)
        with pytest.raises(ValueError):
            local_c_estimates(line_points(1, 0, [64, 64, 128]), 6)
        with pytest.raises(ValueError):
            local_c_estimates(line_points(1, 0, LADDER), 6, observable="S")

    def test_affine_invariance(self, rng):
        s1 = 0.2 + rng.uniform(0, 0.01, size=len(LADDER)) + np.log(LADDER) / 6
        base = [ScanPoint(L=L, S1=v) for L, v in zip(LADDER, s1)]
        shifted = [ScanPoint(L=L, S1=v + 5.5) for L, v in zip(LADDER, s1)]
        ca = local_c_estimates(base, 6).entries
        cb = local_c_estimates(shifted, 6).entries
        assert np.allclose([c for _, c in ca], [c for _, c in cb], atol=1e-12)

    def test_reparametrization_invariance(self, rng):
        s1 = np.log(LADDER) / 6 + rng.uniform(0, 0.01, size=len(LADDER))
        base = [ScanPoint(L=L, S1=v) for L, v in zip(LADDER, s1)]
        scaled = [ScanPoint(L=3 * L, S1=v) for L, v in zip(LADDER, s1)]
        ca = local_c_estimates(base, 6).entries
        cb = local_c_estimates(scaled, 6).entries
        assert np.allclose([c for _, c in ca], [c for _, c in cb], atol=1e-12)


class TestExtrapolation:
    def test_exact_quadratic_recovered(self):
        series = quadratic_series(0.93, 0.4, -0.2, LADDER)
        assert extrapolate_c(series) == pytest.approx(0.93, abs=1e-10)

    def test_constant_entries(self):
        series = CEstimateSeries(
            entries=tuple((float(L), 0.97) for L in LADDER), geometry_factor=12.0
        )
        assert extrapolate_c(series) == pytest.approx(0.97, abs=1e-12)

    def test_needs_three_entries(self):
        series = CEstimateSeries(entries=((64.0, 1.0), (128.0, 1.0)), geometry_factor=6.0)
        with pytest.raises(ValueError):
            extrapolate_c(series)

    def test_degenerate_design_matrix(self):
        series = CEstimateSeries(
            entries=((64.0, 1.0), (64.0, 1.0), (64.0, 1.0)), geometry_factor=6.0
        )
        with pytest.raises(ValueError):
            extrapolate_c(series)

    def test_monotone_refinement(self):
        # exact conformal line plus an O(1/ln L) lattice correction: the
        # extrapolation must beat the last local estimate
        Ls = [2**j for j in range(6, 13)]
        points = [
            ScanPoint(L=L, S1=math.log(L) / 6 + 0.3 / math.log(L) + 0.1) for L in Ls
        ]
        series = local_c_estimates(points, 6)
        c_inf = extrapolate_c(series)
        last_local = series.entries[-1][1]
        assert abs(c_inf - 1.0) < abs(last_local - 1.0)


class TestConstantFit:
    def test_exact_finite_cut_data(self):
        c, k1_true = 1.0, 0.37
        points = [
            ScanPoint(L=L, S1=(c / 12) * math.log(2 * L / math.pi) + k1_true)
            for L in LADDER
        ]
        k1, residual = fit_conformal_constants(points, FiniteChainCut(2.0, 1.0), c)
        assert k1 == pytest.approx(k1_true, abs=1e-12)
        assert residual <= 1e-12

    def test_noisy_data_bounded_residual(self, rng):
        noise = rng.uniform(-0.01, 0.01, size=len(LADDER))
        points = [
            ScanPoint(L=L, S1=math.log(L) / 6 + 0.2 + dn)
            for L, dn in zip(LADDER, noise)
        ]
        _, residual = fit_conformal_constants(points, InfiniteLineInterval(1.0), 1.0)
        assert residual <= 0.02

    def test_xx_residual_shrinks_with_min_size(self):
        Ls = [16, 32, 64, 128, 256]
        points = []
        for L in Ls:
            spec = single_particle_energies(xx_correlations_infinite(L))
            points.append(ScanPoint(L=L, S1=summary_from_single_particle(spec).S1))
        _, res_all = fit_conformal_constants(points, InfiniteLineInterval(1.0), 1.0)
        _, res_tail = fit_conformal_constants(points[2:], InfiniteLineInterval(1.0), 1.0)
        assert res_tail < res_all

    def test_needs_two_points(self):
        with pytest.raises(ValueError):
            fit_conformal_constants([ScanPoint(L=10, S1=1.0)], InfiniteLineInterval(1.0), 1.0)
