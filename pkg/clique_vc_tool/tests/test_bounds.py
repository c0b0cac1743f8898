# -*- coding: utf-8 -*-
"""Tests for the exact bound arithmetic in theorem_bench.bounds."""

##### IMPORTS #####
# Standard imports
import math
from fractions import Fraction

# Third party imports
import pytest

# Local imports
from CVT.errors import IncorrectParameterError
from CVT.theorem_bench import bounds
from CVT.theorem_bench.bounds import ChainStatus

##### CONSTANTS #####
DENSITIES = [Fraction(k, 20) for k in range(1, 20)]


##### TESTS #####
class TestBounds:
    @pytest.mark.parametrize(
        "n, c, r, expected",
        [(3600, Fraction(1, 2), 2, 50), (180, Fraction(1, 2), 5, 1), (100, 0, 2, 0)],
    )
    def test_main(self, n, c, r, expected):
        assert bounds.bound_main(n, c, r) == expected

    def test_main_errors(self):
        with pytest.raises(IncorrectParameterError):
            bounds.bound_main(10, Fraction(1, 2), 1)
        with pytest.raises(IncorrectParameterError):
            bounds.bound_main(10, Fraction(3, 2), 2)

    def test_chordal_and_holmsen(self):
        assert bounds.bound_chordal(100, 0.75) == pytest.approx(50)
        assert bounds.bound_holmsen_k22(100, 0.75) == pytest.approx(25)
        assert bounds.bound_chordal(40, 1) == 40
        assert bounds.bound_holmsen_k22(40, 1) == 40

    @pytest.mark.parametrize("c", DENSITIES)
    def test_chordal_above_holmsen(self, c):
        assert bounds.bound_chordal(100, c) > bounds.bound_holmsen_k22(100, c)

    def test_monotone(self):
        for low, high in zip(DENSITIES, DENSITIES[1:]):
            assert bounds.bound_main(500, low, 3) < bounds.bound_main(500, high, 3)
            assert bounds.bound_chordal(500, low) < bounds.bound_chordal(500, high)
        assert bounds.bound_main(500, Fraction(1, 2), 3) < bounds.bound_main(
            600, Fraction(1, 2), 3
        )


class TestParams:
    def test_half_r2(self):
        params = bounds.make_params(2, Fraction(1, 2))
        assert params.m == 36
        assert params.c_prime == Fraction(1, 72)
        assert params.ss_sum == 37
        assert params.two_binom == 72
        assert params.cap == Fraction(315, 4)
        assert params.n_min == 2592
        assert params.to_dict()["cap_float"] == 78.75

    def test_nine_tenths_r2(self):
        params = bounds.make_params(2, Fraction(9, 10))
        assert params.m == 20
        assert params.cap == Fraction(171, 4)
        assert params.n_min == 800

    def test_half_r3(self):
        params = bounds.make_params(3, "1/2")
        assert params.m == 54
        assert params.ss_sum == 1486
        assert params.two_binom == 2862
        assert params.cap == Fraction(6201, 2)

    @pytest.mark.parametrize("r", range(2, 9))
    def test_grid(self, r):
        for c in DENSITIES:
            params = bounds.make_params(r, c)
            assert params.ss_sum <= params.two_binom < params.cap
            assert params.c_prime * params.n_min >= params.m
            assert params.c_prime * (params.n_min - 1) < params.m

    @pytest.mark.parametrize("c", [0, 1, Fraction(-1, 2)])
    def test_density_errors(self, c):
        with pytest.raises(IncorrectParameterError):
            bounds.make_params(2, c)

    def test_order_error(self):
        with pytest.raises(IncorrectParameterError):
            bounds.make_params(1, Fraction(1, 2))

    def test_thresholds(self):
        assert bounds.sample_size(2, 1) == 18
        assert bounds.n_threshold(2, 1) == 18 * 36
        with pytest.raises(IncorrectParameterError):
            bounds.sample_size(2, 0)


class TestChain:
    def test_half_r2(self):
        report = bounds.eq2_chain(2592, 36, Fraction(1, 72), 2)
        assert report.status == ChainStatus.OK
        assert report.exp_term == pytest.approx(math.exp(-1), abs=1e-9)
        assert report.linear == Fraction(35, 36) ** 36
        assert report.holds
        assert not report.links["linear_ge_exp"]
        assert report.links["exp_ge_quarter"]
        assert report.ratio >= report.product >= report.power >= report.linear

    def test_zero_fraction(self):
        report = bounds.eq2_chain(100, 10, 0, 2)
        assert report.holds
        assert report.power == report.linear == 1
        assert report.ratio >= 1

    def test_n_too_small(self):
        assert bounds.eq2_chain(2591, 36, Fraction(1, 72), 2).status == ChainStatus.N_TOO_SMALL
        assert bounds.eq2_chain(30, 36, 0, 2).status == ChainStatus.N_TOO_SMALL
        assert not bounds.eq2_chain(30, 36, 0, 2).holds

    def test_c_prime_too_large(self):
        report = bounds.eq2_chain(10_000, 36, Fraction(1, 70), 2)
        assert report.status == ChainStatus.C_PRIME_TOO_LARGE
        assert report.to_dict()["ratio"] is None

    def test_errors(self):
        with pytest.raises(IncorrectParameterError):
            bounds.eq2_chain(100, 3, Fraction(1, 10), 4)

    @pytest.mark.parametrize("r", [2, 3])
    def test_thresholds_hold(self, r):
        for c in DENSITIES:
            params = bounds.make_params(r, c)
            report = bounds.eq2_chain(params.n_min, params.m, params.c_prime, r)
            assert report.status == ChainStatus.OK
            assert report.holds

    @pytest.mark.slow
    @pytest.mark.parametrize("r", range(4, 9))
    def test_thresholds_hold_large_r(self, r):
        for c in DENSITIES:
            params = bounds.make_params(r, c)
            assert bounds.eq2_chain(params.n_min, params.m, params.c_prime, r).holds
