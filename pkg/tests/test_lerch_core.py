import math

import numpy as np
import pytest

from lerchlab import (
    DegenerateParameterError,
    DomainError,
    L_pm,
    LerchParams,
    NonConvergenceError,
    Parity,
    Strategy,
    StrategyConfig,
    completed_L,
    eval_reflected,
    eval_strip,
    hurwitz,
    lerch_star,
    lerch_star_many,
    lerch_zeta,
    root_number,
    tate_gamma,
    zeta_direct,
)

from oracles import (
    direct_sum,
    mp_L_pm,
    mp_lerch,
    two_sided_sum,
)

PI2_6 = math.pi ** 2 / 6.0
PI2_12 = math.pi ** 2 / 12.0

# frozen fixtures (oracle values recorded before wiring the assertions;
# the direct-sum fixture carries its own tail bound of 5.0e-13)
FIX_S3 = 7.8370270231168515 + 0.20643842913792834j       # zeta(3, 1/3, 1/2)
FIX_EXT = -0.5696364573848531 + 15.841269144116916j      # zeta*(2, 1/4, -3/4)
FIX_STRIP = 1.5239083441335401 + 0.3541335026410152j     # zeta(1/2, 1/3, 1/4)
FIX_OSC = -0.3791525473686997 + 1.9888063854964169j      # zeta(.9+14.1j,.41,.37)


def loose_cfg(tol=1e-6, max_terms=2_000_000):
    return StrategyConfig(target_tol=tol, max_terms=max_terms)


class TestZetaDirect:
    def test_basel_point(self):
        res = zeta_direct(LerchParams(2.0, 0.0, 1.0), loose_cfg(1e-6))
        assert res.strategy is Strategy.DIRECT_SERIES
        assert abs(res.value - PI2_6) <= res.error_estimate
        assert res.error_estimate <= 1.1e-6

    def test_alternating_point(self):
        # alternating-series oracle: error below first omitted term
        n = np.arange(0, 2_000_001, dtype=float)
        oracle = np.sum((-1.0) ** n * (n + 1.0) ** (-2.0))
        assert abs(oracle - PI2_12) < 1e-12
        res = zeta_direct(LerchParams(2.0, 0.5, 1.0), loose_cfg(1e-6))
        assert abs(res.value - PI2_12) <= res.error_estimate

    def test_fixture_s3(self):
        res = zeta_direct(LerchParams(3.0, 1.0 / 3.0, 0.5), loose_cfg(1e-10))
        assert abs(res.value - FIX_S3) <= res.error_estimate + 5.1e-13

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            zeta_direct(LerchParams(0.8, 0.3, 0.5))
        with pytest.raises(DomainError):
            zeta_direct(LerchParams(2.0, 0.3, -0.5))

    def test_non_convergence(self):
        with pytest.raises(NonConvergenceError):
            zeta_direct(LerchParams(1.2, 0.3, 0.5), loose_cfg(1e-10))

    def test_tail_bound_is_honest(self):
        res = zeta_direct(LerchParams(2.5, 0.2, 0.7), loose_cfg(1e-7))
        ref = mp_lerch(2.5, 0.2, 0.7)
        assert abs(res.value - ref) <= res.error_estimate


class TestLerchStar:
    def test_specializes_to_one_sided_series(self):
        p = LerchParams(2.0, 0.25, 0.25)
        a = lerch_star(p)
        b = zeta_direct(p, loose_cfg(1e-6))
        assert abs(a.value - b.value) <= b.error_estimate

    def test_twisted_shift_in_c(self):
        s, a = 2.0, 0.25
        v0 = lerch_star(LerchParams(s, a, 0.25)).value
        v1 = lerch_star(LerchParams(s, a, 1.25)).value
        assert abs(v1 - np.exp(-2j * np.pi * a) * v0) < 1e-12

    def test_extended_fixture(self):
        res = lerch_star(LerchParams(2.0, 0.25, -0.75))
        # oracle summed to N=1e6; oscillatory tail well below 1e-9
        assert abs(res.value - FIX_EXT) < 1e-8

    def test_twisted_periodicity_random(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            s = complex(rng.uniform(0.2, 2.5), rng.uniform(-5, 5))
            a = rng.uniform(0.05, 0.95)
            c = rng.uniform(0.05, 0.95)
            v = lerch_star(LerchParams(s, a, c)).value
            va = lerch_star(LerchParams(s, a + 1.0, c)).value
            vc = lerch_star(LerchParams(s, a, c + 1.0)).value
            assert abs(va - v) < 1e-10
            assert abs(vc - np.exp(-2j * np.pi * a) * v) < 1e-10

    def test_pole_flag_on_integer_lines(self):
        with pytest.raises(DegenerateParameterError):
            lerch_star(LerchParams(1.0, 0.0, 0.4))

    def test_many_matches_scalar(self):
        s = 0.7 + 2j
        a = np.array([0.2, 0.8, 0.41])
        c = np.array([0.3, 0.9, 0.11])
        vals, errs = lerch_star_many(s, a, c)
        for i in range(3):
            single = lerch_star(LerchParams(s, a[i], c[i]))
            assert abs(vals[i] - single.value) <= 1e-12 + errs[i]


class TestLerchZeta:
    def test_matches_star_in_cell(self):
        p = LerchParams(1.4, 0.3, 0.8)
        assert abs(lerch_zeta(p).value - lerch_star(p).value) == 0.0

    def test_large_c_differs_from_star_by_head_terms(self):
        s, a, c = 2.0, 0.3, 2.5
        ref = mp_lerch(s, a, c)
        assert abs(lerch_zeta(LerchParams(s, a, c)).value - ref) < 1e-11

    def test_requires_positive_c(self):
        with pytest.raises(DomainError):
            lerch_zeta(LerchParams(2.0, 0.3, -0.2))


class TestLPm:
    def test_plus_combination_identity(self):
        # L+ equals the stated combination of the two extended values
        s = 2.0
        got = L_pm(LerchParams(s, 1 / 3, 0.5), Parity.PLUS).value
        z1 = direct_sum(s, 1 / 3, 0.5, N=400_000)
        z2 = direct_sum(s, 2 / 3, 0.5, N=400_000)
        expect = z1 + np.exp(-2j * np.pi / 3) * z2
        assert abs(got - expect) < 1e-9

    def test_center_symmetries(self):
        # at a = c = 1/2 every term of L^- is real, and L^+ vanishes by
        # the J-eigenvalue argument (J fixes the center with eigenvalue -1)
        for s in (2.0, 2.5, 3.0):
            lm = L_pm(LerchParams(s, 0.5, 0.5), Parity.MINUS).value
            lp = L_pm(LerchParams(s, 0.5, 0.5), Parity.PLUS).value
            oracle = two_sided_sum(s, 0.5, 0.5, N=100_000, signed=True)
            assert abs(lm.imag) < 1e-12
            assert abs(lm - oracle) < 1e-4  # oracle tail is only ~N^(1-s)
            assert abs(lp) < 1e-10

    def test_sum_is_twice_star(self):
        p = LerchParams(2.5, 0.2, 0.7)
        lp = L_pm(p, Parity.PLUS).value
        lm = L_pm(p, Parity.MINUS).value
        star = lerch_star(p).value
        assert abs(0.5 * (lp + lm) - star) < 1e-11

    def test_degenerate_parameters(self):
        with pytest.raises(DegenerateParameterError):
            L_pm(LerchParams(2.0, 0.0, 0.3), Parity.PLUS)
        with pytest.raises(DegenerateParameterError):
            L_pm(LerchParams(2.0, 0.3, 1.0), Parity.MINUS)


class TestEvalStrip:
    def test_overlap_with_direct(self):
        res = eval_strip(LerchParams(2.0, 0.5, 1.0), loose_cfg(1e-12))
        assert abs(res.value - PI2_12) < 1e-10

    def test_dual_strategy_fixture_strip(self):
        p = LerchParams(0.5, 1.0 / 3.0, 0.25)
        accel = eval_strip(p, loose_cfg(1e-12))
        # independent route: functional equation assembled from scratch
        s, a, c = p.s, p.a, p.c
        gp = tate_gamma(1 - s, Parity.PLUS).value
        gm = tate_gamma(1 - s, Parity.MINUS).value
        z1 = eval_strip(LerchParams(1 - s, 1 - c, a), loose_cfg(1e-12)).value
        z2 = eval_strip(LerchParams(1 - s, c, 1 - a), loose_cfg(1e-12)).value
        pre = np.exp(-2j * np.pi * a * c)
        lp = gp * pre * (z1 + np.exp(-2j * np.pi * (1 - c)) * z2)
        lm = 1j * gm * pre * (z1 - np.exp(-2j * np.pi * (1 - c)) * z2)
        # zeta = zeta* on the cell, and L+ + L- = 2 zeta*
        reflected = 0.5 * (lp + lm)
        assert abs(accel.value - reflected) < 1e-8
        assert abs(accel.value - FIX_STRIP) < 1e-8

    def test_dual_strategy_fixture_oscillatory(self):
        p = LerchParams(0.9 + 14.1j, 0.41, 0.37)
        accel = eval_strip(p, loose_cfg(1e-12))
        assert abs(accel.value - FIX_OSC) < 1e-8

    def test_near_integer_guard(self):
        with pytest.raises(DomainError):
            eval_strip(LerchParams(0.5, 1e-7, 0.5))

    def test_requires_positive_sigma(self):
        with pytest.raises(DomainError):
            eval_strip(LerchParams(-0.2, 0.3, 0.5))

    def test_error_estimate_honest(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            s = complex(rng.uniform(0.1, 3.0), rng.uniform(-15, 15))
            a = rng.uniform(0.05, 0.95)
            c = rng.uniform(0.05, 0.95)
            res = eval_strip(LerchParams(s, a, c), loose_cfg(1e-12))
            ref = mp_lerch(s, a, c)
            assert abs(res.value - ref) <= max(res.error_estimate, 1e-12) * 20


class TestEvalReflected:
    def test_against_continued_oracle(self):
        p = LerchParams(-1.5, 0.3, 0.6)
        for parity, sign in ((Parity.PLUS, 1), (Parity.MINUS, -1)):
            got = eval_reflected(p, parity)
            ref = mp_L_pm(sign, -1.5, 0.3, 0.6)
            assert got.strategy is Strategy.REFLECTED
            assert abs(got.value - ref) < 1e-10

    def test_reflection_structure(self):
        # L+(-1.5, .3, .6) = w+ gamma+(2.5) e^(-2 pi i 0.18) L+(2.5, .4, .3)
        lhs = eval_reflected(LerchParams(-1.5, 0.3, 0.6), Parity.PLUS).value
        inner = L_pm(LerchParams(2.5, 0.4, 0.3), Parity.PLUS).value
        coeff = tate_gamma(2.5, Parity.PLUS).value
        rhs = coeff * np.exp(-2j * np.pi * 0.3 * 0.6) * inner
        assert abs(lhs - rhs) < 1e-11

    def test_minus_carries_root_number_i(self):
        lhs = eval_reflected(LerchParams(-1.5, 0.3, 0.6), Parity.MINUS).value
        inner = L_pm(LerchParams(2.5, 0.4, 0.3), Parity.MINUS).value
        coeff = root_number(Parity.MINUS) * tate_gamma(2.5, Parity.MINUS).value
        rhs = coeff * np.exp(-2j * np.pi * 0.18) * inner
        assert abs(lhs - rhs) < 1e-11

    def test_strip_residual_of_functional_equation(self):
        # both sides evaluated in the strip, residual of the raw equation
        s, a, c = 0.5, 0.3, 0.6
        for parity, sign in ((Parity.PLUS, 1), (Parity.MINUS, -1)):
            lhs = L_pm(LerchParams(s, a, c), parity).value
            inner = L_pm(LerchParams(1 - s, 1 - c, a), parity).value
            rhs = (root_number(parity) * tate_gamma(1 - s, parity).value
                   * np.exp(-2j * np.pi * a * c) * inner)
            assert abs(lhs - rhs) < 1e-8

    def test_precondition(self):
        with pytest.raises(DomainError):
            eval_reflected(LerchParams(0.5, 0.3, 0.6), Parity.PLUS)


class TestCompletedL:
    @pytest.mark.parametrize("parity,w", [(Parity.PLUS, 1.0), (Parity.MINUS, 1j)])
    def test_functional_equation_residual(self, parity, w):
        s, a, c = 0.4, 0.25, 0.7
        lhs = completed_L(LerchParams(s, a, c), parity).value
        rhs = w * np.exp(-2j * np.pi * a * c) \
            * completed_L(LerchParams(1 - s, 1 - c, a), parity).value
        assert abs(lhs - rhs) / max(abs(lhs), abs(rhs)) < 1e-8

    def test_self_dual_line(self):
        a, c = 0.3, 0.55
        lhs = completed_L(LerchParams(0.5, a, c), Parity.PLUS).value
        rhs = np.exp(-2j * np.pi * a * c) \
            * completed_L(LerchParams(0.5, 1 - c, a), Parity.PLUS).value
        assert abs(lhs - rhs) < 1e-8 * max(1.0, abs(lhs))

    def test_pole_propagation(self):
        with pytest.raises(DegenerateParameterError):
            completed_L(LerchParams(0.0, 0.3, 0.6), Parity.PLUS)


class TestHurwitz:
    def test_basel(self):
        res = hurwitz(2.0, 1.0)
        oracle = direct_sum(2.0, 0.0, 1.0, N=1_000_000)
        assert abs(res.value - PI2_6) < 1e-12
        assert abs(oracle - PI2_6) < 2e-6  # oracle has its own slow tail

    def test_bisection_identity(self):
        # zeta_H(2, 1/2) = (4 - 1) pi^2 / 6 = pi^2 / 2
        res = hurwitz(2.0, 0.5)
        assert abs(res.value - math.pi ** 2 / 2.0) < 1e-12

    def test_matches_zeta_direct_at_a0(self):
        for x in (0.3, 1.0, 2.7):
            h = hurwitz(3.0, x)
            d = zeta_direct(LerchParams(3.0, 0.0, x), loose_cfg(1e-10))
            assert abs(h.value - d.value) < 1e-9

    def test_pole(self):
        with pytest.raises(DegenerateParameterError):
            hurwitz(1.0, 0.5)

    def test_negative_sigma_against_oracle(self):
        from oracles import mp_hurwitz

        for s, x in ((-2.5, 0.3), (-0.5 + 4j, 0.8), (6.0, 0.1)):
            res = hurwitz(s, x)
            assert abs(res.value - mp_hurwitz(s, x)) < 1e-11 * max(
                1.0, abs(res.value))


class TestStrategyDispatch:
    def test_strategy_agreement_invariant(self):
        # direct summation is honest only where the absolute tail bound is
        # cheap, so the agreement window sits at Re s in (2.5, 3.5]
        rng = np.random.default_rng(17)
        direct_cfg = loose_cfg(1e-10, max_terms=6_000_000)
        for _ in range(100):
            s = complex(rng.uniform(2.5, 3.5), rng.uniform(-2, 2))
            a = rng.uniform(0.05, 0.95)
            c = rng.uniform(0.05, 0.95)
            strip = eval_strip(LerchParams(s, a, c), loose_cfg(1e-12))
            direct = zeta_direct(LerchParams(s, a, c), direct_cfg)
            assert abs(strip.value - direct.value) < 1e-9

    def test_dispatcher_uses_direct_when_cheap(self):
        cfg = StrategyConfig(target_tol=1e-8)
        res = lerch_star(LerchParams(4.0, 0.3, 0.7), cfg)
        assert res.strategy is Strategy.DIRECT_SERIES

    def test_dispatcher_reflects_below_sigma_lo(self):
        res = lerch_star(LerchParams(-1.0, 0.3, 0.7))
        assert res.strategy is Strategy.REFLECTED

    def test_config_validation(self):
        with pytest.raises(DomainError):
            StrategyConfig(sigma_hi=-1.0, sigma_lo=0.0)
        with pytest.raises(DomainError):
            StrategyConfig(max_terms=10)

    def test_env_tolerance_override(self, monkeypatch):
        monkeypatch.setenv("LERCHLAB_TOL", "1e-9")
        assert StrategyConfig().target_tol == 1e-9

    def test_raising_lowering_series_route(self):
        # finite-difference d/dc of zeta matches -s zeta(s+1) (the series
        # route); the stencil side lives in diff_ops, here the pure series
        # identity via the one-sided values
        s, a, c = 2.2, 0.3, 0.6
        h = 1e-5
        up = lerch_star(LerchParams(s, a, c + h)).value
        down = lerch_star(LerchParams(s, a, c - h)).value
        dc = (up - down) / (2 * h)
        target = -s * lerch_star(LerchParams(s + 1, a, c)).value
        assert abs(dc - target) < 1e-5


class TestLerchParams:
    def test_classification_flags(self):
        assert LerchParams(2.0, 1.0, 0.5).a_integral
        assert LerchParams(2.0, 1.0 + 5e-15, 0.5).a_integral
        assert not LerchParams(2.0, 1.0 + 1e-12, 0.5).a_integral
        assert LerchParams(2.0, 0.3, -2.0).c_integral
        assert not LerchParams(2.0, 0.3, 0.5).c_integral

    def test_eval_result_error_nonnegative(self):
        res = lerch_star(LerchParams(0.8, 0.37, 0.52))
        assert res.error_estimate >= 0.0
