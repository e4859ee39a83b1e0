"""Baseline choosers: value/weighting numerics and the proxy deciders."""

from __future__ import annotations

import math
import random

import pytest

from ladderchoice import (
    Lottery,
    PtParams,
    UnsupportedLotteryError,
    compare_theories,
    compatibility_screen,
    cpt_evaluate,
    it_choose,
    psp,
    pt_proxy_choose,
    pt_value,
    pt_weight,
    random_task,
)

# frozen against independent exp/log evaluation of the closed forms
VALUE_100 = 57.543993733715695       # exp(0.88 * log(100))
VALUE_NEG_100 = -129.47398590086033  # -2.25 * exp(0.88 * log(100))
WEIGHT_HALF = 0.42063935433575617    # 0.5^0.61 / (0.5^0.61 + 0.5^0.61)^(1/0.61)
CPT_COINFLIP = 24.20526837005097     # WEIGHT_HALF * VALUE_100


class TestValueFunction:
    def test_zero_maps_to_zero(self):
        assert pt_value(0.0) == 0.0

    def test_gain_curvature(self):
        assert pt_value(100.0) == pytest.approx(VALUE_100, abs=1e-9)
        assert pt_value(100.0) == pytest.approx(math.exp(0.88 * math.log(100.0)), abs=1e-6)

    def test_loss_aversion(self):
        assert pt_value(-100.0) == pytest.approx(VALUE_NEG_100, abs=1e-9)

    def test_sign_preserving_and_increasing(self):
        rng = random.Random(3)
        params = PtParams()
        for _ in range(300):
            x = rng.uniform(-500, 500)
            assert (pt_value(x, params) > 0) == (x > 0)
            step = abs(x) * 0.01 + 0.1
            assert pt_value(x + step, params) > pt_value(x, params)


class TestWeightingFunction:
    def test_endpoint_identities_exact(self):
        assert pt_weight(0.0, 0.61) == 0.0
        assert pt_weight(1.0, 0.61) == 1.0

    def test_midpoint(self):
        assert pt_weight(0.5, 0.61) == pytest.approx(WEIGHT_HALF, abs=1e-9)

    def test_identity_at_gamma_one(self):
        for k in range(1001):
            p = k / 1000
            assert pt_weight(p, 1.0) == p

    def test_monotone_on_unit_interval(self):
        prev = 0.0
        for k in range(1001):
            w = pt_weight(k / 1000, 0.61)
            assert 0.0 <= w <= 1.0
            assert w >= prev
            prev = w

    def test_probability_range_enforced(self):
        with pytest.raises(ValueError):
            pt_weight(1.5, 0.61)


class TestTwoOutcomeEvaluation:
    def test_certainty_reduces_to_value(self):
        assert cpt_evaluate(Lottery([(100.0, 1.0)])) == pytest.approx(pt_value(100.0), abs=1e-12)

    def test_zero_lottery_is_zero(self):
        assert cpt_evaluate(Lottery([(0.0, 1.0)])) == 0.0

    def test_even_coinflip_over_a_gain(self):
        assert cpt_evaluate(Lottery([(100.0, 0.5), (0.0, 0.5)])) == pytest.approx(CPT_COINFLIP, abs=1e-9)

    def test_losses_weighted_separately(self):
        mixed = cpt_evaluate(Lottery([(100.0, 0.5), (-100.0, 0.5)]))
        expected = pt_weight(0.5, 0.61) * pt_value(100.0) + pt_weight(0.5, 0.69) * pt_value(-100.0)
        assert mixed == pytest.approx(expected, abs=1e-12)

    def test_too_many_nonzero_outcomes_rejected(self):
        with pytest.raises(UnsupportedLotteryError):
            cpt_evaluate(Lottery([(1.0, 0.25), (2.0, 0.25), (3.0, 0.5)]))

    def test_lottery_invariants(self):
        with pytest.raises(ValueError):
            Lottery([(1.0, 0.4), (2.0, 0.4)])
        with pytest.raises(ValueError):
            Lottery([(1.0, 1.2), (2.0, -0.2)])

    def test_params_must_be_positive(self):
        with pytest.raises(ValueError):
            PtParams(alpha=0.0)

    def test_loss_tolerance_warns(self):
        with pytest.warns(UserWarning):
            PtParams(loss_aversion=0.5)


class TestRiskMinimizingProxy:
    def test_case1_prefers_the_lowest_risk(self, case1):
        assert pt_proxy_choose(case1, 5).chosen == "m1"

    def test_case2_still_prefers_the_lowest_risk(self, case2):
        # the untransformed minimum, contradicting the ladder engine's m3
        assert pt_proxy_choose(case2, 5).chosen == "m1"

    def test_equal_risks_are_undecidable(self, case1):
        from dataclasses import replace

        from ladderchoice import Alternative, ordinal

        flattened = replace(
            case1,
            alternatives=tuple(
                Alternative(a.id, {**a.values, 5: ordinal(2)}) for a in case1.alternatives
            ),
        )
        assert pt_proxy_choose(flattened, 5).undecidable

    def test_designation_must_be_a_cost(self, case1):
        with pytest.raises(ValueError):
            pt_proxy_choose(case1, 4)  # safety is a benefit
        with pytest.raises(ValueError):
            pt_proxy_choose(case1, 99)


class TestImageChooser:
    def test_case3_ranks_survivors_by_price(self, case3):
        assert it_choose(case3, profit_attribute_id=2).chosen == "site2"

    def test_case1_without_a_criterion_is_undecidable(self, case1):
        result = it_choose(case1)
        assert result.undecidable
        assert "criterion" in result.detail

    def test_case4_ranks_by_wear_time(self, case4):
        assert it_choose(case4, profit_attribute_id=5).chosen == "w1"

    def test_non_numeric_designation_is_undecidable(self, case1):
        assert it_choose(case1, profit_attribute_id=3).undecidable

    def test_zero_budget_screen_equals_the_sift(self):
        for seed in range(200):
            task = random_task(seed, n_alternatives=6, n_attributes=4, n_levels=2)
            assert compatibility_screen(task, 0) == psp(task).feasible

    def test_budget_relaxes_the_screen(self, case2):
        assert compatibility_screen(case2, 0) == ("m2", "m3")
        assert compatibility_screen(case2, 1) == ("m1", "m2", "m3")
        with pytest.raises(ValueError):
            compatibility_screen(case2, -1)


class TestComparisonHarness:
    def test_case2_rows(self, case2):
        rows = {r.theory: r for r in compare_theories(case2, pt_risk_attr=5)}
        assert (rows["lt"].status, rows["lt"].chosen) == ("chosen", "m3")
        assert (rows["pt"].status, rows["pt"].chosen) == ("chosen", "m1")
        assert rows["it"].status == "undecidable"

    def test_pt_without_designation_is_inapplicable(self, case3):
        rows = {r.theory: r for r in compare_theories(case3, it_profit_attr=2)}
        assert rows["pt"].status == "inapplicable"
        assert (rows["it"].status, rows["it"].chosen) == ("chosen", "site2")

    def test_unknown_theory_rejected(self, case1):
        with pytest.raises(ValueError):
            compare_theories(case1, theories=("expected-utility",))
