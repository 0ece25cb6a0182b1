import math

import pytest

from cdelta.field import build_field
from cdelta.predict import (cgm_preimage_formula, gcd_closed_form,
                            predict_gold, predict_gold_root_counts,
                            predict_halfgold, predict_hrs_apn, predict_pn3,
                            predict_prior_results, predict_3n3half)
from cdelta.spectra import dickson_fiber_sizes, uniformity
from cdelta.functions import Monomial


class TestGcdClosedForm:
    def test_spec_points(self):
        assert gcd_closed_form(2, 2, 4) == 5 == math.gcd(5, 15)
        assert gcd_closed_form(3, 1, 3) == 2 == math.gcd(4, 26)
        assert gcd_closed_form(3, 1, 2) == 4 == math.gcd(4, 8)

    def test_exhaustive_small(self):
        for p in (2, 3, 5, 7):
            for k in range(1, 13):
                for n in range(1, 13):
                    assert gcd_closed_form(p, k, n) == \
                        math.gcd(p ** k + 1, p ** n - 1), (p, k, n)


class TestPredictGold:
    def test_spec_points(self):
        f32 = build_field(2, 5)
        pred = predict_gold(f32, 2, 3)
        assert pred.applicable and pred.value == 3
        f256 = build_field(2, 8)
        pred = predict_gold(f256, 2, 5)
        assert pred.applicable and pred.value == 5
        f64 = build_field(2, 6)
        pred = predict_gold(f64, 2, 3)   # n even, m = 3: not covered
        assert not pred.applicable

    def test_linear_case_of_c(self):
        # (1-c)^(2^k-1) = 1 degenerates the reduction; the value is the
        # plain gcd and needs no m-condition
        f32 = build_field(2, 5)
        pred = predict_gold(f32, 2, 0)
        assert pred.applicable and pred.value == 1
        assert pred.extras["degenerate_c"]
        f256 = build_field(2, 8)
        pred = predict_gold(f256, 2, 0)
        assert pred.value == 5   # m even keeps the generic value

    def test_errors(self):
        f32 = build_field(2, 5)
        with pytest.raises(ValueError):
            predict_gold(f32, 1, 2)
        with pytest.raises(ValueError):
            predict_gold(f32, 5, 2)
        with pytest.raises(ValueError):
            predict_gold(f32, 2, 1)
        with pytest.raises(ValueError):
            predict_gold(build_field(3, 3), 2, 0)


class TestPredictGoldRootCounts:
    def test_spec_points(self):
        assert predict_gold_root_counts(5, 1) == {0: 11, 1: 15, 3: 5}
        assert predict_gold_root_counts(4, 1) == {0: 5, 1: 8, 3: 2}
        assert predict_gold_root_counts(9, 3) == {9: 1}

    def test_d1_totals(self):
        for n in range(3, 15):
            pred = predict_gold_root_counts(n, 1)
            assert sum(pred.values()) == 2 ** n - 1


class TestPredictPn3:
    def test_spec_points(self):
        assert predict_pn3(build_field(3, 4), 2).value == 6
        assert predict_pn3(build_field(3, 5), 2).value == 4
        assert predict_pn3(build_field(3, 3), 0).value == 2

    def test_other_c_upper_bound(self):
        pred = predict_pn3(build_field(3, 3), 4)
        assert pred.kind == "upper_bound" and pred.value == 5
        assert pred.extras["attains_4"]

    def test_n2_minus_one_not_applicable(self):
        pred = predict_pn3(build_field(3, 2), 2)
        assert pred.value == 4 and not pred.applicable

    def test_c_one_rejected(self):
        with pytest.raises(ValueError):
            predict_pn3(build_field(3, 3), 1)


class TestPredictHalfgold:
    def test_spec_points(self):
        pred = predict_halfgold(3, 3, 2)
        assert pred.kind == "class" and pred.klass == "PcN"
        pred = predict_halfgold(5, 3, 1)
        assert pred.kind == "exact" and pred.value == 3
        pred = predict_halfgold(3, 4, 1)
        assert pred.value == 2   # APcN as an exact value

    def test_ell_parameter(self):
        # PcN case has ell = 1; otherwise ell equals the exact value
        assert predict_halfgold(3, 3, 2).extras["ell"] == 1
        assert predict_halfgold(5, 3, 1).extras["ell"] == 3
        assert predict_halfgold(3, 4, 1).extras["ell"] == 2

    def test_predicate_divergence_flag(self):
        # k = 1, n = 3: n/gcd odd but 2n/gcd(2n, k) even
        pred = predict_halfgold(3, 3, 1)
        assert pred.extras["predicates_diverge"]
        assert pred.extras["pcn_n_over_gcd_odd"]
        assert not pred.extras["pcn_operative"]
        assert pred.value == 2


class TestPredict3n3half:
    def test_spec_points(self):
        assert predict_3n3half(3, -1).klass == "PcN"
        assert predict_3n3half(2, -1).klass == "APcN"
        assert predict_3n3half(3, 1).value == 4
        assert predict_3n3half(4, 1).value == 1

    def test_gcd_table(self):
        # gcd((3^n-3)/2, 3^(2n)-1) is 1 / 4 / 8 by n mod 4
        for n in range(2, 9):
            want = math.gcd((3 ** n - 3) // 2, 3 ** (2 * n) - 1)
            got = predict_3n3half(n, 1).extras["gcd_lower_family"]
            assert got == want, n

    def test_bad_c(self):
        with pytest.raises(ValueError):
            predict_3n3half(3, 0)


class TestPredictPrior:
    def test_case_i(self):
        pred = predict_prior_results(build_field(3, 2), "i", c=0)
        assert pred.kind == "exact" and pred.value == 2 and pred.applicable

    def test_case_ii_lower_bound(self):
        f9 = build_field(3, 2)
        # (1-c)^2 = 1 holds for c in {0, 2}; n/gcd = 2 even -> bound 4
        pred = predict_prior_results(f9, "ii", k=1, c=0)
        assert pred.kind == "lower_bound" and pred.value == 4
        pred = predict_prior_results(f9, "ii", k=1, c=4)
        assert pred.kind == "class" and pred.klass == "NotPcN"

    def test_case_iii_delegates_to_halfgold(self):
        f27 = build_field(3, 3)
        pred = predict_prior_results(f27, "iii", k=2)
        assert pred.kind == "class" and pred.klass == "PcN"
        pred = predict_prior_results(f27, "iii", k=1)
        assert pred.value == 2 and pred.extras["predicates_diverge"]

    def test_case_iv(self):
        pred = predict_prior_results(build_field(3, 2), "iv", c=0)
        assert pred.kind == "lower_bound" and pred.value == 2

    def test_unknown_case(self):
        with pytest.raises(ValueError):
            predict_prior_results(build_field(3, 2), "v")


class TestCgmPreimage:
    def test_identity(self):
        f9 = build_field(3, 2)
        for x0 in range(9):
            assert cgm_preimage_formula(f9, 1, x0) == 1

    def test_tnph_n2(self):
        f9 = build_field(3, 2)
        sizes = {cgm_preimage_formula(f9, 6, x0) for x0 in range(9)}
        assert max(sizes) == 2

    def test_c1_exponent_max_four(self):
        f27 = build_field(3, 3)
        d = (27 - 3) // 2
        sizes = {cgm_preimage_formula(f27, d, x0) for x0 in range(27)}
        assert max(sizes) == 4

    def test_matches_measured_fibers(self):
        for p, n in ((3, 2), (3, 3), (5, 2)):
            field = build_field(p, n)
            for d in range(2, 11):
                measured = dickson_fiber_sizes(field, d)
                for x0 in range(field.q):
                    assert cgm_preimage_formula(field, d, x0) == \
                        int(measured[x0]), (p, n, d, x0)

    def test_requires_odd(self):
        with pytest.raises(ValueError):
            cgm_preimage_formula(build_field(2, 3), 3, 1)


class TestPredictHrs:
    def test_spec_points(self):
        pred = predict_hrs_apn(build_field(7, 2), "hrs1")
        assert pred.applicable and pred.value == 2
        pred = predict_hrs_apn(build_field(3, 3), "hrs7")
        assert pred.applicable and pred.value == 2

    def test_inverse_family_needs_field_size_condition(self):
        # p = 5, n = 2 has 5^2 = 1 (mod 3); the inverse map is 4-uniform
        # there, so the honest applicability is on p^n (ledgered)
        pred = predict_hrs_apn(build_field(5, 2), "hrs2")
        assert not pred.applicable
        assert uniformity(build_field(5, 2), Monomial(23), 1).delta == 4
        pred = predict_hrs_apn(build_field(5, 3), "hrs2")
        assert pred.applicable and pred.value == 2

    def test_dobbertin_upper_bound(self):
        pred = predict_hrs_apn(build_field(3, 3), "dobbertin-a")
        assert pred.kind == "upper_bound" and pred.value == 2

    def test_degenerate_square_points_skip(self):
        # p^n = 3 (item 4) and p^n = 7 (item 5) give exponent 2, the
        # planar square map; those points are inapplicable by design
        assert not predict_hrs_apn(build_field(3, 1), "hrs4").applicable
        assert not predict_hrs_apn(build_field(7, 1), "hrs5").applicable
