import logging
import math
from typing import List

import pytest

from planarmono import build_field
from planarmono.poly import DensePolynomial, compose, dickson, is_odd
from planarmono.runner import Runner
from planarmono.types import HyperovalReport, IdentityReport, ScanRow, SearchReport
from planarmono.verifiers import BaseVerifier, Verifier, all_passed
from planarmono.verifiers.lemmas import counterexample_polynomials

from utils import validate


def below_three(point):
    return point["n"] < 3


def assert_passed(*reports):
    for report in reports:
        validate(IdentityReport, report)
        assert report["passed"], report["counterexample"]
        assert report["counterexample"] is None


class TestBase:
    def test_grid_reports_first_failure(self, caplog):
        base = BaseVerifier(Runner(1))
        points = [{"n": n} for n in range(5)]
        with caplog.at_level(logging.WARNING):
            report = base._grid("below_three", ["n"], below_three, points)
        validate(IdentityReport, report)
        assert not report["passed"]
        assert report["counterexample"] == {"n": 3}
        assert [p["passed"] for p in report["points"]] == [True] * 3 + [False] * 2
        assert "below_three fails" in caplog.text

    def test_all_passed(self):
        assert all_passed([])
        assert not all_passed([{"passed": True}, {"passed": False}])

    def test_suites_share_settings(self):
        verifier = Verifier(k_max=3, seed=7, search_cap=81)
        assert verifier.planar.search_cap == 81
        assert verifier.lemmas.seed == 7
        assert verifier.exceptional.k_max == 3


class TestIdentities:
    def test_additive(self, verifier):
        report = verifier.identities.additive(primes=(3, 5), max_i=2)
        assert_passed(report)
        assert len(report["points"]) == 12
        assert report["grid"] == ["p", "i", "j"]

    def test_dickson_difference(self, verifier):
        assert_passed(verifier.identities.dickson_difference())

    def test_terminal(self, verifier):
        assert_passed(*verifier.identities.terminal())

    def test_coefficients(self, verifier):
        closed, reduced = verifier.identities.coefficients(t_max=16)
        assert_passed(closed, reduced)
        assert closed["identity_name"] == "b_closed_forms"
        assert len(reduced["points"]) == 7 * 3

    def test_b_squared(self, verifier):
        assert_passed(verifier.identities.b_squared(t_max=12))

    def test_symmetries(self, verifier):
        assert_passed(*verifier.identities.symmetries(t_max=16, n_max=12))


class TestLemmas:
    def test_lucas(self, verifier):
        report = verifier.lemmas.lucas(n_max=40)
        assert_passed(report)
        assert len(report["points"]) == 4 * 41

    def test_odd_composition(self, verifier):
        assert_passed(verifier.lemmas.odd_composition(count=40))

    def test_even_term_breaks_oddness(self, gf5):
        # (x^3 + x^2)^3 + (x^3 + x^2) has x^8 coefficient 3
        g = DensePolynomial.from_ints((0, 1, 0, 1), gf5)
        h = DensePolynomial.from_ints((0, 0, 1, 1), gf5)
        assert not is_odd(compose(g, h))

    def test_twisted_odd(self, verifier):
        assert_passed(verifier.lemmas.twisted_odd(count=40))

    def test_seeded_points_are_reproducible(self, verifier):
        first = verifier.lemmas.odd_composition(count=5)["points"]
        again = Verifier(seed=0).lemmas.odd_composition(count=5)["points"]
        assert first == again

    def test_counterexample(self, verifier, gf3):
        assert_passed(verifier.lemmas.counterexample())
        g, h = counterexample_polynomials(3, 1)
        assert g == DensePolynomial.from_ints((1, -1, -1, 1), gf3)
        assert h == DensePolynomial.from_ints((2, 2, 1, 2), gf3)


class TestExceptional:
    def test_monomials(self, verifier):
        report = verifier.exceptional.monomials(max_q=16, m_max=10)
        assert_passed(report)
        assert {p["parameters"]["p"] for p in report["points"]} == {2, 3, 5, 7, 11, 13}

    def test_dickson(self, verifier):
        assert_passed(verifier.exceptional.dickson(max_q=27, n_max=14))

    def test_functional_equation(self, verifier):
        assert_passed(verifier.exceptional.functional_equation(n_max=8))

    def test_composition(self, verifier):
        assert_passed(verifier.exceptional.composition(max_q=16, count=25))

    def test_certificates(self, verifier):
        assert_passed(verifier.exceptional.certificates())

    def test_classify(self, verifier):
        verdict = verifier.exceptional.classify(dickson(5, 1, build_field(2)), 2)
        assert verdict.status == "CERTIFIED_EXCEPTIONAL"

    def test_scan(self, verifier, gf5):
        verdict = verifier.exceptional.scan(DensePolynomial.monomial(3, gf5), 5)
        assert verdict.bijective_degrees == [1, 3, 5]


class TestHyperovals:
    def test_check(self, verifier):
        report = verifier.hyperovals.check(3, 4)
        validate(HyperovalReport, report)
        assert report["hyperoval"]
        assert report["q"] == 8
        assert report["triples"] == math.comb(10, 3)
        assert report["witness"] is None

    def test_check_collinear(self, verifier):
        report = verifier.hyperovals.check(3, 3)
        validate(HyperovalReport, report)
        assert not report["hyperoval"]
        assert len(report["witness"]) == 3

    @pytest.mark.parametrize("k", [0, 9])
    def test_check_range(self, verifier, k):
        with pytest.raises(ValueError):
            verifier.hyperovals.check(k, 2)

    def test_scan(self, verifier):
        rows = verifier.hyperovals.scan(8)
        validate(List[ScanRow], rows)
        assert rows[2] == {"t": 6, "c_t3": 0, "c_t7": 0, "power_of_two": False}

    def test_families(self, verifier):
        assert_passed(
            verifier.hyperovals.hyperconics(k_max=4),
            verifier.hyperovals.translations(k_max=5),
            verifier.hyperovals.segre(),
        )

    def test_scan_uniqueness(self, verifier):
        assert_passed(verifier.hyperovals.scan_uniqueness(t_max=40))

    def test_slope_relations(self, verifier):
        assert_passed(verifier.hyperovals.slope_relations(t_max=24))

    def test_exceptional_slope(self, verifier):
        report = verifier.hyperovals.exceptional_slopes()
        assert_passed(report)
        assert report["points"][0]["parameters"] == {"t": 6, "k_max": 5}

    def test_run(self, verifier):
        reports = verifier.hyperovals.run()
        assert [r["identity_name"] for r in reports] == [
            "hyperconic",
            "translation_hyperoval",
            "segre_hyperoval",
            "slope_scan",
            "slope_relation",
            "exceptional_slope",
        ]
        assert all_passed(reports)


class TestPlanar:
    def test_search(self, verifier):
        reports = list(verifier.planar.search(27))
        for report in reports:
            validate(SearchReport, report)
        assert [r["q"] for r in reports] == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27]
        assert not any(r["mismatches"] for r in reports)

    def test_search_window(self, verifier):
        reports = list(verifier.planar.search(27, min_q=25, include_all=True))
        assert [r["q"] for r in reports] == [25, 27]
        assert not all(e["planar"] for e in reports[0]["entries"])

    def test_search_cap(self):
        verifier = Verifier(search_cap=81)
        with pytest.raises(ValueError):
            list(verifier.planar.search(243))

    def test_invariants(self, verifier):
        assert_passed(
            verifier.planar.proven_range(max_q=49),
            verifier.planar.family_members(max_q=81),
            verifier.planar.theorem_range(orders=(81, 625)),
            verifier.planar.single_shift(max_q=27),
        )

    def test_single_shift_covers_every_field_up_to_343(self, verifier):
        report = verifier.planar.single_shift()
        assert_passed(report)
        assert report["points"][-1]["parameters"] == {"p": 7, "r": 3}

    def test_orbit_invariance(self, verifier):
        report = verifier.planar.orbit_invariance()
        assert_passed(report)
        assert report["points"][-1]["parameters"] == {"p": 3, "r": 4}

    def test_theorem_range_needs_odd_prime_power(self, verifier):
        with pytest.raises(ValueError):
            verifier.planar.theorem_range(orders=(8,))
        with pytest.raises(ValueError):
            verifier.planar.theorem_range(orders=(15,))

    def test_run(self, verifier):
        reports = verifier.planar.run(max_q=9)
        assert [r["identity_name"] for r in reports] == [
            "proven_range",
            "family_members_planar",
            "theorem_range",
            "single_shift",
            "orbit_invariance",
        ]
        assert all_passed(reports)
