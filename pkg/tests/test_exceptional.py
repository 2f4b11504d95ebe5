import pytest

from planarmono import build_field
from planarmono.exceptional import (
    ExceptionalityVerdict,
    classify_exceptional,
    coefficients_in,
    dickson_exceptional,
    heuristic_exceptional,
    indecomposable_shape,
    is_bijection,
    monomial_permutes,
    tame_right_components,
    weil_certificate,
)
from planarmono.exceptions import FieldTooLargeError, RingMismatchError
from planarmono.poly import DensePolynomial, compose, dickson
from planarmono.rings import QQ, ZZ


def x_to(m, field):
    return DensePolynomial.monomial(m, field)


class TestBijection:
    def test_monomials(self, gf5, gf7):
        assert is_bijection(x_to(3, gf5), gf5)
        assert not is_bijection(x_to(3, gf7), gf7)

    def test_subfield_coefficients(self, gf3, gf9):
        assert is_bijection(x_to(5, gf3), gf9) == monomial_permutes(5, 9)

    def test_integer_coefficients(self, gf7):
        assert coefficients_in(DensePolynomial((8, 1), ZZ), gf7) == (
            DensePolynomial.from_ints((1, 1), gf7)
        )

    def test_rational_coefficients(self, gf7):
        with pytest.raises(RingMismatchError):
            coefficients_in(DensePolynomial((1, 1), QQ), gf7)

    def test_dickson_13_over_gf3(self, gf3, gf9):
        d13 = dickson(13, 1, gf3)
        assert is_bijection(d13, gf3)
        assert is_bijection(d13, gf9)
        assert not is_bijection(d13, build_field(3, 3))

    def test_laws(self):
        assert monomial_permutes(3, 5)
        assert not monomial_permutes(3, 7)
        assert dickson_exceptional(13, 3)
        assert not dickson_exceptional(2, 3)
        with pytest.raises(ValueError):
            monomial_permutes(0, 5)
        with pytest.raises(ValueError):
            dickson_exceptional(0, 5)


class TestVerdict:
    def test_certified_needs_criterion(self):
        with pytest.raises(ValueError):
            ExceptionalityVerdict("CERTIFIED_NOT", {"tested": []})

    def test_heuristic_needs_degrees(self):
        with pytest.raises(ValueError):
            ExceptionalityVerdict("HEURISTIC_PASS", {"criterion": "weil"})

    def test_properties(self):
        verdict = ExceptionalityVerdict(
            "HEURISTIC_PASS",
            {"tested": [{"k": 1, "bijective": True}, {"k": 2, "bijective": False}]},
        )
        assert verdict.exceptional
        assert not verdict.certified
        assert verdict.bijective_degrees == [1]


class TestHeuristic:
    def test_cube_over_gf5(self, gf5):
        verdict = heuristic_exceptional(x_to(3, gf5), 5, k_max=5)
        assert verdict.status == "HEURISTIC_PASS"
        assert verdict.bijective_degrees == [1, 3, 5]
        assert [o["k"] for o in verdict.evidence["tested"]] == [1, 2, 3, 4, 5]

    def test_square_never_permutes(self, gf5):
        verdict = heuristic_exceptional(x_to(2, gf5), 5, k_max=3)
        assert verdict.status == "HEURISTIC_FAIL"
        assert verdict.bijective_degrees == []
        assert not verdict.exceptional

    def test_cap(self, gf5):
        with pytest.raises(FieldTooLargeError):
            heuristic_exceptional(x_to(3, gf5), 5, k_max=5, cap=1000)

    def test_needs_a_degree(self, gf5):
        with pytest.raises(ValueError):
            heuristic_exceptional(x_to(3, gf5), 5, k_max=0)


class TestWeil:
    def test_certifies_cube(self, gf5):
        verdict = weil_certificate(x_to(3, gf5), build_field(5, 5))
        assert verdict.status == "CERTIFIED_EXCEPTIONAL"
        assert verdict.evidence == {
            "criterion": "weil",
            "parameters": {"degree": 3, "q": 3125},
        }

    def test_linear(self, gf3):
        f = DensePolynomial.from_ints((1, 2), gf3)
        assert weil_certificate(f, build_field(3, 4)).certified

    def test_falls_back_to_heuristic(self, gf5):
        verdict = weil_certificate(x_to(2, gf5), build_field(5, 2), k_max=3)
        assert verdict.status == "HEURISTIC_FAIL"

    def test_needs_nonconstant(self, gf5):
        with pytest.raises(ValueError):
            weil_certificate(DensePolynomial.from_ints((1,), gf5), gf5)


class TestClassify:
    def test_constant_and_linear(self, gf5):
        assert classify_exceptional(DensePolynomial((3,), gf5), 5).evidence == {
            "criterion": "constant",
            "parameters": {},
        }
        linear = classify_exceptional(DensePolynomial.from_ints((1, 4), gf5), 5)
        assert linear.status == "CERTIFIED_EXCEPTIONAL"

    def test_twisted_monomial(self, gf5):
        f = compose(x_to(3, gf5), DensePolynomial.from_ints((2, 1), gf5)) * 3 + 1
        verdict = classify_exceptional(f, 5)
        assert verdict.status == "CERTIFIED_EXCEPTIONAL"
        assert verdict.evidence["criterion"] == "monomial"
        assert verdict.evidence["parameters"] == {"m": 3, "q": 5}

    def test_monomial_not_exceptional(self, gf7):
        assert classify_exceptional(x_to(3, gf7), 7).status == "CERTIFIED_NOT"

    def test_integer_polynomial(self):
        f = DensePolynomial((0, 0, 0, 1), ZZ)
        assert classify_exceptional(f, 5).status == "CERTIFIED_EXCEPTIONAL"

    @pytest.mark.parametrize("n, p", [(5, 3), (13, 3), (5, 2)])
    def test_dickson(self, n, p):
        verdict = classify_exceptional(dickson(n, 1, build_field(p)), p)
        assert verdict.status == "CERTIFIED_EXCEPTIONAL"
        assert verdict.evidence["criterion"] == "dickson"

    def test_dickson_shape(self, gf3):
        shape = indecomposable_shape(dickson(5, 1, gf3), gf3)
        assert shape is not None
        assert (shape.kind, shape.degree) == ("dickson", 5)
        assert shape.parameter == 1

    def test_wild_degree_has_no_shape(self, gf3):
        assert indecomposable_shape(x_to(3, gf3), gf3) is None


class TestTameComponents:
    def test_both_degrees(self, gf7):
        g = DensePolynomial.from_ints((1, 0, 1), gf7)
        h = DensePolynomial.from_ints((0, 1, 0, 1), gf7)
        found = tame_right_components(compose(g, h))
        assert [d for d, _, _ in found] == [2, 3]
        assert found[1] == (3, g, h)
        assert found[0][2] == x_to(2, gf7)

    def test_prime_degree(self, gf7):
        assert tame_right_components(x_to(5, gf7) + DensePolynomial.x(gf7)) == []
