import pytest

from planarmono import build_field
from planarmono.planar import (
    NO_FAMILY,
    FamilyTag,
    canonical_exponents,
    canonicalize,
    check_planar_monomial,
    corollary_family,
    difference_ranks,
    exponent_orbit,
    family_members,
    family_tag,
    is_planar_function,
    is_planar_monomial,
    planar_extension_degrees,
    planar_set,
    predicted_planar_set,
    search_planar,
)
from planarmono.types import SearchReport

from utils import validate


@pytest.fixture
def gf27():
    return build_field(3, 3)


class TestCanonicalize:
    def test_strips_p_and_takes_orbit_minimum(self, gf27):
        cls = canonicalize(gf27, 12)
        assert cls.canonical == 4
        assert set(cls.orbit) == {4, 10, 12}
        assert (cls.p, cls.r, cls.q) == (3, 3, 27)

    def test_reduces_modulo_q_minus_one(self, gf9):
        assert canonicalize(gf9, 10).canonical == canonicalize(gf9, 2).canonical == 2

    def test_equal_classes_compare_equal(self, gf9):
        assert canonicalize(gf9, 6) == canonicalize(gf9, 6)

    def test_rejects_nonpositive(self, gf9):
        with pytest.raises(ValueError):
            canonicalize(gf9, 0)

    def test_orbit(self):
        assert exponent_orbit(2, 3, 9) == (2, 6)
        assert exponent_orbit(4, 3, 9) == (4,)

    def test_canonical_exponents(self, gf9):
        assert canonical_exponents(gf9) == [1, 2, 4, 5, 8]


class TestPlanarity:
    def test_squares_are_planar(self, gf9, gf7):
        assert is_planar_monomial(gf9, 2)
        assert is_planar_monomial(gf7, 2)

    def test_identity_is_not_planar(self, gf7):
        verdict = check_planar_monomial(gf7, 1)
        assert not verdict.planar
        assert "collides" in verdict.reason

    def test_even_characteristic(self, gf8):
        assert check_planar_monomial(gf8, 3) == (False, "p must be odd")
        assert not is_planar_function(gf8, 3)

    def test_coulter_matthews_exponent(self):
        assert is_planar_monomial(build_field(3, 5), 14)

    def test_x4_over_gf9(self, gf9):
        assert not is_planar_monomial(gf9, 4)

    def test_single_shift_agrees_with_definition(self, gf9):
        for t in range(1, 9):
            assert is_planar_monomial(gf9, t) == is_planar_function(gf9, t)

    def test_difference_ranks(self, gf5):
        # (c+1)^2 - c^2 = 2c + 1
        assert list(difference_ranks(gf5, 2)) == [1, 3, 0, 2, 4]

    def test_extension_degrees(self):
        assert planar_extension_degrees(3, 4, 4) == [1, 3]
        assert planar_extension_degrees(5, 2, 2) == [1, 2]

    def test_rejects_nonpositive(self, gf7):
        with pytest.raises(ValueError):
            check_planar_monomial(gf7, 0)


class TestFamilies:
    def test_f1(self):
        assert family_tag(3, 2, 2) == FamilyTag("F1", 0)
        assert family_tag(5, 3, 6) == FamilyTag("F1", 1)

    def test_f1_needs_odd_quotient(self):
        assert family_tag(3, 2, 4) == NO_FAMILY

    def test_f2(self):
        assert family_tag(3, 5, 14) == FamilyTag("F2", 3)

    def test_smallest_orbit_member_wins(self):
        # 10 = 3^2 + 1, but 4 = 3 + 1 lies in the same orbit
        assert family_tag(3, 3, 10) == FamilyTag("F1", 1)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            family_tag(2, 3, 3)
        with pytest.raises(ValueError):
            family_tag(3, 2, 3)
        with pytest.raises(ValueError):
            family_tag(3, 2, 9)

    def test_record(self):
        assert FamilyTag("F2", 3).record() == {"kind": "F2", "i": 3, "j": 0}

    def test_members(self):
        assert family_members(3, 5) == [2, 4, 10, 14, 28, 82]
        assert family_members(3, 2) == [2]
        assert family_members(5, 1) == [2]

    def test_corollary(self):
        assert corollary_family(3, 4) == FamilyTag("F1", 1, 0)
        assert corollary_family(3, 6) == FamilyTag("F1", 1, 1)
        assert corollary_family(3, 14) == FamilyTag("F2", 3, 0)
        assert corollary_family(3, 5) == NO_FAMILY
        assert corollary_family(5, 7) == NO_FAMILY
        with pytest.raises(ValueError):
            corollary_family(3, 0)

    @pytest.mark.parametrize("p", [2, 4, 9])
    def test_needs_odd_prime(self, p):
        with pytest.raises(ValueError):
            corollary_family(p, 5)
        with pytest.raises(ValueError):
            family_tag(p, 2, 5)

    def test_predicted(self, gf9, gf27):
        assert predicted_planar_set(gf9) == [2]
        assert predicted_planar_set(gf27) == [2, 4]


class TestSearch:
    def test_gf27(self, gf27):
        report = search_planar(gf27)
        validate(SearchReport, report)
        assert (report["p"], report["r"], report["q"]) == (3, 3, 27)
        assert planar_set(report) == [2, 4]
        assert report["mismatches"] == []
        first, second = report["entries"]
        assert first["family"] == {"kind": "F1", "i": 0, "j": 0}
        assert first["in_theorem_range"]
        assert second["family"] == {"kind": "F1", "i": 1, "j": 0}
        assert not second["in_theorem_range"]

    def test_all_classes(self, gf9):
        report = search_planar(gf9, include_all=True)
        assert [e["canonical_t"] for e in report["entries"]] == [1, 2, 4, 5, 8]
        assert planar_set(report) == [2]

    @pytest.mark.parametrize("p, r", [(5, 1), (7, 1), (5, 2), (11, 1)])
    def test_matches_prediction(self, p, r):
        field = build_field(p, r)
        assert planar_set(search_planar(field)) == predicted_planar_set(field)

    def test_even_characteristic(self, gf8):
        with pytest.raises(ValueError):
            search_planar(gf8)

    def test_cap(self, gf27):
        with pytest.raises(ValueError):
            search_planar(gf27, cap=9)
