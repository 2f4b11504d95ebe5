import math

import pytest

from planarmono import build_field
from planarmono.exceptions import FieldMismatchError
from planarmono.geometry import (
    PointSet,
    ProjectivePoint,
    ScanResult,
    collinear,
    is_hyperoval,
    monomial_point_set,
    sb_coefficient_scan,
    scan_hyperoval,
    segre_bartocci_poly,
    slope_expansion,
    slope_polynomial,
)
from planarmono.poly import DensePolynomial, compose, dickson
from planarmono.runner import Runner


def point(field, *ranks):
    return ProjectivePoint(*(field.from_rank(r) for r in ranks))


class TestPoints:
    def test_normalized(self, gf7):
        p = point(gf7, 2, 4, 6)
        assert p.ranks == (1, 2, 3)
        assert p == point(gf7, 1, 2, 3)
        assert hash(p) == hash(point(gf7, 1, 2, 3))
        assert repr(p) == "(1:2:3)"

    def test_leading_zeros(self, gf7):
        assert point(gf7, 0, 3, 6).ranks == (0, 1, 2)

    def test_origin_is_not_a_point(self, gf7):
        with pytest.raises(ValueError):
            point(gf7, 0, 0, 0)

    def test_mixed_fields(self, gf5, gf7):
        with pytest.raises(FieldMismatchError):
            ProjectivePoint(gf5.one, gf7.one, gf7.one)

    def test_point_set(self, gf7):
        s = PointSet([point(gf7, 1, 2, 3), point(gf7, 2, 4, 6), point(gf7, 0, 0, 1)])
        assert len(s) == 2
        xs, ys, zs = s.rank_columns()
        assert list(xs) == [1, 0] and list(zs) == [3, 1]

    def test_empty_point_set(self):
        with pytest.raises(ValueError):
            PointSet([])

    def test_point_set_fields(self, gf5, gf7):
        with pytest.raises(FieldMismatchError):
            PointSet([point(gf5, 1, 0, 0), point(gf7, 1, 0, 0)])

    def test_collinear(self, gf7):
        assert collinear(point(gf7, 1, 0, 0), point(gf7, 0, 1, 0), point(gf7, 1, 1, 0))
        assert not collinear(
            point(gf7, 1, 0, 0), point(gf7, 0, 1, 0), point(gf7, 0, 0, 1)
        )


class TestHyperovals:
    def test_point_set_layout(self, gf8):
        s = monomial_point_set(gf8, 3)
        assert len(s) == 10
        assert s.points[-2:] == [point(gf8, 0, 0, 1), point(gf8, 0, 1, 0)]
        assert s.points[2].ranks == (1, 2, gf8.pow_rank(2, 3))

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_hyperconic(self, k):
        scan = scan_hyperoval(monomial_point_set(build_field(2, k), 2))
        n = 2**k + 2
        assert scan.hyperoval
        assert scan.triples == math.comb(n, 3)
        assert scan.witness is None

    def test_translation(self, gf8):
        assert is_hyperoval(monomial_point_set(gf8, 4))

    def test_segre(self):
        assert is_hyperoval(monomial_point_set(build_field(2, 5), 6))

    def test_cube_over_gf8(self, gf8):
        s = monomial_point_set(gf8, 3)
        scan = scan_hyperoval(s)
        assert not scan.hyperoval
        i, j, k = scan.witness
        assert i < j < k
        assert collinear(s.points[i], s.points[j], s.points[k])

    @pytest.mark.parametrize("t", [2, 3, 6])
    def test_chunks_match_serial(self, t):
        s = monomial_point_set(build_field(2, 4), t)
        assert scan_hyperoval(s, chunks=4) == scan_hyperoval(s)

    def test_parallel_runner(self):
        s = monomial_point_set(build_field(2, 3), 2)
        assert scan_hyperoval(s, Runner(2)) == scan_hyperoval(s)

    def test_wrong_size(self, gf8):
        s = PointSet(list(monomial_point_set(gf8, 2))[:-1])
        assert not is_hyperoval(s)
        assert not scan_hyperoval(s).hyperoval

    def test_odd_characteristic_conic(self, gf5):
        # (0:1:0) lies on the secant through (1:c:c^2) and (1:-c:c^2)
        assert not is_hyperoval(monomial_point_set(gf5, 2))


class TestSlopePolynomial:
    def test_shift_relation(self):
        gf2 = build_field(2)
        shift = DensePolynomial.from_ints((1, 1), gf2)
        for t in range(2, 20):
            assert compose(segre_bartocci_poly(t), shift) == slope_polynomial(t)

    def test_segre_exponent_gives_dickson(self):
        assert slope_polynomial(6) == dickson(5, 1, build_field(2))

    def test_powers_of_two(self):
        gf2 = build_field(2)
        assert slope_polynomial(8) == DensePolynomial.monomial(7, gf2)

    def test_expansion_is_symmetric(self):
        assert slope_expansion(10).is_symmetric()

    def test_rejects_small_t(self):
        with pytest.raises(ValueError):
            segre_bartocci_poly(1)
        with pytest.raises(ValueError):
            slope_polynomial(1)


class TestCoefficientScan:
    def test_first_rows(self):
        assert sb_coefficient_scan(8) == [
            ScanResult(2, 1, 0),
            ScanResult(4, 1, 1),
            ScanResult(6, 0, 0),
            ScanResult(8, 1, 1),
        ]

    def test_power_of_two(self):
        flags = [row.power_of_two for row in sb_coefficient_scan(8)]
        assert flags == [True, True, False, True]

    def test_only_six_vanishes(self):
        vanishing = [
            row.t
            for row in sb_coefficient_scan(100)
            if not row.power_of_two and (row.c_t3, row.c_t7) == (0, 0)
        ]
        assert vanishing == [6]

    def test_third_coefficient_parity(self):
        for row in sb_coefficient_scan(40, t_min=4):
            assert row.c_t3 == (1 + math.comb(row.t, 2)) % 2

    def test_t_min(self):
        assert [row.t for row in sb_coefficient_scan(12, t_min=7)] == [8, 10, 12]

    def test_rejects_short_scan(self):
        with pytest.raises(ValueError):
            sb_coefficient_scan(6)
