"""Points of PG(2, q), collinearity and hyperovals of monomial type."""

from __future__ import annotations

import logging
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .exceptions import FieldMismatchError
from .gf import FieldElement, FieldSpec, Ranks, build_field
from .poly import DensePolynomial, LaurentPolynomial, laurent_compose, poly_binomial
from .poly.coefficients import x_plus_inverse
from .runner import SERIAL, Runner

LOG = logging.getLogger(__name__)


class ProjectivePoint:
    """A point ``(x:y:z)`` scaled so its first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    coords: Tuple[FieldElement, FieldElement, FieldElement]

    def __init__(self, x: FieldElement, y: FieldElement, z: FieldElement):
        if not (x.field == y.field == z.field):
            raise FieldMismatchError("point coordinates come from different fields")
        pivot = next((c for c in (x, y, z) if c), None)
        if pivot is None:
            raise ValueError("(0:0:0) is not a projective point")
        scale = pivot.inv()
        self.coords = (x * scale, y * scale, z * scale)

    @property
    def field(self) -> FieldSpec:
        return self.coords[0].field

    @property
    def ranks(self) -> Tuple[int, int, int]:
        x, y, z = self.coords
        return x.rank, y.rank, z.rank

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ProjectivePoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "({!r}:{!r}:{!r})".format(*self.coords)


class PointSet:
    """Distinct points over one field, kept in insertion order."""

    def __init__(self, points: Sequence[ProjectivePoint]):
        unique = list(dict.fromkeys(points))
        if not unique:
            raise ValueError("a point set needs at least one point")
        field = unique[0].field
        if any(pt.field != field for pt in unique):
            raise FieldMismatchError("points come from different fields")
        self.field = field
        self.points = unique

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ProjectivePoint]:
        return iter(self.points)

    def rank_columns(self) -> Tuple[Ranks, Ranks, Ranks]:
        table = np.array([pt.ranks for pt in self.points], dtype=np.int64)
        return table[:, 0], table[:, 1], table[:, 2]


def collinear(a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint) -> bool:
    """Whether the determinant of the three coordinate rows vanishes."""
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = a.coords, b.coords, c.coords
    det = a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0)
    return not det


def monomial_point_set(field: FieldSpec, t: int) -> PointSet:
    """``{(1:c:c^t)}`` over every ``c`` in rank order, then ``(0:0:1)``, ``(0:1:0)``."""
    one, zero = field.one, field.zero
    points = [ProjectivePoint(one, c, c**t) for c in field]
    points.append(ProjectivePoint(zero, zero, one))
    points.append(ProjectivePoint(zero, one, zero))
    return PointSet(points)


class HyperovalScan(NamedTuple):
    hyperoval: bool
    # triples examined, including the collinear one that ended the scan
    triples: int
    # positions in the point set
    witness: Optional[Tuple[int, int, int]]


ScanChunk = Tuple[int, int, Ranks, Ranks, Ranks, int, int]


def _scan_chunk(chunk: ScanChunk) -> Tuple[int, Optional[Tuple[int, int, int]]]:
    """Scan triples ``i < j < k`` with ``i`` in ``[start, stop)``."""
    p, r, xs, ys, zs, start, stop = chunk
    field = build_field(p, r)
    n = len(xs)
    mul, sub = field.mul_vec, field.sub_vec
    col_j = np.arange(n)[:, None]
    col_k = np.arange(n)[None, :]
    # cofactors of the first row for every pair (j, k)
    m0 = sub(mul(ys[:, None], zs[None, :]), mul(zs[:, None], ys[None, :]))
    m1 = sub(mul(xs[:, None], zs[None, :]), mul(zs[:, None], xs[None, :]))
    m2 = sub(mul(xs[:, None], ys[None, :]), mul(ys[:, None], xs[None, :]))
    examined = 0
    for i in range(start, stop):
        det = field.add_vec(
            sub(mul(xs[i], m0), mul(ys[i], m1)), mul(zs[i], m2)
        )
        valid = (col_j > i) & (col_k > col_j)
        hits = (det == 0) & valid
        if hits.any():
            first = int(np.argmax(hits.ravel()))
            examined += int(valid.ravel()[:first].sum()) + 1
            j, k = divmod(first, n)
            return examined, (i, j, k)
        examined += int(valid.sum())
    return examined, None


def scan_hyperoval(
    s: PointSet, runner: Runner = SERIAL, *, chunks: Optional[int] = None
) -> HyperovalScan:
    """Look for a collinear triple in ``s``, stopping at the first one.

    The outer index is split into contiguous chunks that may run in parallel;
    the result, including the triple count, matches a serial scan.
    """
    field = s.field
    if field.q > 2**16:
        raise ValueError("hyperoval scans need a field with log tables")
    xs, ys, zs = s.rank_columns()
    n = len(s)
    parts = chunks or (runner.workers if runner.parallel else 1)
    bounds = np.linspace(0, n, parts + 1, dtype=int)
    work: List[ScanChunk] = [
        (field.p, field.r, xs, ys, zs, int(lo), int(hi))
        for lo, hi in zip(bounds[:-1], bounds[1:])
        if hi > lo
    ]
    triples = 0
    for examined, witness in runner.map(_scan_chunk, work, label="hyperoval scan"):
        triples += examined
        if witness is not None:
            LOG.debug("collinear triple %s after %d triples", witness, triples)
            return HyperovalScan(False, triples, witness)
    return HyperovalScan(len(s) == field.q + 2, triples, None)


def is_hyperoval(s: PointSet) -> bool:
    """``q + 2`` points with no three collinear."""
    if len(s) != s.field.q + 2:
        return False
    return scan_hyperoval(s).hyperoval


# -- the slope polynomial in characteristic 2 -------------------------------------


def segre_bartocci_poly(t: int) -> DensePolynomial:
    """``x^(t-1) + ... + x + 1`` over GF(2)."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    return DensePolynomial([1] * t, build_field(2))


def slope_polynomial(t: int) -> DensePolynomial:
    """``((x + 1)^t + 1) / x`` over GF(2)."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    gf2 = build_field(2)
    numerator = poly_binomial(t, 1, gf2) + 1
    return DensePolynomial(numerator.coeffs[1:], gf2)


def slope_expansion(t: int) -> LaurentPolynomial:
    """``F(x + 1/x)`` for the slope polynomial ``F`` of ``x^t``."""
    f = slope_polynomial(t)
    return laurent_compose(f, x_plus_inverse(f.ring))


class ScanResult(NamedTuple):
    t: int
    c_t3: int
    c_t7: int

    @property
    def power_of_two(self) -> bool:
        return self.t & (self.t - 1) == 0


def sb_coefficient_scan(t_max: int, t_min: int = 2) -> List[ScanResult]:
    """Coefficients of ``x^(t-3)`` and ``x^(t-7)`` in ``F(x + 1/x)`` for even ``t``."""
    if t_max < 8:
        raise ValueError(f"t_max must be at least 8, got {t_max}")
    rows: List[ScanResult] = []
    for t in range(max(t_min, 2) + max(t_min, 2) % 2, t_max + 1, 2):
        expansion = slope_expansion(t)
        rows.append(
            ScanResult(t, expansion.coeff(t - 3).rank, expansion.coeff(t - 7).rank)
        )
    return rows
