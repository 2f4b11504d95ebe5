"""Planar monomials and the exponent families that produce them.

A function ``f`` on GF(q) is planar when ``c -> f(c + a) - f(c)`` is a
bijection for every nonzero ``a``. For ``f = x^t`` the shift by ``a`` is a
scaled copy of the shift by 1, so a single difference map decides planarity.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field as dataclass_field
from typing import List, NamedTuple, Optional, Set, Tuple

import numpy as np
from sympy import isprime

from . import utils
from .gf import FieldSpec, Ranks, build_field
from .runner import SERIAL, Runner
from .types import FamilyKind, FamilyRecord, SearchEntry, SearchReport

LOG = logging.getLogger(__name__)

#: Largest field :func:`search_planar` scans unless told otherwise
DEFAULT_SEARCH_CAP = 2**16


@dataclass(frozen=True)
class ExponentClass:
    """The class of ``x^t`` under ``t -> t p`` and ``t -> t + (q - 1)``."""

    field: FieldSpec
    t: int
    canonical: int
    orbit: Tuple[int, ...] = dataclass_field(compare=False)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def r(self) -> int:
        return self.field.r


class PlanarVerdict(NamedTuple):
    planar: bool
    reason: str


class FamilyTag(NamedTuple):
    kind: FamilyKind
    i: int = 0
    j: int = 0

    def record(self) -> FamilyRecord:
        return {"kind": self.kind, "i": self.i, "j": self.j}


NO_FAMILY = FamilyTag("NONE")


def _strip_p(t: int, p: int) -> int:
    while t % p == 0:
        t //= p
    return t


def _reduce(t: int, q: int) -> int:
    # representatives in [1, q-1]
    return (t - 1) % (q - 1) + 1 if q > 2 else 1


def exponent_orbit(t: int, p: int, q: int) -> Tuple[int, ...]:
    """The orbit ``{t p^j mod (q-1)}`` with representatives in ``[1, q-1]``."""
    orbit: List[int] = []
    current = _reduce(t, q)
    while current not in orbit:
        orbit.append(current)
        current = _reduce(current * p, q)
    return tuple(orbit)


def canonicalize(field: FieldSpec, t: int) -> ExponentClass:
    """Normalise ``t`` to the minimal representative of its exponent class.

    Factors of ``p`` are stripped and ``t`` is reduced into ``[1, q-1]``
    until neither step changes it; the canonical exponent is the minimum of
    the resulting orbit.
    """
    if t < 1:
        raise ValueError(f"exponent must be positive, got {t}")
    p, q = field.p, field.q
    reduced = t
    while True:
        stripped = _reduce(_strip_p(reduced, p), q)
        if stripped == reduced:
            break
        reduced = stripped
    orbit = exponent_orbit(reduced, p, q)
    return ExponentClass(field, t, min(orbit), orbit)


def difference_ranks(field: FieldSpec, t: int, shift: int = 1) -> Ranks:
    """Ranks of ``(c + a)^t - c^t`` for every ``c``, where ``a`` has rank ``shift``."""
    xs = field.ranks()
    shifted = field.pow_vec(field.add_vec(xs, shift), t)
    return field.sub_vec(shifted, field.pow_vec(xs, t))


def _collision(values: Ranks, q: int) -> Optional[Tuple[int, int]]:
    occupancy = np.bincount(values, minlength=q)
    if occupancy.min() > 0:
        return None
    value = int(np.argmax(occupancy > 1))
    first, second = np.nonzero(values == value)[0][:2]
    return int(first), int(second)


def check_planar_monomial(field: FieldSpec, t: int) -> PlanarVerdict:
    """Decide whether ``x^t`` is planar on ``field``, with the reason."""
    if t < 1:
        raise ValueError(f"exponent must be positive, got {t}")
    if field.p == 2:
        return PlanarVerdict(False, "p must be odd")
    collision = _collision(difference_ranks(field, t), field.q)
    if collision is None:
        return PlanarVerdict(True, "difference map is a bijection")
    a, b = collision
    return PlanarVerdict(False, f"difference map collides at ranks {a} and {b}")


def is_planar_monomial(field: FieldSpec, t: int) -> bool:
    return check_planar_monomial(field, t).planar


def is_planar_function(field: FieldSpec, t: int) -> bool:
    """Planarity of ``x^t`` checked against every nonzero shift."""
    if field.p == 2:
        return False
    return all(
        _collision(difference_ranks(field, t, a), field.q) is None
        for a in range(1, field.q)
    )


# -- families -------------------------------------------------------------------


def _require_odd_prime(p: int) -> None:
    if p == 2 or not isprime(p):
        raise ValueError(f"families are defined for odd primes, got p = {p}")


def _f1_parameter(p: int, r: int, t: int) -> Optional[int]:
    for i in range(r):
        if t == p**i + 1 and (r // math.gcd(i, r)) % 2 == 1:
            return i
    return None


def _f2_parameter(p: int, r: int, t: int) -> Optional[int]:
    if p != 3:
        return None
    for i in range(3, r):
        if 2 * t == 3**i + 1 and math.gcd(i, 2 * r) == 1:
            return i
    return None


def family_tag(p: int, r: int, t: int) -> FamilyTag:
    """Match ``t`` (or any member of its orbit) against the planar families.

    ``F1(i)``: ``t = p^i + 1`` with ``0 <= i < r`` and ``r / gcd(i, r)`` odd.
    ``F2(i)``: ``p = 3``, ``t = (3^i + 1) / 2``, ``2 < i < r``, ``gcd(i, 2r) = 1``.
    """
    _require_odd_prime(p)
    q = p**r
    if not 1 <= t < q or t % p == 0:
        raise ValueError(f"need 1 <= t < {q} with {p} not dividing t, got {t}")
    for member in sorted(exponent_orbit(t, p, q)):
        i = _f1_parameter(p, r, member)
        if i is not None:
            return FamilyTag("F1", i)
        i = _f2_parameter(p, r, member)
        if i is not None:
            return FamilyTag("F2", i)
    return NO_FAMILY


def corollary_family(p: int, t: int) -> FamilyTag:
    """Match ``t`` against ``p^i + p^j`` or ``(3^i + 3^j) / 2``.

    In the second form ``i > j`` have different parity. These are the
    exponents planar on GF(p^k) for infinitely many ``k``.
    """
    _require_odd_prime(p)
    if t < 1:
        raise ValueError(f"exponent must be positive, got {t}")
    i = 0
    while p**i < t:
        for j in range(i + 1):
            if p**i + p**j == t:
                return FamilyTag("F1", i, j)
        i += 1
    if p == 3:
        i = 1
        while 3**i < 2 * t:
            for j in range(i - 1, -1, -2):
                if 3**i + 3**j == 2 * t:
                    return FamilyTag("F2", i, j)
            i += 1
    return NO_FAMILY


def family_members(p: int, r: int) -> List[int]:
    """Every exponent ``t < p^r`` named directly by the two families."""
    q = p**r
    members = {p**i + 1 for i in range(r) if (r // math.gcd(i, r)) % 2 == 1}
    if p == 3:
        members |= {(3**i + 1) // 2 for i in range(3, r) if math.gcd(i, 2 * r) == 1}
    return sorted(t for t in members if t < q)


def planar_extension_degrees(p: int, t: int, k_max: int) -> List[int]:
    """The ``k <= k_max`` for which ``x^t`` is planar on GF(p^k)."""
    return [
        k for k in range(1, k_max + 1) if is_planar_monomial(build_field(p, k), t)
    ]


# -- exhaustive search ------------------------------------------------------------


def canonical_exponents(field: FieldSpec) -> List[int]:
    """Canonical representatives of every class with ``p`` not dividing ``t < q``."""
    seen: Set[int] = set()
    result: List[int] = []
    for t in range(1, field.q):
        if t % field.p == 0 or t in seen:
            continue
        orbit = exponent_orbit(t, field.p, field.q)
        seen.update(orbit)
        result.append(min(orbit))
    return sorted(result)


def _search_entry(item: Tuple[int, int, int]) -> SearchEntry:
    p, r, t = item
    field = build_field(p, r)
    planar = is_planar_monomial(field, t)
    tag = family_tag(p, r, t)
    return {
        "canonical_t": t,
        "planar": planar,
        "family": tag.record(),
        "in_theorem_range": field.q >= (t - 1) ** 4,
    }


def search_planar(
    field: FieldSpec,
    runner: Runner = SERIAL,
    *,
    include_all: bool = False,
    cap: int = DEFAULT_SEARCH_CAP,
) -> SearchReport:
    """Test every canonical exponent class on ``field`` for planarity.

    :param field: a field of odd characteristic
    :param runner: where the per-exponent work runs
    :param include_all: list non-planar classes too
    :param cap: largest admissible field order
    :return: the report; entries ascend by canonical exponent
    """
    if field.p == 2:
        raise ValueError("planar search needs odd characteristic")
    if field.q > cap:
        raise ValueError(f"field order {field.q} exceeds search cap {cap}")
    exponents = canonical_exponents(field)
    LOG.debug("searching %d exponent classes on %r", len(exponents), field)
    items = [(field.p, field.r, t) for t in exponents]
    entries = runner.map(_search_entry, items, label=f"search {field!r}")
    if not include_all:
        entries = [e for e in entries if e["planar"]]
    mismatches = [
        e for e in entries if e["planar"] and e["family"]["kind"] == "NONE"
    ]
    return {
        "p": field.p,
        "r": field.r,
        "q": field.q,
        "entries": entries,
        "mismatches": mismatches,
        "tool_version": utils.tool_version(),
        "timestamp": utils.utc_timestamp(),
    }


def planar_set(report: SearchReport) -> List[int]:
    return [e["canonical_t"] for e in report["entries"] if e["planar"]]


def predicted_planar_set(field: FieldSpec) -> List[int]:
    """Canonical exponents the families predict to be planar on ``field``."""
    return sorted(
        {canonicalize(field, t).canonical for t in family_members(field.p, field.r)}
    )
