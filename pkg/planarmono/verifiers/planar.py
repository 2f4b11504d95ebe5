"""Planar exponent searches and the classification invariants."""

from __future__ import annotations

from typing import Iterator, List, Optional, Sequence

from .. import utils
from ..gf import build_field
from ..planar import (
    DEFAULT_SEARCH_CAP,
    family_members,
    exponent_orbit,
    family_tag,
    is_planar_function,
    is_planar_monomial,
    planar_set,
    predicted_planar_set,
    search_planar,
)
from ..types import IdentityReport, Parameters, SearchReport
from .base import BaseVerifier

#: Field orders of the theorem-range check
THEOREM_ORDERS = (625, 2401, 6561)


def proven_range(point: Parameters) -> bool:
    """The brute-force planar set equals the family prediction."""
    field = build_field(point["p"], point["r"])
    report = search_planar(field, cap=field.q)
    return planar_set(report) == predicted_planar_set(field)


def members_planar(point: Parameters) -> bool:
    """Every family exponent below ``q`` is planar on GF(q)."""
    field = build_field(point["p"], point["r"])
    return all(is_planar_monomial(field, t) for t in family_members(field.p, field.r))


def theorem_range(point: Parameters) -> bool:
    """Planar exponents with ``(t-1)^4 <= q`` all belong to a family."""
    p, r = point["p"], point["r"]
    field = build_field(p, r)
    t = 1
    while t < field.q and (t - 1) ** 4 <= field.q:
        if t % p and is_planar_monomial(field, t):
            if family_tag(p, r, t).kind == "NONE":
                return False
        t += 1
    return True


def single_shift(point: Parameters) -> bool:
    """The shift-by-one test agrees with the all-shifts definition."""
    field = build_field(point["p"], point["r"])
    return all(
        is_planar_monomial(field, t) == is_planar_function(field, t)
        for t in range(1, field.q)
        if t % field.p
    )


def orbit_invariance(point: Parameters) -> bool:
    """Planarity of ``x^t`` is constant on each orbit ``t -> t p mod (q-1)``."""
    field = build_field(point["p"], point["r"])
    for t in range(1, field.q):
        planar = is_planar_monomial(field, t)
        for member in exponent_orbit(t, field.p, field.q):
            if is_planar_monomial(field, member) != planar:
                return False
    return True


class Planar(BaseVerifier):
    """Exhaustive planar searches.

    :param search_cap: largest field order :meth:`search` accepts
    """

    def __init__(self, *args, search_cap: int = DEFAULT_SEARCH_CAP, **kwargs):
        super().__init__(*args, **kwargs)
        self.search_cap = search_cap

    def search(
        self, max_q: int, *, include_all: bool = False, min_q: int = 3
    ) -> Iterator[SearchReport]:
        """One report per odd prime power ``q`` in ``[min_q, max_q]``, by ``q``."""
        if max_q > self.search_cap:
            raise ValueError(f"max_q {max_q} exceeds search cap {self.search_cap}")
        for p, r in utils.odd_prime_powers(max_q, min_q):
            yield search_planar(
                build_field(p, r, self.cap),
                self._runner,
                include_all=include_all,
                cap=self.search_cap,
            )

    def proven_range(self, max_q: int = 343) -> IdentityReport:
        points = [
            {"p": p, "r": r} for p, r in utils.odd_prime_powers(max_q) if r <= 2
        ]
        return self._grid("proven_range", ["p", "r"], proven_range, points)

    def family_members(self, max_q: int = 729) -> IdentityReport:
        points = [{"p": p, "r": r} for p, r in utils.odd_prime_powers(max_q)]
        return self._grid("family_members_planar", ["p", "r"], members_planar, points)

    def theorem_range(self, orders: Sequence[int] = THEOREM_ORDERS) -> IdentityReport:
        points: List[Parameters] = []
        for q in orders:
            pr = utils.prime_power(q)
            if pr is None or pr[0] == 2:
                raise ValueError(f"{q} is not an odd prime power")
            points.append({"p": pr[0], "r": pr[1]})
        return self._grid("theorem_range", ["p", "r"], theorem_range, points)

    def single_shift(self, max_q: int = 343) -> IdentityReport:
        points = [{"p": p, "r": r} for p, r in utils.odd_prime_powers(max_q)]
        return self._grid("single_shift", ["p", "r"], single_shift, points)

    def orbit_invariance(self, max_q: int = 81) -> IdentityReport:
        points = [{"p": p, "r": r} for p, r in utils.odd_prime_powers(max_q)]
        return self._grid("orbit_invariance", ["p", "r"], orbit_invariance, points)

    def run(self, max_q: Optional[int] = None) -> List[IdentityReport]:
        """Every invariant on its default grid, or with fields capped at ``max_q``."""
        if max_q is None:
            return [
                self.proven_range(),
                self.family_members(),
                self.theorem_range(),
                self.single_shift(),
                self.orbit_invariance(),
            ]
        return [
            self.proven_range(max_q),
            self.family_members(max_q),
            self.theorem_range(),
            self.single_shift(max_q),
            self.orbit_invariance(min(max_q, 81)),
        ]
