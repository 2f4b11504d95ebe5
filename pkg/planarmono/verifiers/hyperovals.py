"""Monomial hyperovals in characteristic 2 and the slope-coefficient scan."""

from __future__ import annotations

import logging
import math
import time
from typing import List

from ..exceptional import heuristic_exceptional
from ..geometry import (
    monomial_point_set,
    scan_hyperoval,
    sb_coefficient_scan,
    segre_bartocci_poly,
    slope_polynomial,
)
from ..gf import build_field
from ..poly import DensePolynomial, compose
from ..types import HyperovalReport, IdentityReport, Parameters, ScanRow
from .base import BaseVerifier

LOG = logging.getLogger(__name__)

#: Largest ``k`` accepted by :meth:`Hyperovals.check`
MAX_CHECK_DEGREE = 8


def monomial_hyperoval(point: Parameters) -> bool:
    """``D(x^t)`` is a hyperoval over GF(2^k)."""
    k, t = point["k"], point["t"]
    return scan_hyperoval(monomial_point_set(build_field(2, k), t)).hyperoval


def slope_relation(point: Parameters) -> bool:
    """``((x+1)^t + 1) / x`` equals ``x^(t-1) + ... + 1`` evaluated at ``x + 1``."""
    t = point["t"]
    gf2 = build_field(2)
    shifted = compose(segre_bartocci_poly(t), DensePolynomial.from_ints((1, 1), gf2))
    return slope_polynomial(t) == shifted


def exceptional_slope(point: Parameters) -> bool:
    """``x^(t-1) + ... + 1`` scans as exceptional over GF(2)."""
    f = segre_bartocci_poly(point["t"])
    return heuristic_exceptional(f, 2, point["k_max"]).exceptional


class Hyperovals(BaseVerifier):
    """Hyperoval checks over GF(2^k)."""

    def check(self, k: int, t: int) -> HyperovalReport:
        """Scan ``D(x^t)`` over GF(2^k), timing the scan."""
        if not 1 <= k <= MAX_CHECK_DEGREE:
            raise ValueError(f"k must lie in [1, {MAX_CHECK_DEGREE}], got {k}")
        points = monomial_point_set(build_field(2, k), t)
        start = time.perf_counter()
        scan = scan_hyperoval(points, self._runner)
        seconds = time.perf_counter() - start
        LOG.debug("D(x^%d) over GF(2^%d): %s in %.3fs", t, k, scan.hyperoval, seconds)
        return {
            "k": k,
            "t": t,
            "q": 2**k,
            "hyperoval": scan.hyperoval,
            "triples": scan.triples,
            "witness": list(scan.witness) if scan.witness else None,
            "seconds": round(seconds, 6),
        }

    def scan(self, t_max: int) -> List[ScanRow]:
        return [
            {
                "t": row.t,
                "c_t3": row.c_t3,
                "c_t7": row.c_t7,
                "power_of_two": row.power_of_two,
            }
            for row in sb_coefficient_scan(t_max)
        ]

    def hyperconics(self, k_max: int = 6) -> IdentityReport:
        points = [{"k": k, "t": 2} for k in range(2, k_max + 1)]
        return self._grid("hyperconic", ["k", "t"], monomial_hyperoval, points)

    def translations(self, k_max: int = 6) -> IdentityReport:
        points = [
            {"k": k, "t": 2**i}
            for k in range(2, k_max + 1)
            for i in range(1, k)
            if math.gcd(i, k) == 1
        ]
        return self._grid(
            "translation_hyperoval", ["k", "t"], monomial_hyperoval, points
        )

    def segre(self) -> IdentityReport:
        points = [{"k": 5, "t": 6}]
        return self._grid("segre_hyperoval", ["k", "t"], monomial_hyperoval, points)

    def scan_uniqueness(self, t_max: int = 100) -> IdentityReport:
        """``(0, 0)`` appears at ``t = 6`` and at no other even ``t <= t_max``."""
        points: List[Parameters] = []
        for row in sb_coefficient_scan(t_max):
            if row.power_of_two:
                continue
            vanishes = row.c_t3 == 0 and row.c_t7 == 0
            points.append({"t": row.t, "vanishes": int(vanishes)})
        return self._grid(
            "slope_scan", ["t", "vanishes"], _vanishes_only_at_six, points
        )

    def slope_relations(self, t_max: int = 64) -> IdentityReport:
        points = [{"t": t} for t in range(2, t_max + 1)]
        return self._grid("slope_relation", ["t"], slope_relation, points)

    def exceptional_slopes(self) -> IdentityReport:
        points = [{"t": 6, "k_max": self.k_max}]
        return self._grid(
            "exceptional_slope", ["t", "k_max"], exceptional_slope, points
        )

    def run(self) -> List[IdentityReport]:
        return [
            self.hyperconics(),
            self.translations(),
            self.segre(),
            self.scan_uniqueness(),
            self.slope_relations(),
            self.exceptional_slopes(),
        ]


def _vanishes_only_at_six(point: Parameters) -> bool:
    return bool(point["vanishes"]) == (point["t"] == 6)
