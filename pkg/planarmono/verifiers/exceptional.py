"""Cross-checks of the exceptionality criteria against brute force."""

from __future__ import annotations

import math
import random
from typing import List, Tuple

from .. import utils
from ..exceptional import (
    ExceptionalityVerdict,
    classify_exceptional,
    heuristic_exceptional,
    is_bijection,
    monomial_permutes,
    weil_certificate,
)
from ..gf import build_field, embed, random_element
from ..poly import DensePolynomial, compose, dickson
from ..types import IdentityReport, Parameters
from .base import BaseVerifier

#: base fields of the Dickson functional-equation grid
FUNCTIONAL_EQUATION_ORDERS = (3, 5, 7, 9)

#: (polynomial coefficients over GF(p), p, k) with a Weil certificate on GF(p^k)
WEIL_INSTANCES: Tuple[Tuple[Tuple[int, ...], int, int], ...] = (
    ((0, 0, 0, 1), 5, 5),
    ((1, 2), 3, 4),
    ((0, 0, 0, 1), 2, 7),
)


def monomial_law(point: Parameters) -> bool:
    """``x^m`` permutes GF(q) exactly when ``gcd(m, q - 1) = 1``."""
    m, p, r = point["m"], point["p"], point["r"]
    field = build_field(p, r)
    x_m = DensePolynomial.monomial(m, build_field(p))
    return is_bijection(x_m, field) == monomial_permutes(m, field.q)


def dickson_law(point: Parameters) -> bool:
    """``D_n(x, 1)`` permutes GF(q) exactly when ``gcd(n, q^2 - 1) = 1``."""
    n, p, r = point["n"], point["p"], point["r"]
    field = build_field(p, r)
    d = dickson(n, 1, build_field(p))
    return is_bijection(d, field) == (math.gcd(n, field.q**2 - 1) == 1)


def functional_equation(point: Parameters) -> bool:
    """``D_n(y + a/y, a) = y^n + (a/y)^n`` for every ``y`` in GF(q^2)*."""
    p, r, a_rank, n = point["p"], point["r"], point["a"], point["n"]
    small = build_field(p, r)
    big = build_field(p, 2 * r)
    into = embed(small, big)
    a = into(small.from_rank(a_rank)).rank
    coeffs = [into(c).rank for c in dickson(n, small.from_rank(a_rank)).coeffs]
    ys = big.ranks()[1:]
    a_over_y = big.mul_vec(a, big.pow_vec(ys, big.q - 2))
    lhs = big.eval_vec(coeffs, big.add_vec(ys, a_over_y))
    rhs = big.add_vec(big.pow_vec(ys, n), big.pow_vec(a_over_y, n))
    return bool((lhs == rhs).all())


def composition_closure(point: Parameters) -> bool:
    """If ``g(h)`` permutes GF(q) then so does ``h``."""
    p, r, seed = point["p"], point["r"], point["seed"]
    rng = random.Random(seed)
    prime_field = build_field(p)
    field = build_field(p, r)

    def factor() -> DensePolynomial:
        degree = rng.randint(1, 5)
        coeffs = [random_element(prime_field, rng) for _ in range(degree)]
        coeffs.append(random_element(prime_field, rng, nonzero=True))
        return DensePolynomial(coeffs, prime_field)

    g, h = factor(), factor()
    return not is_bijection(compose(g, h), field) or is_bijection(h, field)


def weil_instance(point: Parameters) -> bool:
    """Each listed instance earns a certified verdict."""
    index = point["instance"]
    coeffs, p, k = WEIL_INSTANCES[index]
    f = DensePolynomial.from_ints(coeffs, build_field(p))
    return weil_certificate(f, build_field(p, k)).status == "CERTIFIED_EXCEPTIONAL"


class Exceptional(BaseVerifier):
    """Monomial and Dickson permutation laws, closure and certificates."""

    def monomials(self, max_q: int = 343, m_max: int = 50) -> IdentityReport:
        points = [
            {"m": m, "p": p, "r": r}
            for p, r in _prime_powers(max_q)
            for m in range(1, m_max + 1)
        ]
        return self._grid(
            "monomial_permutation_law", ["m", "p", "r"], monomial_law, points
        )

    def dickson(self, max_q: int = 81, n_max: int = 40) -> IdentityReport:
        points = [
            {"n": n, "p": p, "r": r}
            for p, r in utils.odd_prime_powers(max_q)
            for n in range(1, n_max + 1)
        ]
        return self._grid(
            "dickson_permutation_law", ["n", "p", "r"], dickson_law, points
        )

    def functional_equation(self, n_max: int = 50) -> IdentityReport:
        points: List[Parameters] = []
        for q in FUNCTIONAL_EQUATION_ORDERS:
            pr = utils.prime_power(q)
            assert pr is not None
            p, r = pr
            points.extend(
                {"p": p, "r": r, "a": a, "n": n}
                for a in range(1, q)
                for n in range(n_max + 1)
            )
        return self._grid(
            "dickson_functional_equation",
            ["p", "r", "a", "n"],
            functional_equation,
            points,
        )

    def composition(self, max_q: int = 49, count: int = 200) -> IdentityReport:
        orders = _prime_powers(max_q)
        rng = random.Random(self.seed)
        points: List[Parameters] = []
        for _ in range(count):
            p, r = rng.choice(orders)
            points.append({"p": p, "r": r, "seed": rng.getrandbits(32)})
        return self._grid(
            "composition_closure", ["p", "r", "seed"], composition_closure, points
        )

    def certificates(self) -> IdentityReport:
        points = [{"instance": i} for i in range(len(WEIL_INSTANCES))]
        return self._grid("weil_certificates", ["instance"], weil_instance, points)

    def classify(self, f: DensePolynomial, p: int) -> ExceptionalityVerdict:
        """Best verdict for ``f`` over GF(p) under this verifier's limits."""
        return classify_exceptional(f, p, self.k_max, self.cap)

    def scan(self, f: DensePolynomial, p: int) -> ExceptionalityVerdict:
        return heuristic_exceptional(f, p, self.k_max, self.cap)

    def run(self) -> List[IdentityReport]:
        return [
            self.monomials(),
            self.dickson(),
            self.functional_equation(),
            self.composition(),
            self.certificates(),
        ]


def _prime_powers(max_q: int) -> List[Tuple[int, int]]:
    result: List[Tuple[int, int]] = []
    for q in range(2, max_q + 1):
        pr = utils.prime_power(q)
        if pr is not None:
            result.append(pr)
    return result
