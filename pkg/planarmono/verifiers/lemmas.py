"""Randomized and exhaustive checks of the supporting lemmas."""

from __future__ import annotations

import math
import random
from typing import List, Tuple

from ..gf import FieldSpec, build_field, random_element
from ..poly import (
    DensePolynomial,
    binom_mod_p,
    binomial,
    compose,
    is_odd,
    poly_binomial,
)
from ..types import IdentityReport, Parameters
from .base import BaseVerifier

#: primes for the Lucas grid
LUCAS_PRIMES = (2, 3, 5, 7)

#: field orders for the randomized odd-composition checks
ODD_COMPOSITION_PRIMES = (3, 5, 7)


def lucas_row(point: Parameters) -> bool:
    """``binom_mod_p(n, m, p)`` against ``C(n, m) mod p`` for every ``m <= n``."""
    n, p = point["n"], point["p"]
    return all(binom_mod_p(n, m, p) == binomial(n, m) % p for m in range(n + 1))


def random_odd(field: FieldSpec, degree: int, rng: random.Random) -> DensePolynomial:
    """A random polynomial of exactly ``degree`` with only odd-degree terms."""
    coeffs = [field.zero] * (degree + 1)
    for k in range(1, degree, 2):
        coeffs[k] = random_element(field, rng)
    coeffs[degree] = random_element(field, rng, nonzero=True)
    return DensePolynomial(coeffs, field)


def _odd_degree(p: int, rng: random.Random, high: int = 9) -> int:
    # odd, coprime to p
    return rng.choice([d for d in range(1, high + 1, 2) if d % p])


def odd_composition(point: Parameters) -> bool:
    """``G(H)`` odd with ``deg G`` coprime to ``q`` forces ``H - H(0)`` odd.

    Both directions are sampled. Odd composites come from ``G = G0(x - h0)``
    and ``H = H0 + h0`` with ``G0`` and ``H0`` odd. Adding an even-degree term
    to ``H`` makes ``H - H(0)`` not odd, and then ``G(H)`` must not be odd for
    any ``G`` of degree coprime to ``q``.
    """
    p, seed = point["p"], point["seed"]
    rng = random.Random(seed)
    field = build_field(p)
    g0 = random_odd(field, _odd_degree(p, rng), rng)
    h0 = random_element(field, rng)
    h_odd = random_odd(field, _odd_degree(p, rng), rng)
    g = compose(g0, DensePolynomial((-h0, 1), field))
    h = h_odd + h0
    if math.gcd(g.degree, p) != 1 or not is_odd(compose(g, h)):
        return False

    even = 2 * rng.randint(1, 4)
    h_even = h + DensePolynomial.monomial(even, field) * random_element(
        field, rng, nonzero=True
    )
    if is_odd(h_even - h_even.coeff(0)):
        return False
    coeffs = [random_element(field, rng) for _ in range(_odd_degree(p, rng))]
    coeffs.append(random_element(field, rng, nonzero=True))
    g_any = DensePolynomial(coeffs, field)
    return not is_odd(compose(g_any, h_even))


def twisted_odd(point: Parameters) -> bool:
    """The ``x^(b-1)`` coefficient of ``mu(G(nu))`` is ``a b G_b c^(b-1) d``.

    Here ``mu = a x + e``, ``nu = c x + d`` with ``d != 0`` and ``G`` is odd of degree
    ``b >= 3`` coprime to ``q``; the coefficient is nonzero, so the result is
    not odd.
    """
    p, seed = point["p"], point["seed"]
    rng = random.Random(seed)
    field = build_field(p)
    beta = rng.choice([d for d in range(3, 12, 2) if d % p])
    g = random_odd(field, beta, rng)
    a, c, d = (random_element(field, rng, nonzero=True) for _ in range(3))
    e = random_element(field, rng)
    mu = DensePolynomial((e, a), field)
    nu = DensePolynomial((d, c), field)
    twisted = compose(mu, compose(g, nu))
    expected = a * g.leading * beta * c ** (beta - 1) * d
    if not expected or twisted.coeff(beta - 1) != expected:
        return False
    return not is_odd(twisted)


def counterexample_polynomials(
    q: int, s: int
) -> Tuple[DensePolynomial, DensePolynomial]:
    """``G = (x+1)^s (x-1)^(q-s)`` and ``H = x^q + (x+1)^(q-s) (x-1)^s`` over GF(q)."""
    field = build_field(q)
    g = poly_binomial(s, 1, field) * poly_binomial(q - s, -1, field)
    tail = poly_binomial(q - s, 1, field) * poly_binomial(s, -1, field)
    h = DensePolynomial.monomial(q, field) + tail
    return g, h


def counterexample(point: Parameters) -> bool:
    """``G(H)`` is odd, ``H - H(0)`` is not and ``deg G = q`` breaks coprimality."""
    q, s = point["q"], point["s"]
    g, h = counterexample_polynomials(q, s)
    composite_odd = is_odd(compose(g, h))
    shifted_odd = is_odd(h - h.coeff(0))
    return composite_odd and not shifted_odd and math.gcd(g.degree, q) != 1


class Lemmas(BaseVerifier):
    """Lucas agreement and the odd-composition lemmas."""

    def lucas(self, n_max: int = 500) -> IdentityReport:
        points = [{"p": p, "n": n} for p in LUCAS_PRIMES for n in range(n_max + 1)]
        return self._grid("lucas", ["p", "n"], lucas_row, points)

    def _seeded(self, count: int) -> List[Parameters]:
        rng = random.Random(self.seed)
        return [
            {"p": rng.choice(ODD_COMPOSITION_PRIMES), "seed": rng.getrandbits(32)}
            for _ in range(count)
        ]

    def odd_composition(self, count: int = 1000) -> IdentityReport:
        return self._grid(
            "odd_composition", ["p", "seed"], odd_composition, self._seeded(count)
        )

    def twisted_odd(self, count: int = 1000) -> IdentityReport:
        return self._grid(
            "twisted_odd", ["p", "seed"], twisted_odd, self._seeded(count)
        )

    def counterexample(self) -> IdentityReport:
        return self._grid(
            "odd_composition_counterexample",
            ["q", "s"],
            counterexample,
            [{"q": 3, "s": 1}],
        )

    def run(self) -> List[IdentityReport]:
        return [
            self.lucas(),
            self.odd_composition(),
            self.twisted_odd(),
            self.counterexample(),
        ]
