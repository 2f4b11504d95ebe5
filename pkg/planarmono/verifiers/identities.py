"""Exact polynomial identities behind the planar classification."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from ..gf import build_field
from ..poly import (
    DensePolynomial,
    LaurentPolynomial,
    b_squared_series,
    build_B,
    closed_form_coeff,
    compose,
    dickson,
    difference_polynomial,
    laurent_compose,
    poly_divmod,
    reduced_coeff,
    reflect,
    shifted_difference,
)
from ..rings import QQ, ZZ
from ..types import IdentityReport, Parameters
from .base import BaseVerifier

#: (i, j) pairs for ``(x+1)^t - x^t = -D_s(x-1, 1)`` over GF(3)
DICKSON_DIFFERENCE_GRID = ((1, 0), (3, 0), (2, 1), (3, 2))

#: (p, s) pairs with ``q = p^s`` and ``2t = q + 1``
TERMINAL_GRID = ((3, 1), (3, 3), (5, 1), (7, 1))

#: sample values of ``c`` for the B(x) coefficient identities
C_SAMPLES = (1, 2, 3, 5, 7)


def additive_identity(point: Parameters) -> bool:
    """``(x+1)^(p^i + p^j) - x^(p^i + p^j) - 1 = x^(p^i) + x^(p^j)`` over GF(p)."""
    p, i, j = point["p"], point["i"], point["j"]
    field = build_field(p)
    lhs = difference_polynomial(p**i + p**j, field) - 1
    rhs = DensePolynomial.monomial(p**i, field) + DensePolynomial.monomial(p**j, field)
    return lhs == rhs


def dickson_difference(point: Parameters) -> bool:
    """``(x+1)^t - x^t = -D_s(x-1, 1)`` over GF(3) for ``t, s = (3^i +- 3^j) / 2``."""
    i, j = point["i"], point["j"]
    gf3 = build_field(3)
    t, s = (3**i + 3**j) // 2, (3**i - 3**j) // 2
    shifted = compose(dickson(s, 1, gf3), DensePolynomial.from_ints((-1, 1), gf3))
    return difference_polynomial(t, gf3) == -shifted


def terminal_expansion(point: Parameters) -> bool:
    """``F(x^2 + x^-2) = 2(x^(q-1) + x^(1-q))`` for ``F = (x+2)^t - (x-2)^t``."""
    p, s = point["p"], point["s"]
    field = build_field(p)
    q = p**s
    f = shifted_difference((q + 1) // 2, field)
    u = LaurentPolynomial.from_terms(((2, 1), (-2, 1)), field)
    expected = LaurentPolynomial.from_terms(((q - 1, 2), (1 - q, 2)), field)
    return laurent_compose(f, u) == expected


def terminal_dickson(point: Parameters) -> bool:
    """``(x+2)^t - (x-2)^t = 2 D_((q-1)/2)(x, 1)`` when ``2t = q + 1``."""
    p, s = point["p"], point["s"]
    field = build_field(p)
    q = p**s
    f = shifted_difference((q + 1) // 2, field)
    return f == dickson((q - 1) // 2, 1, field) * 2


def b_coefficient(point: Parameters) -> bool:
    """The coefficient of ``x^(t - which)`` in ``B(x)`` against its closed form."""
    t, c, which = point["t"], point["c"], point["which"]
    return build_B(t, c, ZZ).coeff(t - which) == closed_form_coeff(t, c, which)


def reduced_coefficient(point: Parameters) -> bool:
    """Closed and reduced forms agree in QQ[c] modulo ``c^2 + 6 / (t - 2)``."""
    t, which = point["t"], point["which"]
    c = DensePolynomial.x(QQ)
    difference = closed_form_coeff(t, c, which) - reduced_coeff(t, c, which)
    if which == 3:
        return difference.is_zero
    modulus = DensePolynomial((Fraction(6, t - 2), 0, 1), QQ)
    return poly_divmod(difference, modulus)[1].is_zero


def b_squared(point: Parameters) -> bool:
    """``B(x^2)`` with ``c = 2 eps`` against its binomial expansion."""
    t, eps = point["t"], point["eps"]
    return build_B(t, 2 * eps, ZZ).substitute_power(2) == b_squared_series(t, eps, ZZ)


def difference_symmetry(point: Parameters) -> bool:
    """Reflection symmetries of ``(x+1)^t - x^t`` and ``(x+2)^t - (x-2)^t``."""
    t = point["t"]
    sign = 1 if t % 2 else -1
    f_hat = difference_polynomial(t, ZZ)
    reflected = compose(f_hat, DensePolynomial.from_ints((-1, -1), ZZ))
    f = shifted_difference(t, ZZ)
    ok = reflected == f_hat * sign and reflect(f) == f * sign
    if t % 2 == 0:
        ok = ok and f.coeff(1) == t * 2**t
    return ok


def dickson_parity(point: Parameters) -> bool:
    """``D_n(-x, a) = (-1)^n D_n(x, a)`` over the integers."""
    n, a = point["n"], point["a"]
    d = dickson(n, a, ZZ)
    return reflect(d) == (d if n % 2 == 0 else -d)


class Identities(BaseVerifier):
    """Identities of the additive, Dickson and ``B(x)`` machinery."""

    def additive(
        self, primes: Sequence[int] = (3, 5, 7), max_i: int = 4
    ) -> IdentityReport:
        points = [
            {"p": p, "i": i, "j": j}
            for p in primes
            for i in range(max_i + 1)
            for j in range(i + 1)
        ]
        return self._grid(
            "additive_homomorphism", ["p", "i", "j"], additive_identity, points
        )

    def dickson_difference(self) -> IdentityReport:
        points = [{"i": i, "j": j} for i, j in DICKSON_DIFFERENCE_GRID]
        return self._grid("dickson_difference", ["i", "j"], dickson_difference, points)

    def terminal(self) -> List[IdentityReport]:
        points = [{"p": p, "s": s} for p, s in TERMINAL_GRID]
        return [
            self._grid("terminal_expansion", ["p", "s"], terminal_expansion, points),
            self._grid("terminal_dickson", ["p", "s"], terminal_dickson, points),
        ]

    def coefficients(self, t_max: int = 64) -> List[IdentityReport]:
        """Closed and reduced forms of the ``B(x)`` coefficients for even ``t``."""
        closed = [
            {"t": t, "c": c, "which": which}
            for t in range(2, t_max + 1, 2)
            for c in C_SAMPLES
            for which in (1, 3, 5, 7)
        ]
        reduced = [
            {"t": t, "which": which}
            for t in range(4, t_max + 1, 2)
            for which in (3, 5, 7)
        ]
        return [
            self._grid("b_closed_forms", ["t", "c", "which"], b_coefficient, closed),
            self._grid("b_reduced_forms", ["t", "which"], reduced_coefficient, reduced),
        ]

    def b_squared(self, t_max: int = 40) -> IdentityReport:
        points = [
            {"t": t, "eps": eps} for t in range(2, t_max + 1, 2) for eps in (1, -1)
        ]
        return self._grid("b_squared_expansion", ["t", "eps"], b_squared, points)

    def symmetries(self, t_max: int = 64, n_max: int = 50) -> List[IdentityReport]:
        differences = [{"t": t} for t in range(1, t_max + 1)]
        parities = [{"n": n, "a": a} for n in range(n_max + 1) for a in (1, 2, 3)]
        return [
            self._grid("difference_symmetry", ["t"], difference_symmetry, differences),
            self._grid("dickson_parity", ["n", "a"], dickson_parity, parities),
        ]

    def run(self) -> List[IdentityReport]:
        """Every identity on its default grid."""
        return [
            self.additive(),
            self.dickson_difference(),
            *self.terminal(),
            *self.coefficients(),
            self.b_squared(),
            *self.symmetries(),
        ]
