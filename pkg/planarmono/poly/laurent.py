"""Laurent polynomials: finitely many terms ``c_k x^k`` with ``k`` in ZZ."""

from __future__ import annotations

from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from ..exceptions import RingMismatchError
from ..rings import Ring
from .dense import DensePolynomial, coerce, poly_eval


class LaurentPolynomial:
    """``sum(coeffs[i] x^(lo + i))``, normalized at both ends.

    The zero polynomial has ``lo == 0`` and no coefficients.
    """

    __slots__ = ("ring", "lo", "coeffs")

    ring: Ring
    lo: int
    coeffs: Tuple[Any, ...]

    def __init__(self, lo: int, coeffs: Iterable[Any], ring: Ring):
        values = [coerce(c, ring) for c in coeffs]
        while values and ring.is_zero(values[-1]):
            values.pop()
        start = 0
        while start < len(values) and ring.is_zero(values[start]):
            start += 1
        values = values[start:]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "lo", lo + start if values else 0)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("polynomials are immutable")

    def __reduce__(self):
        return (LaurentPolynomial, (self.lo, self.coeffs, self.ring))

    @classmethod
    def from_dense(cls, f: DensePolynomial) -> LaurentPolynomial:
        return cls(0, f.coeffs, f.ring)

    @classmethod
    def monomial(cls, k: int, ring: Ring, coeff: Any = 1) -> LaurentPolynomial:
        return cls(k, (coerce(coeff, ring),), ring)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, Any]], ring: Ring):
        """Build from ``(exponent, coefficient)`` pairs; repeats are summed."""
        collected: Dict[int, Any] = {}
        for k, c in terms:
            collected[k] = collected.get(k, ring.zero) + coerce(c, ring)
        if not collected:
            return cls(0, (), ring)
        lo, hi = min(collected), max(collected)
        return cls(
            lo, [collected.get(k, ring.zero) for k in range(lo, hi + 1)], ring
        )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def hi(self) -> int:
        """Largest exponent with a nonzero coefficient (``lo - 1`` for zero)."""
        return self.lo + len(self.coeffs) - 1

    def coeff(self, k: int) -> Any:
        i = k - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def terms(self) -> Iterator[Tuple[int, Any]]:
        for i, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                yield self.lo + i, c

    def is_symmetric(self) -> bool:
        """Whether the coefficients of ``x^k`` and ``x^-k`` agree for all ``k``."""
        return all(c == self.coeff(-k) for k, c in self.terms())

    def substitute_power(self, n: int) -> LaurentPolynomial:
        """Return ``f(x^n)`` for a nonzero integer ``n``."""
        if n == 0:
            raise ValueError("cannot substitute x^0")
        return LaurentPolynomial.from_terms(
            ((k * n, c) for k, c in self.terms()), self.ring
        )

    def to_dense(self) -> DensePolynomial:
        if self.coeffs and self.lo < 0:
            raise ValueError(f"{self!r} has negative exponents")
        padding = [self.ring.zero] * self.lo
        return DensePolynomial(padding + list(self.coeffs), self.ring)

    # -- arithmetic -------------------------------------------------------------

    def _as_laurent(self, other: Any) -> Optional[LaurentPolynomial]:
        if isinstance(other, LaurentPolynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, DensePolynomial) and other.ring == self.ring:
            return LaurentPolynomial.from_dense(other)
        try:
            return LaurentPolynomial(0, (coerce(other, self.ring),), self.ring)
        except (RingMismatchError, TypeError):
            return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolynomial):
            return (self.ring, self.lo, self.coeffs) == (
                other.ring,
                other.lo,
                other.coeffs,
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.lo, self.coeffs))

    def __add__(self, other: Any) -> LaurentPolynomial:
        g = self._as_laurent(other)
        if g is None:
            return NotImplemented
        if self.is_zero:
            return g
        if g.is_zero:
            return self
        lo = min(self.lo, g.lo)
        hi = max(self.hi, g.hi)
        return LaurentPolynomial(
            lo, [self.coeff(k) + g.coeff(k) for k in range(lo, hi + 1)], self.ring
        )

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.lo, [-c for c in self.coeffs], self.ring)

    def __sub__(self, other: Any) -> LaurentPolynomial:
        g = self._as_laurent(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other: Any) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other: Any) -> LaurentPolynomial:
        g = self._as_laurent(other)
        if g is None:
            return NotImplemented
        if self.is_zero or g.is_zero:
            return LaurentPolynomial(0, (), self.ring)
        size = len(self.coeffs) + len(g.coeffs) - 1
        product: List[Any] = [self.ring.zero] * size
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            for j, b in enumerate(g.coeffs):
                product[i + j] = product[i + j] + a * b
        return LaurentPolynomial(self.lo + g.lo, product, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have negative powers")
            inverse = self.ring.inverse(self.coeffs[0])
            return LaurentPolynomial(-self.lo, (inverse,), self.ring) ** (-n)
        result = LaurentPolynomial(0, (self.ring.one,), self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self) -> str:
        parts = [f"({c!r})*x^{k}" for k, c in reversed(list(self.terms()))]
        return " + ".join(parts) or "0"


def laurent_compose(g: DensePolynomial, u: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``g(u(x))`` for a Laurent polynomial ``u``."""
    if g.ring != u.ring:
        raise RingMismatchError(f"{g.ring!r} vs {u.ring!r}")
    result = poly_eval(g, u)
    if not isinstance(result, LaurentPolynomial):
        result = LaurentPolynomial(0, (result,), g.ring)
    return result


def laurent_substitute_x_plus_ainvx(
    f: DensePolynomial,
    a: Any,
    *,
    alpha: Any = 1,
    gamma: Any = 0,
) -> LaurentPolynomial:
    """Expand ``f(alpha*x + a/x + gamma)`` as a Laurent polynomial.

    With the defaults this is ``f(x + a/x)``, the substitution behind the
    Dickson functional equation.

    :param f: the polynomial to substitute into
    :param a: coefficient of ``x^-1``
    :param alpha: coefficient of ``x``
    :param gamma: constant term
    """
    ring = f.ring
    u = LaurentPolynomial(
        -1, (coerce(a, ring), coerce(gamma, ring), coerce(alpha, ring)), ring
    )
    return laurent_compose(f, u)
