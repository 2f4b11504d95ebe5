"""Dense univariate polynomials over a coefficient ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..exceptions import RingMismatchError, ZeroInverseError
from ..gf import FieldElement
from ..rings import QQ, ZZ, Ring
from .binomial import binom_mod_p, binomial

#: Degree reported for the zero polynomial
ZERO_DEGREE = -1


class PolynomialRing:
    """R[c]: polynomials over ``base`` used as scalars, e.g. a symbolic ``c``."""

    is_field = False

    def __init__(self, base: Ring):
        self.base = base
        self.characteristic = base.characteristic

    @property
    def zero(self) -> DensePolynomial:
        return DensePolynomial((), self.base)

    @property
    def one(self) -> DensePolynomial:
        return DensePolynomial((self.base.one,), self.base)

    def from_int(self, n: int) -> DensePolynomial:
        return DensePolynomial((self.base.from_int(n),), self.base)

    def is_zero(self, value: DensePolynomial) -> bool:
        return value.is_zero

    def inverse(self, value: DensePolynomial) -> DensePolynomial:
        if value.degree != 0:
            raise ValueError(f"{value!r} is not a unit")
        return DensePolynomial((self.base.inverse(value.coeffs[0]),), self.base)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and other.base == self.base

    def __hash__(self) -> int:
        return hash(("poly", self.base))

    def __repr__(self) -> str:
        return f"{self.base!r}[c]"


def ring_of(value: Any) -> Ring:
    """Return the coefficient ring a scalar naturally lives in."""
    if isinstance(value, FieldElement):
        return value.field
    if isinstance(value, DensePolynomial):
        return PolynomialRing(value.ring)
    if isinstance(value, Fraction):
        return QQ
    if isinstance(value, int):
        return ZZ
    raise TypeError(f"no coefficient ring for {type(value).__name__}")


def coerce(value: Any, ring: Ring) -> Any:
    """Bring ``value`` into ``ring``; plain integers are accepted everywhere."""
    if isinstance(value, int) and not isinstance(value, bool):
        return ring.from_int(value)
    if ring == QQ and isinstance(value, Fraction):
        return value
    if isinstance(ring, PolynomialRing) and not isinstance(value, DensePolynomial):
        return DensePolynomial((coerce(value, ring.base),), ring.base)
    if ring_of(value) != ring:
        raise RingMismatchError(f"{value!r} is not an element of {ring!r}")
    return value


def binomial_in(ring: Ring, n: int, m: int) -> Any:
    """``binomial(n, m)`` as an element of ``ring``."""
    p = ring.characteristic
    if p:
        return ring.from_int(binom_mod_p(n, m, p) if 0 <= m <= n else 0)
    return ring.from_int(binomial(n, m))


class DensePolynomial:
    """Polynomial ``sum(coeffs[i] x^i)``; immutable and normalized.

    :param coeffs: coefficients, lowest degree first
    :param ring: the coefficient ring (a field, :data:`~planarmono.rings.ZZ`,
        :data:`~planarmono.rings.QQ` or a :class:`PolynomialRing`)
    """

    __slots__ = ("ring", "coeffs")

    ring: Ring
    coeffs: Tuple[Any, ...]

    def __init__(self, coeffs: Iterable[Any], ring: Ring):
        values = [coerce(c, ring) for c in coeffs]
        while values and ring.is_zero(values[-1]):
            values.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("polynomials are immutable")

    def __reduce__(self):
        return (DensePolynomial, (self.coeffs, self.ring))

    @classmethod
    def x(cls, ring: Ring) -> DensePolynomial:
        return cls((ring.zero, ring.one), ring)

    @classmethod
    def constant(cls, value: Any, ring: Ring) -> DensePolynomial:
        return cls((value,), ring)

    @classmethod
    def monomial(cls, degree: int, ring: Ring, coeff: Any = 1) -> DensePolynomial:
        return cls([ring.zero] * degree + [coerce(coeff, ring)], ring)

    @classmethod
    def from_ints(cls, coeffs: Sequence[int], ring: Ring) -> DensePolynomial:
        return cls([ring.from_int(c) for c in coeffs], ring)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Any:
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def coeff(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def terms(self) -> Iterator[Tuple[int, Any]]:
        """Yield ``(degree, coefficient)`` for the nonzero terms."""
        for k, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                yield k, c

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: DensePolynomial) -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def _as_poly(self, other: Any) -> Optional[DensePolynomial]:
        """Lift ``other`` to a polynomial over our ring, or ``None``."""
        if isinstance(other, DensePolynomial) and other.ring == self.ring:
            return other
        try:
            return DensePolynomial.constant(coerce(other, self.ring), self.ring)
        except (RingMismatchError, TypeError):
            return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DensePolynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __add__(self, other: Any) -> DensePolynomial:
        poly = self._as_poly(other)
        if poly is None:
            return NotImplemented
        n = max(len(self.coeffs), len(poly.coeffs))
        return DensePolynomial(
            [self.coeff(k) + poly.coeff(k) for k in range(n)], self.ring
        )

    __radd__ = __add__

    def __neg__(self) -> DensePolynomial:
        return DensePolynomial([-c for c in self.coeffs], self.ring)

    def __sub__(self, other: Any) -> DensePolynomial:
        poly = self._as_poly(other)
        if poly is None:
            return NotImplemented
        return self + (-poly)

    def __rsub__(self, other: Any) -> DensePolynomial:
        return (-self) + other

    def __mul__(self, other: Any) -> DensePolynomial:
        poly = self._as_poly(other)
        if poly is None:
            return NotImplemented
        if poly.degree == 0:
            scalar = poly.coeffs[0]
            return DensePolynomial([c * scalar for c in self.coeffs], self.ring)
        if self.is_zero or poly.is_zero:
            return DensePolynomial((), self.ring)
        zero = self.ring.zero
        product: List[Any] = [zero] * (len(self.coeffs) + len(poly.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            for j, b in enumerate(poly.coeffs):
                product[i + j] = product[i + j] + a * b
        return DensePolynomial(product, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> DensePolynomial:
        if n < 0:
            raise ValueError("polynomial powers must be non-negative")
        result = DensePolynomial.constant(self.ring.one, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, value: Any) -> Any:
        return poly_eval(self, value)

    def __repr__(self) -> str:
        terms: List[str] = []
        for k, c in reversed(list(self.terms())):
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k and c == self.ring.one:
                terms.append(power)
            else:
                terms.append(f"({c!r})*{power}" if power else f"({c!r})")
        return " + ".join(terms) or "0"


# -- operations -------------------------------------------------------------------


def poly_add(f: DensePolynomial, g: DensePolynomial) -> DensePolynomial:
    f._check(g)
    return f + g


def poly_sub(f: DensePolynomial, g: DensePolynomial) -> DensePolynomial:
    f._check(g)
    return f - g


def poly_mul(f: DensePolynomial, g: DensePolynomial) -> DensePolynomial:
    f._check(g)
    return f * g


def poly_scale(f: DensePolynomial, c: Any) -> DensePolynomial:
    return DensePolynomial([a * coerce(c, f.ring) for a in f.coeffs], f.ring)


def poly_eval(f: DensePolynomial, value: Any) -> Any:
    """Evaluate ``f`` at ``value`` by Horner's rule.

    ``value`` may be a scalar of the coefficient ring (or a plain integer), or
    anything the scalars can multiply into, such as a polynomial or a
    :class:`~planarmono.poly.laurent.LaurentPolynomial`.
    """
    if isinstance(value, int) and not isinstance(value, bool):
        value = f.ring.from_int(value)
    if f.is_zero:
        return f.ring.zero
    acc: Any = f.coeffs[-1]
    for c in reversed(f.coeffs[:-1]):
        acc = acc * value + c
    return acc


def compose(g: DensePolynomial, h: DensePolynomial) -> DensePolynomial:
    """Return ``g(h(x))``."""
    g._check(h)
    result = poly_eval(g, h)
    if not isinstance(result, DensePolynomial):
        result = DensePolynomial.constant(result, g.ring)
    return result


def poly_divmod(
    f: DensePolynomial, g: DensePolynomial
) -> Tuple[DensePolynomial, DensePolynomial]:
    """Divide with remainder; the leading coefficient of ``g`` must be a unit."""
    f._check(g)
    if g.is_zero:
        raise ZeroInverseError()
    ring = f.ring
    lead_inv = ring.inverse(g.leading)
    remainder = list(f.coeffs)
    quotient = [ring.zero] * max(len(f.coeffs) - len(g.coeffs) + 1, 0)
    for shift in range(len(quotient) - 1, -1, -1):
        top = remainder[shift + g.degree]
        if ring.is_zero(top):
            continue
        factor = top * lead_inv
        quotient[shift] = factor
        for i, c in enumerate(g.coeffs):
            remainder[shift + i] = remainder[shift + i] - factor * c
    return DensePolynomial(quotient, ring), DensePolynomial(remainder, ring)


def poly_binomial(n: int, a: Any, ring: Ring) -> DensePolynomial:
    """Expand ``(x + a)^n`` with binomial coefficients taken in ``ring``.

    In characteristic ``p`` the coefficients come from :func:`binom_mod_p`, so
    very high powers over small prime fields stay cheap.
    """
    if n < 0:
        raise ValueError("binomial power must be non-negative")
    a = coerce(a, ring)
    coeffs: List[Any] = [ring.zero] * (n + 1)
    power = ring.one
    for k in range(n, -1, -1):
        c = binomial_in(ring, n, k)
        if not ring.is_zero(c):
            coeffs[k] = c * power
        power = power * a
    return DensePolynomial(coeffs, ring)


def is_odd(f: DensePolynomial) -> bool:
    """Whether every nonzero term of ``f`` has odd degree (true for zero)."""
    return all(k % 2 == 1 for k, _ in f.terms())


def reflect(f: DensePolynomial) -> DensePolynomial:
    """Return ``f(-x)``."""
    return DensePolynomial(
        [c if k % 2 == 0 else -c for k, c in enumerate(f.coeffs)], f.ring
    )


def difference_polynomial(t: int, ring: Ring) -> DensePolynomial:
    """``(x+1)^t - x^t``, the shift-by-one difference of the monomial ``x^t``."""
    return poly_binomial(t, 1, ring) - DensePolynomial.monomial(t, ring)


def shifted_difference(t: int, ring: Ring) -> DensePolynomial:
    """``(x+2)^t - (x-2)^t``."""
    return poly_binomial(t, 2, ring) - poly_binomial(t, -2, ring)
