"""The ``B(x)`` coefficient machinery for even exponents.

For even ``t`` and a scalar ``c``,

    B(x) = ((x + 1/x + c)^t - (x + 1/x - c)^t) / 2
         = sum over odd k of binomial(t, k) c^k (x + 1/x)^(t - k)

The second form needs no division, so ``B`` is computed exactly over the
integers as well as over fields of odd characteristic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from ..exceptions import CharacteristicError
from ..rings import Ring
from .binomial import binomial
from .dense import binomial_in, coerce, ring_of
from .laurent import LaurentPolynomial

#: Offsets ``k`` for which ``closed_form_coeff`` knows the coefficient of x^(t-k)
CLOSED_FORMS = (1, 3, 5, 7)


def _check_exponent(t: int) -> None:
    if t < 2 or t % 2:
        raise ValueError(f"t must be an even integer >= 2, got {t}")


def x_plus_inverse(ring: Ring) -> LaurentPolynomial:
    """``x + 1/x``."""
    return LaurentPolynomial(-1, (ring.one, ring.zero, ring.one), ring)


def build_B(t: int, c: Any, ring: Optional[Ring] = None) -> LaurentPolynomial:
    """Return ``B(x)`` for the even exponent ``t``.

    :param t: even exponent, at least 2
    :param c: the scalar ``c``; a :class:`~planarmono.poly.dense.DensePolynomial`
        makes it symbolic
    :param ring: ring of ``c``; inferred when omitted
    :raises planarmono.exceptions.CharacteristicError: in characteristic 2
    """
    _check_exponent(t)
    if ring is None:
        ring = ring_of(c)
    if ring.characteristic == 2:
        raise CharacteristicError("B(x) needs 2 to be invertible")
    c = coerce(c, ring)
    u = x_plus_inverse(ring)
    u_squared = u * u
    c_squared = c * c
    c_powers = [c]
    for _ in range(t // 2 - 1):
        c_powers.append(c_powers[-1] * c_squared)
    # k runs over t-1, t-3, ..., 1 while u_power = u^(t-k)
    u_power = u
    result = LaurentPolynomial(0, (), ring)
    for k in range(t - 1, 0, -2):
        result = result + u_power * (binomial_in(ring, t, k) * c_powers[k // 2])
        u_power = u_power * u_squared
    return result


def closed_form_coeff(t: int, c: Any, which: int) -> Any:
    """The coefficient of ``x^(t - which)`` in ``B(x)`` from its closed form.

    :param which: one of 1, 3, 5, 7
    """
    if which not in CLOSED_FORMS:
        raise ValueError(f"no closed form for x^(t-{which})")
    b = binomial
    c2 = c * c
    if which == 1:
        return c * t
    c3 = c * c2
    if which == 3:
        return c * (t * (t - 1)) + b(t, 3) * c3
    c5 = c3 * c2
    if which == 5:
        return c * t * b(t - 1, 2) + b(t, 3) * c3 * (t - 3) + b(t, 5) * c5
    c7 = c5 * c2
    return (
        c * t * b(t - 1, 3)
        + b(t, 3) * c3 * b(t - 3, 2)
        + b(t, 5) * c5 * (t - 5)
        + b(t, 7) * c7
    )


def rational_in(ring: Ring, value: Fraction) -> Any:
    """Map a rational number into ``ring`` (its denominator must be a unit)."""
    value = Fraction(value)
    if ring.characteristic == 0 and ring.is_field:
        return coerce(value, ring)
    numerator = ring.from_int(value.numerator)
    if value.denominator == 1:
        return numerator
    return numerator * ring.inverse(ring.from_int(value.denominator))


def reduced_coeff(t: int, c: Any, which: int) -> Any:
    """The coefficient of ``x^(t - which)`` simplified under ``(t-2) c^2 = -6``.

    The three forms are

      - ``which=3``: ``c t (t-1) ((t-2) c^2 / 6 + 1)`` (exact for every ``c``)
      - ``which=5``: ``c^3 t (t-1) (2t-1) (t-4) / 60``
      - ``which=7``: ``-c^5 t (t-1) (t+1) (2t-1) (t-3) (t-5) / 945``

    and the last two agree with :func:`closed_form_coeff` only when
    ``c^2 = -6 / (t-2)``.
    """
    if isinstance(c, int):
        c = Fraction(c)
    ring = ring_of(c)
    if which == 3:
        scale = rational_in(ring, Fraction(t - 2, 6))
        return c * (t * (t - 1)) * (c * c * scale + 1)
    if which == 5:
        scale = Fraction(t * (t - 1) * (2 * t - 1) * (t - 4), 60)
        return c * c * c * rational_in(ring, scale)
    if which == 7:
        numerator = t * (t - 1) * (t + 1) * (2 * t - 1) * (t - 3) * (t - 5)
        c5 = c * c * c * c * c
        return -c5 * rational_in(ring, Fraction(numerator, 945))
    raise ValueError(f"no reduced form for x^(t-{which})")


def b_squared_series(t: int, eps: int, ring: Ring) -> LaurentPolynomial:
    """``sum over odd 0 < i < 2t of binomial(2t, i) eps^i x^(2t - 2i)``.

    For ``eps = +-1`` this equals ``B(x^2)`` with ``c = 2 eps``.
    """
    _check_exponent(t)
    terms = [
        (2 * t - 2 * i, binomial_in(ring, 2 * t, i) * ring.from_int(eps**i))
        for i in range(1, 2 * t, 2)
    ]
    return LaurentPolynomial.from_terms(terms, ring)
