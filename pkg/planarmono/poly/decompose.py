"""Tame functional decomposition ``f = g(h(x))``."""

from __future__ import annotations

import logging
from typing import Any, List, Optional, Tuple

from ..exceptions import WildDecompositionError
from .dense import DensePolynomial, compose, poly_divmod

LOG = logging.getLogger(__name__)


def _truncated_mul(a: List[Any], b: List[Any], n: int, zero: Any) -> List[Any]:
    out = [zero] * n
    for i, x in enumerate(a[:n]):
        for j in range(min(len(b), n - i)):
            out[i + j] = out[i + j] + x * b[j]
    return out


def _truncated_pow(a: List[Any], e: int, n: int, one: Any, zero: Any) -> List[Any]:
    result = [one] + [zero] * (n - 1)
    base = a
    while e:
        if e & 1:
            result = _truncated_mul(result, base, n, zero)
        e >>= 1
        if e:
            base = _truncated_mul(base, base, n, zero)
    return result


def right_component(f: DensePolynomial, d: int) -> DensePolynomial:
    """The only possible monic ``h`` with ``h(0) = 0`` and ``deg h = d``.

    Reading ``f`` backwards, ``x^n f(1/x) / lead(f)`` must agree with the
    ``m``-th power of the reversal of ``h`` up to ``x^(d-1)``, where
    ``m = deg f / d``; the coefficients of ``h`` are solved for one at a time,
    dividing only by ``m``.
    """
    ring = f.ring
    n = f.degree
    m = n // d
    lead_inverse = ring.inverse(f.leading)
    target = [f.coeff(n - k) * lead_inverse for k in range(d)]
    m_inverse = ring.inverse(ring.from_int(m))
    series: List[Any] = [ring.one] + [ring.zero] * (d - 1)
    for k in range(1, d):
        power = _truncated_pow(series, m, k + 1, ring.one, ring.zero)
        series[k] = (target[k] - power[k]) * m_inverse
    # series[k] is the coefficient of x^(d-k) in h
    coeffs = [ring.zero] + [series[d - j] for j in range(1, d)] + [ring.one]
    return DensePolynomial(coeffs, ring)


def decompose_tame(
    f: DensePolynomial, d: int
) -> Optional[Tuple[DensePolynomial, DensePolynomial]]:
    """Find ``(g, h)`` with ``f = g(h(x))``, ``deg h = d``, ``h`` monic, ``h(0) = 0``.

    :param f: a polynomial over a field
    :param d: the degree of the right component; must divide ``deg f``
    :return: the decomposition, or ``None`` if ``f`` has no right component of
        degree ``d``
    :raises planarmono.exceptions.WildDecompositionError: if the characteristic
        divides ``deg f / d``
    """
    if not f.ring.is_field:
        raise ValueError("decomposition needs coefficients in a field")
    n = f.degree
    if n < 1 or d < 1 or n % d:
        raise ValueError(f"degree {d} does not divide deg f = {n}")
    m = n // d
    p = f.ring.characteristic
    if p and m % p == 0:
        raise WildDecompositionError(m, p)
    h = right_component(f, d)
    g_coeffs: List[Any] = []
    rest = f
    while not rest.is_zero:
        rest, digit = poly_divmod(rest, h)
        if digit.degree > 0:
            LOG.debug("no right component of degree %d: digit %r", d, digit)
            return None
        g_coeffs.append(digit.coeff(0))
    g = DensePolynomial(g_coeffs, f.ring)
    if compose(g, h) != f:
        return None
    return g, h
