"""Dickson polynomials of the first kind."""

from __future__ import annotations

import functools
from typing import Any, Optional

from ..rings import Ring
from .dense import DensePolynomial, coerce, ring_of


def dickson(n: int, a: Any, ring: Optional[Ring] = None) -> DensePolynomial:
    """Return ``D_n(x, a)``.

    Built from ``D_0 = 2``, ``D_1 = x`` and ``D_n = x D_(n-1) - a D_(n-2)``,
    which yields the unique polynomial with
    ``D_n(y + a/y, a) = y^n + (a/y)^n``.

    :param n: the degree, ``n >= 0``
    :param a: the parameter, a scalar of ``ring``
    :param ring: coefficient ring; inferred from ``a`` when omitted
    """
    if n < 0:
        raise ValueError(f"Dickson degree must be non-negative, got {n}")
    if ring is None:
        ring = ring_of(a)
    return _dickson(n, coerce(a, ring), ring)


@functools.lru_cache(maxsize=1024)
def _dickson(n: int, a: Any, ring: Ring) -> DensePolynomial:
    x = DensePolynomial.x(ring)
    previous = DensePolynomial.constant(ring.from_int(2), ring)
    if n == 0:
        return previous
    current = x
    for _ in range(n - 1):
        previous, current = current, x * current - previous * a
    return current
