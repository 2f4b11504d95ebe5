from __future__ import annotations

import math
from typing import List

from sympy import isprime

from ..exceptions import NotPrimeError


def binomial(n: int, m: int) -> int:
    """Exact binomial coefficient, zero outside ``0 <= m <= n``."""
    if m < 0 or n < 0 or m > n:
        return 0
    return math.comb(n, m)


def base_digits(n: int, p: int) -> List[int]:
    """Base-``p`` digits of ``n``, least significant first."""
    digits: List[int] = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def binom_mod_p(n: int, m: int, p: int) -> int:
    """Compute ``binomial(n, m) % p`` digit by digit (Lucas).

    :param n: non-negative integer
    :param m: non-negative integer
    :param p: a prime
    :return: residue in ``[0, p-1]``; zero when ``m > n``
    """
    if n < 0 or m < 0:
        raise ValueError("binomial arguments must be non-negative")
    if not isprime(p):
        raise NotPrimeError(p)
    if m > n:
        return 0
    result = 1
    while m:
        n, ni = divmod(n, p)
        m, mi = divmod(m, p)
        if mi > ni:
            return 0
        result = result * math.comb(ni, mi) % p
    return result % p
