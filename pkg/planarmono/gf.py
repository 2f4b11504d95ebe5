"""Finite fields GF(p^r) in a polynomial basis.

Elements are stored as their *rank* ``c_0 + c_1 p + ... + c_{r-1} p^{r-1}``
where ``c_i`` are the polynomial-basis coordinates. Fields up to
:data:`TABLE_CAP` elements additionally carry discrete-log / antilog tables,
which back both the scalar operations and the numpy kernels used by the
exhaustive searches.
"""

from __future__ import annotations

import functools
import logging
import random
from typing import Any, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt
from sympy import isprime, primefactors

from .exceptions import (
    FieldError,
    FieldMismatchError,
    FieldTooLargeError,
    NotPrimeError,
    ZeroInverseError,
)

LOG = logging.getLogger(__name__)

#: Largest field order :func:`build_field` accepts unless told otherwise
DEFAULT_FIELD_CAP = 2**22

#: Fields up to this order get log/antilog tables
TABLE_CAP = 2**16

# random pairs checked against polynomial-basis arithmetic when tables are built
TABLE_CHECK_PAIRS = 1000

Ranks = npt.NDArray[np.int64]
RankLike = Union[int, Ranks]


# -- polynomials over GF(p) as coefficient lists, lowest degree first ---------


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        factor = (a[-1] * lead_inv) % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int):
    if not a or not b:
        return []
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                product[i + j] += x * y
    return _poly_mod(product, m, p)


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: Sequence[int], e: int, m: Sequence[int], p: int):
    result = [1]
    base = _poly_mod(base, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Return whether a monic polynomial over GF(p) is irreducible.

    Uses the Ben-Or test: ``f`` of degree ``r`` is irreducible iff
    ``gcd(f, x^(p^d) - x) = 1`` for every ``1 <= d <= r/2``.

    :param modulus: coefficients, lowest degree first
    :param p: the characteristic
    """
    r = len(modulus) - 1
    if r < 1:
        return False
    h = [0, 1]
    for _ in range(r // 2):
        h = _poly_powmod(h, p, modulus, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(modulus, diff, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, r: int) -> Tuple[int, ...]:
    """Return the smallest monic irreducible polynomial of degree ``r``.

    Candidates are ranked by the integer ``a_0 + a_1 p + ... + a_{r-1} p^{r-1}``
    of their non-leading coefficients, i.e. lexicographically from the
    coefficient of ``x^(r-1)`` downwards.
    """
    for rank in range(p**r):
        lower = [(rank // p**i) % p for i in range(r)]
        candidate = tuple(lower + [1])
        if is_irreducible(candidate, p):
            return candidate
    raise FieldError(f"no irreducible polynomial of degree {r} over GF({p})")


class FieldSpec:
    """A concrete finite field GF(p^r).

    :param p: the characteristic
    :param r: the extension degree
    :param modulus: monic irreducible defining polynomial, lowest degree first
    """

    is_field = True

    def __init__(self, p: int, r: int, modulus: Sequence[int]):
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {r}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.r = r
        self.q = p**r
        self.characteristic = p
        self.modulus = modulus
        # x^r == sum(_reduction[i] x^i)
        self._reduction = tuple((-c) % p for c in modulus[:r])
        self._weights = np.array([p**i for i in range(r)], dtype=np.int64)
        self._log: Optional[Ranks] = None
        self._exp: Optional[Ranks] = None
        if self.q <= TABLE_CAP:
            self._build_tables()

    def __reduce__(self):
        return (FieldSpec, (self.p, self.r, self.modulus))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def __len__(self) -> int:
        return self.q

    def __iter__(self) -> Iterator[FieldElement]:
        return enumerate_field(self)

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    # -- ring surface -------------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of ``x`` modulo the field modulus."""
        return self.element([0, 1])

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, int(n) % self.p)

    def from_rank(self, rank: int) -> FieldElement:
        if not 0 <= rank < self.q:
            raise ValueError(f"rank {rank} out of range for {self!r}")
        return FieldElement(self, rank)

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Build an element from polynomial-basis coordinates (any length)."""
        reduced = _poly_mod(coeffs, self.modulus, self.p) if coeffs else []
        return FieldElement(self, self.rank_of(reduced))

    def is_zero(self, value: FieldElement) -> bool:
        return value.rank == 0

    def inverse(self, value: FieldElement) -> FieldElement:
        return value.inv()

    # -- rank arithmetic ----------------------------------------------------

    def coeffs_of(self, rank: int) -> Tuple[int, ...]:
        digits: List[int] = []
        for _ in range(self.r):
            rank, d = divmod(rank, self.p)
            digits.append(d)
        return tuple(digits)

    def rank_of(self, coeffs: Sequence[int]) -> int:
        rank = 0
        for c in reversed(coeffs):
            rank = rank * self.p + c % self.p
        return rank

    def add_rank(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, result, weight = self.p, 0, 1
        for _ in range(self.r):
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            result += ((da + db) % p) * weight
            weight *= p
        return result

    def neg_rank(self, a: int) -> int:
        if self.p == 2:
            return a
        p, result, weight = self.p, 0, 1
        for _ in range(self.r):
            a, da = divmod(a, p)
            result += ((-da) % p) * weight
            weight *= p
        return result

    def sub_rank(self, a: int, b: int) -> int:
        return self.add_rank(a, self.neg_rank(b))

    def _mul_coeffs(self, a: Sequence[int], b: Sequence[int]) -> List[int]:
        p, r = self.p, self.r
        product = [0] * (2 * r - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        for k in range(2 * r - 2, r - 1, -1):
            c = product[k] % p
            if c:
                for i, red in enumerate(self._reduction):
                    product[k - r + i] += c * red
        return [c % p for c in product[:r]]

    def mul_rank_basis(self, a: int, b: int) -> int:
        """Multiply in the polynomial basis, bypassing any tables."""
        return self.rank_of(self._mul_coeffs(self.coeffs_of(a), self.coeffs_of(b)))

    def mul_rank(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None and self._log is not None:
            return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])
        return self.mul_rank_basis(a, b)

    def pow_rank(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow_rank(self.inv_rank(a), -n)
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self._exp is not None and self._log is not None:
            return int(self._exp[(int(self._log[a]) * n) % (self.q - 1)])
        n %= self.q - 1
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul_rank_basis(result, base)
            base = self.mul_rank_basis(base, base)
            n >>= 1
        return result

    def inv_rank(self, a: int) -> int:
        if a == 0:
            raise ZeroInverseError()
        if self._exp is not None and self._log is not None:
            return int(self._exp[(-int(self._log[a])) % (self.q - 1)])
        return self.pow_rank(a, self.q - 2)

    # -- tables ---------------------------------------------------------------

    def _primitive_rank(self) -> int:
        order = self.q - 1
        factors = primefactors(order) if order > 1 else []
        for g in range(1, self.q):
            if all(self.pow_rank(g, order // f) != 1 for f in factors):
                return g
        raise FieldError(f"no primitive element found in {self!r}")

    def _build_tables(self) -> None:
        order = self.q - 1
        g = self._primitive_rank()
        exp = [1] * max(order, 1)
        for i in range(1, order):
            exp[i] = self.mul_rank_basis(exp[i - 1], g)
        log = [0] * self.q
        for i, value in enumerate(exp):
            log[value] = i
        self._exp = np.array(exp, dtype=np.int64)
        self._log = np.array(log, dtype=np.int64)
        rng = random.Random(self.q)
        for _ in range(TABLE_CHECK_PAIRS):
            a, b = rng.randrange(self.q), rng.randrange(self.q)
            if self.mul_rank(a, b) != self.mul_rank_basis(a, b):
                self._exp = self._log = None
                raise FieldError(f"log tables of {self!r} disagree on {a} * {b}")
        LOG.debug("built log tables for %r with generator rank %d", self, g)

    # -- vectorised kernels over rank arrays ----------------------------------

    def ranks(self) -> Ranks:
        """All element ranks ``0 .. q-1``."""
        return np.arange(self.q, dtype=np.int64)

    def _digits(self, a: Ranks) -> Ranks:
        return (a[..., None] // self._weights) % self.p

    def add_vec(self, a: RankLike, b: RankLike) -> Ranks:
        a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self._digits(a) + self._digits(b)) % self.p) @ self._weights

    def sub_vec(self, a: RankLike, b: RankLike) -> Ranks:
        a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self._digits(a) - self._digits(b)) % self.p) @ self._weights

    def mul_vec(self, a: RankLike, b: RankLike) -> Ranks:
        a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
        if self._exp is None or self._log is None:
            flat = [self.mul_rank(int(x), int(y)) for x, y in zip(a.ravel(), b.ravel())]
            return np.array(flat, dtype=np.int64).reshape(a.shape)
        result = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, result)

    def pow_vec(self, a: RankLike, n: int) -> Ranks:
        if n < 0:
            raise ValueError("exponent must be non-negative")
        a = np.asarray(a, np.int64)
        if n == 0:
            return np.ones_like(a)
        if self._exp is None or self._log is None:
            flat = [self.pow_rank(int(x), n) for x in a.ravel()]
            return np.array(flat, dtype=np.int64).reshape(a.shape)
        exponent = n % (self.q - 1)
        result = self._exp[(self._log[a] * exponent) % (self.q - 1)]
        return np.where(a == 0, 0, result)

    def eval_vec(self, coeff_ranks: Sequence[int], xs: RankLike) -> Ranks:
        """Evaluate ``sum(coeff_ranks[i] x^i)`` at every rank in ``xs``."""
        xs = np.asarray(xs, np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(coeff_ranks):
            acc = self.add_vec(self.mul_vec(acc, xs), c)
        return acc


class FieldElement:
    """An element of a :class:`FieldSpec`; immutable."""

    __slots__ = ("field", "rank")

    field: FieldSpec
    rank: int

    def __init__(self, field: FieldSpec, rank: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("field elements are immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.rank))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.field.coeffs_of(self.rank)

    def _coerce(self, other: Any) -> Optional[int]:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field!r} and {other.field!r}"
                )
            return other.rank
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rank == other.rank
        if isinstance(other, int):
            return self.rank == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.rank))

    def __bool__(self) -> bool:
        return self.rank != 0

    def __add__(self, other: Any) -> FieldElement:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add_rank(self.rank, b))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg_rank(self.rank))

    def __sub__(self, other: Any) -> FieldElement:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub_rank(self.rank, b))

    def __rsub__(self, other: Any) -> FieldElement:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub_rank(b, self.rank))

    def __mul__(self, other: Any) -> FieldElement:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_rank(self.rank, b))

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv_rank(self.rank))

    def __truediv__(self, other: Any) -> FieldElement:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(
            self.field, self.field.mul_rank(self.rank, self.field.inv_rank(b))
        )

    def __rtruediv__(self, other: Any) -> FieldElement:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(
            self.field, self.field.mul_rank(b, self.field.inv_rank(self.rank))
        )

    def __pow__(self, n: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow_rank(self.rank, n))

    def __repr__(self) -> str:
        terms: List[str] = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = "x" if i == 1 else f"x^{i}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms) or "0"


# -- public operations --------------------------------------------------------


@functools.lru_cache(maxsize=None)
def build_field(p: int, r: int = 1, cap: int = DEFAULT_FIELD_CAP) -> FieldSpec:
    """Construct GF(p^r) with a deterministic modulus.

    The modulus is the smallest monic irreducible of degree ``r`` in the order
    used by :func:`smallest_irreducible`; repeated calls return the same field.

    :param p: the characteristic
    :param r: the extension degree
    :param cap: the largest admissible field order
    :raises planarmono.exceptions.NotPrimeError: if ``p`` is not prime
    :raises planarmono.exceptions.FieldTooLargeError: if ``p^r`` exceeds ``cap``
    """
    if r < 1:
        raise ValueError(f"extension degree must be positive, got {r}")
    if not isprime(p):
        raise NotPrimeError(p)
    if p**r > cap:
        raise FieldTooLargeError(p**r, cap)
    field = FieldSpec(p, r, smallest_irreducible(p, r))
    LOG.debug("built %r with modulus %s", field, field.modulus)
    return field


def enumerate_field(field: FieldSpec) -> Iterator[FieldElement]:
    """Yield every element of ``field`` once, in increasing rank."""
    for rank in range(field.q):
        yield FieldElement(field, rank)


def _check_same_field(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatchError(
            f"cannot combine elements of {a.field!r} and {b.field!r}"
        )


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def power(a: FieldElement, n: int) -> FieldElement:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    return a**n


class FieldEmbedding:
    """The homomorphism GF(p^a) -> GF(p^b) fixed by the image of ``x``."""

    def __init__(self, small: FieldSpec, big: FieldSpec, image_of_gen: int):
        self.small = small
        self.big = big
        self.image_of_gen = image_of_gen
        self._powers = [big.pow_rank(image_of_gen, i) for i in range(small.r)]
        self._table = [self._map(rank) for rank in range(small.q)]

    def _map(self, rank: int) -> int:
        result = 0
        for c, power_rank in zip(self.small.coeffs_of(rank), self._powers):
            if c:
                result = self.big.add_rank(result, self.big.mul_rank(c, power_rank))
        return result

    def __call__(self, value: FieldElement) -> FieldElement:
        if value.field != self.small:
            raise FieldMismatchError(f"{value!r} is not in {self.small!r}")
        return FieldElement(self.big, self._table[value.rank])


@functools.lru_cache(maxsize=None)
def embed(small: FieldSpec, big: FieldSpec) -> FieldEmbedding:
    """Return the embedding of ``small`` into ``big``.

    ``x`` is sent to the smallest-rank root of the modulus of ``small`` in
    ``big``.

    :raises planarmono.exceptions.FieldMismatchError: if no embedding exists
    """
    if small.p != big.p or big.r % small.r:
        raise FieldMismatchError(f"{small!r} does not embed in {big!r}")
    if small.r == 1:
        return FieldEmbedding(small, big, 0)
    roots = np.nonzero(big.eval_vec(small.modulus, big.ranks()) == 0)[0]
    return FieldEmbedding(small, big, int(roots[0]))


def random_element(field: FieldSpec, rng: random.Random, nonzero: bool = False):
    low = 1 if nonzero else 0
    return FieldElement(field, rng.randrange(low, field.q))

