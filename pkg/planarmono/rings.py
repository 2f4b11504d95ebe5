"""Coefficient rings shared by field elements and polynomials.

Every ring exposes the same small surface (``zero``, ``one``, ``from_int``,
``is_zero``, ``inverse``, ``characteristic``, ``is_field``) so that polynomial
code can stay generic; the arithmetic itself goes through the ordinary Python
operators of the scalar type (``int``, :class:`fractions.Fraction`,
:class:`planarmono.gf.FieldElement` or a polynomial).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from typing_extensions import Protocol

from .exceptions import ZeroInverseError


class Ring(Protocol):
    characteristic: int
    is_field: bool

    @property
    def zero(self) -> Any:
        ...

    @property
    def one(self) -> Any:
        ...

    def from_int(self, n: int) -> Any:
        ...

    def is_zero(self, value: Any) -> bool:
        ...

    def inverse(self, value: Any) -> Any:
        ...


class IntegerRing:
    """The integers, with unbounded Python ``int`` scalars."""

    characteristic = 0
    is_field = False

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return int(n)

    def is_zero(self, value: int) -> bool:
        return value == 0

    def inverse(self, value: int) -> int:
        if value in (1, -1):
            return value
        if value == 0:
            raise ZeroInverseError()
        raise ValueError(f"{value} is not a unit in ZZ")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash("ZZ")

    def __repr__(self) -> str:
        return "ZZ"


class RationalField:
    """The rationals, with :class:`fractions.Fraction` scalars."""

    characteristic = 0
    is_field = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def is_zero(self, value: Fraction) -> bool:
        return value == 0

    def inverse(self, value: Fraction) -> Fraction:
        if value == 0:
            raise ZeroInverseError()
        return 1 / Fraction(value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


#: The integers
ZZ = IntegerRing()

#: The rationals
QQ = RationalField()
