from __future__ import annotations


def get_message(e: Exception) -> str:
    return e.args[0] if e.args else ""


def set_message(e: Exception, value: str) -> None:
    args = list(e.args)
    if args:
        args[0] = value
    else:
        args.append(value)
    e.args = tuple(args)


class PlanarmonoError(Exception):
    message = property(get_message, set_message)


class FieldError(PlanarmonoError):
    """Invalid field construction or mixing of elements from different fields."""


class NotPrimeError(FieldError):
    def __init__(self, p: int):
        super().__init__(f"{p} is not prime")
        self.p = p


class FieldTooLargeError(FieldError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"field too large: {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


class ZeroInverseError(FieldError, ZeroDivisionError):
    def __init__(self):
        super().__init__("zero has no inverse")


class RingMismatchError(PlanarmonoError):
    """Polynomial operands have different coefficient rings."""


class CharacteristicError(PlanarmonoError):
    """The coefficient ring has the wrong characteristic for the operation."""


class DecompositionError(PlanarmonoError):
    pass


class WildDecompositionError(DecompositionError):
    def __init__(self, degree: int, characteristic: int):
        super().__init__(
            f"wild decomposition unsupported: {characteristic} divides {degree}"
        )
        self.degree = degree
        self.characteristic = characteristic


class TaskError(PlanarmonoError):
    """A work item failed inside the worker pool."""

    def __init__(self, error: Exception):
        super().__init__(get_message(error) or type(error).__name__)
        self.__cause__ = self.error = error
