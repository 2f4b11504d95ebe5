from __future__ import annotations

from typing_extensions import Literal, TypeAlias, TypedDict

FamilyKind: TypeAlias = Literal["F1", "F2", "NONE"]


class FamilyRecord(TypedDict):
    # F1: t = p^i + p^j, F2: t = (3^i + 3^j) / 2, NONE: neither
    kind: FamilyKind
    # family parameters; zero when kind is NONE
    i: int
    j: int
