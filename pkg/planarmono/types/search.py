from __future__ import annotations

from typing import List

from typing_extensions import TypedDict

from .common import FamilyRecord


class SearchEntry(TypedDict):
    # minimal representative of the exponent class
    canonical_t: int
    planar: bool
    family: FamilyRecord
    # whether q >= (t - 1)^4
    in_theorem_range: bool


class SearchReport(TypedDict):
    p: int
    r: int
    q: int
    # ascending by canonical_t
    entries: List[SearchEntry]
    # planar entries without a family
    mismatches: List[SearchEntry]
    tool_version: str
    # ISO 8601, UTC
    timestamp: str
