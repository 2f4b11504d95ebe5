from __future__ import annotations

from typing import Dict, List

from typing_extensions import NotRequired, TypedDict


class DegreeOutcome(TypedDict):
    # extension degree k of GF(p^k)
    k: int
    bijective: bool


class Evidence(TypedDict):
    # name of the criterion behind a certified verdict
    criterion: NotRequired[str]
    parameters: NotRequired[Dict[str, int]]
    # extension degrees tried by the heuristic
    tested: NotRequired[List[DegreeOutcome]]
