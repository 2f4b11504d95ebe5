from __future__ import annotations

from typing import Dict, List, Optional

from typing_extensions import TypedDict

Parameters = Dict[str, int]


class IdentityPoint(TypedDict):
    parameters: Parameters
    passed: bool


class IdentityReport(TypedDict):
    identity_name: str
    # names of the grid axes, in the order used by each point's parameters
    grid: List[str]
    points: List[IdentityPoint]
    passed: bool
    # parameters of the first failing point
    counterexample: Optional[Parameters]
