from __future__ import annotations

from typing import List, Optional

from typing_extensions import TypedDict


class HyperovalReport(TypedDict):
    k: int
    t: int
    q: int
    hyperoval: bool
    # point triples examined before the scan ended
    triples: int
    # positions of a collinear triple in the point set, if one was found
    witness: Optional[List[int]]
    seconds: float


class ScanRow(TypedDict):
    t: int
    c_t3: int
    c_t7: int
    power_of_two: bool
