from __future__ import annotations

from .common import FamilyKind, FamilyRecord
from .exceptional import DegreeOutcome, Evidence
from .geometry import HyperovalReport, ScanRow
from .search import SearchEntry, SearchReport
from .verification import IdentityPoint, IdentityReport, Parameters

__all__ = [
    "DegreeOutcome",
    "Evidence",
    "FamilyKind",
    "FamilyRecord",
    "HyperovalReport",
    "IdentityPoint",
    "IdentityReport",
    "Parameters",
    "ScanRow",
    "SearchEntry",
    "SearchReport",
]
