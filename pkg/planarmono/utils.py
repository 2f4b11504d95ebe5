from __future__ import annotations

from datetime import datetime, timezone
from importlib import metadata
from typing import List, Optional, Tuple, TypeVar

import dateutil.parser
from sympy import factorint

T = TypeVar("T")


def datetime_from_str(dt_str: str) -> datetime:
    """Convert the time in a string to a datetime.

    UTC is assumed. The returned datetime is timezone aware. The format must match ISO
    8601.
    """
    dt = dateutil.parser.isoparse(dt_str)
    return dt.replace(tzinfo=timezone.utc)


def utc_timestamp(now: Optional[datetime] = None) -> str:
    """ISO 8601 timestamp (UTC, second precision) of ``now`` or the current time."""
    now = now or datetime.now(timezone.utc)
    return now.astimezone(timezone.utc).replace(microsecond=0).isoformat()


def tool_version() -> str:
    """Installed version of the package, or ``"unknown"`` from a source checkout."""
    try:
        return metadata.version("planarmono")
    except metadata.PackageNotFoundError:
        return "unknown"


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Return ``(p, r)`` with ``q = p^r`` and ``p`` prime, or ``None``."""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, r),) = factors.items()
    return int(p), int(r)


def odd_prime_powers(max_q: int, min_q: int = 3) -> List[Tuple[int, int]]:
    """All ``(p, r)`` with ``p`` odd and ``min_q <= p^r <= max_q``, ordered by ``q``."""
    result: List[Tuple[int, int]] = []
    for q in range(max(min_q, 3), max_q + 1, 2):
        pr = prime_power(q)
        if pr is not None:
            result.append(pr)
    return result


def noop(arg: T) -> T:
    return arg
