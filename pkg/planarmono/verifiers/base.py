from __future__ import annotations

import logging
from typing import Callable, Iterable, List, Sequence

from ..exceptional import DEFAULT_K_MAX
from ..gf import DEFAULT_FIELD_CAP
from ..runner import Runner
from ..types import IdentityPoint, IdentityReport, Parameters

LOG = logging.getLogger(__name__)

Check = Callable[[Parameters], bool]


class BaseVerifier:
    """Common plumbing for the verification suites.

    :param runner: where grid points are evaluated
    :param cap: largest field order any check may build
    :param k_max: extension degrees scanned by heuristic checks
    :param seed: seed for randomized checks
    """

    def __init__(
        self,
        runner: Runner,
        cap: int = DEFAULT_FIELD_CAP,
        k_max: int = DEFAULT_K_MAX,
        seed: int = 0,
    ):
        self._runner = runner
        self.cap = cap
        self.k_max = k_max
        self.seed = seed

    def _grid(
        self,
        name: str,
        axes: Sequence[str],
        check: Check,
        points: Iterable[Parameters],
    ) -> IdentityReport:
        """Evaluate ``check`` on every point and summarise the outcome.

        ``check`` must be a module-level function so that it can be shipped to
        worker processes.
        """
        params = list(points)
        outcomes = self._runner.map(check, params, label=name)
        results: List[IdentityPoint] = [
            {"parameters": p, "passed": bool(ok)} for p, ok in zip(params, outcomes)
        ]
        failed = next((r["parameters"] for r in results if not r["passed"]), None)
        if failed is not None:
            LOG.warning("%s fails at %s", name, failed)
        return {
            "identity_name": name,
            "grid": list(axes),
            "points": results,
            "passed": failed is None,
            "counterexample": failed,
        }


def all_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(report["passed"] for report in reports)
