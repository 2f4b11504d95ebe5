from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from . import exceptions

LOG = logging.getLogger(__name__)

T = TypeVar("T")
U = TypeVar("U")


class Runner:
    """Runs independent work items, serially or on a process pool.

    Results always come back in the order of the submitted items, so serial and
    parallel runs are interchangeable.

    :param workers: number of worker processes; ``1`` runs in-process
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError(f"workers must be positive, got {workers}")
        available = os.cpu_count() or 1
        if workers > available:
            LOG.warning("clamping %d workers to %d CPUs", workers, available)
            workers = available
        self.workers = workers

    @property
    def parallel(self) -> bool:
        return self.workers > 1

    def map(
        self,
        func: Callable[[T], U],
        items: Iterable[T],
        *,
        label: Optional[str] = None,
    ) -> List[U]:
        """Apply ``func`` to every item.

        :param func: a picklable, module-level function
        :param items: the work items
        :param label: name used in log lines
        :return: results in item order
        :raises planarmono.exceptions.TaskError: if any item fails
        """
        work = list(items)
        label = label or getattr(func, "__name__", "task")
        mode = "dispatch" if self.parallel else "run"
        LOG.debug("%s %d item(s) of %s", mode, len(work), label)
        if not self.parallel or len(work) < 2:
            return [self._call(func, item) for item in work]
        try:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                return list(pool.map(func, work))
        except exceptions.TaskError:
            raise
        except Exception as e:
            raise exceptions.TaskError(e)

    @staticmethod
    def _call(func: Callable[[T], U], item: T) -> U:
        try:
            return func(item)
        except Exception as e:
            LOG.debug("work item %r failed: %s", item, e)
            raise exceptions.TaskError(e)


#: Runs everything in the calling process
SERIAL = Runner(1)
