from __future__ import annotations

from ..exceptional import DEFAULT_K_MAX
from ..gf import DEFAULT_FIELD_CAP
from ..planar import DEFAULT_SEARCH_CAP
from ..runner import Runner
from .base import BaseVerifier, all_passed
from .exceptional import Exceptional
from .hyperovals import Hyperovals
from .identities import Identities
from .lemmas import Lemmas
from .planar import Planar

__all__ = [
    "BaseVerifier",
    "Exceptional",
    "Hyperovals",
    "Identities",
    "Lemmas",
    "Planar",
    "Verifier",
    "all_passed",
]


class Verifier(BaseVerifier):
    """Main touchpoint for the verification suites.

    All checks are namespaced into the suites below:

    - :class:`planar <planarmono.verifiers.Planar>` - exhaustive planar searches
      and the classification invariants
    - :class:`identities <planarmono.verifiers.Identities>` - exact polynomial
      identities
    - :class:`lemmas <planarmono.verifiers.Lemmas>` - Lucas agreement and the
      odd-composition lemmas
    - :class:`exceptional <planarmono.verifiers.Exceptional>` - permutation laws
      and exceptionality certificates
    - :class:`hyperovals <planarmono.verifiers.Hyperovals>` - monomial hyperovals
      and the slope scan

    :param workers: size of the worker pool; ``1`` runs in-process
    :param cap: largest field order any check may build
    :param k_max: extension degrees scanned by heuristic checks
    :param seed: seed for randomized checks
    :param search_cap: largest field order planar searches accept
    """

    def __init__(
        self,
        workers: int = 1,
        *,
        cap: int = DEFAULT_FIELD_CAP,
        k_max: int = DEFAULT_K_MAX,
        seed: int = 0,
        search_cap: int = DEFAULT_SEARCH_CAP,
    ):
        runner = Runner(workers)
        super().__init__(runner, cap, k_max, seed)
        self.planar = Planar(runner, cap, k_max, seed, search_cap=search_cap)
        self.identities = Identities(runner, cap, k_max, seed)
        self.lemmas = Lemmas(runner, cap, k_max, seed)
        self.exceptional = Exceptional(runner, cap, k_max, seed)
        self.hyperovals = Hyperovals(runner, cap, k_max, seed)
