"""Criteria and bounded heuristics for exceptional polynomials.

A polynomial over GF(p) is exceptional when it permutes GF(p^k) for
infinitely many ``k``. No finite computation decides that in general, so
every verdict here says whether it is certified by a criterion or only
supported by a bounded scan of extension degrees.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, List, NamedTuple, Optional, Tuple

import numpy as np
from sympy import divisors
from typing_extensions import Literal, TypeAlias

from .exceptions import FieldTooLargeError, RingMismatchError
from .gf import DEFAULT_FIELD_CAP, FieldElement, FieldSpec, build_field, embed
from .poly import DensePolynomial, compose, decompose_tame, dickson
from .rings import ZZ
from .types import DegreeOutcome, Evidence

LOG = logging.getLogger(__name__)

#: Extension degrees scanned by :func:`heuristic_exceptional` unless told otherwise
DEFAULT_K_MAX = 6

#: Bijective extension degrees needed for a heuristic pass
PASS_THRESHOLD = 2

Status: TypeAlias = Literal[
    "CERTIFIED_EXCEPTIONAL", "CERTIFIED_NOT", "HEURISTIC_PASS", "HEURISTIC_FAIL"
]


@dataclass(frozen=True)
class ExceptionalityVerdict:
    status: Status
    evidence: Evidence

    def __post_init__(self):
        if self.certified and "criterion" not in self.evidence:
            raise ValueError("certified verdicts need a criterion")
        if not self.certified and "tested" not in self.evidence:
            raise ValueError("heuristic verdicts need the tested degrees")

    @property
    def certified(self) -> bool:
        return self.status.startswith("CERTIFIED")

    @property
    def exceptional(self) -> bool:
        """Whether the verdict leans towards exceptional (certified or not)."""
        return self.status in ("CERTIFIED_EXCEPTIONAL", "HEURISTIC_PASS")

    @property
    def bijective_degrees(self) -> List[int]:
        return [o["k"] for o in self.evidence.get("tested", []) if o["bijective"]]


def _certified(exceptional: bool, criterion: str, **parameters: int):
    return ExceptionalityVerdict(
        "CERTIFIED_EXCEPTIONAL" if exceptional else "CERTIFIED_NOT",
        {"criterion": criterion, "parameters": parameters},
    )


# -- bijectivity ------------------------------------------------------------------


def coefficients_in(f: DensePolynomial, field: FieldSpec) -> DensePolynomial:
    """Map the coefficients of ``f`` into ``field``.

    Integer coefficients are reduced mod ``p``; coefficients from a subfield go
    through :func:`~planarmono.gf.embed`.
    """
    if f.ring == field:
        return f
    if f.ring == ZZ:
        return DensePolynomial([field.from_int(c) for c in f.coeffs], field)
    if isinstance(f.ring, FieldSpec):
        into = embed(f.ring, field)
        return DensePolynomial([into(c) for c in f.coeffs], field)
    raise RingMismatchError(f"cannot evaluate {f.ring!r} coefficients on {field!r}")


def is_bijection(f: DensePolynomial, field: FieldSpec) -> bool:
    """Brute-force check that ``c -> f(c)`` permutes ``field``."""
    g = coefficients_in(f, field)
    values = field.eval_vec([c.rank for c in g.coeffs], field.ranks())
    return bool(np.bincount(values, minlength=field.q).min() > 0)


def monomial_permutes(m: int, q: int) -> bool:
    """Whether ``x^m`` permutes GF(q)."""
    if m < 1:
        raise ValueError(f"exponent must be positive, got {m}")
    return math.gcd(m, q - 1) == 1


def dickson_exceptional(n: int, p: int) -> bool:
    """Whether ``D_n(x, a)``, ``a != 0``, is exceptional over GF(p)."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    return math.gcd(n, p * p - 1) == 1


# -- verdicts ---------------------------------------------------------------------


def heuristic_exceptional(
    f: DensePolynomial,
    p: int,
    k_max: int = DEFAULT_K_MAX,
    cap: int = DEFAULT_FIELD_CAP,
) -> ExceptionalityVerdict:
    """Scan GF(p^k) for ``k <= k_max`` and count where ``f`` is a bijection.

    :raises planarmono.exceptions.FieldTooLargeError: if ``p^k_max`` exceeds ``cap``
    """
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    if p**k_max > cap:
        raise FieldTooLargeError(p**k_max, cap)
    tested: List[DegreeOutcome] = []
    for k in range(1, k_max + 1):
        bijective = is_bijection(f, build_field(p, k, cap))
        LOG.debug("f permutes GF(%d^%d): %s", p, k, bijective)
        tested.append({"k": k, "bijective": bijective})
    hits = sum(o["bijective"] for o in tested)
    status: Status = "HEURISTIC_PASS" if hits >= PASS_THRESHOLD else "HEURISTIC_FAIL"
    return ExceptionalityVerdict(status, {"tested": tested})


def weil_certificate(
    f: DensePolynomial, field: FieldSpec, k_max: int = DEFAULT_K_MAX
) -> ExceptionalityVerdict:
    """Certify ``f`` when ``deg(f)^4 <= q`` and ``f`` permutes GF(q).

    Anything else falls through to :func:`heuristic_exceptional` over the
    prime field.
    """
    if f.degree < 1:
        raise ValueError("f must be nonconstant")
    if f.degree**4 <= field.q and is_bijection(f, field):
        return _certified(True, "weil", degree=f.degree, q=field.q)
    return heuristic_exceptional(f, field.p, k_max)


class Shape(NamedTuple):
    """``f = mu(S(nu(x)))`` with ``mu``, ``nu`` linear and ``S`` the shape."""

    kind: Literal["monomial", "dickson"]
    degree: int
    # Dickson parameter a
    parameter: Optional[FieldElement] = None


def _shift(f: DensePolynomial, s: Any) -> DensePolynomial:
    # f(x + s)
    return compose(f, DensePolynomial((s, 1), f.ring))


def indecomposable_shape(f: DensePolynomial, field: FieldSpec) -> Optional[Shape]:
    """Recognise ``f`` as a linear twist of ``x^m`` or ``D_n(x, a)``.

    Since ``D_n(a x, b) = a^n D_n(x, b / a^2)``, only a translation of the
    argument needs to be found; it is read off the ``x^(n-1)`` coefficient.
    Degrees divisible by ``p`` are not recognised.
    """
    g = coefficients_in(f, field)
    n = g.degree
    if n < 1 or n % field.p == 0:
        return None
    lead = g.leading
    shift = -g.coeff(n - 1) / (lead * n)
    h = _shift(g, shift) * lead.inv()
    # h is monic with no x^(n-1) term
    if all(h.coeff(k) == 0 for k in range(1, n)):
        return Shape("monomial", n)
    if n < 3:
        return None
    a = -h.coeff(n - 2) / n
    if (h - dickson(n, a, field)).degree < 1:
        return Shape("dickson", n, a)
    return None


def tame_right_components(
    f: DensePolynomial,
) -> List[Tuple[int, DensePolynomial, DensePolynomial]]:
    """Every tame decomposition ``f = g(h)`` with ``1 < deg h < deg f``.

    :return: ``(deg h, g, h)`` triples, ascending in ``deg h``
    """
    n = f.degree
    p = f.ring.characteristic
    found: List[Tuple[int, DensePolynomial, DensePolynomial]] = []
    for d in divisors(n)[1:-1]:
        if p and (n // d) % p == 0:
            continue
        pair = decompose_tame(f, d)
        if pair is not None:
            found.append((d, *pair))
    return found


def _weil_degree(degree: int, p: int, cap: int) -> Optional[int]:
    k = 1
    while p**k < degree**4:
        k += 1
    return k if p**k <= cap else None


def classify_exceptional(
    f: DensePolynomial,
    p: int,
    k_max: int = DEFAULT_K_MAX,
    cap: int = DEFAULT_FIELD_CAP,
) -> ExceptionalityVerdict:
    """Best available verdict on ``f`` over GF(p).

    Linear polynomials and linear twists of monomials and Dickson polynomials
    are decided exactly; otherwise a Weil certificate is tried on the smallest
    GF(p^k) with ``p^k >= deg(f)^4`` before falling back to the heuristic.
    """
    prime_field = build_field(p)
    g = coefficients_in(f, prime_field)
    if g.degree < 1:
        return _certified(False, "constant")
    if g.degree == 1:
        return _certified(True, "linear")
    shape = indecomposable_shape(g, prime_field)
    if shape is not None and shape.kind == "monomial":
        return _certified(
            monomial_permutes(shape.degree, p), "monomial", m=shape.degree, q=p
        )
    if shape is not None and shape.parameter:
        return _certified(
            dickson_exceptional(shape.degree, p), "dickson", n=shape.degree, p=p
        )
    k = _weil_degree(g.degree, p, cap)
    if k is not None:
        return weil_certificate(g, build_field(p, k, cap), k_max)
    return heuristic_exceptional(g, p, k_max, cap)
