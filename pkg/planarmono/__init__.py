"""Top-level package for planarmono."""

from importlib import metadata

try:
    planarmono_metadata = metadata.metadata(__package__)
    __author__ = planarmono_metadata["Author"]
    __version__ = planarmono_metadata["Version"]
except metadata.PackageNotFoundError:
    __author__ = "unknown"
    __version__ = "unknown"


from .exceptional import (
    ExceptionalityVerdict,
    classify_exceptional,
    dickson_exceptional,
    heuristic_exceptional,
    is_bijection,
    monomial_permutes,
    weil_certificate,
)
from .formats import JSONL, SCAN_CSV, load_reports
from .geometry import (
    PointSet,
    ProjectivePoint,
    collinear,
    is_hyperoval,
    monomial_point_set,
    sb_coefficient_scan,
    scan_hyperoval,
    segre_bartocci_poly,
    slope_polynomial,
)
from .gf import FieldElement, FieldSpec, build_field, embed, enumerate_field
from .planar import (
    ExponentClass,
    FamilyTag,
    canonicalize,
    check_planar_monomial,
    corollary_family,
    family_tag,
    is_planar_monomial,
    search_planar,
)
from .runner import Runner
from .verifiers import Verifier

__all__ = [
    "ExceptionalityVerdict",
    "ExponentClass",
    "FamilyTag",
    "FieldElement",
    "FieldSpec",
    "JSONL",
    "PointSet",
    "ProjectivePoint",
    "Runner",
    "SCAN_CSV",
    "Verifier",
    "build_field",
    "canonicalize",
    "check_planar_monomial",
    "classify_exceptional",
    "collinear",
    "corollary_family",
    "dickson_exceptional",
    "embed",
    "enumerate_field",
    "family_tag",
    "heuristic_exceptional",
    "is_bijection",
    "is_hyperoval",
    "is_planar_monomial",
    "load_reports",
    "monomial_permutes",
    "monomial_point_set",
    "sb_coefficient_scan",
    "scan_hyperoval",
    "search_planar",
    "segre_bartocci_poly",
    "slope_polynomial",
    "weil_certificate",
]
