"""Exact polynomial arithmetic: dense, Laurent, Dickson and decomposition."""

from .binomial import base_digits, binom_mod_p, binomial
from .coefficients import (
    b_squared_series,
    build_B,
    closed_form_coeff,
    rational_in,
    reduced_coeff,
    x_plus_inverse,
)
from .decompose import decompose_tame, right_component
from .dense import (
    DensePolynomial,
    PolynomialRing,
    compose,
    difference_polynomial,
    is_odd,
    poly_add,
    poly_binomial,
    poly_divmod,
    poly_eval,
    poly_mul,
    poly_scale,
    poly_sub,
    reflect,
    ring_of,
    shifted_difference,
)
from .dickson import dickson
from .laurent import LaurentPolynomial, laurent_compose, laurent_substitute_x_plus_ainvx

__all__ = [
    "DensePolynomial",
    "LaurentPolynomial",
    "PolynomialRing",
    "b_squared_series",
    "base_digits",
    "binom_mod_p",
    "binomial",
    "build_B",
    "closed_form_coeff",
    "compose",
    "decompose_tame",
    "dickson",
    "difference_polynomial",
    "is_odd",
    "laurent_compose",
    "laurent_substitute_x_plus_ainvx",
    "poly_add",
    "poly_binomial",
    "poly_divmod",
    "poly_eval",
    "poly_mul",
    "poly_scale",
    "poly_sub",
    "rational_in",
    "reduced_coeff",
    "reflect",
    "right_component",
    "ring_of",
    "shifted_difference",
    "x_plus_inverse",
]
