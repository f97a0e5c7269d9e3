"""Generalized equidistant Chebyshev polynomials and Alexander invariants of torus knots."""

from .alexander import TorusParams, torus_alexander, torus_knot_n2, torus_link_n2
from .bridge import chebyshev_from_alexander, substitute_x, verify_t1h, verify_t2h
from .chebgen import (
    ChebParams,
    cheb_closed_form,
    cheb_recurrence,
    chebyshev,
    equidistant_coefficients,
    linear_combination_form,
    second_kind_basis,
    seed_pair,
)
from .laurent import LaurentPoly
from .ratpoly import Polynomial, Rational
from .report import VerificationReport

__all__ = [
    "ChebParams",
    "LaurentPoly",
    "Polynomial",
    "Rational",
    "TorusParams",
    "VerificationReport",
    "cheb_closed_form",
    "cheb_recurrence",
    "chebyshev",
    "chebyshev_from_alexander",
    "equidistant_coefficients",
    "linear_combination_form",
    "second_kind_basis",
    "seed_pair",
    "substitute_x",
    "torus_alexander",
    "torus_knot_n2",
    "torus_link_n2",
    "verify_t1h",
    "verify_t2h",
]
