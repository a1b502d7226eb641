"""Exact arithmetic for Lucas polynomials and their atomic factorization."""
from .atoms import (
    ConsistencyError,
    NotPolynomial,
    QuotientSpec,
    cyclotomic,
    divisors,
    is_polynomial,
    lucas_atom,
    quotient_poly,
    totient,
)
from .coxeter import CoxeterGroup, fuss_catalan, fuss_narayana, narayana, parse_group, rational_catalan
from .gamma import GammaVector, gamma_expand, gamma_inverse, gamma_map, is_palindromic
from .lucas import lucas, tilings
from .poly import IntPoly2, NotDivisible, ParseError, exact_divide, parse, to_canonical_string

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CoxeterGroup",
    "GammaVector",
    "IntPoly2",
    "NotDivisible",
    "NotPolynomial",
    "ParseError",
    "QuotientSpec",
    "cyclotomic",
    "divisors",
    "exact_divide",
    "fuss_catalan",
    "fuss_narayana",
    "gamma_expand",
    "gamma_inverse",
    "gamma_map",
    "is_palindromic",
    "is_polynomial",
    "lucas",
    "lucas_atom",
    "narayana",
    "parse",
    "parse_group",
    "quotient_poly",
    "rational_catalan",
    "tilings",
    "to_canonical_string",
    "totient",
]
