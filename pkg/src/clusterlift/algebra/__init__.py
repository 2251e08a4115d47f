"""Exact arithmetic: Laurent polynomials, gcds and rational functions."""

from clusterlift.algebra.gcd import poly_gcd
from clusterlift.algebra.laurent import LaurentPolynomial, divexact_poly, lp_arith, lp_min_exponent
from clusterlift.algebra.parse import parse_expression
from clusterlift.algebra.rational import RationalFunction, as_rf, coprime, rf_substitute

__all__ = [
    "LaurentPolynomial",
    "RationalFunction",
    "as_rf",
    "coprime",
    "divexact_poly",
    "lp_arith",
    "lp_min_exponent",
    "parse_expression",
    "poly_gcd",
    "rf_substitute",
]
