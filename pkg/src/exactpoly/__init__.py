"""Exact rational arithmetic, sparse polynomials and rational linear algebra."""

from exactpoly.errors import AssignmentError, DimensionMismatchError, PolynomialSyntaxError
from exactpoly.linalg import (
    EchelonBasis,
    Inconsistency,
    RationalMatrix,
    RowEchelon,
    Vector,
    inverse,
    nullspace_basis,
    rank,
    rref,
    solve,
)
from exactpoly.linear_form import LinearForm
from exactpoly.monomial import Monomial, monomial_basis, monomial_count
from exactpoly.polynomial import (
    MINUS_INFINITY,
    Polynomial,
    graded_component,
    poly_arith,
    substitute_linear,
)
from exactpoly.rational import format_rational, to_rational
from exactpoly.text import format_polynomial, parse_polynomial

__all__ = [
    "AssignmentError",
    "DimensionMismatchError",
    "EchelonBasis",
    "Inconsistency",
    "LinearForm",
    "MINUS_INFINITY",
    "Monomial",
    "Polynomial",
    "PolynomialSyntaxError",
    "RationalMatrix",
    "RowEchelon",
    "Vector",
    "format_polynomial",
    "format_rational",
    "graded_component",
    "inverse",
    "monomial_basis",
    "monomial_count",
    "nullspace_basis",
    "parse_polynomial",
    "poly_arith",
    "rank",
    "rref",
    "solve",
    "substitute_linear",
    "to_rational",
]
