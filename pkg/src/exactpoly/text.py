"""Canonical text form of polynomials: ``3/2*u1^2*u2 - u3``.

Parsing goes through sympy so any term order, spacing, parentheses and
products are accepted; printing is always the canonical graded-lex form.
"""

import re
from fractions import Fraction
from tokenize import TokenError

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from exactpoly.errors import PolynomialSyntaxError
from exactpoly.polynomial import Polynomial
from exactpoly.rational import format_rational

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_ALLOWED = re.compile(r"^[0-9u+\-*/^()\s]*$")


def variable_names(nvars: int) -> list[str]:
    return [f"u{i + 1}" for i in range(nvars)]


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse polynomial text in the variables u1..u{nvars}."""
    if not isinstance(text, str):
        raise PolynomialSyntaxError(f"polynomial must be given as text, got {text!r}")
    if not text.strip():
        raise PolynomialSyntaxError("empty polynomial text")
    if not _ALLOWED.match(text):
        raise PolynomialSyntaxError(
            f"unexpected character in {text!r}; use u1..u{nvars}, integers, + - * / ^ and parentheses"
        )
    symbols = tuple(sp.symbols(variable_names(nvars))) if nvars else ()
    local_dict = {str(s): s for s in symbols}
    try:
        expr = parse_expr(
            text, local_dict=local_dict, transformations=_TRANSFORMATIONS, evaluate=True
        )
    except (sp.SympifyError, SyntaxError, TokenError, TypeError, ValueError) as exc:
        raise PolynomialSyntaxError(f"cannot parse {text!r}: {exc}") from exc

    unknown = sorted(str(s) for s in expr.free_symbols if s not in symbols)
    if unknown:
        raise PolynomialSyntaxError(
            f"unknown variables {', '.join(unknown)} in {text!r} (ambient has {nvars})"
        )

    if not symbols:
        if not expr.is_Rational:
            raise PolynomialSyntaxError(f"{text!r} is not a rational constant")
        return Polynomial.constant(Fraction(int(expr.p), int(expr.q)), 0)

    try:
        poly = sp.Poly(expr, *symbols, domain=sp.QQ)
    except BasePolynomialError as exc:
        raise PolynomialSyntaxError(f"{text!r} is not a polynomial: {exc}") from exc

    coefficients = {}
    for monomial, coefficient in poly.terms():
        rational = sp.Rational(coefficient)
        coefficients[tuple(int(e) for e in monomial)] = Fraction(int(rational.p), int(rational.q))
    return Polynomial.from_dict(nvars, coefficients)


def _format_monomial(monomial: tuple[int, ...]) -> str:
    factors = []
    for index, exponent in enumerate(monomial):
        if exponent == 1:
            factors.append(f"u{index + 1}")
        elif exponent > 1:
            factors.append(f"u{index + 1}^{exponent}")
    return "*".join(factors)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for position, (monomial, coefficient) in enumerate(p.terms):
        magnitude = abs(coefficient)
        body = _format_monomial(monomial)
        if not body:
            term = format_rational(magnitude)
        elif magnitude == 1:
            term = body
        else:
            term = f"{format_rational(magnitude)}*{body}"
        if position == 0:
            pieces.append(f"-{term}" if coefficient < 0 else term)
        else:
            pieces.append(f" - {term}" if coefficient < 0 else f" + {term}")
    return "".join(pieces)
