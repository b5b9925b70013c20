import random
from fractions import Fraction

import pytest

from cli.properties import random_polynomial
from exactpoly import (
    MINUS_INFINITY,
    EchelonBasis,
    Inconsistency,
    LinearForm,
    Polynomial,
    PolynomialSyntaxError,
    RationalMatrix,
    format_polynomial,
    inverse,
    monomial_basis,
    monomial_count,
    nullspace_basis,
    parse_polynomial,
    rank,
    rref,
    solve,
    to_rational,
)
from exactpoly.errors import DimensionMismatchError
from exactpoly.rational import to_vector


def u(i: int, n: int = 2) -> Polynomial:
    return Polynomial.variable(i - 1, n)


@pytest.mark.parametrize(
    "value, expected",
    [("3/4", Fraction(3, 4)), (5, Fraction(5)), ("-2", Fraction(-2)), (Fraction(1, 3), Fraction(1, 3))],
)
def test_to_rational_accepts_exact_values(value, expected):
    assert to_rational(value) == expected


@pytest.mark.parametrize("value", ["0.5", "1e3", "", True, 0.25])
def test_to_rational_rejects_inexact_values(value):
    with pytest.raises((TypeError, ValueError)):
        to_rational(value)


def test_monomial_basis_is_graded_lex_largest_first():
    assert monomial_basis(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomial_basis(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert monomial_count(3, 4) == len(monomial_basis(3, 4)) == 15


def test_zero_polynomial_has_minus_infinity_degree():
    zero = Polynomial.zero(2)
    assert zero.degree is MINUS_INFINITY
    assert MINUS_INFINITY < 0
    assert (u(1) - u(1)).is_zero()


def test_arithmetic_is_exact_and_canonical():
    p = (u(1) + u(2)) ** 2
    assert p == u(1) ** 2 + 2 * u(1) * u(2) + u(2) ** 2
    assert p.degree == 2
    half = p.scale("1/2")
    assert half.coefficient((1, 1)) == 1
    assert half.coefficient((2, 0)) == Fraction(1, 2)
    assert (p - p).is_zero()


def test_mixing_variable_counts_is_rejected():
    with pytest.raises(DimensionMismatchError):
        Polynomial.variable(0, 2) + Polynomial.variable(0, 3)


def test_parse_and_format_canonical_text():
    p = parse_polynomial("u3*(1/2) - u1^2*u2*3/2 + 2", 3)
    assert format_polynomial(p) == "-3/2*u1^2*u2 + 1/2*u3 + 2"
    assert parse_polynomial(format_polynomial(p), 3) == p
    assert format_polynomial(Polynomial.zero(2)) == "0"


@pytest.mark.parametrize("text", ["u3", "u1 +* u2", "x + 1", "u1 ** -1", "   ", "1.5*u1"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(text, 2)
    assert info.value.invariant == "polynomial-syntax"


def test_substitute_linear_and_zero_variables():
    p = u(1) * u(2) + u(2) ** 2
    swap = RationalMatrix.of([[0, 1], [1, 0]])
    assert p.substitute_linear(swap) == u(2) * u(1) + u(1) ** 2
    assert p.zero_variables([0]) == u(2) ** 2
    onto_line = RationalMatrix.of([[1], [1]])
    assert p.substitute_linear(onto_line) == Polynomial.monomial((2,), 2)


def test_evaluate():
    p = parse_polynomial("u1^2 - 3*u2 + 1/2", 2)
    assert p.evaluate([2, "1/3"]) == Fraction(7, 2)


def test_rref_and_nullspace_convention():
    matrix = RationalMatrix.of([[1, 2, 3], [2, 4, 7]])
    echelon = rref(matrix)
    assert echelon.pivots == (0, 2)
    assert echelon.free_columns() == (1,)
    assert nullspace_basis(matrix) == [(Fraction(-2), Fraction(1), Fraction(0))]
    assert rank(matrix) == 2


def test_solve_returns_solution_or_inconsistent_row():
    matrix = RationalMatrix.of([[1, 1], [1, -1]])
    assert solve(matrix, [2, 0]) == (Fraction(1), Fraction(1))
    dependent = RationalMatrix.of([[1, 1], [2, 2]])
    result = solve(dependent, [1, 3])
    assert isinstance(result, Inconsistency)
    assert all(x == 0 for x in result.row[:-1]) and result.row[-1] != 0


def test_inverse_round_trip():
    matrix = RationalMatrix.of([[2, 1], [1, 1]])
    assert inverse(matrix).matmul(matrix) == RationalMatrix.identity(2)
    with pytest.raises(ValueError):
        inverse(RationalMatrix.of([[1, 2], [2, 4]]))


def test_echelon_basis_membership():
    span = EchelonBasis(3)
    assert span.add(to_vector([1, 0, 1]))
    assert span.add(to_vector([0, 1, 1]))
    assert not span.add(to_vector([1, 1, 2]))
    assert to_vector([2, 3, 5]) in span
    assert to_vector([0, 0, 1]) not in span
    assert span.rank == 2


def test_linear_form_primitive_representative():
    form = LinearForm.of(["-1/2", "-1"])
    assert form.primitive() == (1, 2)
    assert form.to_polynomial() == parse_polynomial("-1/2*u1 - u2", 2)
    assert LinearForm.from_polynomial(form.to_polynomial()) == form


def test_random_products_match_sympy_parsing():
    rng = random.Random(11)
    for _ in range(25):
        a = Polynomial.from_dict(
            2, {m: rng.randint(-3, 3) for d in range(3) for m in monomial_basis(2, d)}
        )
        b = Polynomial.from_dict(
            2, {m: rng.randint(-3, 3) for d in range(2) for m in monomial_basis(2, d)}
        )
        text = f"({format_polynomial(a)})*({format_polynomial(b)})"
        assert parse_polynomial(text, 2) == a * b


def random_matrix(rng: random.Random, nrows: int, ncols: int) -> RationalMatrix:
    return RationalMatrix.of(
        [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(ncols)] for _ in range(nrows)],
        ncols,
    )


def test_ring_laws_and_linear_substitution_on_random_inputs():
    rng = random.Random(2024)
    for _ in range(200):
        p, q, r = (random_polynomial(rng, 2, 2) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        sub = random_matrix(rng, 2, rng.randint(1, 3))
        assert (p * q).substitute_linear(sub) == p.substitute_linear(sub) * q.substitute_linear(sub)


def test_graded_components_reassemble():
    rng = random.Random(5)
    for _ in range(20):
        p = random_polynomial(rng, 3, 3)
        total = Polynomial.zero(3)
        for d in range(4):
            total = total + p.graded_component(d)
        assert total == p
    assert parse_polynomial("1 + u1 + u1*u2", 2).graded_component(1) == u(1)


def test_rref_is_idempotent_and_nullspace_is_exact():
    rng = random.Random(9)
    for _ in range(30):
        matrix = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        once = rref(matrix).matrix
        assert rref(once).matrix == once
        kernel = nullspace_basis(matrix)
        assert len(kernel) == matrix.ncols - rank(matrix)
        for vector in kernel:
            assert all(x == 0 for x in matrix.apply(vector))
