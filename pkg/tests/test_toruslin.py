import random
from fractions import Fraction

import pytest

from cli.properties import random_polynomial
from exactpoly import LinearForm, Polynomial, parse_polynomial
from exactpoly.errors import DimensionMismatchError
from exactpoly.monomial import monomial_count
from toruslin import (
    Subalgebra,
    ZeroWeightError,
    classes_independent,
    collinearity_classes,
    contains,
    free_monomials,
    intersect,
    normal_form,
    normal_form_matrix,
    restrict,
    restricts_to_zero,
    span_sum,
)


def poly(text: str, n: int = 2) -> Polynomial:
    return parse_polynomial(text, n)


def test_span_and_kernel_give_the_same_canonical_subalgebra():
    diagonal = Subalgebra.from_span([[2, 2]], 2)
    assert diagonal == Subalgebra.from_kernel([[1, -1]], 2)
    assert diagonal.basis.rows == ((Fraction(1), Fraction(1)),)
    assert diagonal.dim == 1 and diagonal.codim == 1


def test_vanishing_ideal_and_free_coordinates():
    line = Subalgebra.from_kernel([[1, 0]], 2)
    ideal = line.vanishing_ideal
    assert ideal.pivots == (0,)
    assert ideal.linear_forms() == [LinearForm.of([1, 0])]
    assert line.free_coordinates == (1,)
    assert len(Subalgebra.full(3).vanishing_ideal) == 0


def test_dependent_and_zero_forms_in_a_kernel():
    h = Subalgebra.from_kernel([[1, 1, 0], [2, 2, 0], [0, 0, 0]], 3)
    assert h.dim == 2


def test_intersection_sum_and_containment():
    a = Subalgebra.from_span([[1, 0, 0], [0, 1, 0]], 3)
    b = Subalgebra.from_span([[0, 1, 0], [0, 0, 1]], 3)
    meet = intersect(a, b)
    assert meet == Subalgebra.from_span([[0, 1, 0]], 3)
    assert span_sum(a, b).is_full()
    assert contains(a, meet) and contains(b, meet)
    assert not contains(meet, a)
    assert contains(a, Subalgebra.zero(3))


def test_mismatched_ambients_are_rejected():
    with pytest.raises(DimensionMismatchError):
        intersect(Subalgebra.full(2), Subalgebra.full(3))


@pytest.mark.parametrize(
    "text, h, expected",
    [
        ("u1 + u2", Subalgebra.from_kernel([[1, 0]], 2), "u2"),
        ("u1", Subalgebra.from_span([[1, 1]], 2), "u2"),
        ("u1^2 - u2^2", Subalgebra.from_span([[1, 1]], 2), "0"),
        ("3*u1*u2 + 1", Subalgebra.zero(2), "1"),
        ("u1*u2", Subalgebra.full(2), "u1*u2"),
    ],
)
def test_normal_form(text, h, expected):
    assert normal_form(poly(text), h) == poly(expected)


def test_normal_form_agrees_with_evaluation_on_the_subalgebra():
    h = Subalgebra.from_span([[1, 2, -1]], 3)
    p = poly("u1^2*u3 - 4*u2 + u1*u2*u3", 3)
    reduced = normal_form(p, h)
    for t in (1, -2, Fraction(1, 3)):
        point = [t, 2 * t, -t]
        assert reduced.evaluate(point) == p.evaluate(point)


def test_restrict_uses_basis_coordinates():
    h = Subalgebra.from_span([[1, 1]], 2)
    assert restrict(poly("u1*u2 + u1"), h) == parse_polynomial("u1^2 + u1", 1)


def test_restricts_to_zero_detects_divisibility():
    line = Subalgebra.from_kernel([[0, 1]], 2)
    assert restricts_to_zero(poly("u2*u1^3 - 2*u2"), line)
    assert not restricts_to_zero(poly("u1"), line)


def test_normal_form_matrix_shape_and_action():
    h = Subalgebra.from_span([[1, 1]], 2)
    matrix = normal_form_matrix(h, 2)
    assert matrix.shape == (len(free_monomials(h, 2)), monomial_count(2, 2))
    p = poly("u1^2 + 3*u1*u2")
    image = matrix.apply(p.to_vector(2))
    assert image == tuple(normal_form(p, h).coefficient(m) for m in free_monomials(h, 2))


def test_collinearity_classes_merge_scalar_multiples():
    weights = [LinearForm.of(w) for w in ([2, 0], [-1, 0], [0, 3], [1, 1])]
    classes = collinearity_classes(weights)
    assert [c.representative for c in classes] == [(0, 1), (1, 0), (1, 1)]
    assert [c.multiplicity for c in classes] == [1, 2, 1]
    assert not classes_independent(classes)
    assert classes_independent(classes[:2])


def test_zero_weight_is_rejected():
    with pytest.raises(ZeroWeightError):
        collinearity_classes([LinearForm.of([0, 0])])


def random_rows(rng: random.Random, count: int, n: int) -> list[list[int]]:
    return [[rng.randint(-2, 2) for _ in range(n)] for _ in range(count)]


def combinations_of(rng: random.Random, rows, count: int, n: int) -> list[list[Fraction]]:
    return [
        [sum((Fraction(c) * row[j] for c, row in zip(coeffs, rows)), Fraction(0)) for j in range(n)]
        for coeffs in random_rows(rng, count, len(rows))
    ]


def test_equal_spans_have_equal_canonical_bases():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 4)
        h = Subalgebra.from_span(random_rows(rng, rng.randint(0, n), n), n)
        if h.is_zero():
            continue
        regenerated = combinations_of(rng, h.basis.rows, h.dim + 2, n)
        other = Subalgebra.from_span(regenerated, n)
        assert contains(h, other)
        if other.dim == h.dim:
            assert other == h and other.basis.rows == h.basis.rows
        assert Subalgebra.from_kernel(h.vanishing_ideal.linear_forms(), n) == h
        assert len(h.vanishing_ideal) == h.codim


def test_normal_form_is_multiplicative_and_idempotent():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(1, 3)
        h = Subalgebra.from_span(random_rows(rng, rng.randint(0, n), n), n)
        p, q = random_polynomial(rng, n, 2), random_polynomial(rng, n, 2)
        reduced = normal_form(p, h)
        assert normal_form(reduced, h) == reduced
        assert normal_form(p * q, h) == reduced * normal_form(q, h)
        assert normal_form(p + q, h) == reduced + normal_form(q, h)


def test_containment_makes_meet_and_sum_trivial():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 4)
        a = Subalgebra.from_span(random_rows(rng, rng.randint(0, n), n), n)
        b = Subalgebra.from_span(combinations_of(rng, a.basis.rows, rng.randint(0, n), n), n) if a.dim else a
        assert contains(a, b)
        assert intersect(a, b) == b
        assert span_sum(a, b) == a


def test_collinearity_classes_ignore_scaling_and_order():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 3)
        weights = [
            LinearForm.of(row) for row in random_rows(rng, rng.randint(1, 5), n) if any(row)
        ]
        if not weights:
            continue
        moved = [
            w.scale(Fraction(rng.choice([-3, -1, 1, 2]), rng.randint(1, 3))) for w in weights
        ]
        rng.shuffle(moved)
        assert collinearity_classes(moved) == collinearity_classes(weights)
        assert sum(c.multiplicity for c in collinearity_classes(weights)) == len(weights)
