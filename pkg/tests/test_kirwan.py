from fractions import Fraction

import pytest

from cli.schema import load_document
from config.storage import CORPUS_DIR
from exactpoly import Polynomial, parse_polynomial
from exactpoly.linalg import EchelonBasis
from exactpoly.monomial import monomial_basis, monomial_count
from gkm_core import AssignmentTuple, module_report
from gkm_core.graded import graded_bases
from kirwan import (
    CircleError,
    MissingMomentError,
    MissingWeightsError,
    MomentData,
    RegularityError,
    check_surjectivity_hypothesis,
    compare_with_reduced,
    kernel_generators,
    moment_data,
    quotient_report,
)
from toruslin import Subalgebra


def document(name: str):
    return load_document(CORPUS_DIR / name)


@pytest.fixture(scope="module")
def triple_sphere():
    return document("triple_sphere.json")


@pytest.fixture(scope="module")
def triple_sphere_quotient(triple_sphere):
    moment = moment_data(triple_sphere.body, triple_sphere.circle)
    return quotient_report(triple_sphere.body, moment, 4)


def test_moment_vectors_pair_with_the_circle(triple_sphere):
    moment = moment_data(triple_sphere.body, triple_sphere.circle)
    assert moment.values == tuple(Fraction(v) for v in (-3, -1, -1, -1, 1, 1, 1, 3))
    assert moment.positive == (4, 5, 6, 7)
    assert moment.negative == (0, 1, 2, 3)


def test_triple_sphere_kernel_generators(triple_sphere_quotient):
    kernel = triple_sphere_quotient.kernel
    assert [g.degree for g in kernel.positive] == [1, 2, 2, 2]
    assert [g.degree for g in kernel.negative] == [1, 2, 2, 2]
    assert kernel.direct


def test_triple_sphere_quotient(triple_sphere_quotient):
    assert triple_sphere_quotient.dims == (1, 4, 4, 4, 4)
    assert triple_sphere_quotient.generator_degrees == (0, 1, 1, 1)
    assert len(triple_sphere_quotient.subring_forms) == 1
    assert triple_sphere_quotient.hypothesis_applies
    assert triple_sphere_quotient.caveat is None


def test_quotient_matches_the_reduced_presentation(triple_sphere_quotient):
    comparison = compare_with_reduced(triple_sphere_quotient, document("triple_sphere_reduced.json").body)
    assert comparison.equal
    assert comparison.reduced_dims == (1, 4, 4, 4, 4)
    assert comparison.mismatches() == ()


def test_rotation_sphere_reduces_to_a_point():
    sphere = document("rotation_sphere.json").body
    moment = moment_data(sphere)
    kernel = kernel_generators(sphere, moment, 3)
    assert [g.degree for g in kernel.positive] == [1]
    assert [g.degree for g in kernel.negative] == [1]
    report = quotient_report(sphere, moment, 3)
    assert report.dims == (1, 0, 0, 0)
    assert report.generator_degrees == (0,)


def test_projective_space_hypothesis_fails_only_at_one_vertex():
    report = check_surjectivity_hypothesis(document("projective_three_space.json").body)
    assert not report.ok
    assert report.failing == ("z0",)
    assert {c.name: c.independent for c in report.components} == {
        "z0": False,
        "z1": True,
        "z2": True,
        "z3": True,
    }


def test_missing_weights_are_reported():
    with pytest.raises(MissingWeightsError):
        check_surjectivity_hypothesis(document("two_points_line.json").body)


def test_quotient_without_weights_carries_a_caveat():
    body = document("two_points_line.json").body
    report = quotient_report(body, MomentData.from_scalars([1, -1], Subalgebra.full(1)), 2)
    assert report.hypothesis is None
    assert "no weights" in report.caveat


def test_level_shifts_the_moment_values():
    moment = MomentData.from_scalars([1, -1], Subalgebra.full(1), level="1/2")
    assert moment.values == (Fraction(1, 2), Fraction(-3, 2))
    assert moment.level == Fraction(1, 2)


def test_level_through_a_component_is_not_regular():
    with pytest.raises(RegularityError) as info:
        MomentData.from_scalars([1, 0], Subalgebra.full(1))
    assert info.value.invariant == "regular-level"


def test_circle_must_be_one_dimensional():
    with pytest.raises(CircleError):
        MomentData.from_scalars([1, -1], Subalgebra.full(2))
    with pytest.raises(CircleError):
        moment_data(document("projective_three_space.json").body)


def test_components_without_moments():
    with pytest.raises(MissingMomentError) as info:
        moment_data(document("triple_sphere_reduced.json").body)
    assert info.value.invariant == "moment-present"


def tuple_of(text: str) -> AssignmentTuple:
    return AssignmentTuple.of([parse_polynomial(part, 2) for part in text.split(";")])


B_GENERATORS = [
    "u2; 0; 0; u2; 0; 0; 0; 0",
    "0; u1*u2; 0; 0; 0; 0; 0; 0",
    "0; 0; u1*u2; 0; 0; 0; 0; 0",
    "0; 0; 0; u1*u2; 0; 0; 0; 0",
]
A_UPPER = [
    "0; 0; 0; 0; u2; 0; 0; u2",
    "0; 0; 0; 0; 0; u1*u2; 0; 0",
    "0; 0; 0; 0; 0; 0; u1*u2; 0",
    "0; 0; 0; 0; 0; 0; 0; u1*u2",
]


def module_span(generators: list[AssignmentTuple], degree: int) -> EchelonBasis:
    """Span of all monomial multiples of the generators landing in the given degree."""
    span = EchelonBasis(8 * monomial_count(2, degree))
    for g in generators:
        shift = degree - max(p.degree for p in g.polys if not p.is_zero())
        if shift < 0:
            continue
        for m in monomial_basis(2, shift):
            span.add(g.times(Polynomial.from_dict(2, {m: 1})).to_vector(degree))
    return span


@pytest.fixture(scope="module")
def triple_sphere_kernels(triple_sphere):
    moment = moment_data(triple_sphere.body, triple_sphere.circle)
    positive = graded_bases(triple_sphere.body, 4, vanishing=moment.positive)
    negative = graded_bases(triple_sphere.body, 4, vanishing=moment.negative)
    return positive, negative


def test_positive_kernel_is_the_module_of_the_b_generators(triple_sphere_kernels):
    positive, _ = triple_sphere_kernels
    generators = [tuple_of(text) for text in B_GENERATORS]
    for degree in range(5):
        kernel = [e.to_vector(degree) for e in positive[degree]]
        span = module_span(generators, degree)
        assert span.rank == len(kernel)
        assert all(v in span for v in kernel)


def test_negative_kernel_is_the_module_of_the_upper_generators(triple_sphere_kernels):
    _, negative = triple_sphere_kernels
    generators = [tuple_of(text) for text in A_UPPER]
    assert [len(negative[d]) for d in range(5)] == [0, 1, 5, 9, 13]
    for degree in range(5):
        span = module_span(generators, degree)
        assert span.rank == len(negative[degree])
        assert all(e.to_vector(degree) in span for e in negative[degree])


def test_kernels_are_closed_under_multiplication(triple_sphere_kernels):
    ring = [parse_polynomial("u1", 2), parse_polynomial("u2", 2)]
    for bases in triple_sphere_kernels:
        for degree in range(4):
            above = EchelonBasis(8 * monomial_count(2, degree + 1))
            above.extend(e.to_vector(degree + 1) for e in bases[degree + 1])
            for element in bases[degree]:
                for factor in ring:
                    assert element.times(factor).to_vector(degree + 1) in above


def test_quotient_dims_subtract_both_kernels(triple_sphere, triple_sphere_quotient):
    dims = module_report(triple_sphere.body, 4).dims
    kernel = triple_sphere_quotient.kernel
    assert triple_sphere_quotient.dims == tuple(
        dims[d] - kernel.positive_dims[d] - kernel.negative_dims[d] for d in range(5)
    )
    assert kernel.positive_dims == kernel.negative_dims == (0, 1, 5, 9, 13)
