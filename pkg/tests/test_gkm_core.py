import pytest

from cli.schema import load_document
from config.storage import CORPUS_DIR
from exactpoly import EchelonBasis, Polynomial, monomial_basis, monomial_count, parse_polynomial
from gkm_core import (
    FREE,
    NOT_FREE,
    UNDETERMINED,
    AssignmentTuple,
    Component,
    GkmPresentation,
    LengthMismatchError,
    Piece,
    PresentationError,
    free_module_dims,
    freeness_verdict,
    graded_basis,
    is_member,
    minimal_generators,
    module_report,
)
from toruslin import Subalgebra


def presentation(name: str) -> GkmPresentation:
    return load_document(CORPUS_DIR / name).body


def tuple_of(text: str, nvars: int) -> AssignmentTuple:
    return AssignmentTuple.of([parse_polynomial(part, nvars) for part in text.split(";")])


@pytest.fixture(scope="module")
def triple_sphere() -> GkmPresentation:
    return presentation("triple_sphere.json")


def test_triple_sphere_is_free_on_eight_generators(triple_sphere):
    report = module_report(triple_sphere, 4)
    assert report.dims == (1, 6, 14, 22, 30)
    assert report.generator_degrees == (0, 1, 1, 1, 1, 2, 2, 2)
    assert report.verdict == FREE
    assert report.free_dims == report.dims
    assert report.hilbert_table()[2] == {"degree": 2, "dim": 14, "free_on_generators": 14}


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0; u2; 0; 0; 0; u2; 0; 0", True),
        ("0; 0; 0; u1; 0; u1; u1; u1", True),
        ("0; 0; 0; 0; 0; u1*u2; 0; 0", True),
        ("u2; 0; 0; u2; 0; 0; 0; 0", True),
        ("u1; 0; 0; 0; 0; 0; 0; 0", False),
    ],
)
def test_triple_sphere_membership(triple_sphere, text, expected):
    result = is_member(triple_sphere, tuple_of(text, 2))
    assert result.ok is expected
    assert bool(result) is expected


def test_membership_failure_names_piece_and_residue(triple_sphere):
    result = is_member(triple_sphere, tuple_of("u1; 0; 0; 0; 0; 0; 0; 0", 2))
    # u1 vanishes on ker u1, so only the piece over ker u2 complains
    assert [(f.piece, f.first, f.second) for f in result.failures] == [(4, 0, 1), (4, 0, 2), (4, 0, 4)]
    assert all(f.residue == parse_polynomial("u1", 2) for f in result.failures)


def test_tuple_length_is_checked(triple_sphere):
    with pytest.raises(LengthMismatchError) as info:
        is_member(triple_sphere, tuple_of("0; 0", 2))
    assert info.value.invariant == "tuple-length"


def test_every_basis_element_is_a_member(triple_sphere):
    for degree in range(3):
        for element in graded_basis(triple_sphere, degree):
            assert is_member(triple_sphere, element)
            assert element.degree() == degree


def test_two_points_on_a_line():
    two_points = presentation("two_points_line.json")
    assert [len(graded_basis(two_points, d)) for d in range(6)] == [1, 2, 2, 2, 2, 2]
    generators = minimal_generators(two_points, 3)
    assert [g.degree for g in generators] == [0, 1]
    assert module_report(two_points, 3).verdict == FREE


def test_generalized_suspension_is_not_free():
    suspension = presentation("suspension.json")
    report = module_report(suspension, 3)
    assert report.dims == (1, 4, 6, 8)
    assert report.generator_degrees == (0, 1, 1)
    assert report.verdict == NOT_FREE


def test_presentation_without_pieces_is_a_free_product():
    p = GkmPresentation(2, (Component("a"), Component("b")))
    report = module_report(p, 2)
    assert report.dims == (2, 4, 6)
    assert report.generator_degrees == (0, 0)


def test_ordinary_pieces_must_be_hyperplanes():
    with pytest.raises(PresentationError) as info:
        GkmPresentation(2, (Component("a"), Component("b")), (Piece(Subalgebra.zero(2), (0, 1)),))
    assert info.value.invariant == "piece-codimension"
    generalized = GkmPresentation(
        2, (Component("a"), Component("b")), (Piece(Subalgebra.zero(2), (0, 1)),), generalized=True
    )
    assert generalized.n == 2


@pytest.mark.parametrize(
    "components, pieces, invariant",
    [
        ((), (), "components-nonempty"),
        ((Component("a"), Component("a")), (), "component-names-unique"),
        ((Component("a"), Component("b")), (Piece(Subalgebra.from_kernel([[1, 0]], 2), (0,)),), "piece-members-size"),
        ((Component("a"), Component("b")), (Piece(Subalgebra.from_kernel([[1, 0]], 2), (0, 2)),), "piece-members-valid"),
    ],
)
def test_presentation_structural_rules(components, pieces, invariant):
    with pytest.raises(PresentationError) as info:
        GkmPresentation(2, components, pieces)
    assert info.value.invariant == invariant


def test_free_module_dims_and_verdicts():
    assert free_module_dims(2, [0, 1, 1], 3) == (1, 4, 7, 10)
    assert freeness_verdict([0, 1], 2, 3)[0] == FREE
    assert freeness_verdict([0, 1, 1], 2, 3) == (NOT_FREE, None)
    verdict, caveat = freeness_verdict([0, 2], 2, 3)
    assert verdict == UNDETERMINED and "raise the bound" in caveat


def test_assignment_tuple_vector_round_trip():
    element = tuple_of("u1^2; u1*u2 - u2^2", 2)
    vector = element.to_vector(2)
    assert AssignmentTuple.from_vector(2, 2, 2, vector) == element
    assert element.times(Polynomial.variable(0, 2)).degree() == 3


@pytest.mark.parametrize(
    "name, bound", [("triple_sphere.json", 3), ("suspension.json", 3), ("two_points_line.json", 4)]
)
def test_more_pieces_never_enlarge_the_algebra(name, bound):
    p = presentation(name)
    previous = None
    for count in range(len(p.pieces) + 1):
        partial = GkmPresentation(p.torus_dim, p.components, p.pieces[:count], generalized=True)
        dims = module_report(partial, bound).dims
        if previous is not None:
            assert all(now <= before for now, before in zip(dims, previous))
        previous = dims
    assert previous == module_report(p, bound).dims


@pytest.mark.parametrize(
    "name, bound", [("triple_sphere.json", 4), ("suspension.json", 3), ("three_points_line.json", 4)]
)
def test_minimal_generators_span_every_degree(name, bound):
    p = presentation(name)
    generators = minimal_generators(p, bound)
    for degree in range(bound + 1):
        span = EchelonBasis(p.n * monomial_count(p.torus_dim, degree))
        for g in generators:
            if g.degree > degree:
                continue
            for m in monomial_basis(p.torus_dim, degree - g.degree):
                span.add(g.element.times(Polynomial.from_dict(p.torus_dim, {m: 1})).to_vector(degree))
        basis = graded_basis(p, degree)
        assert span.rank == len(basis)
        assert all(e.to_vector(degree) in span for e in basis)


def test_default_bound_widens_until_the_verdict_settles():
    two_points = presentation("two_points_line.json")
    assert module_report(two_points, 2).verdict == UNDETERMINED
    report = module_report(two_points)
    assert report.verdict == FREE
    assert report.degree_bound == 3
    assert module_report(presentation("triple_sphere.json")).degree_bound == 8
