import pytest

from cli.properties import extension_suite
from cli.schema import load_document
from config.storage import CORPUS_DIR
from exactpoly import LinearForm, Polynomial, parse_polynomial
from exactpoly.linalg import rank
from extendlib import (
    DependentFormsError,
    ExtensionProblem,
    ExtensionProblemError,
    IncompatibleTargetsError,
    Infeasible,
    compatibility_check,
    dual_basis_completion,
    extend_independent,
    extend_solve,
    first_failure,
)


def p(text: str, n: int = 2) -> Polynomial:
    return parse_polynomial(text, n)


def axes(constraints) -> ExtensionProblem:
    return ExtensionProblem.build(2, [LinearForm.of([1, 0]), LinearForm.of([0, 1])], constraints)


def test_three_lines_have_no_linear_extension():
    problem = load_document(CORPUS_DIR / "non_surjective_extension.json").body
    assert compatibility_check(problem).ok
    for bound in (1, 3):
        result = extend_solve(problem, bound)
        assert isinstance(result, Infeasible)
        assert result.degree == 1
        assert not result
        assert all(x == 0 for x in result.certificate[:-1]) and result.certificate[-1] != 0


def test_dependent_forms_are_refused_by_the_assembly():
    problem = load_document(CORPUS_DIR / "non_surjective_extension.json").body
    with pytest.raises(DependentFormsError) as info:
        extend_independent(problem)
    assert info.value.invariant == "forms-independent"


def test_coordinate_axes_with_mixed_degrees():
    problem = load_document(CORPUS_DIR / "coordinate_extension.json").body
    witness = extend_independent(problem)
    assert first_failure(problem, witness) is None
    assert extend_solve(problem, 3) == p("u1^3 + u2^2")


def test_bound_below_target_degree_is_infeasible():
    problem = axes([([0], p("u2^3"))])
    result = extend_solve(problem, 2)
    assert isinstance(result, Infeasible)
    assert result.degree == 3 and result.certificate is None


def test_incompatible_targets_name_the_pair():
    problem = axes([([0], p("1")), ([1], p("0"))])
    check = compatibility_check(problem)
    assert not check.ok
    assert [(f.first, f.second) for f in check.failures] == [(0, 1)]
    with pytest.raises(IncompatibleTargetsError) as info:
        extend_independent(problem)
    assert info.value.pairs == ((1, 2),)


def test_no_constraints_extend_by_zero():
    problem = axes([])
    assert extend_independent(problem).is_zero()
    assert extend_solve(problem, 2).is_zero()


def test_targets_are_stored_as_normal_forms():
    problem = axes([([0], p("u1*u2 + u2"))])
    assert problem.constraints[0].target == p("u2")


@pytest.mark.parametrize(
    "constraints, invariant",
    [
        ([([], p("0"))], "index-set-nonempty"),
        ([([2], p("0"))], "index-set-valid"),
        ([([0], p("0")), ([0], p("u2"))], "index-sets-distinct"),
        ([([0], parse_polynomial("u1", 3))], "target-nvars"),
    ],
)
def test_malformed_problems(constraints, invariant):
    with pytest.raises(ExtensionProblemError) as info:
        axes(constraints)
    assert info.value.invariant == invariant


def test_dual_basis_completion_is_invertible():
    problem = ExtensionProblem.build(3, [LinearForm.of([0, 1, 1])], [])
    basis = dual_basis_completion(problem)
    assert basis.rows[0] == LinearForm.of([0, 1, 1]).coeffs
    assert rank(basis) == 3


def test_random_independent_problems_extend():
    results = extension_suite(seed=5, samples=200)
    assert len(results) == 200
    assert all(r.ok for r in results), [r.detail for r in results if not r.ok]
