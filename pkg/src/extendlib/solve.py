"""Degreewise linear solve for extension problems with arbitrary (possibly dependent) forms."""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from exactpoly.linalg import Inconsistency, RationalMatrix, Vector, solve
from exactpoly.monomial import monomial_count
from exactpoly.polynomial import Polynomial
from extendlib.independent import verify_extension
from extendlib.problem import ExtensionProblem
from toruslin.restriction import free_monomials, normal_form_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Infeasible:
    """No extension of degree at most ``degree_bound`` exists.

    ``degree`` is the first degree whose linear system has no solution and
    ``certificate`` the RREF row of that system reading 0 = c.
    """

    degree: int
    degree_bound: int
    certificate: Optional[Vector] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return False


def degree_system(problem: ExtensionProblem, degree: int) -> tuple[RationalMatrix, Vector]:
    """Stacked normal-form equations for the degree-``degree`` part of the extension."""
    n = problem.ambient_dim
    rows = []
    rhs = []
    for constraint, space in zip(problem.constraints, problem.subspaces):
        matrix = normal_form_matrix(space, degree)
        target = constraint.target.graded_component(degree)
        rows.extend(matrix.rows)
        rhs.extend(target.coefficient(m) for m in free_monomials(space, degree))
    ncols = monomial_count(n, degree)
    return RationalMatrix(tuple(rows), ncols), tuple(rhs)


def extend_solve(problem: ExtensionProblem, degree_bound: int) -> Union[Polynomial, Infeasible]:
    """A polynomial of degree at most ``degree_bound`` with every prescribed restriction."""
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    n = problem.ambient_dim
    if not problem.constraints:
        return Polynomial.zero(n)

    top = max((c.target.degree for c in problem.constraints if not c.target.is_zero()), default=0)
    if top > degree_bound:
        return Infeasible(
            degree=top,
            degree_bound=degree_bound,
            reason=f"a target has a component of degree {top} above the bound",
        )

    result = Polynomial.zero(n)
    for degree in range(degree_bound + 1):
        matrix, rhs = degree_system(problem, degree)
        found = solve(matrix, rhs)
        if isinstance(found, Inconsistency):
            logger.info("extension infeasible in degree %d", degree)
            return Infeasible(
                degree=degree,
                degree_bound=degree_bound,
                certificate=found.row,
                reason=f"restriction equations in degree {degree} are inconsistent",
            )
        result = result + Polynomial.from_vector(n, degree, found)
    verify_extension(problem, result)
    return result
