"""Extension of compatible restrictions from kernel intersections of independent forms.

In coordinates x dual to a completion of the forms to a basis, every kernel
intersection is a coordinate subspace {x_J = 0}. For each J a polynomial g(J)
is built with the right restrictions below it: either a prescribed target
(when {x_J = 0} lies in some constraint subspace) or the inclusion-exclusion
assembly of the g's one level deeper.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from config import settings
from exactpoly.linalg import EchelonBasis, RationalMatrix, inverse, rank, unit_vector
from exactpoly.polynomial import Polynomial
from extendlib.errors import (
    AssemblyVerificationError,
    DependentFormsError,
    IncompatibleTargetsError,
)
from extendlib.problem import ExtensionProblem
from toruslin.restriction import normal_form
from toruslin.subalgebra import Subalgebra, intersect

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairFailure:
    first: int
    second: int
    residue: Polynomial


@dataclass(frozen=True)
class CompatibilityResult:
    ok: bool
    failures: tuple[PairFailure, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def compatibility_check(problem: ExtensionProblem) -> CompatibilityResult:
    """Targets must agree on every pairwise intersection of their subspaces."""
    failures = []
    spaces = problem.subspaces
    for i, j in combinations(range(len(problem.constraints)), 2):
        common = intersect(spaces[i], spaces[j])
        residue = normal_form(
            problem.constraints[i].target - problem.constraints[j].target, common
        )
        if not residue.is_zero():
            failures.append(PairFailure(i, j, residue))
    return CompatibilityResult(not failures, tuple(failures))


def dual_basis_completion(problem: ExtensionProblem) -> RationalMatrix:
    """The forms followed by standard coordinate forms picked greedily, as an invertible matrix."""
    n = problem.ambient_dim
    span = EchelonBasis(n)
    rows = []
    for form in problem.forms:
        if not span.add(form.coeffs):
            raise DependentFormsError("the forms are linearly dependent")
        rows.append(form.coeffs)
    for j in range(n):
        if len(rows) == n:
            break
        candidate = unit_vector(j, n)
        if span.add(candidate):
            rows.append(candidate)
    return RationalMatrix(tuple(rows), n)


class _Assembler:
    def __init__(self, problem: ExtensionProblem, basis: RationalMatrix):
        self.problem = problem
        self.m = len(problem.forms)
        to_x = inverse(basis)
        # targets rewritten in x coordinates; constraint i lives on {x_I = 0}
        self.targets = [
            c.target.substitute_linear(to_x).zero_variables(c.index_set)
            for c in problem.constraints
        ]
        self.cache: dict[frozenset[int], Polynomial] = {}

    def _candidates(self, subset: frozenset[int]) -> list[int]:
        return [
            i for i, c in enumerate(self.problem.constraints) if set(c.index_set) <= subset
        ]

    def _check_independent(self, subset: frozenset[int]) -> None:
        n = self.problem.ambient_dim
        rest = [k for k in range(self.m) if k not in subset]
        if not rest:
            return
        kernel = Subalgebra.from_kernel([self.problem.forms[j] for j in subset], n)
        restricted = RationalMatrix(
            tuple(tuple(self.problem.forms[k](w) for w in kernel.basis.rows) for k in rest),
            kernel.dim,
        )
        if rank(restricted) != len(rest):
            raise DependentFormsError(
                f"restricted forms on the kernel of {sorted(j + 1 for j in subset)} are dependent"
            )

    def g(self, subset: frozenset[int]) -> Polynomial:
        if subset in self.cache:
            return self.cache[subset]
        candidates = self._candidates(subset)
        if candidates:
            value = self.targets[candidates[0]].zero_variables(subset)
            if settings.DEBUG_EXTENSION:
                for other in candidates[1:]:
                    if self.targets[other].zero_variables(subset) != value:
                        raise AssemblyVerificationError(
                            f"constraints {candidates[0] + 1} and {other + 1} disagree on "
                            f"the kernel of {sorted(j + 1 for j in subset)}"
                        )
        else:
            self._check_independent(subset)
            value = Polynomial.zero(self.problem.ambient_dim)
            rest = [k for k in range(self.m) if k not in subset]
            for size in range(1, len(rest) + 1):
                sign = 1 if size % 2 else -1
                for chosen in combinations(rest, size):
                    child = self.g(subset | {chosen[0]})
                    value = value + child.zero_variables(subset | set(chosen)).scale(sign)
        self.cache[subset] = value
        return value


def extend_independent(problem: ExtensionProblem) -> Polynomial:
    """A global polynomial with every prescribed restriction; forms must be independent."""
    if any(form.is_zero() for form in problem.forms):
        raise DependentFormsError("a form is zero")
    coefficients = RationalMatrix(tuple(f.coeffs for f in problem.forms), problem.ambient_dim)
    if rank(coefficients) < len(problem.forms):
        raise DependentFormsError("the forms are linearly dependent")
    compatibility = compatibility_check(problem)
    if not compatibility.ok:
        pairs = tuple((f.first + 1, f.second + 1) for f in compatibility.failures)
        raise IncompatibleTargetsError(
            f"targets disagree on intersections for constraint pairs {list(pairs)}", pairs
        )
    if not problem.constraints:
        return Polynomial.zero(problem.ambient_dim)

    basis = dual_basis_completion(problem)
    assembler = _Assembler(problem, basis)
    in_x = assembler.g(frozenset())
    result = in_x.substitute_linear(basis)
    logger.debug("assembled extension from %d kernel intersections", len(assembler.cache))
    verify_extension(problem, result)
    return result


def verify_extension(problem: ExtensionProblem, candidate: Polynomial) -> None:
    for index, (constraint, space) in enumerate(zip(problem.constraints, problem.subspaces)):
        residue = normal_form(candidate - constraint.target, space)
        if not residue.is_zero():
            raise AssemblyVerificationError(
                f"extension misses constraint {index + 1} by {residue}"
            )


def first_failure(problem: ExtensionProblem, candidate: Polynomial) -> Optional[int]:
    """Index of the first constraint the candidate does not satisfy, or None."""
    for index, (constraint, space) in enumerate(zip(problem.constraints, problem.subspaces)):
        if not normal_form(candidate - constraint.target, space).is_zero():
            return index
    return None
