"""Assignments on a stratified space, checked and enumerated degreewise."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from exactpoly.linalg import RationalMatrix, nullspace_basis
from exactpoly.monomial import monomial_index
from exactpoly.polynomial import Polynomial
from exactpoly.rational import ONE, ZERO, RationalLike, to_rational
from strata_oracle.space import AssignmentLike, StrataAssignment, StratifiedSpace, as_assignment
from toruslin.restriction import free_monomials, normal_form, normal_form_matrix
from utils.workers import map_by_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationFailure:
    lower: str
    upper: str
    residue: Polynomial


@dataclass(frozen=True)
class AssignmentCheck:
    ok: bool
    failures: tuple[RelationFailure, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def is_assignment(space: StratifiedSpace, values: AssignmentLike) -> AssignmentCheck:
    """A(Z) must equal A(Y) restricted to the isotropy of Z whenever Y precedes Z."""
    assignment = as_assignment(space, values)
    failures = []
    for lower, upper in space.relations():
        residue = normal_form(assignment[lower] - assignment[upper], space.isotropy(upper))
        if not residue.is_zero():
            failures.append(RelationFailure(lower, upper, residue))
    return AssignmentCheck(not failures, tuple(failures))


@dataclass(frozen=True)
class _Layout:
    """Unknowns of the degree-d system: per stratum, its free monomials in order."""

    offsets: dict[str, int]
    monomials: dict[str, tuple[tuple[int, ...], ...]]
    size: int


def _layout(space: StratifiedSpace, degree: int) -> _Layout:
    offsets, monomials, size = {}, {}, 0
    for stratum in space.strata:
        offsets[stratum.id] = size
        monomials[stratum.id] = free_monomials(stratum.isotropy, degree)
        size += len(monomials[stratum.id])
    return _Layout(offsets, monomials, size)


def oracle_system(
    space: StratifiedSpace, degree: int, vanishing: Iterable[str] = ()
) -> tuple[RationalMatrix, _Layout]:
    layout = _layout(space, degree)
    columns = monomial_index(space.torus_dim, degree)
    rows: list[list[Fraction]] = []
    for lower, upper in space.relations():
        reduce = normal_form_matrix(space.isotropy(upper), degree)
        upper_monomials = layout.monomials[upper]
        for i, target in enumerate(free_monomials(space.isotropy(upper), degree)):
            row = [ZERO] * layout.size
            for j, monomial in enumerate(layout.monomials[lower]):
                row[layout.offsets[lower] + j] = reduce.rows[i][columns[monomial]]
            row[layout.offsets[upper] + upper_monomials.index(target)] -= ONE
            rows.append(row)
    for stratum_id in vanishing:
        for j in range(len(layout.monomials[stratum_id])):
            row = [ZERO] * layout.size
            row[layout.offsets[stratum_id] + j] = ONE
            rows.append(row)
    return RationalMatrix(tuple(tuple(r) for r in rows), layout.size), layout


def _decode(space: StratifiedSpace, layout: _Layout, vector: Sequence[Fraction]) -> StrataAssignment:
    values = {}
    for stratum in space.strata:
        start = layout.offsets[stratum.id]
        values[stratum.id] = Polynomial.from_dict(
            space.torus_dim,
            {
                m: vector[start + j]
                for j, m in enumerate(layout.monomials[stratum.id])
            },
        )
    return StrataAssignment(values)


def graded_basis_oracle(
    space: StratifiedSpace, degree: int, vanishing: Iterable[str] = ()
) -> list[StrataAssignment]:
    """Basis of degree-``degree`` assignments straight from the closure relations.

    ``vanishing`` forces the listed strata to zero (used for the kernel of
    restriction to the fixed set).
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    system, layout = oracle_system(space, degree, tuple(vanishing))
    kernel = nullspace_basis(system)
    logger.debug(
        "oracle degree %d: %d relations on %d unknowns, dimension %d",
        degree,
        system.nrows,
        system.ncols,
        len(kernel),
    )
    return [_decode(space, layout, v) for v in kernel]


def oracle_dims(
    space: StratifiedSpace, degree_bound: int, vanishing: Iterable[str] = ()
) -> tuple[int, ...]:
    vanishing = tuple(vanishing)
    bases = map_by_key(
        lambda d: graded_basis_oracle(space, d, vanishing), range(degree_bound + 1)
    )
    return tuple(len(bases[d]) for d in range(degree_bound + 1))


def assignment_vector(
    space: StratifiedSpace, assignment: StrataAssignment, degree: int, ids: Optional[Sequence[str]] = None
) -> tuple[Fraction, ...]:
    """Degree-``degree`` coefficients of the values on ``ids``, stratum blocks in order."""
    out: list[Fraction] = []
    for stratum_id in ids if ids is not None else space.ids:
        value = assignment[stratum_id]
        for monomial in free_monomials(space.isotropy(stratum_id), degree):
            out.append(value.coefficient(monomial))
    return tuple(out)


def moment_assignment(
    space: StratifiedSpace, moments: Mapping[str, Sequence[RationalLike]]
) -> tuple[StrataAssignment, AssignmentCheck]:
    """Degree-one assignment A(Y) = moment(Y) restricted to the isotropy of Y."""
    values = {
        stratum_id: Polynomial.linear([to_rational(x) for x in vector])
        for stratum_id, vector in moments.items()
    }
    assignment = as_assignment(space, values)
    check = is_assignment(space, assignment)
    if not check.ok:
        logger.warning(
            "moment values do not restrict compatibly along %d relations", len(check.failures)
        )
    return assignment, check
