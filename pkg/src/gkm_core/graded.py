"""Degreewise linear algebra for GKM presentations."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from exactpoly.linalg import EchelonBasis, RationalMatrix, nullspace_basis
from exactpoly.polynomial import Polynomial
from exactpoly.rational import ONE, ZERO
from gkm_core.presentation import AssignmentTuple, GkmPresentation
from toruslin.restriction import normal_form_matrix
from utils.workers import map_by_key

logger = logging.getLogger(__name__)


def constraint_matrix(
    presentation: GkmPresentation, degree: int, vanishing: Iterable[int] = ()
) -> RationalMatrix:
    """Rows cut out A_d inside S_d^n; unknown r*b + j is coefficient j of f_r.

    ``vanishing`` lists components forced to zero (kernel submodules).
    """
    b = presentation.block_size(degree)
    size = presentation.n * b
    rows: list[list[Fraction]] = []
    for piece in presentation.pieces:
        matrix = normal_form_matrix(piece.g, degree)
        first = piece.members[0]
        for other in piece.members[1:]:
            for coefficients in matrix.rows:
                row = [ZERO] * size
                row[first * b : (first + 1) * b] = coefficients
                row[other * b : (other + 1) * b] = [-c for c in coefficients]
                rows.append(row)
    for component in sorted(set(vanishing)):
        for j in range(b):
            row = [ZERO] * size
            row[component * b + j] = ONE
            rows.append(row)
    return RationalMatrix(tuple(tuple(r) for r in rows), size)


def graded_basis(
    presentation: GkmPresentation, degree: int, vanishing: Iterable[int] = ()
) -> list[AssignmentTuple]:
    """Basis of the degree-``degree`` part, ordered by the nullspace convention."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    system = constraint_matrix(presentation, degree, vanishing)
    kernel = nullspace_basis(system)
    logger.debug(
        "degree %d: %d constraints on %d unknowns, dimension %d",
        degree,
        system.nrows,
        system.ncols,
        len(kernel),
    )
    return [
        AssignmentTuple.from_vector(presentation.torus_dim, presentation.n, degree, v)
        for v in kernel
    ]


def graded_bases(
    presentation: GkmPresentation, degree_bound: int, vanishing: Iterable[int] = ()
) -> dict[int, list[AssignmentTuple]]:
    """Bases for every degree 0..degree_bound, computed concurrently per degree."""
    vanishing = tuple(vanishing)
    return map_by_key(
        lambda d: graded_basis(presentation, d, vanishing), range(degree_bound + 1)
    )


@dataclass(frozen=True)
class Generator:
    element: AssignmentTuple
    degree: int


def sweep_generators(
    bases: dict[int, Sequence[AssignmentTuple]],
    degree_bound: int,
    ring_degree_one: Sequence[Polynomial],
    extra_span: Optional[Callable[[int], Sequence[AssignmentTuple]]] = None,
) -> list[Generator]:
    """Minimal homogeneous generators, degree by degree.

    Degree-d generators complete ``ring_degree_one * A_{d-1}`` (plus the
    optional ``extra_span(d)``, for quotients) to all of A_d, greedily in the
    order of ``bases[d]``.
    """
    generators: list[Generator] = []
    for degree in range(degree_bound + 1):
        basis = bases[degree]
        if not basis:
            continue
        size = len(basis[0].to_vector(degree))
        span = EchelonBasis(size)
        if extra_span is not None:
            span.extend(element.to_vector(degree) for element in extra_span(degree))
        if degree > 0:
            for element in bases[degree - 1]:
                for factor in ring_degree_one:
                    span.add(element.times(factor).to_vector(degree))
        for element in basis:
            if span.add(element.to_vector(degree)):
                generators.append(Generator(element, degree))
        logger.debug(
            "degree %d: %d new generators", degree, sum(1 for g in generators if g.degree == degree)
        )
    return generators


def variables(nvars: int) -> list[Polynomial]:
    return [Polynomial.variable(i, nvars) for i in range(nvars)]


def minimal_generators(
    presentation: GkmPresentation, degree_bound: int, vanishing: Iterable[int] = ()
) -> list[Generator]:
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    bases = graded_bases(presentation, degree_bound, vanishing)
    return sweep_generators(bases, degree_bound, variables(presentation.torus_dim))
