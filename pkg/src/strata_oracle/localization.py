"""Restriction to the fixed set: Chang-Skjelbred images, torsion and rank.

These helpers turn the localization statements into finite checks on a
model, degree by degree up to a bound.
"""

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

from exactpoly.linalg import row_space
from exactpoly.monomial import monomial_count
from exactpoly.polynomial import Polynomial
from strata_oracle.assignment import (
    assignment_vector,
    graded_basis_oracle,
    is_assignment,
)
from strata_oracle.errors import PreconditionError
from strata_oracle.space import StrataAssignment, StratifiedSpace, as_assignment

logger = logging.getLogger(__name__)


def fixed_and_skeleton(space: StratifiedSpace) -> tuple[StratifiedSpace, StratifiedSpace]:
    """Fixed subspace (full isotropy) and 1-skeleton (isotropy of corank at most one)."""
    return space.subspace(space.fixed_ids()), space.subspace(space.skeleton_ids())


def _restriction_image(space: StratifiedSpace, fixed: tuple[str, ...], degree: int):
    vectors = [
        assignment_vector(space, a, degree, fixed) for a in graded_basis_oracle(space, degree)
    ]
    width = len(fixed) * monomial_count(space.torus_dim, degree)
    return row_space(vectors, width)


@dataclass(frozen=True)
class ImageComparison:
    degree: int
    full_image: int
    skeleton_image: int
    equal: bool


@dataclass(frozen=True)
class ChangSkjelbredReport:
    ok: bool
    degrees: tuple[ImageComparison, ...]


def chang_skjelbred_check(space: StratifiedSpace, degree_bound: int) -> ChangSkjelbredReport:
    """Compare the images of the whole space and of its 1-skeleton in the fixed-set algebra."""
    fixed = space.fixed_ids()
    _, skeleton = fixed_and_skeleton(space)
    rows = []
    for degree in range(degree_bound + 1):
        full = _restriction_image(space, fixed, degree)
        partial = _restriction_image(skeleton, fixed, degree)
        rows.append(ImageComparison(degree, full.nrows, partial.nrows, full == partial))
    ok = all(r.equal for r in rows)
    logger.info("1-skeleton image check up to degree %d: %s", degree_bound, "equal" if ok else "different")
    return ChangSkjelbredReport(ok, tuple(rows))


def torsion_annihilator(space: StratifiedSpace) -> Polynomial:
    """Product of one vanishing form per distinct proper isotropy."""
    product = Polynomial.constant(1, space.torus_dim)
    seen = set()
    for stratum in space.strata:
        h = stratum.isotropy
        if h.is_full() or h in seen:
            continue
        seen.add(h)
        product = product * Polynomial.linear(h.vanishing_ideal.forms.rows[0])
    return product


def times(space: StratifiedSpace, factor: Polynomial, assignment: StrataAssignment) -> StrataAssignment:
    return as_assignment(space, {i: factor * assignment[i] for i in assignment.ids()})


def localize_kernel_check(space: StratifiedSpace, degree_bound: int) -> bool:
    """Every assignment vanishing on the fixed set is killed by the torsion annihilator."""
    annihilator = torsion_annihilator(space)
    fixed = space.fixed_ids()
    for degree in range(degree_bound + 1):
        for element in graded_basis_oracle(space, degree, vanishing=fixed):
            if not times(space, annihilator, element).is_zero():
                logger.warning("degree %d torsion element survives the annihilator", degree)
                return False
    return True


def extend_by_zero(
    space: StratifiedSpace,
    fixed_values: Mapping[str, Polynomial],
    factor: Optional[Polynomial] = None,
) -> StrataAssignment:
    """factor * A on the fixed strata and zero elsewhere; an assignment on the whole space.

    ``fixed_values`` must be an assignment of the fixed subspace. ``factor``
    defaults to ``torsion_annihilator(space)``.
    """
    fixed = space.fixed_ids()
    fixed_space = space.subspace(fixed)
    check = is_assignment(fixed_space, fixed_values)
    if not check.ok:
        raise PreconditionError(
            "values on the fixed strata are not an assignment of the fixed subspace",
            "fixed-assignment",
        )
    if factor is None:
        factor = torsion_annihilator(space)
    values = {
        i: (factor * fixed_values[i] if i in set(fixed) else Polynomial.zero(space.torus_dim))
        for i in space.ids
    }
    result = as_assignment(space, values)
    verdict = is_assignment(space, result)
    if not verdict.ok:
        raise PreconditionError(
            f"factor does not vanish on the isotropy of {verdict.failures[0].upper}",
            "factor-annihilates",
        )
    return result


def restriction_kernel_dims(space: StratifiedSpace, degree_bound: int) -> tuple[int, ...]:
    fixed = space.fixed_ids()
    return tuple(
        len(graded_basis_oracle(space, d, vanishing=fixed)) for d in range(degree_bound + 1)
    )


def restriction_injective(space: StratifiedSpace, degree_bound: int) -> bool:
    """Restriction to the fixed set has zero kernel in every degree up to the bound."""
    return all(dim == 0 for dim in restriction_kernel_dims(space, degree_bound))


def fixed_components(space: StratifiedSpace) -> list[tuple[str, ...]]:
    """Connected components of the fixed subspace under the closure relation."""
    fixed = space.fixed_ids()
    parent = {i: i for i in fixed}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lower, upper in space.relations():
        if lower in parent and upper in parent:
            parent[find(lower)] = find(upper)
    groups: dict[str, list[str]] = {}
    for i in fixed:
        groups.setdefault(find(i), []).append(i)
    return [tuple(g) for g in groups.values()]


@dataclass(frozen=True)
class RankBound:
    degree: int
    lower: int
    image: int
    upper: int


@dataclass(frozen=True)
class RankCertificate:
    """Image of restriction to the fixed set squeezed between two free modules of the same rank."""

    rank: int
    annihilator_degree: int
    bounds: tuple[RankBound, ...]

    @property
    def ok(self) -> bool:
        return all(b.lower <= b.image <= b.upper for b in self.bounds)


def rank_certificate(space: StratifiedSpace, degree_bound: int) -> RankCertificate:
    rank = len(fixed_components(space))
    annihilator = torsion_annihilator(space)
    shift = annihilator.degree
    fixed = space.fixed_ids()
    bounds = []
    for degree in range(degree_bound + 1):
        image = _restriction_image(space, fixed, degree).nrows
        upper = rank * monomial_count(space.torus_dim, degree)
        lower = rank * monomial_count(space.torus_dim, degree - shift) if degree >= shift else 0
        bounds.append(RankBound(degree, lower, image, upper))
    return RankCertificate(rank, shift, tuple(bounds))


def lint_fixed_closure(space: StratifiedSpace) -> list[str]:
    """Strata with no fixed stratum in their closure."""
    fixed = set(space.fixed_ids())
    offenders = [
        z for z in space.ids if not any(space.precedes(y, z) for y in fixed)
    ]
    if offenders:
        logger.warning("strata without a fixed stratum in their closure: %s", ", ".join(offenders))
    return offenders
