"""Quotient by a locally free circle and the transport of assignments across it."""

import logging
from dataclasses import dataclass

from exactpoly.linalg import Inconsistency, RationalMatrix, solve, unit_vector
from exactpoly.rational import ONE, ZERO
from strata_oracle.errors import PreconditionError
from strata_oracle.space import AssignmentLike, StrataAssignment, Stratum, StratifiedSpace, as_assignment
from toruslin.restriction import normal_form, restrict
from toruslin.subalgebra import Subalgebra, contains

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CircleQuotient:
    """The space over t/q, coordinatized by the standard basis vectors other than q's pivot.

    ``projection`` has one row per ambient coordinate: row i is the image of e_i.
    """

    source: StratifiedSpace
    circle: Subalgebra
    pivot: int
    projection: RationalMatrix
    space: StratifiedSpace

    def project(self, isotropy: Subalgebra) -> RationalMatrix:
        rows = tuple(self.projection.left_apply(b) for b in isotropy.basis.rows)
        return RationalMatrix(rows, self.space.torus_dim)

    def _section(self, isotropy: Subalgebra) -> RationalMatrix:
        """Row i expresses the basis parameter s_i as a linear form on the quotient."""
        images = self.project(isotropy)
        rows = []
        for i in range(images.nrows):
            found = solve(images, unit_vector(i, images.nrows))
            if isinstance(found, Inconsistency):
                raise PreconditionError(
                    "projection is not injective on an isotropy algebra", "locally-free"
                )
            rows.append(found)
        return RationalMatrix(tuple(rows), self.space.torus_dim)

    def transport(self, assignment: AssignmentLike) -> StrataAssignment:
        """Value on Qp is A(p) read through the isomorphism from t_p onto its image."""
        values = as_assignment(self.source, assignment)
        out = {}
        for stratum in self.source.strata:
            on_basis = restrict(values[stratum.id], stratum.isotropy)
            out[stratum.id] = normal_form(
                on_basis.substitute_linear(self._section(stratum.isotropy)),
                self.space.isotropy(stratum.id),
            )
        return StrataAssignment(out)

    def lift(self, assignment: AssignmentLike) -> StrataAssignment:
        """Pull an assignment of the quotient back along the projection."""
        values = as_assignment(self.space, assignment)
        pull = self.projection.transpose()
        return StrataAssignment(
            {
                stratum.id: normal_form(
                    values[stratum.id].substitute_linear(pull), stratum.isotropy
                )
                for stratum in self.source.strata
            }
        )


def quotient_by_circle(space: StratifiedSpace, circle: Subalgebra) -> CircleQuotient:
    """Quotient model over t/q for a circle q contained in no isotropy algebra."""
    if circle.ambient_dim != space.torus_dim:
        raise PreconditionError(
            f"circle lives in dimension {circle.ambient_dim}, torus has {space.torus_dim}",
            "circle-ambient",
        )
    if circle.dim != 1:
        raise PreconditionError(f"circle direction must be one-dimensional, got {circle.dim}", "circle-dim")
    for stratum in space.strata:
        if contains(stratum.isotropy, circle):
            raise PreconditionError(
                f"circle lies in the isotropy of {stratum.id}; the action is not locally free",
                "locally-free",
            )

    direction = circle.basis.rows[0]
    pivot = next(j for j, x in enumerate(direction) if x != 0)
    k = space.torus_dim
    kept = [j for j in range(k) if j != pivot]
    projection = RationalMatrix.of(
        [
            [(ONE if i == j else ZERO) - (direction[j] if i == pivot else ZERO) for j in kept]
            for i in range(k)
        ],
        k - 1,
    )

    strata = []
    for stratum in space.strata:
        rows = [projection.left_apply(b) for b in stratum.isotropy.basis.rows]
        strata.append(Stratum(stratum.id, Subalgebra.from_span(rows, k - 1)))
    quotient = StratifiedSpace.build(k - 1, strata, space.relations())
    logger.info("quotient by %s: %d strata over a %d-dimensional torus", circle, len(strata), k - 1)
    return CircleQuotient(space, circle, pivot, projection, quotient)


def transport_assignment(quotient: CircleQuotient, assignment: AssignmentLike) -> StrataAssignment:
    return quotient.transport(assignment)


def lift_assignment(quotient: CircleQuotient, assignment: AssignmentLike) -> StrataAssignment:
    return quotient.lift(assignment)
