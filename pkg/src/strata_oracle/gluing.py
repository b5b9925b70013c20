"""Mayer-Vietoris gluing and functorial pullback of assignments."""

import logging
from typing import Iterable, Mapping

from strata_oracle.errors import ContractViolationError, DisagreementError, PreconditionError
from strata_oracle.space import AssignmentLike, StrataAssignment, StratifiedSpace, as_assignment
from toruslin.restriction import normal_form
from toruslin.subalgebra import contains

logger = logging.getLogger(__name__)


def glue(
    space: StratifiedSpace,
    left_ids: Iterable[str],
    right_ids: Iterable[str],
    left: AssignmentLike,
    right: AssignmentLike,
) -> StrataAssignment:
    """Unique assignment on the union restricting to ``left`` and ``right``.

    Both id sets must be closed subspaces (downward closed in the order).
    """
    left_ids, right_ids = tuple(left_ids), tuple(right_ids)
    for name, ids in (("first", left_ids), ("second", right_ids)):
        if not space.is_downward_closed(ids):
            raise PreconditionError(
                f"{name} subspace is not closed under the closure order", "downward-closed"
            )
    b = as_assignment(space, left, left_ids)
    c = as_assignment(space, right, right_ids)
    shared = [i for i in space.ids if i in set(left_ids) & set(right_ids)]
    for stratum_id in shared:
        if b[stratum_id] != c[stratum_id]:
            raise DisagreementError(
                stratum_id,
                f"values differ on {stratum_id}: {b[stratum_id]} vs {c[stratum_id]}",
            )
    union = set(left_ids) | set(right_ids)
    values = {
        i: (b[i] if i in b else c[i]) for i in space.ids if i in union
    }
    logger.debug("glued %d + %d strata over %d shared", len(left_ids), len(right_ids), len(shared))
    return StrataAssignment(values)


def pullback(
    source: StratifiedSpace,
    target: StratifiedSpace,
    mapping: Mapping[str, str],
    assignment: AssignmentLike,
) -> StrataAssignment:
    """f*(A)(Y) = A(f(Y)) restricted to the isotropy of Y.

    The map must be order preserving and must not shrink isotropy: the
    isotropy of f(Y) contains that of Y.
    """
    if source.torus_dim != target.torus_dim:
        raise ContractViolationError(
            f"tori of dimensions {source.torus_dim} and {target.torus_dim}", "same-torus"
        )
    missing = [i for i in source.ids if i not in mapping]
    if missing:
        raise ContractViolationError(f"map undefined on {', '.join(missing)}", "map-total")
    for stratum_id in source.ids:
        image = mapping[stratum_id]
        if not contains(target.isotropy(image), source.isotropy(stratum_id)):
            raise ContractViolationError(
                f"isotropy of {image} does not contain that of {stratum_id}", "isotropy-grows"
            )
    for lower, upper in source.relations():
        if not target.precedes(mapping[lower], mapping[upper]):
            raise ContractViolationError(
                f"{lower} precedes {upper} but {mapping[lower]} does not precede {mapping[upper]}",
                "order-preserving",
            )
    values = as_assignment(target, assignment)
    return StrataAssignment(
        {
            stratum_id: normal_form(values[mapping[stratum_id]], source.isotropy(stratum_id))
            for stratum_id in source.ids
        }
    )
