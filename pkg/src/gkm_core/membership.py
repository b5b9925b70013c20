import logging
from dataclasses import dataclass, field

from exactpoly.polynomial import Polynomial
from gkm_core.errors import LengthMismatchError
from gkm_core.presentation import AssignmentTuple, GkmPresentation
from toruslin.restriction import normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PieceFailure:
    piece: int
    first: int
    second: int
    residue: Polynomial


@dataclass(frozen=True)
class MembershipResult:
    ok: bool
    failures: tuple[PieceFailure, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def is_member(presentation: GkmPresentation, assignment: AssignmentTuple) -> MembershipResult:
    """Check f_r - f_s vanishes on g for every piece and every pair of its members.

    Pairs are taken against the piece's first member; equality on g is
    transitive, so that covers all pairs.
    """
    if len(assignment) != presentation.n:
        raise LengthMismatchError(
            f"tuple of length {len(assignment)} for {presentation.n} components"
        )
    failures = []
    for index, piece in enumerate(presentation.pieces):
        first = piece.members[0]
        for other in piece.members[1:]:
            residue = normal_form(assignment[first] - assignment[other], piece.g)
            if not residue.is_zero():
                failures.append(PieceFailure(index, first, other, residue))
    if failures:
        logger.debug("tuple fails %d piece congruences", len(failures))
    return MembershipResult(not failures, tuple(failures))
