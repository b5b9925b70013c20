"""GKM presentations of assignment algebras and their graded module structure."""

from gkm_core.errors import LengthMismatchError, PresentationError
from gkm_core.graded import (
    Generator,
    constraint_matrix,
    graded_basis,
    graded_bases,
    minimal_generators,
    sweep_generators,
)
from gkm_core.membership import MembershipResult, PieceFailure, is_member
from gkm_core.presentation import AssignmentTuple, Component, GkmPresentation, Piece
from gkm_core.report import (
    FREE,
    NOT_FREE,
    UNDETERMINED,
    GradedModuleReport,
    free_module_dims,
    freeness_verdict,
    module_report,
)

__all__ = [
    "FREE",
    "NOT_FREE",
    "UNDETERMINED",
    "AssignmentTuple",
    "Component",
    "Generator",
    "GkmPresentation",
    "GradedModuleReport",
    "LengthMismatchError",
    "MembershipResult",
    "Piece",
    "PieceFailure",
    "PresentationError",
    "constraint_matrix",
    "free_module_dims",
    "freeness_verdict",
    "graded_basis",
    "graded_bases",
    "is_member",
    "minimal_generators",
    "module_report",
    "sweep_generators",
]
