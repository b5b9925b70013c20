"""Stratum-poset model of assignment algebras, used as an independent oracle."""

from strata_oracle.assignment import (
    AssignmentCheck,
    RelationFailure,
    assignment_vector,
    graded_basis_oracle,
    is_assignment,
    moment_assignment,
    oracle_dims,
)
from strata_oracle.errors import (
    ContractViolationError,
    DisagreementError,
    MissingStratumError,
    PreconditionError,
    StrataError,
)
from strata_oracle.gluing import glue, pullback
from strata_oracle.localization import (
    ChangSkjelbredReport,
    RankCertificate,
    chang_skjelbred_check,
    extend_by_zero,
    fixed_and_skeleton,
    fixed_components,
    lint_fixed_closure,
    localize_kernel_check,
    rank_certificate,
    restriction_injective,
    restriction_kernel_dims,
    torsion_annihilator,
)
from strata_oracle.quotient import (
    CircleQuotient,
    lift_assignment,
    quotient_by_circle,
    transport_assignment,
)
from strata_oracle.space import StrataAssignment, Stratum, StratifiedSpace

__all__ = [
    "AssignmentCheck",
    "ChangSkjelbredReport",
    "CircleQuotient",
    "ContractViolationError",
    "DisagreementError",
    "MissingStratumError",
    "PreconditionError",
    "RankCertificate",
    "RelationFailure",
    "StrataAssignment",
    "StrataError",
    "Stratum",
    "StratifiedSpace",
    "assignment_vector",
    "chang_skjelbred_check",
    "extend_by_zero",
    "fixed_and_skeleton",
    "fixed_components",
    "glue",
    "graded_basis_oracle",
    "is_assignment",
    "lift_assignment",
    "lint_fixed_closure",
    "localize_kernel_check",
    "moment_assignment",
    "oracle_dims",
    "pullback",
    "quotient_by_circle",
    "rank_certificate",
    "restriction_injective",
    "restriction_kernel_dims",
    "torsion_annihilator",
    "transport_assignment",
]
