"""Extension of polynomials from unions of kernel intersections."""

from extendlib.errors import (
    AssemblyVerificationError,
    DependentFormsError,
    ExtensionProblemError,
    IncompatibleTargetsError,
)
from extendlib.independent import (
    CompatibilityResult,
    PairFailure,
    compatibility_check,
    dual_basis_completion,
    extend_independent,
    first_failure,
    verify_extension,
)
from extendlib.problem import Constraint, ExtensionProblem
from extendlib.solve import Infeasible, degree_system, extend_solve

__all__ = [
    "AssemblyVerificationError",
    "CompatibilityResult",
    "Constraint",
    "DependentFormsError",
    "ExtensionProblem",
    "ExtensionProblemError",
    "IncompatibleTargetsError",
    "Infeasible",
    "PairFailure",
    "compatibility_check",
    "degree_system",
    "dual_basis_completion",
    "extend_independent",
    "extend_solve",
    "first_failure",
    "verify_extension",
]
