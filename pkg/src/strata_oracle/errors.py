from exactpoly.errors import AssignmentError


class StrataError(AssignmentError):
    """A stratified space breaks one of its structural rules."""


class MissingStratumError(AssignmentError):
    def __init__(self, message: str):
        super().__init__(message, invariant="assignment-covers-strata")


class DisagreementError(AssignmentError):
    """Two partial assignments differ on a shared stratum."""

    def __init__(self, stratum: str, message: str):
        super().__init__(message, invariant="glue-agreement")
        self.stratum = stratum


class ContractViolationError(AssignmentError):
    """A stratum map is not order preserving or shrinks isotropy."""


class PreconditionError(AssignmentError):
    pass
