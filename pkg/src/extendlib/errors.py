from exactpoly.errors import AssignmentError


class ExtensionProblemError(AssignmentError):
    """Malformed extension problem."""


class DependentFormsError(AssignmentError):
    def __init__(self, message: str):
        super().__init__(message, invariant="forms-independent")


class IncompatibleTargetsError(AssignmentError):
    def __init__(self, message: str, pairs: tuple[tuple[int, int], ...] = ()):
        super().__init__(message, invariant="targets-compatible")
        self.pairs = pairs


class AssemblyVerificationError(AssignmentError):
    """The assembled extension fails a restriction it should satisfy; a bug, never expected."""
