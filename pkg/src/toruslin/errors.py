from exactpoly.errors import AssignmentError


class ZeroWeightError(AssignmentError):
    """A weight that must be nonzero is the zero form."""

    def __init__(self, message: str):
        super().__init__(message, invariant="nonzero-weight")
