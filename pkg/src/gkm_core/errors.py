from exactpoly.errors import AssignmentError


class PresentationError(AssignmentError):
    """A GKM presentation breaks one of its structural rules."""


class LengthMismatchError(AssignmentError):
    def __init__(self, message: str):
        super().__init__(message, invariant="tuple-length")
