from exactpoly.errors import AssignmentError


class MissingWeightsError(AssignmentError):
    def __init__(self, message: str):
        super().__init__(message, invariant="weights-present")


class MissingMomentError(AssignmentError):
    def __init__(self, message: str):
        super().__init__(message, invariant="moment-present")


class RegularityError(AssignmentError):
    """Some fixed component sits on the chosen level, so the level is not regular."""

    def __init__(self, message: str):
        super().__init__(message, invariant="regular-level")


class CircleError(AssignmentError):
    def __init__(self, message: str):
        super().__init__(message, invariant="circle-dim")
