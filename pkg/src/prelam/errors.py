"""Exception types shared across the package."""


class PrelamError(ValueError):
    """Base class; carries an optional JSON-able witness."""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class EndpointCollision(PrelamError):
    pass


class InvalidLamination(PrelamError):
    pass


class PreconditionViolated(PrelamError):
    pass


class EmptyInterval(PrelamError):
    pass


class NotShellStar(PrelamError):
    pass


class NotOnShell(PrelamError):
    pass


class NotMonotone(PrelamError):
    pass


class StructuralError(PrelamError):
    pass


class UnknownPoint(PrelamError):
    pass


class SizeExceeded(PrelamError):
    pass


class BadBounds(PrelamError):
    pass


class OutOfRange(PrelamError):
    pass


class DomainError(PrelamError):
    pass


class NotAGap(PrelamError):
    pass


class NotApplicable(PrelamError):
    pass
