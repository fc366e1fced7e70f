class StokesQuiverError(Exception):
    """Base class for every error raised by the app package."""


class ParseError(StokesQuiverError):
    """A document or literal could not be read."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class DomainError(StokesQuiverError):
    """Input was readable but violates a mathematical requirement."""


class BadFrame(DomainError):
    pass


class TieBreak(DomainError):
    pass


class SingularMonodromy(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class SingularMatrix(DomainError):
    pass


class InconsistentSystem(DomainError):
    pass


class SubspaceNotInKernel(DomainError):
    pass


class NotSinglePointAtZero(DomainError):
    pass


class DegenerateCover(DomainError):
    pass


class SnapFailed(DomainError):
    pass


class BasepointTooClose(DomainError):
    pass


class ContinuationAmbiguous(DomainError):
    pass


class PathThroughCriticalValue(DomainError):
    pass


class NoConvergence(DomainError):
    pass


class InternalInconsistency(StokesQuiverError):
    """An exactness check failed; this is a bug, not bad input."""
