"""Exception hierarchy for the openly disjoint cycles toolkit."""

from typing import Optional


class OdcError(Exception):
    """Root of every error raised by the toolkit."""


class DigraphError(OdcError, ValueError):
    """Invalid digraph input."""


class LoopArcError(DigraphError):
    """An arc (u, u) was supplied."""


class DuplicateArcError(DigraphError):
    """The same arc was supplied twice."""


class VertexRangeError(DigraphError):
    """A vertex id outside 0..n-1 was supplied."""


class OverlapError(DigraphError):
    """Two vertex sets that must be disjoint overlap."""


class EdgeListFormatError(DigraphError):
    """Malformed edge-list text."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class PreconditionError(OdcError, ValueError):
    """An operation was called outside its domain."""


class NotRegularError(PreconditionError):
    """A regular digraph was required."""


class NotDenseError(PreconditionError):
    """An (r, beta, gamma)-dense digraph was required."""


class BudgetExceededError(OdcError):
    """An exact search or retry loop would exceed its configured budget."""


class CertificateError(OdcError):
    """A certificate does not verify."""


class SoundnessError(OdcError, RuntimeError):
    """A proof step failed on exactly verified data."""
