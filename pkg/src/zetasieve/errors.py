"""Exception hierarchy shared by every zetasieve module."""

from __future__ import annotations


class ZetaSieveError(Exception):
    """Base class for all library errors."""


class PoleError(ZetaSieveError, ValueError):
    """The requested point lies on (or within 1e-12 of) a pole."""


class RangeError(ZetaSieveError, ValueError):
    """The requested point is outside the supported working window."""


class EvaluationError(ZetaSieveError, ArithmeticError):
    """An evaluation produced a non-finite value or overflowed binary64."""


class AccuracyError(EvaluationError):
    """The requested accuracy could not be reached within the iteration cap."""


class NoRootError(ZetaSieveError):
    """A scan found no sign change where one was required."""


class NoConvergenceError(ZetaSieveError):
    """A bracket refinement did not converge within its iteration budget."""


class NonFiniteSampleError(ZetaSieveError, ValueError):
    """A scan target returned NaN or infinity on the sampling grid."""
