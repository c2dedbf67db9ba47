"""Exception types shared across the package.

Everything raised on purpose derives from NumradError so callers (and the
command line front end) can tell deliberate rejections from genuine bugs.
ParseError covers malformed matrix documents; NoConvergence covers iterative
failures.  The remaining classes are precondition violations.
"""

from __future__ import annotations


class NumradError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NumradError):
    """A precondition on an operation's input was violated."""


class NotSquare(ValidationError):
    pass


class NotHermitian(ValidationError):
    pass


class NotComplex(ValidationError):
    """Operation requires a complex-field matrix."""


class NotReal(ValidationError):
    """Operation requires real-field matrices."""


class DimensionMismatch(ValidationError):
    pass


class PartitionMismatch(ValidationError):
    """Block partition sizes do not sum to the matrix dimension."""


class IndexOutOfRange(ValidationError):
    pass


class UnequalBlocks(ValidationError):
    """Partition blocks must all have the same size."""


class NotUpperTriangular(ValidationError):
    pass


class NotBlockShift(ValidationError):
    """Matrix has nonzero blocks off the superdiagonal."""


class ZeroRadius(ValidationError):
    """Numerical radius is too small for the requested construction."""


class ParseError(NumradError):
    """Matrix document is syntactically or structurally invalid."""


class NoConvergence(NumradError):
    """An iterative procedure failed to reach its target tolerance."""
