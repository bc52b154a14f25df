"""Exception hierarchy shared by every module.

The CLI maps :class:`GraphParseError` to exit code 2 and every other
:class:`PicspaceError` to exit code 1.
"""


class PicspaceError(Exception):
    """Base class for all domain errors raised by picspace."""


class GraphParseError(PicspaceError, ValueError):
    """Malformed graph or conditions file."""


class GraphError(PicspaceError, ValueError):
    """Invalid graph operation (unknown id, contracting a loop, ...)."""


class GuardExceeded(PicspaceError):
    """An enumeration guard (subsets, partitions, d cap) was exceeded."""


class InexactDivision(PicspaceError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class NotAnOrchard(PicspaceError, ValueError):
    """The graph has an edge that is neither a loop nor an isthmus."""


class PermutationError(PicspaceError, ValueError):
    """Invalid permutation, or one outside the allowed family."""
