"""Exception types shared across the package."""


class GraphBuildError(ValueError):
    """Raised when an edge list violates the simple-graph invariants."""


class FormatError(ValueError):
    """Raised by parsers on malformed input; parsers never repair."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph."""


class NonCubicError(ValueError):
    """Raised when an operation requires a 3-regular graph."""


class SizeGuardError(ValueError):
    """Raised when an exhaustive-search guard (n or m cap) is exceeded."""
