"""Exception types raised across the package."""


class GraphError(ValueError):
    """Base class for invalid graph, layout or file input."""


class InvalidEdge(GraphError):
    pass


class OutOfRange(GraphError, IndexError):
    pass


class InvalidLayout(GraphError):
    pass


class Disconnected(GraphError):
    """The operation needs a connected graph."""


class DimensionError(GraphError):
    pass


class InvalidParams(GraphError):
    pass


class FormatError(GraphError):
    """Unparseable text input; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedFormat(GraphError):
    pass


class Indeterminate(RuntimeError):
    """A search hit its node limit before reaching a decision."""

    def __init__(self, message, explored_nodes=0):
        super().__init__(message)
        self.explored_nodes = explored_nodes
