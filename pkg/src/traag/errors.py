"""Exception hierarchy shared by every module of the package."""


class TraagError(Exception):
    """Base class for all errors raised by :mod:`traag`."""


class GraphError(TraagError, ValueError):
    """Raised when a mixed graph or one of its arguments is malformed."""


class DuplicateVertex(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class ConflictingEdge(GraphError):
    pass


class InvalidName(GraphError):
    pass


class NameClash(GraphError):
    pass


class InvalidSignature(GraphError):
    pass


class TooLarge(GraphError):
    pass


class NotSpecial(TraagError):
    pass


class Disconnected(TraagError):
    pass


NotConnected = Disconnected


class TooSmall(TraagError):
    pass


class IneligibleTip(TraagError):
    pass


class NotDroms(TraagError):
    """The word problem is only available for Droms mixed graphs."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NoCentralVertex(TraagError):
    pass


class LetterOutsideTree(TraagError):
    pass


class NotASatellite(TraagError):
    pass


class BoundExceeded(TraagError):
    pass


class GraphSyntaxError(GraphError):
    """Positioned parse failure in a graph file (1-based line and column)."""

    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
