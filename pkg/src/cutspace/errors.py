"""Exception hierarchy shared by the whole package."""


class CutSpaceError(Exception):
    """Base class for every error raised by cutspace."""


class GraphError(CutSpaceError, ValueError):
    """A graph violates one of the load-time invariants."""


class DisconnectedGraph(GraphError):
    def __init__(self, message="graph not connected"):
        super().__init__(message)


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptySide(CutSpaceError, ValueError):
    pass


class FullSide(CutSpaceError, ValueError):
    pass


class MixedGraph(CutSpaceError, ValueError):
    pass


class SameVertex(CutSpaceError, ValueError):
    pass


class Overlap(CutSpaceError, ValueError):
    pass


class Collapse(CutSpaceError, ValueError):
    """Contraction would merge the source node into the sink node."""


class TooLarge(CutSpaceError, ValueError):
    pass


class MethodDisagreement(CutSpaceError):
    def __init__(self, message, graph=None):
        self.graph = graph
        super().__init__(message)
