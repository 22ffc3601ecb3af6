"""Exception hierarchy shared by all modules.

Every domain error derives from EulerizerError so callers (CLI, HTTP
service) can map failures to a single machine-readable error channel.
The ``payload`` dict carries structured detail, e.g. the offending edge.
"""

from __future__ import annotations


class EulerizerError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message: str = "", **payload):
        super().__init__(message)
        self.payload = payload

    @property
    def code(self) -> str:
        """Stable short name used in JSON error output."""
        name = type(self).__name__
        return name[:-5] if name.endswith("Error") else name


class BadParamsError(EulerizerError):
    """Generator or operation called with out-of-range parameters."""


class SelfLoopError(EulerizerError):
    """An edge joins a vertex to itself."""


class DanglingEndpointError(EulerizerError):
    """An edge names a vertex missing from the vertex set."""


class UnknownVertexError(EulerizerError):
    """A vertex id is not present in the graph."""


class NotAnEdgeError(EulerizerError):
    """A vertex pair is not an edge of the graph."""


class NotCycleOrPathError(EulerizerError):
    """A unit sphere is neither a cyclic graph nor a path graph."""


class NotASurfaceError(EulerizerError):
    """The graph is not a discrete surface (with or without boundary)."""


class NotClosed2GraphError(EulerizerError):
    """The operation needs a closed surface but the graph has boundary."""


class NotABallError(EulerizerError):
    """The operation needs a disc: a surface with exactly one boundary cycle."""


class OddInteriorVertexError(EulerizerError):
    """The geodesic flow is undefined at an interior vertex of odd degree."""

    def __init__(self, vertex: int, message: str = ""):
        super().__init__(message or f"flow undefined at odd interior vertex {vertex}",
                         vertex=vertex)
        self.vertex = vertex


class CutBudgetExceededError(EulerizerError):
    """A healing run spent its refinement budget without terminating."""


class PreconditionViolatedError(EulerizerError):
    """Arguments do not satisfy the documented entry conditions."""


class LocalGeometryTooNarrowError(EulerizerError):
    """No admissible refinement sequence exists in the local neighborhood."""


class ColoringConflictError(EulerizerError):
    """Triangle-by-triangle color propagation reached a contradiction."""

    def __init__(self, vertex: int | None, message: str = ""):
        super().__init__(message or f"coloring conflict at vertex {vertex}",
                         vertex=vertex)
        self.vertex = vertex
