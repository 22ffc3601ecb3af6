"""Geodesic flow and billiards on directed edges.

The flow moves a directed edge (x, y) forward by looking at the unit
sphere of y: at an interior vertex the exit is the antipode of x in the
sphere cycle (only defined when the cycle is even), at a boundary vertex
the sphere is a path p_1 .. p_m and the entry p_i reflects to the mirror
image p_{m+1-i}.  A perpendicular hit (middle of an odd path) bounces
straight back, which is what merges an orbit with its own reversal.

The step map is a bijection on directed edges, so orbits are closed and
their undirected projections partition the edge set.  Those projections
are the ergodic components.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import (
    Graph,
    SurfaceReport,
    antipodal,
    classify_surface,
    is_cycle_graph,
    is_path_graph,
    normalize_edge,
    path_order,
    unit_sphere,
)
from .errors import (
    NotAnEdgeError,
    NotCycleOrPathError,
    OddInteriorVertexError,
)

DirectedEdge = tuple[int, int]


class FlowMode(str, Enum):
    CLOSED_SURFACE = "ClosedSurface"
    BILLIARD = "Billiard"


def geodesic_step(g: Graph, edge: DirectedEdge) -> DirectedEdge:
    """One step of the flow starting on the directed edge (x, y)."""
    x, y = edge
    if not g.has_edge(x, y):
        raise NotAnEdgeError(f"({x}, {y}) is not an edge", edge=(x, y))
    sphere = unit_sphere(g, y)
    if is_cycle_graph(sphere):
        if sphere.vertex_count % 2 == 1:
            raise OddInteriorVertexError(y)
        return (y, antipodal(sphere, x)[0])
    if is_path_graph(sphere):
        order = path_order(sphere)
        i = order.index(x)
        return (y, order[len(order) - 1 - i])
    raise NotCycleOrPathError(f"sphere of {y} is neither cycle nor path")


@dataclass(frozen=True)
class Trajectory:
    states: list[DirectedEdge]
    closed: bool


def trajectory(g: Graph, start: DirectedEdge, max_steps: int) -> Trajectory:
    """Follow the flow until the start edge recurs or max_steps is spent.

    ``states`` never repeats the start; each trajectory of a defined flow
    closes within twice the edge count because the step map is bijective.
    """
    x, y = start
    if not g.has_edge(x, y):
        raise NotAnEdgeError(f"({x}, {y}) is not an edge", edge=(x, y))
    states = [start]
    for _ in range(max_steps):
        nxt = geodesic_step(g, states[-1])
        if nxt == start:
            return Trajectory(states, True)
        states.append(nxt)
    return Trajectory(states, False)


@dataclass(frozen=True)
class ErgodicComponent:
    """Undirected projection of one closed orbit."""

    edges: frozenset[tuple[int, int]]
    is_boundary_cycle: bool
    is_undirected_orbit: bool

    def to_json_dict(self) -> dict:
        return {"edges": [list(e) for e in sorted(self.edges)],
                "boundary": self.is_boundary_cycle,
                "undirected": self.is_undirected_orbit}


@dataclass(frozen=True)
class ErgodicDecomposition:
    components: list[ErgodicComponent]

    def to_json_dict(self) -> dict:
        return {"components": [c.to_json_dict() for c in self.components]}


def _require_flow_defined(g: Graph) -> SurfaceReport:
    report = classify_surface(g)
    for v in sorted(g.vertices):
        s = unit_sphere(g, v)
        if is_cycle_graph(s):
            if s.vertex_count % 2 == 1:
                raise OddInteriorVertexError(v)
        elif not is_path_graph(s):
            raise NotCycleOrPathError(f"sphere of {v} is neither cycle nor path")
    return report


def _boundary_edge_sets(report: SurfaceReport) -> list[frozenset[tuple[int, int]]]:
    out = []
    for cyc in report.boundary_cycles:
        n = len(cyc)
        out.append(frozenset(normalize_edge(cyc[i], cyc[(i + 1) % n])
                             for i in range(n)))
    return out


def ergodic_components(g: Graph) -> ErgodicDecomposition:
    """Partition the undirected edges into closed-orbit projections.

    Orbits are seeded from the least unused undirected edge, oriented
    smaller id first.  An orbit containing some edge in both directions is
    flagged undirected (it retraces itself after a perpendicular boundary
    hit); an orbit whose projection is exactly a boundary cycle is flagged
    as the table boundary.
    """
    report = _require_flow_defined(g)
    boundary_sets = _boundary_edge_sets(report)
    pool = deque(g.edges())
    used: set[tuple[int, int]] = set()
    components: list[ErgodicComponent] = []
    while pool:
        e0 = pool.popleft()
        if e0 in used:
            continue
        directed: set[DirectedEdge] = set()
        e = e0
        while True:
            directed.add(e)
            e = geodesic_step(g, e)
            if e == e0:
                break
        proj = frozenset(normalize_edge(*d) for d in directed)
        used.update(proj)
        components.append(ErgodicComponent(
            edges=proj,
            is_boundary_cycle=proj in boundary_sets,
            is_undirected_orbit=any((b, a) in directed for (a, b) in directed),
        ))
    return ErgodicDecomposition(components)


def is_ergodic(g: Graph, mode: FlowMode = FlowMode.CLOSED_SURFACE) -> bool:
    """One component means every geodesic visits every edge.

    In billiard mode the boundary cycle travels along itself and is not
    counted as a component of the table dynamics.
    """
    comps = ergodic_components(g).components
    if mode is FlowMode.BILLIARD:
        comps = [c for c in comps if not c.is_boundary_cycle]
    return len(comps) == 1


def undirected_orbit_count(g: Graph) -> int:
    """Number of orbits that retrace themselves; on a billiard table this
    is half the number of odd boundary vertices."""
    return sum(1 for c in ergodic_components(g).components if c.is_undirected_orbit)


def geodesic_distance(g: Graph, start: int, goal: int) -> int | None:
    """Fewest flow steps from ``start`` to ``goal``.

    Counts traversed edges: leaving ``start`` on any outgoing directed edge
    already costs one step.  None when no trajectory reaches the goal.
    """
    _require_flow_defined(g)
    if start not in g or goal not in g:
        raise NotAnEdgeError(f"unknown vertex in ({start}, {goal})")
    frontier: deque[tuple[DirectedEdge, int]] = deque()
    seen: set[DirectedEdge] = set()
    for n in sorted(g.neighbors(start)):
        state = (start, n)
        frontier.append((state, 1))
        seen.add(state)
    while frontier:
        state, dist = frontier.popleft()
        if state[1] == goal:
            return dist
        nxt = geodesic_step(g, state)
        if nxt not in seen:
            seen.add(nxt)
            frontier.append((nxt, dist + 1))
    return None
