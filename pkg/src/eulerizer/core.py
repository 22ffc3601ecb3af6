"""Finite simple graphs treated as discrete surfaces.

A graph is a discrete surface when every unit sphere S(v), the subgraph
induced on the neighbors of v, is either a cyclic graph on >= 4 vertices
(v is then an interior vertex) or a path on >= 3 vertices (v lies on the
boundary).  This module holds the immutable :class:`Graph` container, the
classification machinery, exact combinatorial curvature, and the antipodal
map on spheres that drives the geodesic flow.

Conventions used throughout the package:

* vertex ids are arbitrary non-negative integers and are never renumbered;
* an edge is an unordered pair, serialized smaller id first;
* Euler characteristic is V - E + F with F the number of triangles.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    BadParamsError,
    DanglingEndpointError,
    NotAnEdgeError,
    NotASurfaceError,
    NotCycleOrPathError,
    SelfLoopError,
    UnknownVertexError,
)

Edge = tuple[int, int]


def normalize_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class Graph:
    """Immutable simple undirected graph over integer vertex ids.

    Construction goes through :func:`build_graph` for edge lists or through
    the constructor with a full adjacency mapping.  Adjacency symmetry and
    absence of self loops are enforced here; operations that rewrite graphs
    always build a fresh instance.
    """

    __slots__ = ("_adj", "_hash")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj: dict[int, frozenset[int]] = {}
        for v, nbrs in adjacency.items():
            v = int(v)
            if v < 0:
                raise BadParamsError(f"negative vertex id {v}", vertex=v)
            adj[v] = frozenset(int(u) for u in nbrs)
        for v, nbrs in adj.items():
            if v in nbrs:
                raise SelfLoopError(f"vertex {v} adjacent to itself", edge=(v, v))
            for u in nbrs:
                if u not in adj:
                    raise DanglingEndpointError(
                        f"edge ({v}, {u}) names unknown vertex {u}", vertex=u)
                if v not in adj[u]:
                    raise BadParamsError(
                        f"asymmetric adjacency between {v} and {u}")
        self._adj = adj
        self._hash: int | None = None

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"vertex {v} not in graph", vertex=v) from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: int, b: int) -> bool:
        return a in self._adj and b in self._adj[a]

    def edges(self) -> list[Edge]:
        """All edges, smaller id first, sorted."""
        return sorted((v, u) for v, nbrs in self._adj.items() for u in nbrs if v < u)

    def max_vertex(self) -> int:
        if not self._adj:
            raise BadParamsError("empty graph has no vertices")
        return max(self._adj)

    def triangles(self) -> list[tuple[int, int, int]]:
        """All 3-cliques as sorted triples, ascending."""
        out = []
        for a, b in self.edges():
            for c in self._adj[a] & self._adj[b]:
                if c > b:
                    out.append((a, b, c))
        return sorted(out)

    def triangle_count(self) -> int:
        n = 0
        for a, b in self.edges():
            for c in self._adj[a] & self._adj[b]:
                if c > b:
                    n += 1
        return n

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        for v in keep:
            if v not in self._adj:
                raise UnknownVertexError(f"vertex {v} not in graph", vertex=v)
        return Graph({v: self._adj[v] & keep for v in keep})

    def adjacency_copy(self) -> dict[int, set[int]]:
        """Mutable working copy for rewrite algorithms."""
        return {v: set(nbrs) for v, nbrs in self._adj.items()}

    def is_connected(self) -> bool:
        if not self._adj:
            return True
        seen = _bfs_reach(self._adj, min(self._adj))
        return len(seen) == len(self._adj)

    # -- equality / hashing ------------------------------------------------

    def _key(self):
        return tuple(sorted((v, tuple(sorted(n))) for v, n in self._adj.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(V={self.vertex_count}, E={self.edge_count})"

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"vertices": sorted(self._adj),
                "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @staticmethod
    def from_json_dict(doc: Mapping) -> "Graph":
        """Accepts edges in any order and orientation; extra keys ignored."""
        try:
            vertices = list(doc["vertices"])
            edges = [tuple(e) for e in doc["edges"]]
        except (KeyError, TypeError) as exc:
            raise BadParamsError(f"malformed graph document: {exc}") from exc
        return build_graph(vertices, edges)

    @staticmethod
    def from_json(text: str) -> "Graph":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BadParamsError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise BadParamsError("graph document must be a JSON object")
        return Graph.from_json_dict(doc)


def build_graph(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and return the graph.

    Rejects self loops and edges naming vertices outside the vertex set.
    Duplicate edges collapse silently; isolated vertices are kept.
    """
    vset = {int(v) for v in vertices}
    adj: dict[int, set[int]] = {v: set() for v in vset}
    for a, b in edges:
        a, b = int(a), int(b)
        if a == b:
            raise SelfLoopError(f"self loop at vertex {a}", edge=(a, b))
        if a not in vset or b not in vset:
            missing = a if a not in vset else b
            raise DanglingEndpointError(
                f"edge ({a}, {b}) names unknown vertex {missing}", vertex=missing)
        adj[a].add(b)
        adj[b].add(a)
    return Graph(adj)


# -- shape recognition on small graphs --------------------------------------


def _bfs_reach(adj: Mapping[int, frozenset[int] | set[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def is_cycle_graph(g: Graph) -> bool:
    """Connected, every vertex of degree 2, at least 3 vertices."""
    n = g.vertex_count
    if n < 3:
        return False
    if any(g.degree(v) != 2 for v in g.vertices):
        return False
    return g.is_connected()


def is_path_graph(g: Graph) -> bool:
    """Connected, exactly two vertices of degree 1, the rest of degree 2.

    The two-vertex path qualifies here; callers that need >= 3 vertices
    (boundary spheres) check the size themselves.
    """
    n = g.vertex_count
    if n < 2:
        return False
    degs = sorted(g.degree(v) for v in g.vertices)
    if degs[:2] != [1, 1] or any(d != 2 for d in degs[2:]):
        return False
    return g.is_connected()


def path_order(g: Graph) -> list[int]:
    """Vertices of a path graph from one end to the other.

    Starts at the smaller endpoint so the order is deterministic; mirror
    arithmetic is independent of the orientation anyway.
    """
    if not is_path_graph(g):
        raise NotCycleOrPathError("not a path graph")
    ends = sorted(v for v in g.vertices if g.degree(v) == 1)
    order = [ends[0]]
    prev = None
    cur = ends[0]
    while len(order) < g.vertex_count:
        nxt = min(u for u in g.neighbors(cur) if u != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def cycle_order(g: Graph, start: int | None = None) -> list[int]:
    """Vertices of a cycle graph in traversal order, deterministic."""
    if not is_cycle_graph(g):
        raise NotCycleOrPathError("not a cycle graph")
    if start is None:
        start = min(g.vertices)
    order = [start]
    prev = None
    cur = start
    while len(order) < g.vertex_count:
        nxt = min(u for u in g.neighbors(cur) if u != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


# -- classification ----------------------------------------------------------


class VertexKind(str, Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    INVALID = "Invalid"


class SurfaceType(str, Enum):
    CLOSED = "Closed2Graph"
    WITH_BOUNDARY = "2GraphWithBoundary"
    NOT_A_SURFACE = "NotASurface"


@dataclass(frozen=True)
class VertexClass:
    kind: VertexKind
    sphere_size: int


@dataclass(frozen=True)
class SurfaceReport:
    """Outcome of :func:`classify_surface`."""

    classes: dict[int, VertexClass]
    surface_type: SurfaceType
    boundary_cycles: list[list[int]]
    euler_characteristic: int
    vertex_count: int
    edge_count: int
    triangle_count: int

    @property
    def is_surface(self) -> bool:
        return self.surface_type is not SurfaceType.NOT_A_SURFACE

    @property
    def interior_vertices(self) -> frozenset[int]:
        return frozenset(v for v, c in self.classes.items()
                         if c.kind is VertexKind.INTERIOR)

    @property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(v for v, c in self.classes.items()
                         if c.kind is VertexKind.BOUNDARY)

    def to_json_dict(self) -> dict:
        return {
            "surfaceType": self.surface_type.value,
            "vertexCount": self.vertex_count,
            "edgeCount": self.edge_count,
            "triangleCount": self.triangle_count,
            "eulerCharacteristic": self.euler_characteristic,
            "boundaryCycles": [list(c) for c in self.boundary_cycles],
            "classes": {str(v): {"kind": c.kind.value, "sphereSize": c.sphere_size}
                        for v, c in sorted(self.classes.items())},
        }


def unit_sphere(g: Graph, v: int) -> Graph:
    """Subgraph induced on the neighbors of v."""
    return g.induced(g.neighbors(v))


def classify_vertex(g: Graph, v: int) -> VertexClass:
    """Interior for cyclic spheres C_n (n >= 4), boundary for paths P_n
    (n >= 3), invalid otherwise.  C_3 spheres are rejected: the sphere of a
    surface vertex is an induced cycle and a triangle would collapse the
    local disc."""
    s = unit_sphere(g, v)
    n = s.vertex_count
    if is_cycle_graph(s) and n >= 4:
        return VertexClass(VertexKind.INTERIOR, n)
    if is_path_graph(s) and n >= 3:
        return VertexClass(VertexKind.BOUNDARY, n)
    return VertexClass(VertexKind.INVALID, n)


def _boundary_partner_map(g: Graph, boundary: Iterable[int]) -> dict[int, tuple[int, int]]:
    """For each boundary vertex, the two endpoints of its sphere path.

    These endpoints are its neighbors along the boundary: an edge (u, v)
    lies in exactly one triangle precisely when u sits at an end of the
    path S(v)."""
    partners = {}
    for v in boundary:
        order = path_order(unit_sphere(g, v))
        partners[v] = (order[0], order[-1])
    return partners


def _extract_boundary_cycles(g: Graph, boundary: set[int]) -> list[list[int]]:
    partners = _boundary_partner_map(g, boundary)
    for v, (a, b) in partners.items():
        for u in (a, b):
            if u not in partners or v not in partners[u]:
                raise NotASurfaceError(
                    f"boundary adjacency not symmetric at ({v}, {u})")
    cycles = []
    unused = set(boundary)
    while unused:
        start = min(unused)
        cyc = [start]
        prev = None
        cur = start
        while True:
            a, b = partners[cur]
            nxt = (min(a, b) if prev is None
                   else (a if b == prev else b))
            if nxt == start:
                break
            cyc.append(nxt)
            prev, cur = cur, nxt
        unused.difference_update(cyc)
        cycles.append(cyc)
    return sorted(cycles)


def classify_surface(g: Graph) -> SurfaceReport:
    """Classify every vertex and decide the surface type.

    Closed surface: every sphere cyclic.  Surface with boundary: no invalid
    vertex and at least one path sphere; the boundary then splits into
    disjoint cycles which are listed starting from their smallest vertex.
    Anything else, including the empty graph, is not a surface.
    """
    classes = {v: classify_vertex(g, v) for v in g.vertices}
    kinds = {c.kind for c in classes.values()}
    if not classes or VertexKind.INVALID in kinds:
        surface_type = SurfaceType.NOT_A_SURFACE
    elif VertexKind.BOUNDARY in kinds:
        surface_type = SurfaceType.WITH_BOUNDARY
    else:
        surface_type = SurfaceType.CLOSED
    cycles: list[list[int]] = []
    if surface_type is SurfaceType.WITH_BOUNDARY:
        boundary = {v for v, c in classes.items() if c.kind is VertexKind.BOUNDARY}
        cycles = _extract_boundary_cycles(g, boundary)
    f = g.triangle_count()
    return SurfaceReport(
        classes=classes,
        surface_type=surface_type,
        boundary_cycles=cycles,
        euler_characteristic=g.vertex_count - g.edge_count + f,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        triangle_count=f,
    )


def odd_vertices(g: Graph) -> frozenset[int]:
    """Vertices of odd degree, in any graph."""
    return frozenset(v for v in g.vertices if g.degree(v) % 2 == 1)


def dual_sphere(g: Graph, edge: tuple[int, int]) -> frozenset[int]:
    """Common neighbors of the two endpoints: S(a) intersected with S(b).

    On a surface this has two elements for an edge inside two triangles and
    one element for a boundary edge."""
    a, b = edge
    if not g.has_edge(a, b):
        raise NotAnEdgeError(f"({a}, {b}) is not an edge", edge=(a, b))
    return g.neighbors(a) & g.neighbors(b)


# -- curvature ----------------------------------------------------------------


@dataclass(frozen=True)
class CurvatureLedger:
    """Exact per-vertex curvature.

    Interior vertices carry 1 - d/6, boundary vertices (4 - d)/6; those
    choices make the total equal the Euler characteristic on every surface.
    ``boundary_alt`` reports the alternative boundary weight 1 - d/3 as a
    diagnostic; it is not summed.
    """

    per_vertex: dict[int, Fraction]
    total: Fraction
    boundary_alt: dict[int, Fraction] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "total": str(self.total),
            "perVertex": {str(v): str(k) for v, k in sorted(self.per_vertex.items())},
            "boundaryCurvatureAlt": {str(v): str(k)
                                     for v, k in sorted(self.boundary_alt.items())},
        }


def curvature_ledger(g: Graph, report: SurfaceReport | None = None) -> CurvatureLedger:
    if report is None:
        report = classify_surface(g)
    if not report.is_surface:
        raise NotASurfaceError("curvature needs a valid surface")
    per: dict[int, Fraction] = {}
    alt: dict[int, Fraction] = {}
    for v, cls in report.classes.items():
        d = g.degree(v)
        if cls.kind is VertexKind.INTERIOR:
            per[v] = 1 - Fraction(d, 6)
        else:
            per[v] = Fraction(4 - d, 6)
            alt[v] = 1 - Fraction(d, 3)
    return CurvatureLedger(per_vertex=per, total=sum(per.values(), Fraction(0)),
                           boundary_alt=alt)


# -- antipodal map -------------------------------------------------------------


def antipodal(sphere: Graph, x: int) -> list[int]:
    """Vertices at maximal distance from x inside a cycle or path graph.

    Even cycle: the single opposite vertex.  Odd cycle: the two adjacent
    vertices straddling the opposite edge.  Path: the farther endpoint, or
    both endpoints from the middle of an odd path.
    """
    if x not in sphere:
        raise UnknownVertexError(f"vertex {x} not in sphere", vertex=x)
    if not (is_cycle_graph(sphere) or is_path_graph(sphere)):
        raise NotCycleOrPathError("sphere is neither a cycle nor a path")
    dist = {x: 0}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for u in sphere.neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    far = max(dist.values())
    return sorted(v for v, d in dist.items() if d == far)
