"""Local rewrites of discrete surfaces.

Edge refinement is the elementary move of the whole package: an edge (a, b)
is replaced by a path (a, c, b) through a fresh vertex c which is joined to
every common neighbor of a and b.  Surfaces stay surfaces, the Euler
characteristic is preserved, and exactly the common neighbors change degree
parity.  Double refinement inserts two linked vertices instead and keeps
every parity.  Contraction of (a, b) merges the higher id into the lower
and is the exact inverse of refinement under the fresh-id discipline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, normalize_edge
from .errors import NotAnEdgeError, NotASurfaceError


@dataclass(frozen=True)
class RefinementMove:
    """Record of one refinement, enough to report and to undo.

    ``linked_neighbors`` is the dual sphere of the refined edge computed
    before the move; those are exactly the vertices whose parity flipped.
    """

    refined_edge: tuple[int, int]
    new_vertex: int
    linked_neighbors: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"refinedEdge": list(self.refined_edge),
                "newVertex": self.new_vertex,
                "flipped": list(self.linked_neighbors)}


def edge_refine(g: Graph, edge: tuple[int, int]) -> tuple[Graph, RefinementMove]:
    """Subdivide one edge, linking the fresh vertex to the dual sphere.

    The fresh vertex id is max(vertices) + 1, so replaying a recorded move
    sequence on the original graph reproduces ids exactly.
    """
    a, b = edge
    if not g.has_edge(a, b):
        raise NotAnEdgeError(f"({a}, {b}) is not an edge", edge=(a, b))
    linked = sorted(g.neighbors(a) & g.neighbors(b))
    c = g.max_vertex() + 1
    adj = g.adjacency_copy()
    adj[a].discard(b)
    adj[b].discard(a)
    adj[c] = {a, b, *linked}
    adj[a].add(c)
    adj[b].add(c)
    for w in linked:
        adj[w].add(c)
    move = RefinementMove(refined_edge=normalize_edge(a, b), new_vertex=c,
                          linked_neighbors=tuple(linked))
    return Graph(adj), move


def double_edge_refine(g: Graph, edge: tuple[int, int]) -> tuple[Graph, tuple[RefinementMove, RefinementMove]]:
    """Replace (a, b) by the path (a, u, v, b) with u, v joined to each
    other and to every prior common neighbor of a and b.

    Each common neighbor gains two edges, so every vertex keeps its degree
    parity.  Used to widen geometry that is too narrow for a parity
    rewrite without disturbing the parity state.
    """
    a, b = edge
    if not g.has_edge(a, b):
        raise NotAnEdgeError(f"({a}, {b}) is not an edge", edge=(a, b))
    linked = sorted(g.neighbors(a) & g.neighbors(b))
    u = g.max_vertex() + 1
    v = u + 1
    adj = g.adjacency_copy()
    adj[a].discard(b)
    adj[b].discard(a)
    adj[u] = {a, v, *linked}
    adj[v] = {u, b, *linked}
    adj[a].add(u)
    adj[b].add(v)
    for w in linked:
        adj[w].update((u, v))
    e = normalize_edge(a, b)
    moves = (RefinementMove(e, u, tuple(linked)), RefinementMove(e, v, tuple(linked)))
    return Graph(adj), moves


def edge_contract(g: Graph, edge: tuple[int, int]) -> Graph:
    """Contract an edge, keeping the lower vertex id.

    Parallel edges arising from shared neighbors are identified.  For an
    edge (b, c) where c was just produced by ``edge_refine`` this undoes
    the refinement exactly, ids included.
    """
    a, b = edge
    if not g.has_edge(a, b):
        raise NotAnEdgeError(f"({a}, {b}) is not an edge", edge=(a, b))
    keep, drop = (a, b) if a < b else (b, a)
    adj = g.adjacency_copy()
    merged = (adj[keep] | adj[drop]) - {keep, drop}
    for w in adj[drop]:
        adj[w].discard(drop)
    del adj[drop]
    adj[keep] = merged
    for w in merged:
        adj[w].add(keep)
    return Graph(adj)


def barycentric_refine(g: Graph) -> Graph:
    """Barycentric refinement: one vertex per simplex, adjacency by strict
    containment.

    Fresh ids are assigned 1..N in order of (dimension, sorted simplex).
    On a closed surface every vertex of the result has even degree: original
    vertices see d edges and d triangles, edge vertices sit in squares,
    triangle vertices in hexagons.
    """
    # The construction is purely simplicial, so tiny complexes with
    # undersized spheres (single triangle, short fans) are admitted; only a
    # genuinely non-manifold link (sphere neither path nor cycle, e.g. two
    # triangles glued at a vertex) is rejected.
    for v in sorted(g.vertices):
        sphere = g.induced(g.neighbors(v))
        if sphere.vertex_count == 0:
            continue
        if not sphere.is_connected() or any(sphere.degree(u) > 2
                                            for u in sphere.vertices):
            raise NotASurfaceError(
                f"sphere of {v} is neither a path nor a cycle", vertex=v)
    simplices: list[tuple[int, ...]] = [(v,) for v in sorted(g.vertices)]
    simplices += [e for e in g.edges()]
    simplices += g.triangles()
    index = {s: i + 1 for i, s in enumerate(simplices)}
    adj: dict[int, set[int]] = {i: set() for i in index.values()}
    for s in simplices:
        if len(s) == 1:
            continue
        for t in _proper_faces(s):
            adj[index[s]].add(index[t])
            adj[index[t]].add(index[s])
    return Graph(adj)


def _proper_faces(s: tuple[int, ...]) -> list[tuple[int, ...]]:
    faces = []
    n = len(s)
    for size in range(1, n):
        faces.extend(_subsets(s, size))
    return faces


def _subsets(s: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    from itertools import combinations
    return [tuple(c) for c in combinations(s, size)]
