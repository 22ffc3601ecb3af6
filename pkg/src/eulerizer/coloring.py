"""Greedy 3-coloring by triangle propagation.

On a simply connected Eulerian surface the color of one triangle forces
the colors of all others: walking across an edge determines the opposite
vertex uniquely.  Propagation starts at the lexicographically least
triangle, colored 0, 1, 2 in ascending vertex order, and reports the first
vertex where two walks disagree.  On an odd-degree or non simply connected
input that conflict is exactly the classical obstruction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph, SurfaceType, classify_surface
from .errors import ColoringConflictError, NotABallError, NotClosed2GraphError
from .core import odd_vertices as _odd_vertices


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color in {0, 1, 2}, proper and rainbow on every triangle."""

    colors: dict[int, int]

    def to_json_dict(self) -> dict:
        return {"colors": {str(v): c for v, c in sorted(self.colors.items())}}


def color3(g: Graph, seed_triangle: tuple[int, int, int] | None = None) -> Coloring:
    """Propagate a 3-coloring across shared triangle edges.

    Raises ColoringConflictError at the first vertex receiving two
    different forced colors, or when some vertex is never reached at all.
    """
    triangles = g.triangles()
    if not triangles:
        raise ColoringConflictError(None, "graph has no triangles to color from")
    by_edge: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for t in triangles:
        a, b, c = t
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(t)
    if seed_triangle is None:
        seed = triangles[0]
    else:
        seed = tuple(sorted(seed_triangle))
        if seed not in set(triangles):
            raise ColoringConflictError(None, f"{seed} is not a triangle")
    colors = {seed[0]: 0, seed[1]: 1, seed[2]: 2}
    queue = deque([seed])
    visited = {seed}
    while queue:
        t = queue.popleft()
        a, b, c = t
        for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
            for t2 in by_edge[(u, v)]:
                if t2 in visited:
                    continue
                apex = next(z for z in t2 if z != u and z != v)
                forced = 3 - colors[u] - colors[v]
                if apex in colors:
                    if colors[apex] != forced:
                        raise ColoringConflictError(apex)
                else:
                    colors[apex] = forced
                visited.add(t2)
                queue.append(t2)
    uncolored = g.vertices - colors.keys()
    if uncolored:
        raise ColoringConflictError(min(uncolored), "vertex unreachable from seed triangle")
    for a, b in g.edges():
        if colors[a] == colors[b]:
            raise ColoringConflictError(b)
    return Coloring(colors)


def boundary_period(g: Graph, coloring: Coloring) -> int:
    """Minimal period of the color word along the boundary cycle of a disc.

    An Eulerian disc always comes out 3-periodic: around an even boundary
    vertex the two boundary neighbors get the same color shift.
    """
    report = classify_surface(g)
    if report.surface_type is not SurfaceType.WITH_BOUNDARY \
            or len(report.boundary_cycles) != 1:
        raise NotABallError("boundary period needs a disc with one boundary cycle")
    word = [coloring.colors[v] for v in report.boundary_cycles[0]]
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and all(word[i] == word[i % p] for i in range(n)):
            return p
    return n


def fisk_adjacency_check(g: Graph) -> bool:
    """On a closed surface, two lone odd vertices cannot be adjacent.

    Returns False exactly when the graph violates that: it has precisely
    two odd vertices and they share an edge.
    """
    report = classify_surface(g)
    if report.surface_type is not SurfaceType.CLOSED:
        raise NotClosed2GraphError("adjacency check needs a closed surface")
    odd = sorted(_odd_vertices(g))
    if len(odd) == 2 and g.has_edge(odd[0], odd[1]):
        return False
    return True
