"""Generators for the standard test surfaces.

Small fixtures are built from literal edge lists or index arithmetic; the
two larger instances (the stadium-shaped billiard table and the ergodic
torus) ship verbatim as JSON data files so their edge lists cannot drift.
``fixture_catalog`` returns the expected classification of each fixture as
data, which the test suite replays against :func:`classify_surface`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core import Graph, build_graph
from .errors import BadParamsError
from .refine import edge_refine
from .rng import Rng

_OCTAHEDRON_EDGES = [
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 6), (3, 5),
    (3, 6), (4, 5), (4, 6), (5, 6),
]

_ICOSAHEDRON_EDGES = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (2, 9),
    (2, 10), (3, 4), (3, 5), (3, 8), (3, 11), (4, 6), (4, 8), (4, 12),
    (5, 9), (5, 11), (6, 10), (6, 12), (7, 8), (7, 9), (7, 10), (7, 11),
    (7, 12), (8, 11), (8, 12), (9, 10), (9, 11), (10, 12),
]


def octahedron() -> Graph:
    """The 6-vertex sphere in which every vertex has degree 4."""
    return build_graph(range(1, 7), _OCTAHEDRON_EDGES)


def icosahedron() -> Graph:
    """The 12-vertex sphere in which every vertex has degree 5."""
    return build_graph(range(1, 13), _ICOSAHEDRON_EDGES)


def wheel(n: int) -> Graph:
    """Hub 0 joined to a rim cycle 1..n.  The smallest discs: rim vertices
    have degree 3, so all of them are odd."""
    if n < 4:
        raise BadParamsError(f"wheel needs n >= 4, got {n}")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return build_graph(range(n + 1), edges)


def half_wheel(n: int) -> Graph:
    """Hub 0 joined to a rim path 1..n+1, giving n triangles.

    The two rim ends have degree 2, so this is a local building block, not
    a valid surface on its own.
    """
    if n < 2:
        raise BadParamsError(f"half_wheel needs n >= 2, got {n}")
    edges = [(0, i) for i in range(1, n + 2)]
    edges += [(i, i + 1) for i in range(1, n + 1)]
    return build_graph(range(n + 2), edges)


def torus(m: int, n: int) -> Graph:
    """Triangulated m x n torus grid; diagonals run (i, j) -> (i+1, j+1).

    Every vertex has degree 6.  Sizes below 4 would create chords in the
    wrapped unit spheres, so they are rejected.
    """
    if m < 4 or n < 4:
        raise BadParamsError(f"torus needs m, n >= 4, got ({m}, {n})")

    def vid(i: int, j: int) -> int:
        return (i % m) * n + (j % n)

    edges = []
    for i in range(m):
        for j in range(n):
            edges.append((vid(i, j), vid(i + 1, j)))
            edges.append((vid(i, j), vid(i, j + 1)))
            edges.append((vid(i, j), vid(i + 1, j + 1)))
    return build_graph(range(m * n), edges)


def annulus(n: int) -> Graph:
    """Cylinder made of 2n triangles between two boundary cycles of
    length n; every vertex has degree 4, so the graph is already Eulerian.

    Vertices 0..n-1 form one boundary cycle, n..2n-1 the other; triangles
    are (u_i, u_{i+1}, w_i) and (w_i, w_{i+1}, u_{i+1}).
    """
    if n < 4:
        raise BadParamsError(f"annulus needs n >= 4, got {n}")

    def u(i: int) -> int:
        return i % n

    def w(i: int) -> int:
        return n + i % n

    edges = []
    for i in range(n):
        edges.append((u(i), u(i + 1)))
        edges.append((w(i), w(i + 1)))
        edges.append((u(i), w(i)))
        edges.append((u(i + 1), w(i)))
    return build_graph(range(2 * n), edges)


def _load_data_graph(name: str) -> Graph:
    text = resources.files("eulerizer.data").joinpath(name).read_text()
    return Graph.from_json_dict(json.loads(text))


def bunimovich() -> Graph:
    """Stadium-shaped billiard table: an 18-vertex disc, all degrees even."""
    return _load_data_graph("bunimovich.json")


def ergodic_torus() -> Graph:
    """An 89-vertex Eulerian torus whose geodesic flow has a single
    ergodic component."""
    return _load_data_graph("ergodic_torus.json")


def random_refined(base: Graph, k: int, seed: int = 0) -> Graph:
    """Apply k edge refinements, drawing the edge uniformly each time."""
    if k < 0:
        raise BadParamsError(f"refinement count must be >= 0, got {k}")
    rng = Rng(seed)
    g = base
    for _ in range(k):
        g, _move = edge_refine(g, rng.choice(g.edges()))
    return g


@dataclass(frozen=True)
class CatalogEntry:
    """Expected classification of one fixture, consumed by the tests."""

    name: str
    params: tuple[int, ...]
    surface_type: str
    euler_characteristic: int
    boundary_lengths: tuple[int, ...]
    odd_count: int

    def build(self) -> Graph:
        return generate(self.name, *self.params)


_GENERATORS = {
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "wheel": wheel,
    "half_wheel": half_wheel,
    "torus": torus,
    "annulus": annulus,
    "bunimovich": bunimovich,
    "ergodic_torus": ergodic_torus,
}


def generate(name: str, *params: int, seed: int = 0) -> Graph:
    """Build a fixture by name.  ``random_refined`` takes a base fixture
    name and a refinement count: generate("random_refined", base, k)."""
    if name == "random_refined":
        if len(params) != 2:
            raise BadParamsError("random_refined needs (base, k)")
        base, k = params
        if isinstance(base, Graph):
            return random_refined(base, int(k), seed)
        return random_refined(generate(str(base)), int(k), seed)
    fn = _GENERATORS.get(name)
    if fn is None:
        raise BadParamsError(f"unknown fixture {name!r}",
                             known=sorted(_GENERATORS) + ["random_refined"])
    try:
        return fn(*[int(p) for p in params])
    except TypeError as exc:
        raise BadParamsError(f"bad parameters for {name}: {exc}") from exc


def fixture_catalog() -> list[CatalogEntry]:
    """Machine-readable expectations for the standard fixtures."""
    return [
        CatalogEntry("octahedron", (), "Closed2Graph", 2, (), 0),
        CatalogEntry("icosahedron", (), "Closed2Graph", 2, (), 12),
        CatalogEntry("wheel", (6,), "2GraphWithBoundary", 1, (6,), 6),
        CatalogEntry("wheel", (9,), "2GraphWithBoundary", 1, (9,), 10),
        CatalogEntry("wheel", (12,), "2GraphWithBoundary", 1, (12,), 12),
        CatalogEntry("wheel", (15,), "2GraphWithBoundary", 1, (15,), 16),
        CatalogEntry("half_wheel", (4,), "NotASurface", 1, (), 4),
        CatalogEntry("torus", (5, 5), "Closed2Graph", 0, (), 0),
        CatalogEntry("annulus", (8,), "2GraphWithBoundary", 0, (8, 8), 0),
        CatalogEntry("bunimovich", (), "2GraphWithBoundary", 1, (9,), 0),
        CatalogEntry("ergodic_torus", (), "Closed2Graph", 0, (), 0),
    ]
