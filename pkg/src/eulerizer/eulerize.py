"""Making surfaces Eulerian by edge refinement.

Closed surfaces: a healing run starts at an odd vertex, follows the
geodesic flow, and whenever the sphere of the head vertex is an odd cycle
it refines the edge joining the two antipodes of the incoming direction.
That cut makes the head even, flips the dual vertex behind the cut edge,
and the flow chases the flipped vertex until it lands on another vertex
that was odd when the run started.  Odd vertices therefore annihilate in
pairs and the surface ends up with even degrees everywhere.

Discs: only edges with at least one interior endpoint may be refined, and
every refinement of such an edge flips the parity of exactly the two
vertices of its dual sphere.  Treating those dual pairs as the moves of a
token game lets us transport oddness along "flip paths": cutting along a
shortest path between two odd vertices fixes both ends and restores every
intermediate stop.  A disc can be finished this way exactly when its
boundary length is divisible by three; other lengths are refused up
front.  The boundary cycle itself is never touched.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Union

from .core import (
    Edge,
    Graph,
    SurfaceType,
    VertexKind,
    antipodal,
    classify_surface,
    classify_vertex,
    normalize_edge,
    odd_vertices,
    unit_sphere,
)
from .errors import (
    CutBudgetExceededError,
    LocalGeometryTooNarrowError,
    NotABallError,
    NotClosed2GraphError,
    PreconditionViolatedError,
)
from .refine import RefinementMove, double_edge_refine, edge_refine
from .rng import Rng

DirectedEdge = tuple[int, int]


# -- closed surfaces -----------------------------------------------------------


@dataclass(frozen=True)
class HealStep:
    """One flow step of a healing run: the new head, plus the edge cut and
    the vertex created when the step refined."""

    head: DirectedEdge
    cut_edge: Edge | None
    created: int | None

    def to_json_dict(self) -> dict:
        return {"head": list(self.head),
                "cut": list(self.cut_edge) if self.cut_edge else None,
                "created": self.created}


@dataclass(frozen=True)
class HealLog:
    seed: int
    steps: list[HealStep]
    annihilated_pairs: list[tuple[int, int]]

    @property
    def cut_count(self) -> int:
        return sum(1 for s in self.steps if s.cut_edge is not None)

    def to_json_dict(self) -> dict:
        return {"seed": self.seed,
                "steps": [s.to_json_dict() for s in self.steps],
                "annihilatedPairs": [list(p) for p in self.annihilated_pairs]}


def _heal_step(g: Graph, head: DirectedEdge) -> tuple[Graph, HealStep]:
    """Advance the healing flow by one step, cutting at odd spheres."""
    x, y = head
    z = antipodal(unit_sphere(g, y), x)
    if len(z) == 1:
        return g, HealStep(head=(y, z[0]), cut_edge=None, created=None)
    cut = normalize_edge(z[0], z[1])
    g2, move = edge_refine(g, cut)
    return g2, HealStep(head=(y, move.new_vertex), cut_edge=cut,
                        created=move.new_vertex)


def eulerize_closed(g: Graph, seed: int = 0,
                    max_cuts: int | None = None) -> tuple[Graph, HealLog]:
    """Refine a closed surface until every degree is even.

    Runs healing segments until no odd vertex remains.  Each segment picks
    an odd start vertex and a direction at random (deterministic in the
    seed), cuts once there, and follows the flow until the head lands on a
    vertex that was odd when the segment started.  The cut budget defaults
    to the square of the input edge count.
    """
    report = classify_surface(g)
    if report.surface_type is not SurfaceType.CLOSED:
        raise NotClosed2GraphError("eulerize_closed needs a closed surface",
                                   surface_type=report.surface_type.value)
    if max_cuts is None:
        max_cuts = g.edge_count ** 2
    rng = Rng(seed)
    steps: list[HealStep] = []
    pairs: list[tuple[int, int]] = []
    cuts = 0
    cur = g
    while True:
        vv = sorted(odd_vertices(cur))
        if not vv:
            break
        vvset = set(vv)
        y0 = rng.choice(vv)
        x0 = rng.choice(sorted(cur.neighbors(y0)))
        head = (x0, y0)
        while True:
            cur, step = _heal_step(cur, head)
            if step.cut_edge is not None:
                cuts += 1
                if cuts > max_cuts:
                    raise CutBudgetExceededError(
                        f"exceeded {max_cuts} cuts", max_cuts=max_cuts)
            steps.append(step)
            head = step.head
            if head[1] in vvset:
                break
        after = odd_vertices(cur)
        end = head[1]
        if y0 != end and y0 not in after and end not in after:
            pairs.append((y0, end))
    return cur, HealLog(seed=seed, steps=steps, annihilated_pairs=pairs)


def replay_heal_log(g: Graph, log: HealLog) -> Graph:
    """Re-apply the cuts of a healing log to the graph it was made from."""
    cur = g
    for step in log.steps:
        if step.cut_edge is None:
            continue
        cur, move = edge_refine(cur, step.cut_edge)
        if move.new_vertex != step.created:
            raise PreconditionViolatedError(
                f"replay diverged: created {move.new_vertex}, log says {step.created}")
    return cur


def plan_first_cut_closed(g: Graph, seed: int = 0) -> dict | None:
    """First cut a healing run would make, without mutating anything.

    Replays the run on a scratch copy until the flow meets an odd sphere
    and has to cut.  Returns {"edge": [a, b], "target": y, "kind": "cut"}
    or None when already Eulerian.
    """
    report = classify_surface(g)
    if report.surface_type is not SurfaceType.CLOSED:
        raise NotClosed2GraphError("healing hint needs a closed surface",
                                   surface_type=report.surface_type.value)
    rng = Rng(seed)
    cur = g
    budget = g.edge_count ** 2
    while budget > 0:
        vv = sorted(odd_vertices(cur))
        if not vv:
            return None
        vvset = set(vv)
        y0 = rng.choice(vv)
        head = (rng.choice(sorted(cur.neighbors(y0))), y0)
        while budget > 0:
            budget -= 1
            cur, step = _heal_step(cur, head)
            if step.cut_edge is not None:
                return {"edge": list(step.cut_edge), "target": y0, "kind": "cut"}
            head = step.head
            if head[1] in vvset:
                break
    raise CutBudgetExceededError("healing hint search spent its budget")


# -- parity transport on discs --------------------------------------------------


def _flip_moves(g: Graph, boundary: frozenset[int]) -> dict[int, list[tuple[int, Edge]]]:
    """Dual pairs of the admissible edges, indexed by their two vertices.

    Refining an edge flips exactly its dual sphere; edges joining two
    boundary vertices are off limits, and every remaining edge of a valid
    surface sits in exactly two triangles.
    """
    moves: dict[int, list[tuple[int, Edge]]] = {}
    for a, b in g.edges():
        if a in boundary and b in boundary:
            continue
        dual = sorted(g.neighbors(a) & g.neighbors(b))
        if len(dual) != 2:
            continue
        u, v = dual
        moves.setdefault(u, []).append((v, (a, b)))
        moves.setdefault(v, []).append((u, (a, b)))
    return moves


def _flip_path(g: Graph, boundary: frozenset[int], start: int,
               goals: set[int]) -> tuple[list[Edge], int] | None:
    """Shortest flip path from start to any goal: the list of edges to cut
    and the goal reached.  Deterministic BFS order."""
    moves = _flip_moves(g, boundary)
    parent: dict[int, tuple[int, Edge]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v in goals and v != start:
            path = []
            cur = v
            while cur != start:
                prev, edge = parent[cur]
                path.append(edge)
                cur = prev
            path.reverse()
            return path, v
        for u, edge in sorted(moves.get(v, ())):
            if u not in seen:
                seen.add(u)
                parent[u] = (v, edge)
                queue.append(u)
    return None


def _transport(g: Graph, boundary: frozenset[int], charge: int, goal: int,
               max_hops: int) -> tuple[Graph, list[RefinementMove]]:
    """Move one unit of oddness from charge to goal, cut by cut.

    Each cut flips the current charge (fixing it) together with the next
    stop, so only the two endpoints change parity overall.  Replans after
    every cut because a refinement can reroute nearby dual pairs.
    """
    moves: list[RefinementMove] = []
    for _ in range(max_hops):
        if charge == goal:
            return g, moves
        found = _flip_path(g, boundary, charge, {goal})
        if found is None:
            raise LocalGeometryTooNarrowError(
                f"no flip path from {charge} to {goal}")
        path, _ = found
        g, move = edge_refine(g, path[0])
        moves.append(move)
        a, b = move.linked_neighbors
        charge = b if charge == a else a
    raise LocalGeometryTooNarrowError(
        f"transport from {charge} to {goal} did not converge")


def _surface_boundary(g: Graph) -> frozenset[int]:
    report = classify_surface(g)
    if not report.is_surface:
        raise PreconditionViolatedError("graph is not a surface")
    return report.boundary_vertices


def _ball_of(g: Graph, centers: tuple[int, ...], radius: int) -> set[int]:
    seen = set(centers)
    frontier = set(centers)
    for _ in range(radius):
        frontier = {u for v in frontier for u in g.neighbors(v)} - seen
        seen |= frontier
    return seen


def _nearby_flip_search(g: Graph, boundary: frozenset[int],
                        goal: frozenset[int], centers: tuple[int, ...],
                        depth: int) -> tuple[Graph, list[RefinementMove]] | None:
    """Iterative-deepening search for a cut sequence reaching an exact odd set.

    Candidate cuts stay within distance 2 of the centers, so the surgery is
    local; vertices created along the way fall inside that ball and are fair
    game.  Covers narrow geometry where no single flip path exists: a pair of
    cuts that cancel each other's parity effect can still rewire the dual
    pairs around the centers.
    """

    def dfs(h: Graph, remaining: int,
            memo: dict) -> tuple[Graph, list[RefinementMove]] | None:
        if odd_vertices(h) == goal:
            return h, []
        if remaining == 0:
            return None
        if memo.get(h, -1) >= remaining:
            return None
        memo[h] = remaining
        ball = _ball_of(h, centers, 2)
        for e in h.edges():
            if e[0] in boundary and e[1] in boundary:
                continue
            if e[0] not in ball or e[1] not in ball:
                continue
            h2, move = edge_refine(h, e)
            sub = dfs(h2, remaining - 1, memo)
            if sub is not None:
                final, tail = sub
                return final, [move] + tail
        return None

    for limit in range(1, depth + 1):
        result = dfs(g, limit, {})
        if result is not None:
            return result
    return None


def switch_parity(g: Graph, a: int, b: int) -> tuple[Graph, list[RefinementMove]]:
    """Move oddness across the edge (a, b): a becomes even, b becomes odd.

    Requires a odd, b even and interior.  Realized by transporting the odd
    token from a to b along dual-pair flips; every intermediate stop is
    flipped twice, so no other original vertex changes parity.  When the
    flip graph leaves a and b in different components, falls back to a
    bounded local search that may spend parity-neutral cut pairs to widen
    the geometry first.
    """
    if not g.has_edge(a, b):
        raise PreconditionViolatedError(f"({a}, {b}) is not an edge")
    if g.degree(a) % 2 == 0:
        raise PreconditionViolatedError(f"vertex {a} must be odd")
    if g.degree(b) % 2 == 1:
        raise PreconditionViolatedError(f"vertex {b} must be even")
    if classify_vertex(g, b).kind is not VertexKind.INTERIOR:
        raise PreconditionViolatedError(f"vertex {b} must be interior")
    boundary = _surface_boundary(g)
    before = odd_vertices(g)
    goal = (before - {a}) | {b}
    try:
        out, moves = _transport(g, boundary, a, b, max_hops=4 * g.edge_count + 16)
    except LocalGeometryTooNarrowError:
        found = _nearby_flip_search(g, boundary, goal, (a, b), depth=3)
        if found is None:
            raise LocalGeometryTooNarrowError(
                f"no refinement sequence moves oddness from {a} to {b}") from None
        out, moves = found
    if odd_vertices(out) != goal:
        raise LocalGeometryTooNarrowError("parity switch left collateral changes")
    return out, moves


def reduce_triplet(g: Graph, c: int, a: int, b: int) -> tuple[Graph, list[RefinementMove]]:
    """Annihilate two of three odd vertices clustered around c.

    Requires a, b, c odd with a and b neighbors of c.  Transports the
    token from a to b, so both become even while c stays odd.  Falls back
    to a bounded local search when no flip path joins a to b.
    """
    for v in (c, a, b):
        if g.degree(v) % 2 == 0:
            raise PreconditionViolatedError(f"vertex {v} must be odd")
    if a not in g.neighbors(c) or b not in g.neighbors(c):
        raise PreconditionViolatedError(f"{a} and {b} must be neighbors of {c}")
    boundary = _surface_boundary(g)
    before = odd_vertices(g)
    goal = before - {a, b}
    try:
        out, moves = _transport(g, boundary, a, b, max_hops=4 * g.edge_count + 16)
    except LocalGeometryTooNarrowError:
        found = _nearby_flip_search(g, boundary, goal, (a, b, c), depth=3)
        if found is None:
            raise LocalGeometryTooNarrowError(
                f"no refinement sequence clears oddness at {a} and {b}") from None
        out, moves = found
    if odd_vertices(out) != goal:
        raise LocalGeometryTooNarrowError("triplet reduction left collateral changes")
    return out, moves


# -- bounded search finisher -----------------------------------------------------


def local_finisher(g: Graph, p: int, q: int,
                   depth: int) -> tuple[Graph, list[Edge]] | None:
    """Iterative-deepening search for refinements clearing both p and q.

    Explores sequences of admissible (non boundary-boundary) edge
    refinements up to the given depth, looking for a state whose odd set is
    the current one minus {p, q}.  Returns the refined graph and the cut
    list, or None when the search space is exhausted.
    """
    boundary = _surface_boundary(g)
    goal = odd_vertices(g) - {p, q}

    def candidates(h: Graph) -> list[Edge]:
        return [e for e in h.edges()
                if not (e[0] in boundary and e[1] in boundary)]

    def dfs(h: Graph, remaining: int, memo: dict) -> tuple[Graph, list[Edge]] | None:
        if odd_vertices(h) == goal:
            return h, []
        if remaining == 0:
            return None
        if memo.get(h, -1) >= remaining:
            return None
        memo[h] = remaining
        for e in candidates(h):
            h2, _ = edge_refine(h, e)
            sub = dfs(h2, remaining - 1, memo)
            if sub is not None:
                final, tail = sub
                return final, [e] + tail
        return None

    for limit in range(depth + 1):
        result = dfs(g, limit, {})
        if result is not None:
            return result
    return None


# -- discs ------------------------------------------------------------------------


@dataclass(frozen=True)
class BallMove:
    """One logged rewrite of a disc eulerization: a parity cut or a
    parity-neutral widening."""

    kind: str  # "cut" | "widen"
    edge: Edge
    created: tuple[int, ...]
    flipped: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "edge": list(self.edge),
                "created": list(self.created), "flipped": list(self.flipped)}


@dataclass(frozen=True)
class BallHealLog:
    seed: int
    moves: list[BallMove] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {"seed": self.seed,
                "moves": [m.to_json_dict() for m in self.moves]}


@dataclass(frozen=True)
class BallSuccess:
    graph: Graph
    log: BallHealLog


@dataclass(frozen=True)
class BallRefused:
    """Boundary length not divisible by three: no interior refinement
    sequence can work, so nothing was attempted."""

    boundary_length: int


@dataclass(frozen=True)
class BallBudgetExhausted:
    best_graph: Graph
    remaining_odd_count: int
    log: BallHealLog


BallResult = Union[BallSuccess, BallRefused, BallBudgetExhausted]


def _best_annihilation(g: Graph, boundary: frozenset[int], odd: list[int],
                       rng: Rng) -> tuple[list[Edge], int, int] | None:
    """Shortest flip path joining two odd vertices: (cuts, source, target)."""
    best: list[tuple[int, int, int, list[Edge]]] = []
    best_len = None
    for s in odd:
        found = _flip_path(g, boundary, s, set(odd) - {s})
        if found is None:
            continue
        path, t = found
        if best_len is None or len(path) < best_len:
            best = [(len(path), s, t, path)]
            best_len = len(path)
        elif len(path) == best_len:
            best.append((len(path), s, t, path))
    if not best:
        return None
    best.sort(key=lambda item: item[:3])
    _, s, t, path = rng.choice(best)
    return path, s, t


def _widen_candidates(g: Graph, boundary: frozenset[int], odd: list[int]) -> list[Edge]:
    """Admissible edges close to odd vertices, nearest first."""
    ranked = []
    for e in g.edges():
        if e[0] in boundary and e[1] in boundary:
            continue
        d = min(_vertex_distance(g, v, set(odd)) for v in e)
        ranked.append((d, e))
    ranked.sort()
    return [e for _, e in ranked]


def _vertex_distance(g: Graph, start: int, goals: set[int]) -> int:
    if start in goals:
        return 0
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        v, d = queue.popleft()
        for u in sorted(g.neighbors(v)):
            if u in goals:
                return d + 1
            if u not in seen:
                seen.add(u)
                queue.append((u, d + 1))
    return g.vertex_count


def eulerize_ball(g: Graph, seed: int = 0,
                  budget: int | None = None) -> BallResult:
    """Make a disc Eulerian with interior-edge refinements only.

    Refuses immediately unless the boundary length is divisible by three.
    Otherwise repeatedly cuts the first edge of a shortest flip path
    between two odd vertices, which annihilates them pairwise; when no
    flip path exists the local geometry is widened with a parity-neutral
    double refinement, and a stubborn final pair falls back to the bounded
    search of :func:`local_finisher`.  The boundary cycle is never
    refined and comes out vertex-for-vertex identical.
    """
    report = classify_surface(g)
    if report.surface_type is not SurfaceType.WITH_BOUNDARY \
            or len(report.boundary_cycles) != 1:
        raise NotABallError("eulerize_ball needs a disc with one boundary cycle",
                            surface_type=report.surface_type.value,
                            boundary_cycles=len(report.boundary_cycles))
    cycle = report.boundary_cycles[0]
    if len(cycle) % 3 != 0:
        return BallRefused(boundary_length=len(cycle))
    if budget is None:
        budget = 10 * g.edge_count ** 2
    boundary = report.boundary_vertices
    rng = Rng(seed)
    moves: list[BallMove] = []
    spent = 0
    cur = g
    stuck_widens = 0
    while True:
        odd = sorted(odd_vertices(cur))
        if not odd:
            return BallSuccess(cur, BallHealLog(seed=seed, moves=moves))
        if spent >= budget:
            return BallBudgetExhausted(cur, len(odd),
                                       BallHealLog(seed=seed, moves=moves))
        plan = _best_annihilation(cur, boundary, odd, rng)
        if plan is not None:
            path, _s, _t = plan
            cut = path[0]
            if cut[0] in boundary and cut[1] in boundary:
                raise PreconditionViolatedError(
                    f"planned boundary-boundary cut {cut}")
            cur, move = edge_refine(cur, cut)
            moves.append(BallMove("cut", cut, (move.new_vertex,),
                                  move.linked_neighbors))
            spent += 1
            stuck_widens = 0
            continue
        if len(odd) == 2 and stuck_widens >= 2:
            finished = local_finisher(cur, odd[0], odd[1], depth=4)
            if finished is not None:
                cur, cuts = finished
                for e in cuts:
                    moves.append(BallMove("cut", e, (), ()))
                spent += len(cuts)
                continue
        widen_pool = _widen_candidates(cur, boundary, odd)
        if not widen_pool:
            return BallBudgetExhausted(cur, len(odd),
                                       BallHealLog(seed=seed, moves=moves))
        edge = widen_pool[min(stuck_widens, len(widen_pool) - 1)]
        cur, (m1, m2) = double_edge_refine(cur, edge)
        moves.append(BallMove("widen", edge, (m1.new_vertex, m2.new_vertex), ()))
        spent += 2
        stuck_widens += 1


def plan_first_cut_ball(g: Graph, seed: int = 0) -> dict | None:
    """First move eulerize_ball would make, without mutating anything.

    None when the disc is already Eulerian.  Raises NotABallError on
    non-discs; a boundary length away from 0 mod 3 raises
    PreconditionViolatedError since no winning line exists.
    """
    report = classify_surface(g)
    if report.surface_type is not SurfaceType.WITH_BOUNDARY \
            or len(report.boundary_cycles) != 1:
        raise NotABallError("hint needs a disc with one boundary cycle")
    cycle = report.boundary_cycles[0]
    if len(cycle) % 3 != 0:
        raise PreconditionViolatedError(
            "boundary length not divisible by three", boundary_length=len(cycle))
    odd = sorted(odd_vertices(g))
    if not odd:
        return None
    boundary = report.boundary_vertices
    plan = _best_annihilation(g, boundary, odd, Rng(seed))
    if plan is not None:
        path, s, _t = plan
        return {"edge": list(path[0]), "target": s, "kind": "cut"}
    pool = _widen_candidates(g, boundary, odd)
    return {"edge": list(pool[0]), "target": odd[0], "kind": "widen"}
