"""Healing runs on closed surfaces, disc eulerization, parity surgery."""

import pytest

from eulerizer import fixtures
from eulerizer.core import SurfaceType, classify_surface, odd_vertices
from eulerizer.errors import (
    CutBudgetExceededError,
    LocalGeometryTooNarrowError,
    NotABallError,
    NotClosed2GraphError,
    PreconditionViolatedError,
)
from eulerizer.eulerize import (
    BallBudgetExhausted,
    BallRefused,
    BallSuccess,
    eulerize_ball,
    eulerize_closed,
    local_finisher,
    plan_first_cut_ball,
    plan_first_cut_closed,
    reduce_triplet,
    replay_heal_log,
    switch_parity,
)
from eulerizer.flow import FlowMode, is_ergodic
from eulerizer.refine import edge_refine

# cut counts of the first healing seeds, frozen from a reference run
_ICOSAHEDRON_CUTS = {0: 15, 1: 11, 2: 43, 3: 18, 4: 18}


def test_closed_healing_makes_icosahedron_eulerian():
    for seed, cuts in _ICOSAHEDRON_CUTS.items():
        healed, log = eulerize_closed(fixtures.icosahedron(), seed=seed)
        assert odd_vertices(healed) == frozenset()
        report = classify_surface(healed)
        assert report.surface_type is SurfaceType.CLOSED
        assert report.euler_characteristic == 2
        assert log.seed == seed
        assert log.cut_count == cuts
        assert log.cut_count <= fixtures.icosahedron().edge_count ** 2


def test_heal_log_replays_exactly():
    healed, log = eulerize_closed(fixtures.icosahedron(), seed=1)
    assert replay_heal_log(fixtures.icosahedron(), log) == healed


def test_already_eulerian_surface_heals_in_zero_steps():
    healed, log = eulerize_closed(fixtures.octahedron(), seed=9)
    assert healed == fixtures.octahedron()
    assert log.steps == [] and log.annihilated_pairs == []


def test_closed_healing_rejects_boundaries_and_tiny_budgets():
    with pytest.raises(NotClosed2GraphError):
        eulerize_closed(fixtures.wheel(6))
    with pytest.raises(CutBudgetExceededError):
        eulerize_closed(fixtures.icosahedron(), seed=0, max_cuts=5)


def test_known_seed_yields_an_ergodic_sphere():
    healed, _ = eulerize_closed(fixtures.icosahedron(), seed=4)
    assert is_ergodic(healed, FlowMode.CLOSED_SURFACE)


def test_ball_healing_on_admissible_wheels():
    expected_moves = {6: 4, 9: 7, 12: 9, 15: 11}
    for n, count in expected_moves.items():
        w = fixtures.wheel(n)
        before = classify_surface(w)
        result = eulerize_ball(w)
        assert isinstance(result, BallSuccess)
        assert len(result.log.moves) == count
        assert all(m.kind == "cut" for m in result.log.moves)
        assert odd_vertices(result.graph) == frozenset()
        after = classify_surface(result.graph)
        assert after.surface_type is SurfaceType.WITH_BOUNDARY
        assert after.boundary_cycles == before.boundary_cycles
        assert all(result.graph.degree(v) % 2 == 0 for v in before.boundary_vertices)


def test_ball_healing_refuses_bad_boundary_lengths():
    for n in (10, 11):
        result = eulerize_ball(fixtures.wheel(n), seed=1)
        assert isinstance(result, BallRefused)
        assert result.boundary_length == n


def test_ball_healing_needs_a_disc():
    with pytest.raises(NotABallError):
        eulerize_ball(fixtures.annulus(8))
    with pytest.raises(NotABallError):
        eulerize_ball(fixtures.octahedron())


def test_ball_healing_is_idempotent_on_eulerian_discs():
    first = eulerize_ball(fixtures.wheel(6))
    again = eulerize_ball(first.graph, seed=3)
    assert isinstance(again, BallSuccess)
    assert again.graph == first.graph
    assert again.log.moves == []


def test_ball_healing_reports_budget_exhaustion():
    result = eulerize_ball(fixtures.wheel(15), budget=1)
    assert isinstance(result, BallBudgetExhausted)
    assert result.remaining_odd_count > 0
    assert len(odd_vertices(result.best_graph)) == result.remaining_odd_count


def test_ball_cuts_never_touch_the_boundary_cycle():
    result = eulerize_ball(fixtures.wheel(12))
    rim = set(range(1, 13))
    for move in result.log.moves:
        a, b = move.edge
        assert not (a in rim and b in rim)


# -- parity surgery ---------------------------------------------------------------


def _refined_w8():
    g, _ = edge_refine(fixtures.wheel(8), (0, 1))
    return g


def test_switch_parity_moves_oddness_across_an_edge():
    g = _refined_w8()
    before = odd_vertices(g)
    assert before == frozenset({1, 3, 4, 5, 6, 7})
    out, moves = switch_parity(g, 1, 9)
    assert odd_vertices(out) == (before - {1}) | {9}
    assert [m.refined_edge for m in moves] == [(0, 9), (1, 9), (2, 11)]
    assert classify_surface(out).surface_type is SurfaceType.WITH_BOUNDARY


def test_switch_parity_direct_transport_case():
    # after refining one edge of the icosahedron only the dual pair is even
    g, _ = edge_refine(fixtures.icosahedron(), (1, 2))
    before = odd_vertices(g)
    assert before == frozenset({1, 2, 3, 4, 7, 8, 9, 10, 11, 12})
    out, moves = switch_parity(g, 1, 5)
    assert odd_vertices(out) == (before - {1}) | {5}
    assert [m.refined_edge for m in moves] == [(3, 4), (3, 11)]


def test_switch_parity_raises_when_no_sequence_exists():
    g = _refined_w8()
    with pytest.raises(LocalGeometryTooNarrowError):
        switch_parity(g, 3, 0)


def test_switch_parity_preconditions():
    g = _refined_w8()
    with pytest.raises(PreconditionViolatedError):
        switch_parity(g, 2, 0)  # a must be odd
    with pytest.raises(PreconditionViolatedError):
        switch_parity(g, 3, 4)  # b must be even
    with pytest.raises(PreconditionViolatedError):
        switch_parity(g, 3, 9)  # must be an edge
    with pytest.raises(PreconditionViolatedError):
        switch_parity(g, 3, 2)  # b must be interior


def test_reduce_triplet_clears_two_neighbors():
    g = _refined_w8()
    before = odd_vertices(g)
    out, moves = reduce_triplet(g, 4, 3, 5)
    assert odd_vertices(out) == before - {3, 5}
    assert [m.refined_edge for m in moves] == [(0, 4)]


def test_reduce_triplet_preconditions():
    g = _refined_w8()
    with pytest.raises(PreconditionViolatedError):
        reduce_triplet(g, 2, 3, 5)  # c must be odd
    with pytest.raises(PreconditionViolatedError):
        reduce_triplet(g, 4, 3, 6)  # a, b must neighbor c


def test_local_finisher_solves_a_two_odd_disc():
    g, _ = edge_refine(fixtures.wheel(6), (0, 1))
    g, _ = edge_refine(g, (0, 4))
    assert sorted(odd_vertices(g)) == [1, 4]
    result = local_finisher(g, 1, 4, depth=3)
    assert result is not None
    final, cuts = result
    assert cuts == [(2, 7), (3, 8)]
    assert odd_vertices(final) == frozenset()


def test_local_finisher_gives_up_on_impossible_pairs():
    w4 = fixtures.wheel(4)
    assert local_finisher(w4, 1, 2, depth=2) is None


def test_local_finisher_single_cut_case():
    w4 = fixtures.wheel(4)
    result = local_finisher(w4, 2, 4, depth=1)
    assert result is not None
    final, cuts = result
    assert cuts == [(0, 1)]
    assert odd_vertices(final) == frozenset({1, 3})


# -- planning (the hint machinery) ------------------------------------------------


def test_closed_plan_matches_the_run():
    for seed in (0, 1, 7):
        plan = plan_first_cut_closed(fixtures.icosahedron(), seed=seed)
        _, log = eulerize_closed(fixtures.icosahedron(), seed=seed)
        first_cut = next(s.cut_edge for s in log.steps if s.cut_edge)
        assert tuple(plan["edge"]) == first_cut
        assert plan["kind"] == "cut"
    assert plan_first_cut_closed(fixtures.octahedron()) is None
    with pytest.raises(NotClosed2GraphError):
        plan_first_cut_closed(fixtures.wheel(6))


def test_ball_plan_matches_the_run():
    for n in (6, 9, 12, 15):
        plan = plan_first_cut_ball(fixtures.wheel(n), seed=0)
        result = eulerize_ball(fixtures.wheel(n), seed=0)
        first = result.log.moves[0]
        assert tuple(plan["edge"]) == first.edge
        assert plan["kind"] == first.kind


def test_ball_plan_error_paths():
    with pytest.raises(PreconditionViolatedError) as err:
        plan_first_cut_ball(fixtures.wheel(10))
    assert err.value.payload["boundary_length"] == 10
    with pytest.raises(NotABallError):
        plan_first_cut_ball(fixtures.annulus(8))
    eulerian = eulerize_ball(fixtures.wheel(6)).graph
    assert plan_first_cut_ball(eulerian) is None


def test_following_hints_wins_the_game():
    g = fixtures.icosahedron()
    moves = 0
    while odd_vertices(g) and moves < 200:
        plan = plan_first_cut_closed(g, seed=0)
        g, _ = edge_refine(g, tuple(plan["edge"]))
        moves += 1
    assert odd_vertices(g) == frozenset()
    assert moves == 79
