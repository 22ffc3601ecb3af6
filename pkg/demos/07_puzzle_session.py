"""
Playing the parity puzzle headless
==================================

The HTTP service wraps the same planning code used below: each hint proposes
the cut a healing run would make next.  Following hints from the icosahedron
reaches an Eulerian sphere in 79 moves.

Run ``eulerizer serve`` and open the frontend for the interactive version.
"""

from eulerizer import (
    edge_refine,
    fixtures,
    odd_vertices,
    plan_first_cut_closed,
)

g = fixtures.icosahedron()
moves = 0
while odd_vertices(g):
    plan = plan_first_cut_closed(g, seed=0)
    edge, target = tuple(plan["edge"]), plan["target"]
    if moves < 5 or not odd_vertices(g) - {target}:
        print(f"move {moves:2d}: cut {edge} aiming at vertex {target}")
    g, _ = edge_refine(g, edge)
    moves += 1

print(f"won after {moves} moves: {g.vertex_count} vertices, "
      f"{g.edge_count} edges, odd count {len(odd_vertices(g))}")

##############################################################################
# The same loop over HTTP:
#
#   eulerizer serve --port 8000 &
#   curl -s localhost:8000/api/session -d '{"graph": ...}' | jq .id
#   curl -s localhost:8000/api/session/$ID/hint
#   curl -s localhost:8000/api/session/$ID/move -d '{"edge": [a, b]}'
