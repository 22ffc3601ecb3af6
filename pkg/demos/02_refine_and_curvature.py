"""
Edge refinement and exact curvature
===================================

Refining an edge (a, b) replaces it with a path a - c - b and joins the new
vertex c to the two triangle corners over the old edge.  Exactly those two
corners change degree parity; everything else, including the total curvature,
stays put.
"""

from eulerizer import (
    curvature_ledger,
    dual_sphere,
    edge_contract,
    edge_refine,
    fixtures,
    odd_vertices,
)

octa = fixtures.octahedron()
print("octahedron odd vertices:", sorted(odd_vertices(octa)))

##############################################################################
# Refine one edge and watch the dual sphere flip to odd.

edge = (1, 2)
print("dual sphere of", edge, "=", sorted(dual_sphere(octa, edge)))

refined, move = edge_refine(octa, edge)
print("after refining", edge, "-> new vertex", move.new_vertex)
print("  linked to:", sorted(move.linked_neighbors))
print("  odd vertices now:", sorted(odd_vertices(refined)))

##############################################################################
# Contraction undoes the move exactly.

restored = edge_contract(refined, (max(edge), move.new_vertex))
print("contraction restores the octahedron:", restored == octa)

##############################################################################
# Curvature is 1 - deg/6 inside and (4 - deg)/6 on the boundary, as exact
# fractions.  The ledger always totals the euler characteristic.

for name, g in [("octahedron", octa), ("refined", refined),
                ("wheel(6)", fixtures.wheel(6))]:
    ledger = curvature_ledger(g)
    print(f"{name}: total curvature = {ledger.total}")

ledger = curvature_ledger(fixtures.wheel(6))
print("wheel(6) per vertex:", {v: str(k) for v, k in sorted(ledger.per_vertex.items())})
