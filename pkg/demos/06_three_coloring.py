"""
Coloring triangulations with three colors
=========================================

Triangle propagation: color one seed triangle 0, 1, 2, then every triangle
sharing an edge has its third corner forced.  Even degrees everywhere make
the propagation consistent; an odd vertex forces a conflict.
"""

from eulerizer import (
    ColoringConflictError,
    color3,
    eulerize_ball,
    fisk_adjacency_check,
    fixtures,
    odd_vertices,
)

##############################################################################
# The octahedron is Eulerian, so it 3-colors; antipodal vertices share colors.

coloring = color3(fixtures.octahedron())
print("octahedron colors:", dict(sorted(coloring.colors.items())))

##############################################################################
# The icosahedron is 5-regular.  Propagation walks into a contradiction and
# reports the vertex where the forced colors collide.

try:
    color3(fixtures.icosahedron())
except ColoringConflictError as exc:
    print("icosahedron conflict at vertex", exc.payload["vertex"])

##############################################################################
# Healing a disc makes it colorable.

healed = eulerize_ball(fixtures.wheel(12)).graph
print("healed wheel(12) odd vertices:", sorted(odd_vertices(healed)))
print("colors:", len(set(color3(healed).colors.values())))

##############################################################################
# Whenever exactly two odd vertices remain on a closed surface they are
# never adjacent; the check below verifies that on a refined octahedron.

from eulerizer import edge_refine

g, _ = edge_refine(fixtures.octahedron(), (1, 2))
print("two odd vertices:", sorted(odd_vertices(g)),
      "non-adjacent:", fisk_adjacency_check(g))
