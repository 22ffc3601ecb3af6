"""
Geodesic flows, billiards, and ergodic components
=================================================

On an Eulerian surface every directed edge has a unique straight continuation:
cross the vertex to the antipodal edge of the unit sphere, or reflect when the
sphere is a path.  Orbits of this flow partition the edges into components.
"""

from eulerizer import (
    FlowMode,
    ergodic_components,
    fixtures,
    geodesic_distance,
    geodesic_step,
    is_ergodic,
    trajectory,
    undirected_orbit_count,
)

##############################################################################
# On the octahedron a geodesic closes up after four steps: the flow splits
# the twelve edges into three square orbits.

octa = fixtures.octahedron()
print("one step from (1, 2):", geodesic_step(octa, (1, 2)))
print("orbit of (1, 2):", trajectory(octa, (1, 2), 2 * octa.edge_count))

decomposition = ergodic_components(octa)
for i, comp in enumerate(decomposition.components):
    print(f"component {i}: {sorted(comp.edges)}")

##############################################################################
# The bunimovich table is a boundary case, literally: one of its two
# components is the boundary cycle itself.  As a billiard, where the boundary
# orbit is discounted, the table is ergodic.

table = fixtures.bunimovich()
comps = ergodic_components(table).components
print("bunimovich components:", [len(c.edges) for c in comps],
      "boundary flags:", [c.is_boundary_cycle for c in comps])
print("ergodic as billiard:", is_ergodic(table, FlowMode.BILLIARD))
print("ergodic as closed surface:", is_ergodic(table, FlowMode.CLOSED_SURFACE))

##############################################################################
# The bundled torus is fully ergodic: one orbit through all 267 edges, so a
# geodesic connects every pair of vertices.

torus = fixtures.ergodic_torus()
print("torus components:", len(ergodic_components(torus).components))
print("distance 1 -> 60:", geodesic_distance(torus, 1, 60))

##############################################################################
# Odd boundary vertices reverse trajectories.  A disc with 2k odd boundary
# vertices carries exactly k undirected orbits.

w4 = fixtures.wheel(4)
print("wheel(4) undirected orbits:", undirected_orbit_count(w4))
