"""
Discs heal only when the boundary length is divisible by 3
==========================================================

On a disc the boundary must stay untouched, so all cuts use interior edges.
That is only possible when the boundary length is 0 mod 3; other lengths are
refused up front rather than burning the cut budget.
"""

from eulerizer import (
    BallRefused,
    BallSuccess,
    boundary_period,
    classify_surface,
    color3,
    eulerize_ball,
    fixtures,
    odd_vertices,
)

##############################################################################
# Wheels with rim length 6, 9, 12, 15 pass the gate; 10 and 11 do not.

for n in range(6, 16):
    result = eulerize_ball(fixtures.wheel(n))
    if isinstance(result, BallRefused):
        print(f"wheel({n:2d}): refused, boundary length {result.boundary_length}")
    elif isinstance(result, BallSuccess):
        print(f"wheel({n:2d}): healed in {len(result.log.moves)} moves")

##############################################################################
# A healed disc keeps its boundary cycle vertex for vertex, every boundary
# degree is even, and the triangulation 3-colors with a period-3 boundary.

result = eulerize_ball(fixtures.wheel(9))
healed = result.graph
report = classify_surface(healed)
rim = report.boundary_cycles[0]
print("boundary cycle:", rim)
print("boundary degrees:", [healed.degree(v) for v in rim])
print("odd vertices:", sorted(odd_vertices(healed)))

coloring = color3(healed)
print("boundary colors:", [coloring.colors[v] for v in rim])
print("boundary period:", boundary_period(healed, coloring))
