"""
Recognizing discrete surfaces
=============================

A finite simple graph is a surface when every unit sphere (the subgraph
induced on a vertex's neighbors) is a cycle or a path: cycles make interior
vertices, paths make boundary vertices.  ``classify_surface`` checks every
sphere and reports what it found.
"""

from eulerizer import Graph, VertexKind, build_graph, classify_surface, fixtures

##############################################################################
# The octahedron is the smallest closed example: every sphere is a 4-cycle.

octa = fixtures.octahedron()
report = classify_surface(octa)
print("octahedron:", report.surface_type.value)
print("  euler characteristic:", report.euler_characteristic)
print("  interior vertices:", sorted(report.interior_vertices))

##############################################################################
# A wheel is a disc: the hub sees a cycle, every rim vertex sees a path.

wheel = fixtures.wheel(6)
report = classify_surface(wheel)
print("wheel(6):", report.surface_type.value)
print("  boundary cycle:", report.boundary_cycles[0])

##############################################################################
# An annulus has two boundary cycles.

report = classify_surface(fixtures.annulus(8))
print("annulus(8):", report.surface_type.value)
print("  boundary lengths:", sorted(len(c) for c in report.boundary_cycles))

##############################################################################
# Graphs with bad spheres are rejected and every vertex gets a verdict.
# Two triangles glued at one vertex give that vertex a disconnected sphere
# (and the corners only see a 2-vertex path, which is too small to count).

bowtie = build_graph(range(5), [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
report = classify_surface(bowtie)
print("bowtie:", report.surface_type.value)
print("  invalid vertices:",
      sorted(v for v, c in report.classes.items()
             if c.kind is VertexKind.INVALID))

##############################################################################
# Graphs travel as JSON documents; parsing normalizes edge orientation.

doc = '{"vertices": [1, 2, 3], "edges": [[3, 1], [1, 2], [2, 3]]}'
g = Graph.from_json(doc)
print("triangle edges:", g.edges())
