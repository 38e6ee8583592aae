"""
Building total graphs
=====================

The total graph of G has one vertex per vertex of G and one per edge of G.
Two of them are adjacent when the elements are adjacent or incident.
"""

from totalgraph import Graph, total_graph
from totalgraph.formats import format_labeled_graph

# a triangle with a pendant vertex
g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
layout = total_graph(g)
h = layout.graph
print("G:", g.vertex_count, "vertices,", g.edge_count, "edges")
print("T(G):", h.vertex_count, "vertices,", h.edge_count, "edges")

# vertex-part vertices have degree 2d, edge-part vertices d_u + d_v
for i, x in enumerate(layout.vertex_part):
    print(f"vertex {i}: deg in G {g.degree(i)}, in T(G) {h.degree(x)}")
for x, (a, b) in layout.edge_part:
    print(f"edge {a}-{b}: deg in T(G) {h.degree(x)}")

# the labeling block says which element each vertex of T(G) stands for
print()
print(format_labeled_graph(h, layout.labeling.labels), end="")
