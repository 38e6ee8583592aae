"""
Total graphs of complete graphs
===============================

T(K_n) can be built without going through K_n at all, by grouping the
ordered pairs (i, j) of 1..n+1. It is also the line graph of K_{n+1}.
"""

from totalgraph import are_isomorphic, line_graph, total_graph
from totalgraph.constructors import group_construction, total_of_complete
from totalgraph.graph import complete_graph
from totalgraph.recognition import recognize_complete_total

n = 4
groups = group_construction(n)
print("groups:", len(groups.groups), " first:", groups.groups[0])

t = total_of_complete(n).graph
print(f"T(K{n}) has {t.vertex_count} vertices and {t.edge_count} edges")
print("same as total_graph(K4):", are_isomorphic(t, total_graph(complete_graph(n)).graph))
print("same as L(K5):", are_isomorphic(t, line_graph(complete_graph(n + 1))[0]))

# recognition by cliques, not by isomorphism with a reference copy
for m in range(1, 8):
    print(m, recognize_complete_total(total_of_complete(m).graph))
