"""
Recovering G from T(G)
======================

inverse_total peels the graph one maximum-degree vertex at a time. Each
answer is checked: the labeling is verified and T of the result is
compared with the input.
"""

import random

from totalgraph import Graph, inverse_total, total_graph
from totalgraph.graph import complete_graph, relabel

g = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
h = total_graph(g).graph

# hide the layout by shuffling vertex names
perm = list(range(h.vertex_count))
random.Random(0).shuffle(perm)
h = relabel(h, perm)

out = inverse_total(h)
print(out.status, "after", out.nodes, "search nodes,", out.backtracks, "backtracks")
print("inverse edges:", out.inverse.edges)

# the labeling names each vertex of h as a vertex or an edge of the inverse
for x in range(4):
    print(x, out.labeling.labels[x])

# K4 is not a total graph; the outcome says why
out = inverse_total(complete_graph(4))
print(out.status, out.refusal_witness)
