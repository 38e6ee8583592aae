"""
The brute-force oracle
======================

For small inputs the inverse can be found by trying every connected graph
with the right number of elements. This is slow but easy to trust, and it
is what the recogniser is tested against.
"""

import random

from totalgraph import inverse_total, is_connected
from totalgraph.graph import Graph
from totalgraph.oracle import brute_force_inverse, enumerate_connected_graphs

for n in range(1, 8):
    print(f"connected graphs on {n} vertices:", len(list(enumerate_connected_graphs(n))))

# compare both methods on random graphs with 9 vertices
rng = random.Random(1)
agree = tried = 0
for _ in range(200):
    edges = [(u, v) for u in range(9) for v in range(u + 1, 9) if rng.random() < 0.35]
    h = Graph(9, edges)
    if not is_connected(h):
        continue
    tried += 1
    fast = inverse_total(h).status == "total-graph"
    agree += fast == (brute_force_inverse(h) is not None)
print(f"agreements: {agree} of {tried}")
