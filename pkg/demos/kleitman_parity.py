"""Why K5 and K3,3 cannot be drawn with every independent pair crossing evenly.

Start from the convex drawing and pull vertices across edges. Each pull
flips an even number of independent pairs, so the odd count never changes.
"""

import random

from z2lab.families import complete_graph, k33
from z2lab.parity import convex_reference, independent_odd_count, vertex_edge_move, verify_kleitman

rng = random.Random(1)
for name, g in (("K5", complete_graph(5)), ("K3,3", k33())):
    state = convex_reference(g)
    counts = [independent_odd_count(state)]
    for _ in range(12):
        v = rng.randrange(g.n)
        f = rng.choice([e for e in range(g.m) if v not in g.edges[e]])
        state = vertex_edge_move(state, v, f)
        counts.append(independent_odd_count(state))
    print(f"{name}: odd-pair counts along 12 random moves: {counts}")
    print(verify_kleitman(g).to_text())

print(verify_kleitman(complete_graph(4)).to_text())
