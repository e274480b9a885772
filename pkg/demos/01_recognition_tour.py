#!/usr/bin/env python3
# A tour of the recognizer: ask whether a graph can be laid out so that no
# edge spans more than k positions, and get a concrete layout when it can.

from bandrec import Graph, Layout, layout_bandwidth, recognize
from bandrec.families import complete_graph, cycle_graph, path_graph

# The five-cycle needs bandwidth 2: the two neighbours of any node must sit
# within two positions of it, which a straight line cannot do for every node.
c5 = cycle_graph(5)
result = recognize(c5, 2)
print("C_5 with k=2:", result.verdict)
print("  certificate positions -> nodes:", list(result.certificate.inverse))
print("  measured bandwidth:", layout_bandwidth(c5, result.certificate))

# k = 1 is below floor((n-1)/2) = 2 for n = 5, where the left/right position
# split this method relies on stops existing; the call refuses rather than
# silently guessing.
try:
    recognize(c5, 1)
except ValueError as exc:
    print("C_5 with k=1 ->", exc)

# Complete graphs are the worst case: every layout puts some edge across the
# full span. The gamma lower bound spots this instantly (reason: bounds_cutoff).
k4 = complete_graph(4)
result = recognize(k4, 2)
print("K_4 with k=2:", result.verdict, "| reason:", result.negative_reason)

# Disconnected graphs are solved one component at a time and the per-component
# layouts are packed side by side, so edges never cross the seams.
two_cycles = Graph(10, list(c5.edges) + [(u + 5, v + 5) for u, v in c5.edges])
result = recognize(two_cycles, 2)
print("C_5 + C_5 with k=2:", result.verdict)
print("  certificate:", list(result.certificate.inverse))

# Any layout at all works once k reaches n-1.
print("P_3 with k=2:", recognize(path_graph(3), 2).verdict,
      "| certificate is the identity:", recognize(path_graph(3), 2).certificate == Layout.identity(3))
