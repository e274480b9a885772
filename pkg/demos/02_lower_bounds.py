#!/usr/bin/env python3
# The two breadth-first lower bounds, and why the recognizer computes both.

from bandrec import alpha_bound, bandwidth_bounds, exact_bandwidth_bruteforce, gamma_bound
from bandrec.families import complete_bipartite_graph, cycle_graph, lollipop_graph, path_graph

# Both bounds read the same signal: if many nodes sit within distance d of
# some node, that node's label must differ a lot from one of them.
#   alpha takes the strongest node (ratio |N_d| / 2d, max over nodes),
#   gamma takes the weakest node (ratio |N_d| / d, min over nodes).
print(f"{'graph':<14} {'alpha':>5} {'gamma':>5} {'beta':>5}")
for name, g in [
    ("P_8", path_graph(8)),
    ("C_9", cycle_graph(9)),
    ("K_{4,4}", complete_bipartite_graph(4, 4)),
    ("L_{4,4}", lollipop_graph(4, 4)),
]:
    print(f"{name:<14} {alpha_bound(g):>5} {gamma_bound(g):>5} {exact_bandwidth_bruteforce(g):>5}")

# Neither bound wins everywhere, which is exactly why both are used as the
# early cutoff. Complete bipartite graphs favour gamma; lollipops (a clique
# with a long tail) favour alpha, because the tail gives gamma a weak node
# to hide behind while the clique centre keeps alpha honest.
bip = complete_bipartite_graph(4, 4)
lolli = lollipop_graph(5, 5)
print("\nK_{4,4}: gamma", gamma_bound(bip), "> alpha", alpha_bound(bip))
print("L_{5,5}: alpha", alpha_bound(lolli), "> gamma", gamma_bound(lolli))

# bandwidth_bounds computes both in one sweep; .combined is the cutoff value
# the recognizer compares k against before doing any real work.
print("\ncombined cutoff for K_{4,4}:", bandwidth_bounds(bip).combined)
