#!/usr/bin/env python3
# Under the hood: left partial layouts, the blocking index, and the nested
# counting check that replaces a factorial search over right layouts.

from bandrec import (
    build_blocked_index,
    check_hall_and_build_right,
    assemble_certificate,
    enumerate_left_partial_layouts,
    layout_bandwidth,
)
from bandrec.families import cycle_graph

g = cycle_graph(5)
n, k = 5, 2

# For n=5, k=2 the outer loop walks all 5!/3! = 20 injective assignments of
# the two leftmost positions, in lexicographic order.
lefts = list(enumerate_left_partial_layouts(g, k))
print("left partial layouts:", len(lefts))
print("first five:", [pl.assignment for pl in lefts[:5]])

# For each left layout, blocked_of[v] is the first left position whose node
# is adjacent to v (sentinel n = "never blocked"). A node may take right
# position k+j+1 only while blocked_of[v] > j, and the candidate pools shrink
# as j grows, so feasibility reduces to counting how many nodes survive each
# threshold.
for pl in lefts[:4]:
    index = build_blocked_index(g, pl)
    right = check_hall_and_build_right(index, n, k)
    print(f"left={pl.assignment}  blocked={index.blocked_of}  ", end="")
    if right is None:
        print("no compatible right layout")
    else:
        cert = assemble_certificate(pl, right, g, k)
        print(f"right={right}  layout={list(cert.inverse)}  bandwidth={layout_bandwidth(g, cert)}")

# The first feasible left layout ends the search; that is why affirmative
# instances are usually decided after a tiny fraction of the enumeration,
# while negative answers must pay for all of it.
hits = sum(
    1
    for pl in lefts
    if check_hall_and_build_right(build_blocked_index(g, pl), n, k) is not None
)
print(f"{hits} of {len(lefts)} left layouts admit a right layout")
