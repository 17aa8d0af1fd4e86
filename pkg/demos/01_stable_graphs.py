"""Stable dual graphs of M_{g,n}-bar: counts by number of nodes, a few
automorphism groups, and the one-node (divisor) types."""
from spinmoduli.graphs import (
    automorphism_count,
    enumerate_one_node,
    enumerate_strata,
    strata_count_by_edges,
)

for g, n in [(0, 4), (0, 5), (1, 2), (1, 3), (2, 0)]:
    by_edges = strata_count_by_edges(g, n)
    print(f"M_{{{g},{n}}}-bar: {sum(by_edges.values())} strata, by codimension {by_edges}")

print()
print("one-node graphs of M_{1,3}-bar (the boundary divisors):")
for G in enumerate_one_node(1, 3):
    print(f"  {G.to_text()}   |Aut| = {automorphism_count(G)}")

# the deepest strata of M_{2,0}-bar are the trivalent graphs with 3 edges
print()
print("maximally degenerate genus-2 curves:")
for G in enumerate_strata(2, 0):
    if G.num_edges == 3:
        print(f"  {G.to_text()}   |Aut| = {automorphism_count(G)}")
