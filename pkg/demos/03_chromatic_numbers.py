"""
Three chromatic numbers and where they split
============================================

The dichromatic number asks for few acyclic color classes.  The list
version lets an adversary assign the color lists.  The DP version lets
the adversary also rewire which colors conflict across each arc.  The
chain dichromatic <= list <= DP always holds.
"""

from dpdi import (
    bidirect,
    build_digraph,
    chromatic_report,
    dichromatic_number,
    dp_chromatic_number,
    greedy_bound,
    list_chromatic_number,
    undirected_dp_chromatic_number,
)

# The directed triangle needs two classes; one class would have to hold
# the whole cycle.
c3 = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
print("C3:", chromatic_report(c3))

# The bidirected 4-cycle is the textbook split: chromatic and list
# numbers are 2, but correspondences can twist the cycle so 2 colors
# per vertex never suffice.
bc4 = bidirect(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("dichromatic:", dichromatic_number(bc4))
print("list:       ", list_chromatic_number(bc4, 3))
print("dp:         ", dp_chromatic_number(bc4))

# For bidirected digraphs the DP number matches the DP number of the
# underlying graph, so undirected values come for free.
print("undirected C4:", undirected_dp_chromatic_number(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))

# A degree bound always holds: max(out, in) degree plus one colors are
# enough.  Equality is rare; the toolkit knows exactly when (see the
# recognition demo).
for name, digraph in [
    ("path", build_digraph(3, [(0, 1), (1, 2)])),
    ("bidirected K3", bidirect(3, [(0, 1), (1, 2), (0, 2)])),
]:
    print(name, "dp =", dp_chromatic_number(digraph), "bound =", greedy_bound(digraph))
