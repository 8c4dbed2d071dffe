"""
Covers, configurations, and the transversal search
==================================================

A cover hands each vertex its own color set and pairs up colors along
each arc.  Coloring then means picking one color per vertex so that no
directed cycle runs entirely through matched pairs.
"""

from dpdi import (
    Configuration,
    build_digraph,
    c_config,
    find_acyclic_transversal,
    is_minimal_uncolorable,
    k_config,
    make_cover,
    shift,
    acyclic_transversals_excluding,
)

# Start from scratch on a digon.  Two colors each, matched identically
# in both directions: color i at vertex 0 corresponds to color i at 1.
digon = build_digraph(2, [(0, 1), (1, 0)])
cover = make_cover(
    digon,
    sizes=[2, 2],
    matchings={(0, 1): [(0, 0), (1, 1)], (1, 0): [(0, 0), (1, 1)]},
)
config = Configuration(digon, cover)
result = find_acyclic_transversal(config)
print("colorable:", result.colorable)
print("transversal:", result.transversal)
print("search nodes:", result.nodes_expanded)

# The classic obstructions come prebuilt.  k_config(n) is the bidirected
# clique with n-1 colors per vertex; c_config(p) the directed cycle with
# one color per vertex.  Both are uncolorable, and minimally so: delete
# any single matched pair and a transversal appears.
for config in (k_config(3), c_config(4)):
    print(
        config.digraph.arc_count,
        "arcs, colorable:",
        find_acyclic_transversal(config).colorable,
        "minimal:",
        is_minimal_uncolorable(config),
    )

# On a minimal cover the shift move walks transversals of the deleted
# vertex around the digraph.  Uncover vertex 0 of the directed triangle,
# pick its color, and shifting evicts exactly one neighbor each way.
config = c_config(3)
(transversal,) = acyclic_transversals_excluding(config, 0)
print("transversal avoiding 0:", transversal)
print("shift out:", shift(config, 0, transversal, 0, "out"))
print("shift in: ", shift(config, 0, transversal, 0, "in"))
