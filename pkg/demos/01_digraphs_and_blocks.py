"""
Building digraphs and reading off their block structure
=======================================================
"""

from dpdi import bidirect, blocks, build_digraph, classify_brick, degrees

# A digraph is a vertex count plus a set of arcs.  Loops and parallel
# arcs are rejected; opposite arcs (a digon) are fine.
triangle = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
print("triangle arcs:", triangle.sorted_arcs)
print("degrees (out, in):", degrees(triangle))

# bidirect() saves typing when every edge should run both ways.
k4 = bidirect(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
print("bidirected K4 has", k4.arc_count, "arcs")

# Blocks are the maximal pieces without a cut vertex.  A "bowtie" of two
# digons sharing vertex 0 splits into two blocks.
bowtie = build_digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0)])
decomposition = blocks(bowtie)
for block in decomposition.blocks:
    print("block", block.vertices, "arcs", block.arcs)
print("cut vertices:", sorted(decomposition.cut_vertices))

# Three families of blocks matter for degree coloring: directed cycles,
# bidirected complete digraphs, and bidirected cycles.  classify_brick
# names them and rejects everything else.
print(classify_brick(triangle))
print(classify_brick(k4))
print(classify_brick(bidirect(5, [(i, (i + 1) % 5) for i in range(5)])))
print(classify_brick(build_digraph(3, [(0, 1), (1, 2)])))
