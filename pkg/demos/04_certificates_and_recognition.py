"""
Degree colorability, bad covers, and recognizing them
=====================================================

Can every cover with as many colors per vertex as its degree be
colored?  The answer is structural: it fails exactly when every block
of the digraph is a directed cycle, a bidirected clique, or a
bidirected cycle.  When it fails, a concrete uncolorable cover is the
certificate, and the recognizer can check such a certificate without
re-running any search.
"""

from dpdi import (
    Configuration,
    bidirect,
    build_digraph,
    degree_colorability,
    find_acyclic_transversal,
    is_minimal_uncolorable,
    recognize_constructible,
    delete_h_arc,
)

# The bowtie: two digons sharing a vertex.  Both blocks are directed
# 2-cycles, so degree-sized covers can fail.
bowtie = build_digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0)])
verdict = degree_colorability(bowtie)
print("dp-degree-colorable:", verdict.colorable)
for block, brick in verdict.blocks:
    print("  block", block.vertices, "is", brick)

bad = verdict.bad_cover
print("bad cover sizes:", bad.sizes)
print("really uncolorable:", not find_acyclic_transversal(bad).colorable)
print("minimally so:", is_minimal_uncolorable(bad))

# The recognizer decomposes the cover along the blocks and checks each
# piece against the expected pairing pattern.  No search involved.
recognition = recognize_constructible(bad)
print("recognized:", bool(recognition))
for piece in recognition.decomposition.pieces:
    print("  piece", piece.kind, "on", piece.vertices)

# Damage the certificate and the recognizer pinpoints what broke.
damaged = delete_h_arc(bad, (0, 1), bad.pairs((0, 1))[0])
failed = recognize_constructible(damaged)
print("damaged verdict:", bool(failed), "|", failed.failure, "|", failed.detail)

# One non-brick block anywhere flips the structural answer.
with_tail = build_digraph(4, [(0, 1), (1, 0), (0, 2), (2, 0), (2, 3)])
print("with a tail:", degree_colorability(with_tail).colorable)

# Bidirected odd wheels are another colorable case: the hub block is a
# clique, sure, but W5's rim plus hub is one big non-brick block.
wheel = bidirect(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])
print("bidirected W5:", degree_colorability(wheel).colorable)
