import itertools

import pytest

from dpdi.digraph import (
    Brick,
    NOT_BRICK,
    bidirect,
    bits_to_digraph,
    blocks,
    build_digraph,
    canonical_form,
    classify_brick,
    degrees,
    digraph_to_bits,
    enumerate_connected_digraphs,
    enumerate_connected_graphs,
    has_directed_cycle,
    instance_label,
    is_bidirected,
    is_complete_digraph,
    is_eulerian,
    underlying_is_connected,
)

C3 = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
DIGON = build_digraph(2, [(0, 1), (1, 0)])
BK3 = bidirect(3, [(0, 1), (1, 2), (0, 2)])
PAW = build_digraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


def test_build_rejects_loops_and_range():
    with pytest.raises(ValueError, match="loop at vertex 1"):
        build_digraph(2, [(1, 1)])
    with pytest.raises(ValueError, match="out of range"):
        build_digraph(2, [(0, 2)])
    with pytest.raises(ValueError):
        build_digraph(-1, [])


def test_build_collapses_duplicates():
    d = build_digraph(2, [(0, 1), (0, 1)])
    assert d.arc_count == 1


def test_adjacency_views():
    assert C3.out_adj == ((1,), (2,), (0,))
    assert C3.in_adj == ((2,), (0,), (1,))
    assert C3.neighbors == ((1, 2), (0, 2), (0, 1))
    assert C3.sorted_arcs == ((0, 1), (1, 2), (2, 0))


def test_degree_predicates():
    assert degrees(C3) == ((1, 1), (1, 1), (1, 1))
    assert is_eulerian(C3)
    assert not is_eulerian(build_digraph(2, [(0, 1)]))
    assert degrees(PAW) == ((1, 1), (1, 1), (2, 1), (0, 1))


def test_connectivity():
    assert underlying_is_connected(C3)
    assert not underlying_is_connected(build_digraph(3, [(0, 1)]))
    assert underlying_is_connected(build_digraph(1, []))
    assert not underlying_is_connected(build_digraph(0, []))


def test_directed_cycle_detection():
    assert has_directed_cycle(C3)
    assert has_directed_cycle(DIGON)
    assert not has_directed_cycle(build_digraph(3, [(0, 1), (0, 2), (1, 2)]))
    assert not has_directed_cycle(build_digraph(1, []))


def test_bidirected_and_complete():
    assert is_bidirected(DIGON)
    assert is_bidirected(BK3)
    assert not is_bidirected(C3)
    assert is_complete_digraph(DIGON)
    assert is_complete_digraph(BK3)
    assert is_complete_digraph(build_digraph(1, []))
    assert not is_complete_digraph(C3)
    assert bidirect(2, [(0, 1)]) == DIGON


def test_blocks_paw():
    dec = blocks(PAW)
    assert [b.vertices for b in dec.blocks] == [(0, 1, 2), (2, 3)]
    assert dec.cut_vertices == frozenset({2})
    # Arcs are partitioned between the blocks.
    all_arcs = [a for b in dec.blocks for a in b.arcs]
    assert sorted(all_arcs) == sorted(PAW.arcs)
    assert len(all_arcs) == PAW.arc_count


def test_blocks_single_vertex_and_errors():
    dec = blocks(build_digraph(1, []))
    assert len(dec.blocks) == 1
    assert dec.blocks[0].vertices == (0,)
    assert dec.cut_vertices == frozenset()
    with pytest.raises(ValueError, match="connected"):
        blocks(build_digraph(2, []))


def test_blocks_star_of_digons():
    star = bidirect(4, [(0, 1), (0, 2), (0, 3)])
    dec = blocks(star)
    assert len(dec.blocks) == 3
    assert dec.cut_vertices == frozenset({0})


def test_classify_bricks():
    assert classify_brick(build_digraph(1, [])) == Brick("BidirectedComplete", 1)
    assert classify_brick(DIGON) == Brick("DirectedCycle", 2)
    assert classify_brick(C3) == Brick("DirectedCycle", 3)
    assert classify_brick(BK3) == Brick("BidirectedComplete", 3)
    bc5 = bidirect(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert classify_brick(bc5) == Brick("BidirectedCycle", 5)
    assert classify_brick(build_digraph(2, [(0, 1)])) is NOT_BRICK
    assert classify_brick(PAW) is NOT_BRICK
    assert str(Brick("DirectedCycle", 2)) == "DirectedCycle(2)"
    assert str(NOT_BRICK) == "NotBrick"
    with pytest.raises(ValueError, match="connected"):
        classify_brick(build_digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)]))


def test_bits_round_trip():
    for d in (C3, DIGON, BK3, PAW):
        assert bits_to_digraph(d.n, digraph_to_bits(d)) == d


def test_canonical_form_is_relabeling_invariant():
    for perm in itertools.permutations(range(4)):
        relabeled = build_digraph(4, [(perm[u], perm[v]) for u, v in PAW.arcs])
        assert canonical_form(relabeled) == canonical_form(PAW)


def test_instance_label_shape():
    assert instance_label(build_digraph(1, [])) == "1:0"
    label = instance_label(DIGON)
    assert label.startswith("2:") and len(label) == 4


def _oracle_connected_class_count(n: int) -> int:
    """Independent count of connected digraph classes: walk all arc sets,
    mark whole orbits under vertex permutations."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    perms = list(itertools.permutations(range(n)))
    seen: set[frozenset] = set()
    count = 0
    for bits in range(1 << len(pairs)):
        arcs = frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)
        if arcs in seen:
            continue
        orbit = {frozenset((pi[u], pi[v]) for u, v in arcs) for pi in perms}
        seen.update(orbit)
        nbr = [set() for _ in range(n)]
        for u, v in arcs:
            nbr[u].add(v)
            nbr[v].add(u)
        reach = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in nbr[u]:
                if v not in reach:
                    reach.add(v)
                    stack.append(v)
        if len(reach) == n:
            count += 1
    return count


# Class counts, frozen after the orbit-marking oracle confirmed them.
CONNECTED_DIGRAPH_CLASSES = {1: 1, 2: 2, 3: 13, 4: 199, 5: 9364}
CONNECTED_GRAPH_CLASSES = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_orbit_oracle(n):
    listed = list(enumerate_connected_digraphs(n))
    assert len(listed) == _oracle_connected_class_count(n)
    assert len(listed) == CONNECTED_DIGRAPH_CLASSES[n]
    # Distinct classes: canonical forms must not repeat.
    forms = {canonical_form(d) for d in listed}
    assert len(forms) == len(listed)
    assert all(underlying_is_connected(d) for d in listed)


def test_enumeration_order_five():
    count = sum(1 for _ in enumerate_connected_digraphs(5))
    assert count == CONNECTED_DIGRAPH_CLASSES[5]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_graph_enumeration_counts(n):
    listed = list(enumerate_connected_graphs(n))
    assert len(listed) == CONNECTED_GRAPH_CLASSES[n]
    for edges in listed:
        assert underlying_is_connected(bidirect(n, edges))


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_connected_digraphs(0))
    with pytest.raises(ValueError):
        list(enumerate_connected_digraphs(6))
