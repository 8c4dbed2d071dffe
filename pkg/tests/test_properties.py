import itertools

from hypothesis import assume, given, settings, strategies as st

from dpdi.covers import (
    Configuration,
    cover_from_lists,
    is_symmetric,
    make_cover,
    symmetrize,
    transpose_pairs,
    validate_cover,
)
from dpdi.digraph import (
    Digraph,
    bidirect,
    blocks,
    build_digraph,
    canonical_form,
    underlying_is_connected,
)
from dpdi.solver import (
    find_acyclic_transversal,
    is_list_colorable,
    transversal_is_acyclic,
)


@st.composite
def connected_digraphs(draw, max_n=4):
    n = draw(st.integers(min_value=2, max_value=max_n))
    possible = [(u, v) for u in range(n) for v in range(n) if u != v]
    picks = draw(st.lists(st.sampled_from(possible), max_size=len(possible)))
    digraph = build_digraph(n, picks)
    assume(underlying_is_connected(digraph))
    return digraph


@st.composite
def configurations(draw, max_n=3, max_size=2):
    digraph = draw(connected_digraphs(max_n=max_n))
    sizes = [
        draw(st.integers(min_value=1, max_value=max_size)) for _ in range(digraph.n)
    ]
    matchings = {}
    for u, v in digraph.sorted_arcs:
        rows = draw(
            st.lists(
                st.integers(min_value=0, max_value=sizes[u] - 1),
                unique=True,
                max_size=min(sizes[u], sizes[v]),
            )
        )
        columns = draw(st.permutations(range(sizes[v])))
        matchings[(u, v)] = [(i, columns[k]) for k, i in enumerate(rows)]
    return Configuration(digraph, make_cover(digraph, sizes, matchings))


@given(connected_digraphs(max_n=5))
def test_blocks_partition_arcs(digraph):
    decomposition = blocks(digraph)
    seen = [arc for block in decomposition.blocks for arc in block.arcs]
    assert sorted(seen) == sorted(digraph.sorted_arcs)

    membership = {}
    for block in decomposition.blocks:
        for v in block.vertices:
            membership.setdefault(v, 0)
            membership[v] += 1
    cut = {v for v, count in membership.items() if count > 1}
    assert cut == set(decomposition.cut_vertices)


@given(connected_digraphs(max_n=5), st.randoms())
def test_canonical_form_is_relabeling_invariant(digraph, rng):
    perm = list(range(digraph.n))
    rng.shuffle(perm)
    relabeled = build_digraph(
        digraph.n, [(perm[u], perm[v]) for u, v in digraph.sorted_arcs]
    )
    assert canonical_form(digraph) == canonical_form(relabeled)


@settings(deadline=None)
@given(configurations())
def test_solver_verdicts_are_sound(config):
    result = find_acyclic_transversal(config)
    if result.colorable:
        assert transversal_is_acyclic(config, result.transversal)
    else:
        # Cross-check by brute force against the independent acyclicity test.
        ranges = [range(size) for size in config.sizes]
        for assignment in itertools.product(*ranges):
            assert not transversal_is_acyclic(config, assignment)


@given(
    connected_digraphs(max_n=3),
    st.data(),
)
def test_list_coloring_routes_agree(digraph, data):
    lists = [
        data.draw(
            st.lists(
                st.integers(min_value=0, max_value=3),
                min_size=1,
                max_size=2,
                unique=True,
            )
        )
        for _ in range(digraph.n)
    ]
    direct = is_list_colorable(digraph, lists)
    via_cover = find_acyclic_transversal(
        Configuration(digraph, cover_from_lists(digraph, lists))
    ).colorable
    assert direct == via_cover


@st.composite
def bidirected_configurations(draw, max_n=3, max_size=2):
    n = draw(st.integers(min_value=2, max_value=max_n))
    possible = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(possible), min_size=1, unique=True))
    digraph = bidirect(n, edges)
    assume(underlying_is_connected(digraph))
    sizes = [draw(st.integers(min_value=1, max_value=max_size)) for _ in range(n)]
    matchings = {}
    for u, v in digraph.sorted_arcs:
        rows = draw(
            st.lists(
                st.integers(min_value=0, max_value=sizes[u] - 1),
                unique=True,
                max_size=min(sizes[u], sizes[v]),
            )
        )
        columns = draw(st.permutations(range(sizes[v])))
        matchings[(u, v)] = [(i, columns[k]) for k, i in enumerate(rows)]
    return Configuration(digraph, make_cover(digraph, sizes, matchings))


@given(bidirected_configurations())
def test_symmetrize_output_is_symmetric_and_stable(config):
    symmetric = symmetrize(config)
    assert is_symmetric(symmetric)
    assert symmetrize(symmetric).cover == symmetric.cover
    assert validate_cover(config.digraph, symmetric.cover)


@given(
    st.lists(
        st.tuples(st.integers(0, 5), st.integers(0, 5)),
        unique_by=(lambda p: p[0], lambda p: p[1]),
    )
)
def test_transpose_pairs_involution(pairs):
    pairs = tuple(sorted(pairs))
    assert tuple(sorted(transpose_pairs(transpose_pairs(pairs)))) == pairs
    assert all((j, i) in transpose_pairs(pairs) for i, j in pairs)
