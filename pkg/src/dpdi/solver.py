"""Decision procedures: acyclic transversals, minimality, shifting, and the
chromatic numbers (dichromatic, list, DP) at desk scale.

Color sets are tiny, so searches run on flattened color ids with bitmask
adjacency.  Every exhaustive enumeration is budgeted and deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .covers import Configuration, make_cover
from .digraph import (
    CANONICAL_MAX,
    Digraph,
    bidirect,
    bits_to_digraph,
    canonical_form,
    degrees,
    has_directed_cycle,
    is_eulerian,
    underlying_is_connected,
)

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_COVER_BUDGET",
    "Budget",
    "BudgetExceeded",
    "SolveResult",
    "ShiftUndefined",
    "ShiftAmbiguous",
    "KMaxExceeded",
    "ChromaticReport",
    "find_acyclic_transversal",
    "transversal_is_acyclic",
    "is_minimal_uncolorable",
    "shift",
    "greedy_transversal",
    "greedy_bound",
    "enumerate_normalized_covers",
    "dp_colorable_k",
    "dp_colorable_k_unreduced",
    "dp_colorable_k_symmetric",
    "dp_degree_colorable_oracle",
    "dichromatic_number",
    "list_chromatic_number",
    "undirected_dp_chromatic_number",
    "dp_chromatic_number",
    "chromatic_report",
    "is_list_colorable",
    "acyclic_transversals_excluding",
]

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_COVER_BUDGET = 10**7


@dataclass(frozen=True)
class Budget:
    """Caps: search nodes per solve, covers per enumeration."""

    nodes: int = DEFAULT_NODE_BUDGET
    covers: int = DEFAULT_COVER_BUDGET


DEFAULT_BUDGET = Budget()


class BudgetExceeded(RuntimeError):
    """An enumeration or search hit its cap; never reported as a verdict."""

    def __init__(self, kind: str, limit: int):
        super().__init__(f"{kind} budget of {limit} exceeded")
        self.kind = kind
        self.limit = limit


class ShiftUndefined(ValueError):
    """No matched color of the shifted color lies on the transversal."""


class ShiftAmbiguous(ValueError):
    """More than one matched color of the shifted color lies on the transversal."""


class KMaxExceeded(RuntimeError):
    """List-chromatic search exhausted its cap; carries the lower bound."""

    def __init__(self, lower_bound: int):
        super().__init__(f"list chromatic number is at least {lower_bound}")
        self.lower_bound = lower_bound


@dataclass(frozen=True)
class SolveResult:
    colorable: bool
    transversal: tuple[int, ...] | None
    nodes_expanded: int
    # False only for a heuristic give-up, which proves nothing.
    proof: bool = True


# ---------------------------------------------------------------------------
# Bitmask kernel.
# ---------------------------------------------------------------------------


def _offsets(sizes: Sequence[int]) -> tuple[list[int], int]:
    offsets = []
    total = 0
    for s in sizes:
        offsets.append(total)
        total += s
    return offsets, total


def _search_order(digraph: Digraph, sizes: Sequence[int]) -> list[int]:
    # Descending max degree, then ascending index.
    degs = degrees(digraph)
    return sorted(range(digraph.n), key=lambda v: (-max(degs[v]), v))


def _out_masks(config: Configuration, offsets: Sequence[int], total: int) -> list[int]:
    masks = [0] * total
    for (u, v), pairs in config.cover.matchings.items():
        for i, j in pairs:
            masks[offsets[u] + i] |= 1 << (offsets[v] + j)
    return masks


def _reaches(start: int, chosen: int, out_masks: list[int]) -> bool:
    # Directed path from any out-neighbor of start back to start inside chosen.
    target = 1 << start
    seen = 0
    frontier = out_masks[start] & chosen
    while frontier:
        if frontier & target:
            return True
        seen |= frontier
        step = 0
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            step |= out_masks[low.bit_length() - 1]
        frontier = step & chosen & ~seen
    return False


def _solve_masks(
    n: int,
    sizes: Sequence[int],
    offsets: Sequence[int],
    order: Sequence[int],
    out_masks: list[int],
    node_cap: int,
) -> tuple[bool, tuple[int, ...] | None, int]:
    """Backtracking over vertex color choices with an incremental cycle check:
    a fresh directed cycle must pass through the color just placed."""
    choice = [-1] * n
    trial = [0] * n
    chosen = 0
    nodes = 0
    pos = 0
    while True:
        v = order[pos]
        base = offsets[v]
        placed = False
        c = trial[pos]
        while c < sizes[v]:
            nodes += 1
            if nodes > node_cap:
                raise BudgetExceeded("nodes", node_cap)
            cid = base + c
            new_chosen = chosen | (1 << cid)
            if not _reaches(cid, new_chosen, out_masks):
                choice[v] = c
                trial[pos] = c + 1
                chosen = new_chosen
                placed = True
                break
            c += 1
        if placed:
            pos += 1
            if pos == n:
                return True, tuple(choice), nodes
            trial[pos] = 0
        else:
            pos -= 1
            if pos < 0:
                return False, None, nodes
            w = order[pos]
            chosen &= ~(1 << (offsets[w] + choice[w]))
    # unreachable


def find_acyclic_transversal(config: Configuration, budget: Budget | None = None) -> SolveResult:
    """Exact search for one color per vertex inducing no directed color cycle.

    Deterministic: vertices in descending max-degree order, colors ascending.
    """
    budget = budget or DEFAULT_BUDGET
    sizes = config.sizes
    if any(s == 0 for s in sizes):
        return SolveResult(False, None, 0)
    n = config.digraph.n
    offsets, total = _offsets(sizes)
    order = _search_order(config.digraph, sizes)
    masks = _out_masks(config, offsets, total)
    ok, transversal, nodes = _solve_masks(n, sizes, offsets, order, masks, budget.nodes)
    return SolveResult(ok, transversal, nodes)


def transversal_is_acyclic(
    config: Configuration, transversal: Sequence[int] | Mapping[int, int]
) -> bool:
    """Independent re-check: materialize the chosen colors' arcs on the host
    vertices and run the plain digraph cycle test."""
    if isinstance(transversal, Mapping):
        if sorted(transversal) != list(range(config.digraph.n)):
            return False
        transversal = [transversal[v] for v in range(config.digraph.n)]
    if len(transversal) != config.digraph.n:
        return False
    for v, c in enumerate(transversal):
        if not 0 <= c < config.sizes[v]:
            return False
    arcs = [
        (u, v)
        for (u, v), pairs in config.cover.matchings.items()
        if (transversal[u], transversal[v]) in pairs
    ]
    return not has_directed_cycle(Digraph(config.digraph.n, frozenset(arcs)))


def is_minimal_uncolorable(config: Configuration, budget: Budget | None = None) -> bool:
    """Uncolorable, but colorable after deleting any single color arc."""
    from .covers import delete_h_arc

    if find_acyclic_transversal(config, budget).colorable:
        return False
    for arc in config.digraph.sorted_arcs:
        for pair in config.pairs(arc):
            thinned = delete_h_arc(config, arc, pair)
            if not find_acyclic_transversal(thinned, budget).colorable:
                return False
    return True


def shift(
    config: Configuration,
    v: int,
    transversal: Mapping[int, int],
    x: int,
    direction: str,
) -> tuple[int, dict[int, int]]:
    """Move the uncovered vertex: insert color x at v, evict the unique
    matched color of x on the transversal, and report its vertex.

    direction "out" follows pairings on arcs leaving v, "in" those entering.
    Raises ShiftUndefined / ShiftAmbiguous when the matched count is not one.
    """
    host = config.digraph
    if direction not in ("out", "in"):
        raise ValueError("direction must be 'out' or 'in'")
    if not 0 <= v < host.n:
        raise ValueError("vertex out of range")
    if set(transversal) != set(range(host.n)) - {v}:
        raise ValueError("transversal must cover exactly the other vertices")
    if not 0 <= x < config.sizes[v]:
        raise ValueError("color out of range")
    hits = []
    if direction == "out":
        for u in host.out_adj[v]:
            for i, j in config.pairs((v, u)):
                if i == x and transversal[u] == j:
                    hits.append(u)
    else:
        for u in host.in_adj[v]:
            for i, j in config.pairs((u, v)):
                if j == x and transversal[u] == i:
                    hits.append(u)
    if not hits:
        raise ShiftUndefined(f"color {x} at vertex {v} has no {direction}-matched color on the transversal")
    if len(hits) > 1:
        raise ShiftAmbiguous(f"color {x} at vertex {v} has {len(hits)} {direction}-matched colors on the transversal")
    target = hits[0]
    shifted = dict(transversal)
    del shifted[target]
    shifted[v] = x
    return target, shifted


def greedy_bound(digraph: Digraph) -> int:
    """max(max out-degree, max in-degree) + 1; sequential coloring always fits."""
    degs = degrees(digraph)
    return max(max(o, i) for o, i in degs) + 1 if degs else 1


def greedy_transversal(config: Configuration, order: Sequence[int]) -> SolveResult:
    """One pass in the given vertex order, smallest color with no out-pairing
    into an already chosen color.

    Every arc between chosen colors then runs from an earlier to a later
    vertex, so the result is acyclic.  Failure proves nothing (proof=False);
    success is guaranteed when every size is at least out-degree + 1.
    """
    host = config.digraph
    if sorted(order) != list(range(host.n)):
        raise ValueError("order must be a permutation of the vertices")
    offsets, total = _offsets(config.sizes)
    masks = _out_masks(config, offsets, total)
    chosen = 0
    choice = [-1] * host.n
    nodes = 0
    for v in order:
        base = offsets[v]
        for c in range(config.sizes[v]):
            nodes += 1
            if masks[base + c] & chosen == 0:
                chosen |= 1 << (base + c)
                choice[v] = c
                break
        else:
            return SolveResult(False, None, nodes, proof=False)
    return SolveResult(True, tuple(choice), nodes)


# ---------------------------------------------------------------------------
# Normalized cover enumeration.
# ---------------------------------------------------------------------------


def _maximum_matchings(a: int, b: int) -> list[tuple[tuple[int, int], ...]]:
    """All injective pairings that match every color on the smaller side."""
    if a <= b:
        return [
            tuple((i, image[i]) for i in range(a))
            for image in itertools.permutations(range(b), a)
        ]
    return [
        tuple(sorted((image[j], j) for j in range(b)))
        for image in itertools.permutations(range(a), b)
    ]


def _normalized_tree_matchings(a: int, b: int, child_is_target: bool) -> list[tuple[tuple[int, int], ...]]:
    """Pairings for a designated spanning-tree arc, the child's colors fixed.

    Relabeling the child's colors is a symmetry of the whole enumeration, so
    only the matched subset on the parent side stays free.
    """
    child, parent = (b, a) if child_is_target else (a, b)
    if parent <= child:
        return [tuple((i, i) for i in range(parent))]
    if child_is_target:
        return [
            tuple((s, t) for t, s in enumerate(subset))
            for subset in itertools.combinations(range(a), b)
        ]
    return [
        tuple((t, s) for t, s in enumerate(subset))
        for subset in itertools.combinations(range(b), a)
    ]


def _tree_designations(digraph: Digraph) -> dict[tuple[int, int], bool]:
    """BFS spanning tree of the underlying graph; one designated arc per tree
    edge, mapped to whether the child is the arc target."""
    from collections import deque

    designated: dict[tuple[int, int], bool] = {}
    seen = {0}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for c in digraph.neighbors[p]:
            if c in seen:
                continue
            seen.add(c)
            queue.append(c)
            if (p, c) in digraph.arcs:
                designated[(p, c)] = True
            else:
                designated[(c, p)] = False
    return designated


def _cover_options(digraph: Digraph, sizes: Sequence[int]):
    """Per sorted arc: list of (pairing, mask contribution) options."""
    offsets, total = _offsets(sizes)
    designated = _tree_designations(digraph)
    per_arc = []
    for u, v in digraph.sorted_arcs:
        if (u, v) in designated:
            pairings = _normalized_tree_matchings(sizes[u], sizes[v], designated[(u, v)])
        else:
            pairings = _maximum_matchings(sizes[u], sizes[v])
        options = [
            (pairs, tuple((offsets[u] + i, 1 << (offsets[v] + j)) for i, j in pairs))
            for pairs in pairings
        ]
        per_arc.append(options)
    return per_arc, offsets, total


def _search_uncolorable_cover(
    digraph: Digraph, sizes: Sequence[int], budget: Budget
) -> tuple[dict | None, int]:
    """Enumerate normalized maximum-pairing covers; return the first
    uncolorable one (as an arc->pairing dict) or None, plus the count."""
    n = digraph.n
    per_arc, offsets, total = _cover_options(digraph, sizes)
    arcs = digraph.sorted_arcs
    order = _search_order(digraph, sizes)
    size_list = list(sizes)
    covers = 0
    if any(s == 0 for s in size_list):
        # Any cover over an empty color set is uncolorable; the first is canonical.
        combo = [options[0] for options in per_arc]
        return {arc: pairs for arc, (pairs, _) in zip(arcs, combo)}, 1

    for combo in itertools.product(*per_arc):
        covers += 1
        if covers > budget.covers:
            raise BudgetExceeded("covers", budget.covers)
        masks = [0] * total
        for _, contrib in combo:
            for cid, bit in contrib:
                masks[cid] |= bit
        # Greedy pass: success certifies colorable (arcs only run forward).
        chosen = 0
        stuck = False
        for v in range(n):
            base = offsets[v]
            for c in range(size_list[v]):
                if masks[base + c] & chosen == 0:
                    chosen |= 1 << (base + c)
                    break
            else:
                stuck = True
                break
        if not stuck:
            continue
        ok, _, _ = _solve_masks(n, size_list, offsets, order, masks, budget.nodes)
        if not ok:
            return {arc: pairs for arc, (pairs, _) in zip(arcs, combo)}, covers
    return None, covers


def enumerate_normalized_covers(
    digraph: Digraph, sizes: Sequence[int], budget: Budget | None = None
) -> Iterator[dict]:
    """Yield every normalized maximum-pairing cover as an arc-to-pairs dict.

    Spanning-tree arcs are pinned as in the colorability search, so the
    yield is one representative per relabeling class.
    """
    budget = budget or DEFAULT_BUDGET
    per_arc, _, _ = _cover_options(digraph, sizes)
    arcs = digraph.sorted_arcs
    count = 0
    for combo in itertools.product(*per_arc):
        count += 1
        if count > budget.covers:
            raise BudgetExceeded("covers", budget.covers)
        yield {arc: pairs for arc, (pairs, _) in zip(arcs, combo)}


def dp_colorable_k(
    digraph: Digraph, k: int, budget: Budget | None = None
) -> tuple[bool, Configuration | None]:
    """Decide DP-k-colorability by exhausting normalized covers.

    Covers carry exactly k colors per vertex and full bijection pairings,
    with one designated spanning-tree arc per underlying tree edge pinned to
    the identity; surplus colors and partial pairings never help an
    uncolorable cover, and relabeling reaches every bijection pattern.
    Returns (False, witness) on the first uncolorable cover found.
    """
    if not underlying_is_connected(digraph):
        raise ValueError("DP-colorability search requires a connected digraph")
    if k < 0:
        raise ValueError("k must be nonnegative")
    budget = budget or DEFAULT_BUDGET
    witness, _ = _search_uncolorable_cover(digraph, [k] * digraph.n, budget)
    if witness is None:
        return True, None
    return False, Configuration(digraph, make_cover(digraph, [k] * digraph.n, witness))


def dp_degree_colorable_oracle(
    digraph: Digraph, budget: Budget | None = None
) -> tuple[bool, Configuration | None]:
    """Exhaustive DP-degree-colorability decision, independent of the
    block-structure recognizer.

    A non-Eulerian host is immediately colorable: an uncolorable
    degree-feasible cover forces every size to equal both degrees.  On an
    Eulerian host it suffices to exhaust normalized maximum-pairing covers
    with sizes exactly the degrees.
    """
    if not underlying_is_connected(digraph):
        raise ValueError("oracle requires a connected digraph")
    budget = budget or DEFAULT_BUDGET
    if not is_eulerian(digraph):
        return True, None
    sizes = [o for o, _ in degrees(digraph)]
    witness, _ = _search_uncolorable_cover(digraph, sizes, budget)
    if witness is None:
        return True, None
    return False, Configuration(digraph, make_cover(digraph, sizes, witness))


def _all_partial_pairings(a: int, b: int) -> list[tuple[tuple[int, int], ...]]:
    """Every injective partial pairing between color sets of sizes a and b."""
    out = []
    for r in range(min(a, b) + 1):
        for sources in itertools.combinations(range(a), r):
            for targets in itertools.permutations(range(b), r):
                out.append(tuple(sorted(zip(sources, targets))))
    return out


def dp_colorable_k_unreduced(
    digraph: Digraph, k: int, budget: Budget | None = None
) -> tuple[bool, Configuration | None]:
    """DP-k-colorability by brute force over every cover: all partial
    pairings on every arc, no normalization.  Only for cross-checking the
    reduced enumeration on tiny instances."""
    if not underlying_is_connected(digraph):
        raise ValueError("DP-colorability search requires a connected digraph")
    budget = budget or DEFAULT_BUDGET
    n = digraph.n
    sizes = [k] * n
    offsets, total = _offsets(sizes)
    arcs = digraph.sorted_arcs
    options = _all_partial_pairings(k, k)
    order = _search_order(digraph, sizes)
    covers = 0
    for combo in itertools.product(options, repeat=len(arcs)):
        covers += 1
        if covers > budget.covers:
            raise BudgetExceeded("covers", budget.covers)
        if k == 0:
            ok = n == 0
        else:
            masks = [0] * total
            for (u, v), pairs in zip(arcs, combo):
                for i, j in pairs:
                    masks[offsets[u] + i] |= 1 << (offsets[v] + j)
            ok, _, _ = _solve_masks(n, sizes, offsets, order, masks, budget.nodes)
        if not ok:
            matchings = {arc: pairs for arc, pairs in zip(arcs, combo)}
            return False, Configuration(digraph, make_cover(digraph, sizes, matchings))
    return True, None


# ---------------------------------------------------------------------------
# Symmetric covers of bidirected hosts (the undirected side).
# ---------------------------------------------------------------------------


def _search_uncolorable_symmetric_cover(
    digraph: Digraph, k: int, budget: Budget
) -> tuple[dict | None, int]:
    """Like _search_uncolorable_cover, but one bijection per underlying edge,
    mirrored on both arcs; spanning-tree edges pinned to the identity."""
    n = digraph.n
    sizes = [k] * n
    offsets, total = _offsets(sizes)
    designated = _tree_designations(digraph)
    tree_edges = {(min(u, v), max(u, v)) for u, v in designated}
    edges = sorted({(min(u, v), max(u, v)) for u, v in digraph.arcs})
    identity = tuple((i, i) for i in range(k))
    per_edge = []
    for u, v in edges:
        bijections = [identity] if (u, v) in tree_edges else _maximum_matchings(k, k)
        options = []
        for pairs in bijections:
            back = tuple(sorted((j, i) for i, j in pairs))
            contrib = tuple(
                [(offsets[u] + i, 1 << (offsets[v] + j)) for i, j in pairs]
                + [(offsets[v] + j, 1 << (offsets[u] + i)) for i, j in pairs]
            )
            options.append(((pairs, back), contrib))
        per_edge.append(options)
    order = _search_order(digraph, sizes)
    covers = 0
    if k == 0:
        combo = [options[0] for options in per_edge]
        out = {}
        for (u, v), ((pairs, back), _) in zip(edges, combo):
            out[(u, v)] = pairs
            out[(v, u)] = back
        return out, 1
    for combo in itertools.product(*per_edge):
        covers += 1
        if covers > budget.covers:
            raise BudgetExceeded("covers", budget.covers)
        masks = [0] * total
        for _, contrib in combo:
            for cid, bit in contrib:
                masks[cid] |= bit
        ok, _, _ = _solve_masks(n, sizes, offsets, order, masks, budget.nodes)
        if not ok:
            out = {}
            for (u, v), ((pairs, back), _) in zip(edges, combo):
                out[(u, v)] = pairs
                out[(v, u)] = back
            return out, covers
    return None, covers


def dp_colorable_k_symmetric(
    digraph: Digraph, k: int, budget: Budget | None = None
) -> tuple[bool, Configuration | None]:
    """DP-k-colorability of a bidirected host decided over symmetric covers
    only; this is the undirected notion on the underlying graph."""
    from .digraph import is_bidirected

    if not is_bidirected(digraph) or not underlying_is_connected(digraph):
        raise ValueError("symmetric search requires a connected bidirected digraph")
    budget = budget or DEFAULT_BUDGET
    witness, _ = _search_uncolorable_symmetric_cover(digraph, k, budget)
    if witness is None:
        return True, None
    return False, Configuration(digraph, make_cover(digraph, [k] * digraph.n, witness))


def undirected_dp_chromatic_number(n: int, edges, budget: Budget | None = None) -> int:
    """DP-chromatic number of a connected graph via symmetric covers of its
    bidirected digraph; capped by max degree + 1, where greedy always wins."""
    host = bidirect(n, edges)
    cap = greedy_bound(host)
    for k in range(1, cap):
        if dp_colorable_k_symmetric(host, k, budget)[0]:
            return k
    return cap


# ---------------------------------------------------------------------------
# Chromatic numbers.
# ---------------------------------------------------------------------------


def _induced_has_cycle(digraph: Digraph, members: Sequence[int]) -> bool:
    inside = set(members)
    arcs = [(u, v) for u, v in digraph.arcs if u in inside and v in inside]
    index = {w: i for i, w in enumerate(sorted(inside))}
    sub = Digraph(len(inside), frozenset((index[u], index[v]) for u, v in arcs))
    return has_directed_cycle(sub)


@lru_cache(maxsize=None)
def dichromatic_number(digraph: Digraph) -> int:
    """Fewest classes partitioning the vertices into acyclic sets (n <= 8)."""
    n = digraph.n
    if n > 8:
        raise ValueError("dichromatic number supported up to 8 vertices")
    if n == 0:
        raise ValueError("digraph has no vertices")
    if not has_directed_cycle(digraph):
        return 1
    for k in range(2, n + 1):
        classes: list[list[int]] = [[] for _ in range(k)]

        def place(v: int, used: int) -> bool:
            if v == n:
                return True
            for c in range(min(used + 1, k)):
                classes[c].append(v)
                if not _induced_has_cycle(digraph, classes[c]) and place(
                    v + 1, max(used, c + 1)
                ):
                    return True
                classes[c].pop()
            return False

        if place(0, 0):
            return k
    return n


def is_list_colorable(digraph: Digraph, lists: Sequence[Sequence[int]]) -> bool:
    """Plain product search: some pick of one label per vertex leaves every
    label class acyclic.  Doubles as the oracle for the cover reduction."""
    ordered = [tuple(sorted(set(lst))) for lst in lists]
    if any(not lst for lst in ordered):
        return False
    for assignment in itertools.product(*ordered):
        for label in set(assignment):
            members = [v for v, lab in enumerate(assignment) if lab == label]
            if _induced_has_cycle(digraph, members):
                break
        else:
            return True
    return False


def _canonical_list_assignments(n: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All per-vertex k-sets of labels, deduplicated up to label renaming:
    fresh labels enter in increasing contiguous order."""

    def grow(idx: int, used: int, acc: tuple):
        if idx == n:
            yield acc
            return
        for cand in itertools.combinations(range(used + k), k):
            fresh = [x for x in cand if x >= used]
            if fresh != list(range(used, used + len(fresh))):
                continue
            yield from grow(idx + 1, used + len(fresh), acc + (cand,))

    yield from grow(0, 0, ())


@lru_cache(maxsize=None)
def list_chromatic_number(digraph: Digraph, k_max: int) -> int:
    """Smallest k <= k_max such that every k-list assignment is colorable.

    Bounded to n <= 4 and k_max <= 3; raises KMaxExceeded past the cap.
    """
    n = digraph.n
    if n > 4 or k_max > 3:
        raise ValueError("list chromatic search supports n <= 4 and k_max <= 3")
    for k in range(1, k_max + 1):
        if all(
            is_list_colorable(digraph, assignment)
            for assignment in _canonical_list_assignments(n, k)
        ):
            return k
    raise KMaxExceeded(k_max + 1)


def dp_chromatic_number(digraph: Digraph, budget: Budget | None = None) -> int:
    """Smallest k with every k-cover colorable.

    Starts at the dichromatic number and is capped by max degree + 1, where
    greedy always succeeds, so the cap is returned without enumeration.
    """
    if not underlying_is_connected(digraph):
        raise ValueError("DP-chromatic number requires a connected digraph")
    if budget is None and digraph.n <= CANONICAL_MAX:
        return _dp_chromatic_cached(digraph.n, canonical_form(digraph))
    return _dp_chromatic_direct(digraph, budget or DEFAULT_BUDGET)


@lru_cache(maxsize=None)
def _dp_chromatic_cached(n: int, bits: int) -> int:
    return _dp_chromatic_direct(bits_to_digraph(n, bits), DEFAULT_BUDGET)


def _dp_chromatic_direct(digraph: Digraph, budget: Budget) -> int:
    cap = greedy_bound(digraph)
    for k in range(dichromatic_number(digraph), cap):
        if dp_colorable_k(digraph, k, budget)[0]:
            return k
    return cap


@dataclass(frozen=True)
class ChromaticReport:
    dichromatic: int
    list_chromatic: int | None
    dp_chromatic: int
    greedy_bound: int


def chromatic_report(
    digraph: Digraph,
    include_list: bool | None = None,
    budget: Budget | None = None,
) -> ChromaticReport:
    """All three numbers plus the greedy cap; the list number only at n <= 4
    (skipped by default past n = 3, where its own search gets slow)."""
    if include_list is None:
        include_list = digraph.n <= 3
    cap = greedy_bound(digraph)
    lst = list_chromatic_number(digraph, min(cap, 3)) if include_list else None
    return ChromaticReport(
        dichromatic=dichromatic_number(digraph),
        list_chromatic=lst,
        dp_chromatic=dp_chromatic_number(digraph, budget),
        greedy_bound=cap,
    )


# ---------------------------------------------------------------------------
# Transversal enumeration helpers for the structural fact checks.
# ---------------------------------------------------------------------------


def acyclic_transversals_excluding(config: Configuration, v: int) -> Iterator[dict[int, int]]:
    """All acyclic transversals of the configuration with vertex v removed,
    reported as maps over the remaining original vertices."""
    host = config.digraph
    if not 0 <= v < host.n:
        raise ValueError("vertex out of range")
    others = [w for w in range(host.n) if w != v]
    sizes = config.sizes
    offsets, total = _offsets(sizes)
    masks = _out_masks(config, offsets, total)

    def extend(idx: int, chosen: int, acc: dict[int, int]):
        if idx == len(others):
            yield dict(acc)
            return
        w = others[idx]
        base = offsets[w]
        for c in range(sizes[w]):
            cid = base + c
            new_chosen = chosen | (1 << cid)
            if not _reaches(cid, new_chosen, masks):
                acc[w] = c
                yield from extend(idx + 1, new_chosen, acc)
                del acc[w]

    yield from extend(0, 0, {})
