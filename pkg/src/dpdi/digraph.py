"""Loop-free digraphs on indexed vertices.

Structural queries (degrees, connectivity, directed cycles), block
decomposition of the underlying graph, brick classification, and canonical
enumeration of all connected digraphs of small order up to isomorphism.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

__all__ = [
    "ENUMERATION_MAX",
    "CANONICAL_MAX",
    "Digraph",
    "Brick",
    "NOT_BRICK",
    "Block",
    "BlockDecomposition",
    "build_digraph",
    "degrees",
    "is_eulerian",
    "underlying_is_connected",
    "blocks",
    "classify_brick",
    "is_complete_digraph",
    "is_bidirected",
    "has_directed_cycle",
    "bidirect",
    "enumerate_connected_digraphs",
    "enumerate_connected_graphs",
    "digraph_to_bits",
    "bits_to_digraph",
    "canonical_form",
    "instance_label",
]

# Canonical enumeration iterates all arc subsets; keep the order small.
ENUMERATION_MAX = 5
# Canonical forms minimize over all vertex permutations.
CANONICAL_MAX = 7


@dataclass(frozen=True, repr=False)
class Digraph:
    """Digraph on vertices 0..n-1 with no loops and no parallel arcs.

    Opposite arc pairs (u,v) and (v,u) are allowed; such a pair is a digon.
    Instances are immutable and hashable.
    """

    n: int
    arcs: frozenset[tuple[int, int]]

    @cached_property
    def sorted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            out[u].append(v)
        return tuple(tuple(vs) for vs in out)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            inc[v].append(u)
        return tuple(tuple(us) for us in inc)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Underlying-graph adjacency, sorted and without duplicates."""
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(tuple(sorted(s)) for s in nbr)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


def build_digraph(n: int, arcs) -> Digraph:
    """Validate and build a digraph; duplicate arcs collapse to one."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    arc_set: set[tuple[int, int]] = set()
    for u, v in arcs:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc ({u}, {v}) out of range for {n} vertices")
        arc_set.add((u, v))
    return Digraph(n, frozenset(arc_set))


def degrees(digraph: Digraph) -> tuple[tuple[int, int], ...]:
    """Per-vertex (out-degree, in-degree) pairs."""
    return tuple(
        (len(digraph.out_adj[v]), len(digraph.in_adj[v])) for v in range(digraph.n)
    )


def is_eulerian(digraph: Digraph) -> bool:
    """True iff every vertex has equal out- and in-degree."""
    return all(o == i for o, i in degrees(digraph))


def underlying_is_connected(digraph: Digraph) -> bool:
    """True iff the underlying graph is connected (single vertex counts)."""
    n = digraph.n
    if n == 0:
        return False
    if n == 1:
        return True
    seen = {0}
    queue = deque([0])
    nbr = digraph.neighbors
    while queue:
        u = queue.popleft()
        for v in nbr[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == n


def has_directed_cycle(digraph: Digraph) -> bool:
    """Kahn peeling: True iff some vertex survives repeated source removal."""
    n = digraph.n
    indeg = [len(digraph.in_adj[v]) for v in range(n)]
    queue = deque(v for v in range(n) if indeg[v] == 0)
    removed = 0
    while queue:
        u = queue.popleft()
        removed += 1
        for v in digraph.out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return removed != n


def is_bidirected(digraph: Digraph) -> bool:
    """True iff every arc has its opposite present."""
    return all((v, u) in digraph.arcs for u, v in digraph.arcs)


def is_complete_digraph(digraph: Digraph) -> bool:
    """True iff every ordered pair of distinct vertices is an arc.

    The single vertex and the digon both qualify.
    """
    n = digraph.n
    return len(digraph.arcs) == n * (n - 1)


def bidirect(n: int, edges) -> Digraph:
    """Digraph with both arc directions for each undirected edge."""
    arcs: list[tuple[int, int]] = []
    for u, v in edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return build_digraph(n, arcs)


# ---------------------------------------------------------------------------
# Blocks of the underlying graph.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """One block: its vertices and the arcs whose endpoints it owns."""

    vertices: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]


def blocks(digraph: Digraph) -> BlockDecomposition:
    """Blocks (biconnected components) of the underlying graph.

    Every arc lands in exactly one block: the block owning its underlying
    edge.  Requires a connected digraph; a single vertex forms one block.
    Blocks are sorted by vertex tuple, so the order is deterministic.
    """
    if not underlying_is_connected(digraph):
        raise ValueError("block decomposition requires a connected digraph")
    n = digraph.n
    if n == 1:
        return BlockDecomposition((Block((0,), frozenset()),), frozenset())

    adj = digraph.neighbors
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    edge_groups: list[list[tuple[int, int]]] = []
    cut: set[int] = set()
    root_blocks = 0
    timer = 0

    # Iterative low-point DFS from vertex 0; (vertex, next adjacency index).
    stack: list[list[int]] = [[0, 0]]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        u, i = stack[-1]
        if i < len(adj[u]):
            stack[-1][1] += 1
            v = adj[u][i]
            if v == parent[u]:
                continue
            if disc[v] == -1:
                parent[v] = u
                disc[v] = low[v] = timer
                timer += 1
                edge_stack.append((u, v))
                stack.append([v, 0])
            elif disc[v] < disc[u]:
                edge_stack.append((u, v))
                if disc[v] < low[u]:
                    low[u] = disc[v]
        else:
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                group = []
                while True:
                    edge = edge_stack.pop()
                    group.append(edge)
                    if edge == (p, u):
                        break
                edge_groups.append(group)
                if parent[p] == -1:
                    root_blocks += 1
                else:
                    cut.add(p)
    if root_blocks > 1:
        cut.add(0)

    edge_to_group: dict[tuple[int, int], int] = {}
    for gi, group in enumerate(edge_groups):
        for u, v in group:
            edge_to_group[(min(u, v), max(u, v))] = gi
    group_arcs: list[set[tuple[int, int]]] = [set() for _ in edge_groups]
    for u, v in digraph.arcs:
        group_arcs[edge_to_group[(min(u, v), max(u, v))]].add((u, v))

    built = [
        Block(tuple(sorted({w for e in group for w in e})), frozenset(arcs))
        for group, arcs in zip(edge_groups, group_arcs)
    ]
    built.sort(key=lambda b: b.vertices)
    return BlockDecomposition(tuple(built), frozenset(cut))


# ---------------------------------------------------------------------------
# Brick classification.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Brick:
    """Classification tag for the three brick shapes, or NotBrick.

    kind is one of "DirectedCycle", "BidirectedCycle", "BidirectedComplete",
    "NotBrick"; size is the cycle length or the order (0 for NotBrick).
    """

    kind: str
    size: int = 0

    def __str__(self) -> str:
        if self.kind == "NotBrick":
            return "NotBrick"
        return f"{self.kind}({self.size})"


NOT_BRICK = Brick("NotBrick", 0)


def classify_brick(digraph: Digraph) -> Brick:
    """Classify a connected digraph as one of the brick shapes.

    Precedence: the digon counts as DirectedCycle(2), and the bidirected
    triangle as BidirectedComplete(3).  BidirectedCycle starts at length 4.
    """
    if not underlying_is_connected(digraph):
        raise ValueError("brick classification requires a connected digraph")
    n = digraph.n
    if n == 1:
        return Brick("BidirectedComplete", 1)
    degs = degrees(digraph)
    if all(o == 1 and i == 1 for o, i in degs):
        return Brick("DirectedCycle", n)
    if is_complete_digraph(digraph):
        return Brick("BidirectedComplete", n)
    if (
        n >= 4
        and all(o == 2 and i == 2 for o, i in degs)
        and is_bidirected(digraph)
    ):
        return Brick("BidirectedCycle", n)
    return NOT_BRICK


# ---------------------------------------------------------------------------
# Bit encodings and canonical enumeration.
# ---------------------------------------------------------------------------


def _pair_pos(u: int, v: int, n: int) -> int:
    # Ordered pairs (u,v), u != v, in lexicographic order.
    return u * (n - 1) + (v if v < u else v - 1)


def digraph_to_bits(digraph: Digraph) -> int:
    """Encode the arc set as an integer over the n(n-1) ordered-pair slots."""
    n = digraph.n
    mask = 0
    for u, v in digraph.arcs:
        mask |= 1 << _pair_pos(u, v, n)
    return mask


def bits_to_digraph(n: int, mask: int) -> Digraph:
    """Inverse of digraph_to_bits."""
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and mask >> _pair_pos(u, v, n) & 1
    ]
    return Digraph(n, frozenset(arcs))


def _perm_bit_maps(n: int) -> list[list[int]]:
    maps = []
    for perm in itertools.permutations(range(n)):
        m = [0] * (n * (n - 1))
        for u in range(n):
            for v in range(n):
                if u != v:
                    m[_pair_pos(u, v, n)] = _pair_pos(perm[u], perm[v], n)
        maps.append(m)
    return maps


def _apply_bit_map(bit_map: list[int], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        mask ^= low
        out |= 1 << bit_map[low.bit_length() - 1]
    return out


def canonical_form(digraph: Digraph) -> int:
    """Minimum bit encoding over all vertex relabelings."""
    n = digraph.n
    if n > CANONICAL_MAX:
        raise ValueError(f"canonical form supports at most {CANONICAL_MAX} vertices")
    mask = digraph_to_bits(digraph)
    if n <= 1:
        return mask
    return min(_apply_bit_map(m, mask) for m in _perm_bit_maps(n))


def instance_label(digraph: Digraph) -> str:
    """Replayable identifier: order plus canonical bit-string."""
    n = digraph.n
    if n <= 1:
        return f"{n}:0"
    bits = n * (n - 1)
    return f"{n}:{format(canonical_form(digraph), f'0{bits}b')}"


def _mask_connected(n: int, mask: int) -> bool:
    nbr: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u != v and mask >> _pair_pos(u, v, n) & 1:
                nbr[u].add(v)
                nbr[v].add(u)
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop()
        for v in nbr[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == n


@lru_cache(maxsize=None)
def _connected_digraph_masks(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    bits = n * (n - 1)
    maps = [m for m in _perm_bit_maps(n) if m != sorted(m)]
    if n <= 4:
        reps = [
            mask
            for mask in range(1 << bits)
            if all(_apply_bit_map(m, mask) >= mask for m in maps)
            and _mask_connected(n, mask)
        ]
        return tuple(reps)

    # Order 5 has 2^20 arc sets; vectorize the canonical minimization by
    # splitting each mask into two 10-bit halves with per-permutation tables.
    masks = np.arange(1 << bits, dtype=np.uint32)
    lo = masks & 0x3FF
    hi = masks >> 10
    canon = masks.copy()
    for m in maps:
        lo_tbl = np.empty(1 << 10, dtype=np.uint32)
        hi_tbl = np.empty(1 << 10, dtype=np.uint32)
        for x in range(1 << 10):
            lo_tbl[x] = _apply_bit_map(m, x)
            hi_tbl[x] = _apply_bit_map(m, x << 10)
        np.minimum(canon, lo_tbl[lo] | hi_tbl[hi], out=canon)
    reps = np.flatnonzero(canon == masks)
    return tuple(int(r) for r in reps if _mask_connected(n, int(r)))


def enumerate_connected_digraphs(n: int):
    """Yield one representative per isomorphism class of connected digraphs.

    Representatives carry the minimum bit encoding of their class and come
    out in ascending encoding order.  Supported for 1 <= n <= 5.
    """
    if not 1 <= n <= ENUMERATION_MAX:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX}")
    for mask in _connected_digraph_masks(n):
        yield bits_to_digraph(n, mask)


def _edge_pos(u: int, v: int, n: int) -> int:
    if u > v:
        u, v = v, u
    # Unordered pairs in lexicographic order.
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


@lru_cache(maxsize=None)
def _connected_graph_edge_sets(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n == 1:
        return ((),)
    pairs = list(itertools.combinations(range(n), 2))
    bits = len(pairs)
    maps = []
    for perm in itertools.permutations(range(n)):
        m = [0] * bits
        for u, v in pairs:
            m[_edge_pos(u, v, n)] = _edge_pos(perm[u], perm[v], n)
        if m != sorted(m):
            maps.append(m)
    out = []
    for mask in range(1 << bits):
        if any(_apply_bit_map(m, mask) < mask for m in maps):
            continue
        edges = tuple(p for p in pairs if mask >> _edge_pos(*p, n) & 1)
        nbr: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            nbr[u].add(v)
            nbr[v].add(u)
        seen = {0}
        queue = [0]
        while queue:
            u = queue.pop()
            for v in nbr[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) == n:
            out.append(edges)
    return tuple(out)


def enumerate_connected_graphs(n: int):
    """Yield edge tuples, one per isomorphism class of connected graphs.

    Companion to bidirect for the bidirected-equivalence checks; 1 <= n <= 5.
    """
    if not 1 <= n <= ENUMERATION_MAX:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX}")
    yield from _connected_graph_edge_sets(n)
