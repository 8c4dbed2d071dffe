"""Covers and configurations for DP-coloring of digraphs.

A cover assigns each vertex a set of colors (kept implicit as a size) and
each arc a partial injective pairing of colors.  The pairings are the arcs
of the implicit color digraph, which is never materialized: every algorithm
walks the matchings directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .digraph import (
    Digraph,
    bidirect,
    build_digraph,
    degrees,
    is_bidirected,
    underlying_is_connected,
)

__all__ = [
    "Cover",
    "Configuration",
    "make_cover",
    "validate_cover",
    "is_degree_feasible",
    "cover_from_lists",
    "k_config",
    "c_config",
    "bc_config_odd",
    "bc_config_even",
    "merge",
    "delete_h_arc",
    "delete_vertex",
    "is_symmetric",
    "symmetrize",
    "transpose_pairs",
]

Arc = tuple[int, int]
Pairing = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Cover:
    """Color-set sizes per vertex plus one pairing per arc.

    Plain data: build through make_cover for a normalized instance, and judge
    validity against a host digraph with validate_cover.
    """

    sizes: tuple[int, ...]
    matchings: dict[Arc, Pairing] = field(compare=True)

    def pairs(self, arc: Arc) -> Pairing:
        return self.matchings.get(arc, ())


def make_cover(digraph: Digraph, sizes, matchings: Mapping[Arc, Iterable] | None = None) -> Cover:
    """Normalize: every arc gets an entry, pairings become sorted tuples.

    Foreign keys (non-arcs) are kept so validate_cover can reject them.
    """
    table: dict[Arc, Pairing] = {arc: () for arc in digraph.sorted_arcs}
    if matchings:
        for arc, pairs in matchings.items():
            table[(int(arc[0]), int(arc[1]))] = tuple(
                sorted((int(i), int(j)) for i, j in pairs)
            )
    return Cover(tuple(int(s) for s in sizes), table)


def validate_cover(digraph: Digraph, cover: Cover) -> bool:
    """Check the cover invariants against a host digraph.

    One size per vertex; pairings attach only to arcs; every pair is in
    range and no color repeats on either side of a pairing.
    """
    if len(cover.sizes) != digraph.n:
        return False
    if any(s < 0 for s in cover.sizes):
        return False
    for arc, pairs in cover.matchings.items():
        if arc not in digraph.arcs:
            return False
        u, v = arc
        firsts = [i for i, _ in pairs]
        seconds = [j for _, j in pairs]
        if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
            return False
        for i, j in pairs:
            if not (0 <= i < cover.sizes[u] and 0 <= j < cover.sizes[v]):
                return False
    return True


@dataclass(frozen=True)
class Configuration:
    """A connected host digraph together with a valid cover."""

    digraph: Digraph
    cover: Cover

    def __post_init__(self) -> None:
        if not underlying_is_connected(self.digraph):
            raise ValueError("configuration requires a connected host digraph")
        if not validate_cover(self.digraph, self.cover):
            raise ValueError("cover is not valid for the host digraph")

    @property
    def sizes(self) -> tuple[int, ...]:
        return self.cover.sizes

    def pairs(self, arc: Arc) -> Pairing:
        return self.cover.pairs(arc)


def is_degree_feasible(config: Configuration) -> bool:
    """True iff every color set is at least max(out-degree, in-degree)."""
    return all(
        size >= max(o, i)
        for size, (o, i) in zip(config.sizes, degrees(config.digraph))
    )


def cover_from_lists(digraph: Digraph, lists) -> Cover:
    """Cover induced by per-vertex color lists: equal labels get paired.

    Each list becomes a color set of its size, indexed by sorted label; an
    arc pairs index i at u with index j at v exactly when the labels match.
    """
    ordered = [tuple(sorted(set(lst))) for lst in lists]
    if len(ordered) != digraph.n:
        raise ValueError("one list per vertex required")
    matchings = {}
    for u, v in digraph.sorted_arcs:
        matchings[(u, v)] = [
            (i, ordered[v].index(label))
            for i, label in enumerate(ordered[u])
            if label in ordered[v]
        ]
    return make_cover(digraph, [len(lst) for lst in ordered], matchings)


# ---------------------------------------------------------------------------
# The three basic families.
# ---------------------------------------------------------------------------


def _identity(k: int) -> Pairing:
    return tuple((i, i) for i in range(k))


def k_config(n: int) -> Configuration:
    """Bidirected complete digraph with n-1 colors per vertex, all identity.

    The color digraph splits into n-1 disjoint complete layers.  n = 1 gives
    the empty color set, which no transversal can meet.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    host = bidirect(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    matchings = {arc: _identity(n - 1) for arc in host.sorted_arcs}
    return Configuration(host, make_cover(host, [n - 1] * n, matchings))


def c_config(p: int) -> Configuration:
    """Directed cycle with one color per vertex; the color digraph is a copy."""
    if p < 2:
        raise ValueError("cycle length must be at least 2")
    host = build_digraph(p, [(v, (v + 1) % p) for v in range(p)])
    matchings = {arc: ((0, 0),) for arc in host.sorted_arcs}
    return Configuration(host, make_cover(host, [1] * p, matchings))


def _bidirected_cycle(p: int) -> Digraph:
    return bidirect(p, [(v, (v + 1) % p) for v in range(p)])


def bc_config_odd(p: int) -> Configuration:
    """Bidirected odd cycle, two colors per vertex, identity throughout.

    The color digraph is two disjoint bidirected p-cycles.
    """
    if p < 5 or p % 2 == 0:
        raise ValueError("length must be odd and at least 5")
    host = _bidirected_cycle(p)
    matchings = {arc: _identity(2) for arc in host.sorted_arcs}
    return Configuration(host, make_cover(host, [2] * p, matchings))


def bc_config_even(p: int) -> Configuration:
    """Bidirected even cycle: identity everywhere except one crossed digon.

    Both directions between vertices 0 and 1 pair color 0 with color 1, so
    the color digraph is a single bidirected cycle of length 2p.
    """
    if p < 4 or p % 2 == 1:
        raise ValueError("length must be even and at least 4")
    host = _bidirected_cycle(p)
    crossed = ((0, 1), (1, 0))
    matchings: dict[Arc, Pairing] = {}
    for arc in host.sorted_arcs:
        matchings[arc] = crossed if set(arc) == {0, 1} else _identity(2)
    return Configuration(host, make_cover(host, [2] * p, matchings))


# ---------------------------------------------------------------------------
# Surgery.
# ---------------------------------------------------------------------------


def merge(a: Configuration, va: int, b: Configuration, vb: int) -> Configuration:
    """Glue two configurations by identifying vertex va of a with vb of b.

    Vertices of a keep their indices; the rest of b follows in ascending
    order.  The merged vertex concatenates both color sets, with b's colors
    shifted past a's, so both pairings survive unchanged up to the shift.
    """
    na, nb = a.digraph.n, b.digraph.n
    if not 0 <= va < na or not 0 <= vb < nb:
        raise ValueError("merge vertex out of range")

    def remap(w: int) -> int:
        if w == vb:
            return va
        return na + w - (1 if w > vb else 0)

    shift = a.sizes[va]
    arcs = set(a.digraph.arcs)
    matchings: dict[Arc, Pairing] = dict(a.cover.matchings)
    for (u, v), pairs in b.cover.matchings.items():
        nu, nv = remap(u), remap(v)
        arcs.add((nu, nv))
        matchings[(nu, nv)] = tuple(
            (i + (shift if u == vb else 0), j + (shift if v == vb else 0))
            for i, j in pairs
        )
    sizes = list(a.sizes)
    sizes[va] += b.sizes[vb]
    for w in sorted(set(range(nb)) - {vb}):
        sizes.append(b.sizes[w])
    host = Digraph(na + nb - 1, frozenset(arcs))
    return Configuration(host, make_cover(host, sizes, matchings))


def delete_h_arc(config: Configuration, arc: Arc, pair: tuple[int, int]) -> Configuration:
    """Remove one pair from one arc's pairing."""
    pairs = config.pairs(arc)
    pair = (int(pair[0]), int(pair[1]))
    if pair not in pairs:
        raise ValueError(f"pair {pair} not present on arc {arc}")
    matchings = dict(config.cover.matchings)
    matchings[arc] = tuple(q for q in pairs if q != pair)
    return Configuration(config.digraph, Cover(config.sizes, matchings))


def delete_vertex(config: Configuration, v: int) -> list[Configuration]:
    """Drop a vertex and its color set; one configuration per component.

    Components are reindexed by ascending original vertex and returned in
    order of their smallest original vertex.
    """
    host = config.digraph
    n = host.n
    if not 0 <= v < n:
        raise ValueError("vertex out of range")
    if n == 1:
        raise ValueError("cannot delete the only vertex")
    remaining = [w for w in range(n) if w != v]
    comp_of: dict[int, int] = {}
    comps: list[list[int]] = []
    for w in remaining:
        if w in comp_of:
            continue
        comp = [w]
        comp_of[w] = len(comps)
        queue = [w]
        while queue:
            x = queue.pop()
            for y in host.neighbors[x]:
                if y != v and y not in comp_of:
                    comp_of[y] = len(comps)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        index = {w: i for i, w in enumerate(comp)}
        in_comp = set(comp)
        arcs = [(index[u], index[w]) for u, w in host.arcs if u in in_comp and w in in_comp]
        sub = Digraph(len(comp), frozenset(arcs))
        matchings = {
            (index[u], index[w]): pairs
            for (u, w), pairs in config.cover.matchings.items()
            if u in in_comp and w in in_comp
        }
        out.append(Configuration(sub, make_cover(sub, [config.sizes[w] for w in comp], matchings)))
    return out


def transpose_pairs(pairs: Pairing) -> Pairing:
    return tuple(sorted((j, i) for i, j in pairs))


def is_symmetric(config: Configuration) -> bool:
    """On a bidirected host: every opposite arc pair carries transposed pairings."""
    if not is_bidirected(config.digraph):
        raise ValueError("symmetry is defined on bidirected hosts only")
    return all(
        config.pairs((v, u)) == transpose_pairs(config.pairs((u, v)))
        for u, v in config.digraph.arcs
        if u < v
    )


def symmetrize(config: Configuration) -> Configuration:
    """Sweep the vertices, rewriting each incoming pairing to the transpose
    of the outgoing one.

    For an uncolorable configuration (the caller checks via the solver) the
    rewrite preserves uncolorability at each step; once a vertex is locally
    symmetric, later sweeps leave its arc pairs untouched.
    """
    host = config.digraph
    if not is_bidirected(host):
        raise ValueError("symmetrize requires a bidirected host")
    matchings = dict(config.cover.matchings)
    for v in range(host.n):
        for u in host.neighbors[v]:
            matchings[(u, v)] = transpose_pairs(matchings[(v, u)])
    return Configuration(host, make_cover(host, config.sizes, matchings))
