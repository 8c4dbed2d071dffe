"""Structural side of degree-colorability: block classification, the
constructible-configuration recognizer, and certificate construction.

Everything here is combinatorial inspection of the block tree; the search
routines in solver.py serve as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import Configuration, make_cover, transpose_pairs
from .digraph import (
    NOT_BRICK,
    Block,
    Brick,
    Digraph,
    blocks,
    classify_brick,
    degrees,
    underlying_is_connected,
)

__all__ = [
    "NON_BRICK_BLOCK",
    "SIZE_MISMATCH",
    "LAYER_NOT_COMPLETE",
    "TWIST_COUNT_NOT_ONE",
    "COMPONENT_COUNT_WRONG",
    "BlockPiece",
    "ConstructibleDecomposition",
    "RecognitionResult",
    "DegreeColorabilityVerdict",
    "classify_blocks",
    "is_dp_degree_colorable",
    "degree_colorability",
    "build_bad_cover",
    "recognize_constructible",
    "brooks_gap",
]

# Failure tags, in the order the recognizer checks for them.
NON_BRICK_BLOCK = "NonBrickBlock"
SIZE_MISMATCH = "SizeMismatch"
LAYER_NOT_COMPLETE = "LayerNotComplete"
TWIST_COUNT_NOT_ONE = "TwistCountNotOne"
COMPONENT_COUNT_WRONG = "ComponentCountWrong"


@dataclass(frozen=True)
class BlockPiece:
    """One block of a recognized configuration.

    kind is "K", "C", "BC-odd" or "BC-even"; shares maps each block vertex to
    its colors there; layers are the components of the color adjacency
    restricted to the block, each a sorted tuple of (vertex, color) pairs.
    """

    kind: str
    vertices: tuple[int, ...]
    shares: tuple[tuple[int, tuple[int, ...]], ...]
    layers: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class ConstructibleDecomposition:
    pieces: tuple[BlockPiece, ...]
    cut_vertices: tuple[int, ...]


@dataclass(frozen=True)
class RecognitionResult:
    constructible: bool
    decomposition: ConstructibleDecomposition | None
    failure: str | None
    detail: str | None

    def __bool__(self) -> bool:
        return self.constructible


def _block_subdigraph(block: Block) -> tuple[Digraph, dict[int, int]]:
    index = {v: i for i, v in enumerate(block.vertices)}
    sub = Digraph(
        len(block.vertices), frozenset((index[u], index[v]) for u, v in block.arcs)
    )
    return sub, index


def classify_blocks(digraph: Digraph) -> list[tuple[Block, Brick]]:
    """Each block with its brick classification (NotBrick when it is none)."""
    out = []
    for block in blocks(digraph).blocks:
        sub, _ = _block_subdigraph(block)
        out.append((block, classify_brick(sub)))
    return out


def is_dp_degree_colorable(digraph: Digraph) -> bool:
    """Every cover with color sets of size max(out, in) degree admits an
    acyclic transversal, decided structurally: colorable unless every block
    is a directed cycle, a bidirected cycle, or a bidirected clique."""
    return any(brick is NOT_BRICK for _, brick in classify_blocks(digraph))


@dataclass(frozen=True)
class DegreeColorabilityVerdict:
    colorable: bool
    blocks: tuple[tuple[Block, Brick], ...]
    bad_cover: Configuration | None


def degree_colorability(digraph: Digraph) -> DegreeColorabilityVerdict:
    """Structural verdict plus, in the uncolorable case, an explicit
    uncolorable degree-sized cover as the certificate."""
    tagged = tuple((b, k) for b, k in classify_blocks(digraph))
    if any(brick is NOT_BRICK for _, brick in tagged):
        return DegreeColorabilityVerdict(True, tagged, None)
    return DegreeColorabilityVerdict(False, tagged, build_bad_cover(digraph))


def _brick_kind(brick: Brick, size: int) -> str:
    if brick.kind == "BidirectedComplete":
        return "K"
    if brick.kind == "DirectedCycle":
        return "C"
    return "BC-odd" if size % 2 else "BC-even"


def _share_width(kind: str, m: int) -> int:
    if kind == "K":
        return m - 1
    return 1 if kind == "C" else 2


def build_bad_cover(digraph: Digraph) -> Configuration:
    """Uncolorable cover with sizes equal to the degrees, assembled block by
    block; defined exactly when every block is a brick.

    Blocks contribute independent color ranges at each vertex.  A clique
    block places identity pairings, a directed cycle a single chain of
    pairs, and a bidirected cycle identity pairings with one crossed edge
    (the lexicographically smallest) when its length is even.
    """
    tagged = classify_blocks(digraph)
    if any(brick is NOT_BRICK for _, brick in tagged):
        raise ValueError("host has a block that is not a brick")
    next_free = [0] * digraph.n
    matchings: dict[tuple[int, int], list[tuple[int, int]]] = {
        arc: [] for arc in digraph.arcs
    }
    for block, brick in tagged:
        kind = _brick_kind(brick, len(block.vertices))
        width = _share_width(kind, len(block.vertices))
        offset = {}
        for v in block.vertices:
            offset[v] = next_free[v]
            next_free[v] += width
        twist_edge = None
        if kind == "BC-even":
            twist_edge = min((min(u, v), max(u, v)) for u, v in block.arcs)
        for u, v in block.arcs:
            if twist_edge is not None and (min(u, v), max(u, v)) == twist_edge:
                matchings[(u, v)] = [
                    (offset[u], offset[v] + 1),
                    (offset[u] + 1, offset[v]),
                ]
            else:
                matchings[(u, v)] = [
                    (offset[u] + i, offset[v] + i) for i in range(width)
                ]
    sizes = next_free
    degs = degrees(digraph)
    assert all(s == o == i for s, (o, i) in zip(sizes, degs))
    return Configuration(digraph, make_cover(digraph, sizes, matchings))


def _color_components(
    nodes: list[tuple[int, int]], edges: list[tuple[tuple[int, int], tuple[int, int]]]
) -> list[tuple[tuple[int, int], ...]]:
    adj: dict[tuple[int, int], list[tuple[int, int]]] = {x: [] for x in nodes}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen: set[tuple[int, int]] = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def recognize_constructible(config: Configuration) -> RecognitionResult:
    """Decide whether the configuration is built from brick configurations
    glued at cut vertices, without any search.

    On success the decomposition lists each block's kind, the colors it owns
    at each of its vertices, and the color layers.  On failure the tag names
    the first violated structural property.
    """
    host = config.digraph
    cover = config.cover

    def fail(tag: str, detail: str) -> RecognitionResult:
        return RecognitionResult(False, None, tag, detail)

    decomposition = blocks(host)
    tagged: list[tuple[Block, str]] = []
    for block in decomposition.blocks:
        sub, _ = _block_subdigraph(block)
        brick = classify_brick(sub)
        if brick is NOT_BRICK:
            return fail(NON_BRICK_BLOCK, f"block on vertices {block.vertices}")
        tagged.append((block, _brick_kind(brick, len(block.vertices))))

    # Colors a block claims at a vertex: those matched along its arcs.
    shares: dict[tuple[int, int], set[int]] = {}
    for bi, (block, _) in enumerate(tagged):
        for v in block.vertices:
            shares[(bi, v)] = set()
        for u, v in block.arcs:
            for i, j in cover.pairs((u, v)):
                shares[(bi, u)].add(i)
                shares[(bi, v)].add(j)

    for v in range(host.n):
        owners = [bi for bi, (block, _) in enumerate(tagged) if v in block.vertices]
        claimed: set[int] = set()
        width_sum = 0
        for bi in owners:
            block, kind = tagged[bi]
            expected = _share_width(kind, len(block.vertices))
            got = shares[(bi, v)]
            if len(got) != expected:
                return fail(
                    SIZE_MISMATCH,
                    f"vertex {v}: block on {block.vertices} holds {len(got)} colors, needs {expected}",
                )
            if claimed & got:
                return fail(SIZE_MISMATCH, f"vertex {v}: blocks share a color")
            claimed |= got
            width_sum += expected
        if claimed != set(range(cover.sizes[v])):
            return fail(
                SIZE_MISMATCH,
                f"vertex {v}: blocks claim {width_sum} of {cover.sizes[v]} colors",
            )

    pieces = []
    for bi, (block, kind) in enumerate(tagged):
        result = _check_block(config, bi, block, kind, shares)
        if isinstance(result, RecognitionResult):
            return result
        pieces.append(result)

    return RecognitionResult(
        True,
        ConstructibleDecomposition(
            tuple(pieces), tuple(sorted(decomposition.cut_vertices))
        ),
        None,
        None,
    )


def _check_block(
    config: Configuration,
    bi: int,
    block: Block,
    kind: str,
    shares: dict[tuple[int, int], set[int]],
) -> BlockPiece | RecognitionResult:
    cover = config.cover

    def fail(tag: str, detail: str) -> RecognitionResult:
        return RecognitionResult(False, None, tag, detail)

    nodes = [(v, c) for v in block.vertices for c in sorted(shares[(bi, v)])]
    edges = []
    for u, v in block.arcs:
        for i, j in cover.pairs((u, v)):
            edges.append(((u, i), (v, j)))

    if kind == "C":
        # Single color per vertex, one pair on every arc of the cycle.
        for u, v in block.arcs:
            if len(cover.pairs((u, v))) != 1:
                return fail(LAYER_NOT_COMPLETE, f"arc ({u}, {v}) carries no chain pair")
        layers = _color_components(nodes, edges)

    elif kind == "K":
        m = len(block.vertices)
        layers = _color_components(nodes, edges)
        vertex_set = set(block.vertices)
        for comp in layers:
            if len(comp) != m or {v for v, _ in comp} != vertex_set:
                return fail(
                    LAYER_NOT_COMPLETE,
                    f"color class {comp} does not hit each of {block.vertices} once",
                )
            at = dict(comp)
            for u, v in block.arcs:
                if (at[u], at[v]) not in cover.pairs((u, v)):
                    return fail(
                        LAYER_NOT_COMPLETE,
                        f"pair ({at[u]}, {at[v]}) missing on arc ({u}, {v})",
                    )

    else:
        # Bidirected cycle: transposed perfect matchings edge by edge, then
        # the layer structure decides the parity question.
        p = len(block.vertices)
        block_edges = {(min(u, v), max(u, v)) for u, v in block.arcs}
        for u, v in sorted(block_edges):
            forward = cover.pairs((u, v))
            if len(forward) != 2:
                return fail(
                    LAYER_NOT_COMPLETE,
                    f"edge ({u}, {v}) carries {len(forward)} pairs, needs 2",
                )
            if cover.pairs((v, u)) != transpose_pairs(forward):
                return fail(
                    LAYER_NOT_COMPLETE,
                    f"opposite arcs of edge ({u}, {v}) are not transposed",
                )
        layers = _color_components(nodes, edges)
        if kind == "BC-odd" and len(layers) != 2:
            return fail(
                COMPONENT_COUNT_WRONG,
                f"odd cycle block on {block.vertices} carries {len(layers)} color cycles, needs 2",
            )
        if kind == "BC-even" and len(layers) != 1:
            return fail(
                TWIST_COUNT_NOT_ONE,
                f"even cycle block on {block.vertices} carries an even number of crossed edges",
            )

    return BlockPiece(
        kind,
        block.vertices,
        tuple((v, tuple(sorted(shares[(bi, v)]))) for v in block.vertices),
        tuple(sorted(layers)),
    )


def brooks_gap(digraph: Digraph) -> str:
    """"at-bound" when the DP-chromatic number meets max(out, in) degree + 1,
    which happens exactly for the bricks; "below-bound" otherwise."""
    if not underlying_is_connected(digraph):
        raise ValueError("the bound gap is defined for connected digraphs")
    return "at-bound" if classify_brick(digraph) is not NOT_BRICK else "below-bound"
