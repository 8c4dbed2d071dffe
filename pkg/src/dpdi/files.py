"""Plain-text digraph files, JSON cover files, and transversal files.

Parsers report the offending line; writers emit a canonical form (sorted
arcs, sorted pairs, LF line endings) so files diff cleanly.
"""

from __future__ import annotations

import json

from .covers import Cover, make_cover, validate_cover
from .digraph import Digraph, build_digraph

__all__ = [
    "FormatError",
    "parse_digraph",
    "format_digraph",
    "parse_cover",
    "format_cover",
    "parse_transversal",
    "format_transversal",
]


class FormatError(ValueError):
    def __init__(self, source: str, line: int | None, message: str):
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


def _data_lines(text: str):
    """(line number, content) with comments and blank lines stripped."""
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


def parse_digraph(text: str, source: str = "<digraph>") -> Digraph:
    """Read "n m" then m arc lines "u v", 0-indexed.

    Comments run from '#' to end of line.  Repeated arc lines are an error.
    """
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError(source, None, "empty digraph file")
    num, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise FormatError(source, num, f"expected 'n m', got {head!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(source, num, f"expected two integers, got {head!r}") from None
    if n < 0 or m < 0:
        raise FormatError(source, num, "vertex and arc counts must be nonnegative")
    if len(lines) - 1 != m:
        raise FormatError(
            source, num, f"header promises {m} arcs, file has {len(lines) - 1}"
        )
    arcs = []
    seen = set()
    for num, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(source, num, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(source, num, f"expected two integers, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(source, num, f"arc ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise FormatError(source, num, f"loop at vertex {u}")
        if (u, v) in seen:
            raise FormatError(source, num, f"duplicate arc ({u}, {v})")
        seen.add((u, v))
        arcs.append((u, v))
    return build_digraph(n, arcs)


def format_digraph(digraph: Digraph) -> str:
    lines = [f"{digraph.n} {digraph.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in digraph.sorted_arcs)
    return "\n".join(lines) + "\n"


def parse_cover(text: str, digraph: Digraph, source: str = "<cover>") -> Cover:
    """JSON object with "sizes" and "matchings"; arcs not listed carry no
    pairs.  The result is validated against the digraph."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(source, exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise FormatError(source, None, "cover file must hold a JSON object")
    unknown = set(data) - {"sizes", "matchings"}
    if unknown:
        raise FormatError(source, None, f"unknown keys {sorted(unknown)}")
    sizes = data.get("sizes")
    if not isinstance(sizes, list) or not all(
        isinstance(s, int) and not isinstance(s, bool) for s in sizes
    ):
        raise FormatError(source, None, "'sizes' must be a list of integers")
    if len(sizes) != digraph.n:
        raise FormatError(
            source, None, f"got {len(sizes)} sizes for {digraph.n} vertices"
        )
    entries = data.get("matchings", [])
    if not isinstance(entries, list):
        raise FormatError(source, None, "'matchings' must be a list")
    matchings = {}
    for pos, entry in enumerate(entries):
        label = f"matchings[{pos}]"
        if not isinstance(entry, dict) or set(entry) != {"arc", "pairs"}:
            raise FormatError(source, None, f"{label} must have 'arc' and 'pairs'")
        arc = entry["arc"]
        if (
            not isinstance(arc, list)
            or len(arc) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in arc)
        ):
            raise FormatError(source, None, f"{label}: 'arc' must be [u, v]")
        arc = (arc[0], arc[1])
        if arc not in digraph.arcs:
            raise FormatError(source, None, f"{label}: {arc} is not an arc of the digraph")
        if arc in matchings:
            raise FormatError(source, None, f"{label}: arc {arc} listed twice")
        pairs = entry["pairs"]
        if not isinstance(pairs, list):
            raise FormatError(source, None, f"{label}: 'pairs' must be a list")
        clean = []
        for pair in pairs:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
            ):
                raise FormatError(source, None, f"{label}: pair {pair!r} must be [i, j]")
            clean.append((pair[0], pair[1]))
        if len(set(clean)) != len(clean):
            raise FormatError(source, None, f"{label}: duplicate pair on arc {arc}")
        matchings[arc] = clean
    cover = make_cover(digraph, sizes, matchings)
    if not validate_cover(digraph, cover):
        raise FormatError(source, None, "cover is not valid for the digraph")
    return cover


def format_cover(cover: Cover) -> str:
    entries = [
        {"arc": list(arc), "pairs": [list(p) for p in cover.matchings[arc]]}
        for arc in sorted(cover.matchings)
    ]
    data = {"sizes": list(cover.sizes), "matchings": entries}
    return json.dumps(data, indent=2) + "\n"


def parse_transversal(text: str, source: str = "<transversal>") -> dict[int, int]:
    """Lines "v i": vertex v takes its color i."""
    chosen: dict[int, int] = {}
    for num, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(source, num, f"expected 'vertex color', got {line!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(source, num, f"expected two integers, got {line!r}") from None
        if v in chosen:
            raise FormatError(source, num, f"vertex {v} listed twice")
        if v < 0 or c < 0:
            raise FormatError(source, num, "vertex and color must be nonnegative")
        chosen[v] = c
    return chosen


def format_transversal(transversal) -> str:
    if isinstance(transversal, dict):
        items = sorted(transversal.items())
    else:
        items = list(enumerate(transversal))
    return "".join(f"{v} {c}\n" for v, c in items)
