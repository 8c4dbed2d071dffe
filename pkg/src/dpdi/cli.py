"""Command-line front end.

Exit codes: 0 success or agreement, 1 disagreement between independent
routes, 2 usage or file-format problems, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .covers import Configuration, make_cover
from .digraph import degrees, is_eulerian, underlying_is_connected
from .files import (
    FormatError,
    format_cover,
    format_transversal,
    parse_cover,
    parse_digraph,
)
from .harness import SUITES
from .recognizer import brooks_gap, degree_colorability
from .solver import (
    DEFAULT_COVER_BUDGET,
    DEFAULT_NODE_BUDGET,
    Budget,
    BudgetExceeded,
    KMaxExceeded,
    dichromatic_number,
    dp_chromatic_number,
    find_acyclic_transversal,
    greedy_bound,
    list_chromatic_number,
    transversal_is_acyclic,
)

__all__ = ["main"]

ENV_NODE_BUDGET = "DPDI_BUDGET_NODES"


class _Usage(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpdi",
        description="Exact DP-coloring toolkit for small digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--format",
            choices=("text", "structured"),
            default="text",
            help="text (default) or structured JSON output",
        )
        p.add_argument("--budget-nodes", type=int, default=None, metavar="N",
                       help="search node cap per solve")
        p.add_argument("--budget-covers", type=int, default=None, metavar="N",
                       help="cover cap per enumeration")

    p = sub.add_parser("analyze", help="structural report for a digraph file")
    p.add_argument("digraph", type=Path)
    common(p)

    p = sub.add_parser("chromatic", help="chromatic numbers of a digraph file")
    p.add_argument("digraph", type=Path)
    p.add_argument(
        "--kind",
        choices=("dichromatic", "list", "dp", "all"),
        default="all",
    )
    common(p)

    p = sub.add_parser(
        "certify",
        help="degree-colorability verdict with a machine-checkable certificate",
    )
    p.add_argument("digraph", type=Path)
    p.add_argument("--cover-out", type=Path, default=None,
                   help="write the uncolorable cover here")
    p.add_argument("--transversal-out", type=Path, default=None,
                   help="write the colorable-case transversal here")
    common(p)

    p = sub.add_parser("solve", help="search a cover file for an acyclic transversal")
    p.add_argument("digraph", type=Path)
    p.add_argument("--cover", type=Path, required=True)
    p.add_argument("--transversal-out", type=Path, default=None)
    common(p)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-n", type=int, default=None, metavar="N",
                   help="largest instance size for the suite")
    p.add_argument("--samples", type=int, default=None, metavar="K",
                   help="random covers for the bidirected suite")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for the bidirected suite samples")
    common(p)

    return parser


def _budget(args) -> Budget:
    nodes = DEFAULT_NODE_BUDGET
    env = os.environ.get(ENV_NODE_BUDGET)
    if env is not None:
        try:
            nodes = int(env)
        except ValueError:
            raise _Usage(f"{ENV_NODE_BUDGET} must be an integer, got {env!r}")
    if args.budget_nodes is not None:
        nodes = args.budget_nodes
    covers = args.budget_covers if args.budget_covers is not None else DEFAULT_COVER_BUDGET
    if nodes <= 0 or covers <= 0:
        raise _Usage("budgets must be positive")
    return Budget(nodes=nodes, covers=covers)


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror or exc}")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "structured":
        print(json.dumps(payload, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _cmd_analyze(args) -> int:
    digraph = parse_digraph(_read(args.digraph), str(args.digraph))
    degs = degrees(digraph)
    connected = underlying_is_connected(digraph)
    payload = {
        "vertices": digraph.n,
        "arcs": digraph.arc_count,
        "degrees": [{"vertex": v, "out": o, "in": i} for v, (o, i) in enumerate(degs)],
        "connected": connected,
        "eulerian": is_eulerian(digraph),
    }
    lines = [
        f"vertices: {digraph.n}",
        f"arcs: {digraph.arc_count}",
        "degrees: " + " ".join(f"{v}:{o}/{i}" for v, (o, i) in enumerate(degs)),
        f"connected: {'yes' if connected else 'no'}",
        f"eulerian: {'yes' if payload['eulerian'] else 'no'}",
    ]
    if connected:
        verdict = degree_colorability(digraph)
        payload["blocks"] = [
            {
                "vertices": list(block.vertices),
                "brick": str(brick) if brick.kind != "NotBrick" else None,
            }
            for block, brick in verdict.blocks
        ]
        payload["dpDegreeColorable"] = verdict.colorable
        payload["brooksGap"] = brooks_gap(digraph)
        lines.append("blocks:")
        for block, brick in verdict.blocks:
            tag = str(brick) if brick.kind != "NotBrick" else "not a brick"
            lines.append(f"  {block.vertices}: {tag}")
        lines.append(f"dp-degree-colorable: {'yes' if verdict.colorable else 'no'}")
        lines.append(f"degree bound: {payload['brooksGap']}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def _cmd_chromatic(args, budget: Budget) -> int:
    digraph = parse_digraph(_read(args.digraph), str(args.digraph))
    kind = args.kind
    payload: dict = {}
    lines = []
    if kind in ("dichromatic", "all"):
        if digraph.n > 8:
            raise _Usage("dichromatic number supported up to 8 vertices")
        value = dichromatic_number(digraph)
        payload["dichromatic"] = value
        lines.append(f"dichromatic: {value}")
    if kind in ("list", "all"):
        if digraph.n > 4:
            if kind == "list":
                raise _Usage("list chromatic number supported up to 4 vertices")
            payload["listChromatic"] = None
            lines.append("list: skipped (supported up to 4 vertices)")
        else:
            try:
                value = list_chromatic_number(digraph, 3)
                payload["listChromatic"] = value
                lines.append(f"list: {value}")
            except KMaxExceeded as exc:
                payload["listChromatic"] = None
                payload["listLowerBound"] = exc.lower_bound
                lines.append(f"list: at least {exc.lower_bound} (search capped)")
    if kind in ("dp", "all"):
        if not underlying_is_connected(digraph):
            raise _Usage("DP-chromatic number requires a connected digraph")
        value = dp_chromatic_number(digraph, budget)
        payload["dpChromatic"] = value
        lines.append(f"dp: {value}")
    payload["greedyBound"] = greedy_bound(digraph)
    lines.append(f"degree bound: {payload['greedyBound']}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def _cmd_certify(args, budget: Budget) -> int:
    digraph = parse_digraph(_read(args.digraph), str(args.digraph))
    if not underlying_is_connected(digraph):
        raise _Usage("certify requires a connected digraph")
    verdict = degree_colorability(digraph)
    blocks_payload = [
        {
            "vertices": list(block.vertices),
            "brick": str(brick) if brick.kind != "NotBrick" else None,
        }
        for block, brick in verdict.blocks
    ]
    lines = [f"dp-degree-colorable: {'yes' if verdict.colorable else 'no'}"]
    payload: dict = {"dpDegreeColorable": verdict.colorable, "blocks": blocks_payload}

    if verdict.colorable:
        # Witness on the canonical degree cover: identity pairings, sizes at
        # the degree bound.  The verdict promises this cover is colorable.
        sizes = [max(o, i) for o, i in degrees(digraph)]
        matchings = {
            (u, v): [(c, c) for c in range(min(sizes[u], sizes[v]))]
            for u, v in digraph.arcs
        }
        config = Configuration(digraph, make_cover(digraph, sizes, matchings))
        result = find_acyclic_transversal(config, budget)
        if not result.colorable or not transversal_is_acyclic(config, result.transversal):
            print("certify: identity degree cover has no acyclic transversal, "
                  "contradicting the structural verdict", file=sys.stderr)
            return 1
        text = format_transversal(result.transversal)
        payload["certificate"] = {
            "kind": "transversal",
            "coverSizes": sizes,
            "transversal": list(result.transversal),
        }
        if args.transversal_out:
            args.transversal_out.write_text(text)
            lines.append(f"transversal written to {args.transversal_out}")
        else:
            lines.append("transversal on the identity degree cover:")
            lines.append(text.rstrip("\n"))
    else:
        bad = verdict.bad_cover
        check = find_acyclic_transversal(bad, budget)
        if check.colorable:
            print("certify: built cover admits a transversal, contradicting "
                  "the structural verdict", file=sys.stderr)
            return 1
        text = format_cover(bad.cover)
        payload["certificate"] = {
            "kind": "badCover",
            "cover": json.loads(text),
        }
        if args.cover_out:
            args.cover_out.write_text(text)
            lines.append(f"uncolorable cover written to {args.cover_out}")
        else:
            lines.append("uncolorable cover:")
            lines.append(text.rstrip("\n"))
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def _cmd_solve(args, budget: Budget) -> int:
    digraph = parse_digraph(_read(args.digraph), str(args.digraph))
    cover = parse_cover(_read(args.cover), digraph, str(args.cover))
    config = Configuration(digraph, cover)
    result = find_acyclic_transversal(config, budget)
    payload: dict = {
        "colorable": result.colorable,
        "nodesExpanded": result.nodes_expanded,
    }
    lines = [f"colorable: {'yes' if result.colorable else 'no'}",
             f"nodes expanded: {result.nodes_expanded}"]
    if result.colorable:
        if not transversal_is_acyclic(config, result.transversal):
            print("solve: search produced a transversal the independent check "
                  "rejects", file=sys.stderr)
            return 1
        payload["transversal"] = list(result.transversal)
        text = format_transversal(result.transversal)
        if args.transversal_out:
            args.transversal_out.write_text(text)
            lines.append(f"transversal written to {args.transversal_out}")
        else:
            lines.append(text.rstrip("\n"))
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def _cmd_verify(args, budget: Budget) -> int:
    suite = SUITES[args.suite]
    kwargs: dict = {"budget": budget}
    if args.max_n is not None:
        key = "max_pieces" if args.suite == "merge" else "max_n"
        kwargs[key] = args.max_n
    if args.suite == "bidirected":
        if args.samples is not None:
            kwargs["samples"] = args.samples
        if args.seed is not None:
            kwargs["seed"] = args.seed
    elif args.samples is not None or args.seed is not None:
        raise _Usage("--samples and --seed apply to the bidirected suite only")
    report = suite(**kwargs)
    _emit(args, report.to_json_dict(), report.render_text())
    if report.disagreements:
        return 1
    if report.budget_hits:
        return 3
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        budget = _budget(args)
        if args.command == "chromatic":
            return _cmd_chromatic(args, budget)
        if args.command == "certify":
            return _cmd_certify(args, budget)
        if args.command == "solve":
            return _cmd_solve(args, budget)
        return _cmd_verify(args, budget)
    except (_Usage, FormatError, ValueError) as exc:
        print(f"dpdi: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"dpdi: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
