"""Exhaustive small-instance suites pitting the structural results against
blind search.  Every suite returns a VerificationReport and never hides a
budget hit inside an agreement count.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .covers import (
    Configuration,
    bc_config_even,
    bc_config_odd,
    c_config,
    delete_h_arc,
    is_symmetric,
    k_config,
    make_cover,
    merge,
    symmetrize,
    validate_cover,
)
from .digraph import (
    Digraph,
    bidirect,
    degrees,
    enumerate_connected_digraphs,
    enumerate_connected_graphs,
    instance_label,
    is_eulerian,
)
from .recognizer import build_bad_cover, is_dp_degree_colorable, recognize_constructible
from .solver import (
    Budget,
    BudgetExceeded,
    dichromatic_number,
    dp_chromatic_number,
    dp_degree_colorable_oracle,
    find_acyclic_transversal,
    greedy_bound,
    is_minimal_uncolorable,
    list_chromatic_number,
    undirected_dp_chromatic_number,
)

__all__ = [
    "VerificationReport",
    "verify_bricks",
    "verify_characterization",
    "verify_bidirected_equivalence",
    "verify_chain",
    "verify_merge",
    "SUITES",
]


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    instances_checked: int
    agreements: int
    disagreements: tuple[tuple[str, str, str], ...]
    budget_hits: int
    elapsed_seconds: float

    def __post_init__(self):
        assert (
            self.agreements + len(self.disagreements) + self.budget_hits
            == self.instances_checked
        )

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.budget_hits

    def render_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"instances checked: {self.instances_checked}",
            f"agreements: {self.agreements}",
            f"disagreements: {len(self.disagreements)}",
            f"budget hits: {self.budget_hits}",
            f"elapsed: {self.elapsed_seconds:.2f}s",
        ]
        for ident, expected, got in self.disagreements:
            lines.append(f"  {ident}: expected {expected}, got {got}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "instancesChecked": self.instances_checked,
            "agreements": self.agreements,
            "disagreements": [
                {"instance": i, "expected": e, "got": g}
                for i, e, g in self.disagreements
            ],
            "budgetHits": self.budget_hits,
            "elapsedSeconds": round(self.elapsed_seconds, 3),
        }


class _Tally:
    def __init__(self, suite: str):
        self.suite = suite
        self.checked = 0
        self.agreed = 0
        self.disagreements: list[tuple[str, str, str]] = []
        self.budget_hits = 0
        self.start = time.monotonic()

    def agree(self):
        self.checked += 1
        self.agreed += 1

    def disagree(self, ident: str, expected: str, got: str):
        self.checked += 1
        self.disagreements.append((ident, expected, got))

    def budget(self):
        self.checked += 1
        self.budget_hits += 1

    def report(self) -> VerificationReport:
        return VerificationReport(
            self.suite,
            self.checked,
            self.agreed,
            tuple(self.disagreements),
            self.budget_hits,
            time.monotonic() - self.start,
        )


def _brick_instances(max_n: int):
    for n in range(1, max_n + 1):
        # The 2-clique is the digon, which classifies as a directed cycle.
        yield f"k{n}", "C" if n == 2 else "K", k_config(n)
    for p in range(2, max_n + 1):
        yield f"c{p}", "C", c_config(p)
    for p in range(4, max_n + 1):
        if p % 2:
            yield f"bc{p}", "BC-odd", bc_config_odd(p)
        else:
            yield f"bc{p}", "BC-even", bc_config_even(p)


def verify_bricks(max_n: int = 7, budget: Budget | None = None) -> VerificationReport:
    """Every brick configuration on up to max_n vertices must be minimal
    uncolorable by search and must recognize as a single piece of its kind."""
    tally = _Tally("bricks")
    for ident, kind, config in _brick_instances(max_n):
        expected = f"minimal-uncolorable {kind}"
        try:
            problems = []
            if find_acyclic_transversal(config, budget).colorable:
                problems.append("colorable")
            elif not is_minimal_uncolorable(config, budget):
                problems.append("not minimal")
            rec = recognize_constructible(config)
            if not rec.constructible:
                problems.append(f"recognizer failed: {rec.failure}")
            elif [p.kind for p in rec.decomposition.pieces] != [kind]:
                problems.append(
                    f"recognized as {[p.kind for p in rec.decomposition.pieces]}"
                )
        except BudgetExceeded:
            tally.budget()
            continue
        if problems:
            tally.disagree(ident, expected, "; ".join(problems))
        else:
            tally.agree()
    return tally.report()


def _witness_facts(digraph: Digraph, witness: Configuration) -> list[str]:
    """Facts forced on any uncolorable degree-sized cover: sizes match both
    degrees and the host is Eulerian."""
    problems = []
    degs = degrees(digraph)
    if not all(s == o == i for s, (o, i) in zip(witness.sizes, degs)):
        problems.append("witness sizes differ from degrees")
    if not is_eulerian(digraph):
        problems.append("uncolorable witness on a non-Eulerian host")
    return problems


def verify_characterization(
    max_n: int = 4, budget: Budget | None = None
) -> VerificationReport:
    """Structural degree-colorability versus exhaustive search on every
    connected digraph with at most max_n vertices; uncolorable hosts must
    also yield a valid, minimal, recognizable bad cover."""
    tally = _Tally("characterization")
    for n in range(1, max_n + 1):
        for digraph in enumerate_connected_digraphs(n):
            ident = instance_label(digraph)
            structural = is_dp_degree_colorable(digraph)
            try:
                searched, witness = dp_degree_colorable_oracle(digraph, budget)
                if structural != searched:
                    tally.disagree(
                        ident,
                        f"colorable={structural} (structure)",
                        f"colorable={searched} (search)",
                    )
                    continue
                problems = []
                if not searched:
                    problems.extend(_witness_facts(digraph, witness))
                    bad = build_bad_cover(digraph)
                    if not validate_cover(digraph, bad.cover):
                        problems.append("built cover invalid")
                    if find_acyclic_transversal(bad, budget).colorable:
                        problems.append("built cover colorable")
                    elif not is_minimal_uncolorable(bad, budget):
                        problems.append("built cover not minimal")
                    if not recognize_constructible(bad).constructible:
                        problems.append("built cover not recognized")
            except BudgetExceeded:
                tally.budget()
                continue
            if problems:
                tally.disagree(ident, "consistent certificates", "; ".join(problems))
            else:
                tally.agree()
    return tally.report()


def _random_cover(rng: random.Random, digraph: Digraph):
    sizes = [rng.randint(1, 2) for _ in range(digraph.n)]
    matchings = {}
    for u, v in digraph.sorted_arcs:
        pairs = [
            (i, j)
            for i in range(sizes[u])
            for j in rng.sample(range(sizes[v]), rng.randint(0, 1))
        ]
        # Drop collisions in the second coordinate to keep the pairing injective.
        taken = set()
        kept = []
        for i, j in pairs:
            if j not in taken:
                taken.add(j)
                kept.append((i, j))
        matchings[(u, v)] = kept
    return make_cover(digraph, sizes, matchings)


def verify_bidirected_equivalence(
    max_n: int = 4,
    samples: int = 100,
    seed: int = 2026,
    budget: Budget | None = None,
) -> VerificationReport:
    """Two routes to the bidirected/undirected correspondence.

    For every connected graph up to max_n vertices, the DP-chromatic number
    of its bidirected digraph must equal the undirected DP-chromatic number
    computed over symmetric covers.  Then `samples` random uncolorable
    asymmetric covers of bidirected hosts are symmetrized, which must leave
    them uncolorable.
    """
    tally = _Tally("bidirected")
    hosts = []
    for n in range(1, max_n + 1):
        for edges in enumerate_connected_graphs(n):
            host = bidirect(n, edges)
            if n >= 2:
                hosts.append(host)
            ident = f"graph {instance_label(host)}"
            try:
                directed = dp_chromatic_number(host, budget)
                undirected = undirected_dp_chromatic_number(n, edges, budget)
            except BudgetExceeded:
                tally.budget()
                continue
            if directed == undirected:
                tally.agree()
            else:
                tally.disagree(
                    ident, f"dp-chromatic {directed}", f"symmetric-cover value {undirected}"
                )

    rng = random.Random(seed)
    found = 0
    while found < samples:
        host = rng.choice(hosts)
        cover = _random_cover(rng, host)
        config = Configuration(host, cover)
        if is_symmetric(config):
            continue
        try:
            if find_acyclic_transversal(config, budget).colorable:
                continue
        except BudgetExceeded:
            continue
        found += 1
        ident = f"sample {found} on {instance_label(host)}"
        try:
            still_bad = not find_acyclic_transversal(symmetrize(config), budget).colorable
        except BudgetExceeded:
            tally.budget()
            continue
        if still_bad:
            tally.agree()
        else:
            tally.disagree(ident, "uncolorable after symmetrize", "colorable")
    return tally.report()


def verify_chain(max_n: int = 4, budget: Budget | None = None) -> VerificationReport:
    """Dichromatic <= list <= DP chromatic <= degree bound on every connected
    digraph up to max_n vertices; the list number joins the chain up to 3
    vertices, past which its own search is out of scope."""
    tally = _Tally("chain")
    for n in range(1, max_n + 1):
        for digraph in enumerate_connected_digraphs(n):
            ident = instance_label(digraph)
            try:
                chain = [dichromatic_number(digraph)]
                if n <= 3:
                    chain.append(list_chromatic_number(digraph, 3))
                chain.append(dp_chromatic_number(digraph, budget))
                chain.append(greedy_bound(digraph))
            except BudgetExceeded:
                tally.budget()
                continue
            if all(a <= b for a, b in zip(chain, chain[1:])):
                tally.agree()
            else:
                tally.disagree(ident, "a nondecreasing chain", str(chain))
    return tally.report()


_MERGE_POOL = (
    ("k2", lambda: k_config(2)),
    ("k3", lambda: k_config(3)),
    ("c2", lambda: c_config(2)),
    ("c3", lambda: c_config(3)),
    ("c4", lambda: c_config(4)),
    ("bc4", lambda: bc_config_even(4)),
)


def verify_merge(max_pieces: int = 6, budget: Budget | None = None) -> VerificationReport:
    """Gluing two brick configurations at any pair of vertices must stay
    minimal uncolorable and recognizable; gluing after deleting one pair
    from the first piece must become colorable."""
    tally = _Tally("merge")
    pool = _MERGE_POOL[:max_pieces]
    for name_a, build_a in pool:
        for name_b, build_b in pool:
            a0 = build_a()
            b0 = build_b()
            for va in range(a0.digraph.n):
                for vb in range(b0.digraph.n):
                    ident = f"{name_a}@{va}+{name_b}@{vb}"
                    merged = merge(build_a(), va, build_b(), vb)
                    try:
                        problems = []
                        if find_acyclic_transversal(merged, budget).colorable:
                            problems.append("merge colorable")
                        elif not is_minimal_uncolorable(merged, budget):
                            problems.append("merge not minimal")
                        rec = recognize_constructible(merged)
                        if not rec.constructible:
                            problems.append(f"recognizer failed: {rec.failure}")
                        arc = a0.digraph.sorted_arcs[0]
                        pair = a0.pairs(arc)[0]
                        loosened = merge(
                            delete_h_arc(build_a(), arc, pair), va, build_b(), vb
                        )
                        if not find_acyclic_transversal(loosened, budget).colorable:
                            problems.append("loosened merge still uncolorable")
                    except BudgetExceeded:
                        tally.budget()
                        continue
                    if problems:
                        tally.disagree(
                            ident, "minimal-uncolorable merge", "; ".join(problems)
                        )
                    else:
                        tally.agree()
    return tally.report()


SUITES = {
    "bricks": verify_bricks,
    "characterization": verify_characterization,
    "bidirected": verify_bidirected_equivalence,
    "chain": verify_chain,
    "merge": verify_merge,
}
