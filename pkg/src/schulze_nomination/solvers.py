"""Decision procedures for Possible President and Necessary President."""

from __future__ import annotations

import heapq
import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator, Literal, Sequence

from .core import (
    ElectionError,
    Nomination,
    PartyElection,
    WeightedMajorityGraph,
    enumerate_nominations,
    reduce_to,
    weighted_majority_graph,
)
from .schulze import LevelGraph

Problem = Literal["possible", "necessary"]
ALGORITHMS = ("auto", "brute", "two-voter", "fpt3", "search")
DEFAULT_BUDGET = 10**8

# auto dispatch falls back to branch-and-bound above these sizes
FPT_TREE_LIMIT = 20_000
BRUTE_AUTO_LIMIT = 20_000


class SolverError(ValueError):
    """The requested algorithm does not apply to the instance."""


class BudgetExceeded(RuntimeError):
    """The instance needs more work than the configured budget allows."""


@dataclass
class Stats:
    nominations: int = 0
    trees: int = 0
    nodes: int = 0
    elapsed: float = 0.0


@dataclass
class Verdict:
    """Answer plus certificate.

    For Possible President ``witness`` is a nomination in which the
    distinguished nominee wins. For Necessary President ``president`` names
    the necessary president on a yes-answer, and ``counterexamples`` maps each
    failed distinguished candidate to a nomination where it loses.
    """

    problem: Problem
    answer: bool
    algorithm: str
    witness: Nomination | None = None
    president: str | None = None
    counterexamples: dict[str, Nomination] = field(default_factory=dict)
    stats: Stats = field(default_factory=Stats)


def _check_budget(count: int, budget: int | None, what: str = "nominations") -> None:
    if budget is not None and count > budget:
        raise BudgetExceeded(f"{count} {what} exceed the budget of {budget}")


def _fill(pe: PartyElection, fixed: dict[int, str]) -> Nomination:
    return Nomination(tuple(fixed.get(i, party[0]) for i, party in enumerate(pe.parties)))


# ---------------------------------------------------------------- two voters


def _require_voters(pe: PartyElection, count: int, algorithm: str) -> None:
    if len(pe.votes) != count:
        raise SolverError(f"{algorithm} needs exactly {count} voters, instance has {len(pe.votes)}")


def _two_voter_beaten_by(pe: PartyElection, p: str) -> list[str]:
    """Candidates both voters rank above ``p``: the in-neighbours of p in G(E)."""
    first, second = pe.votes
    above = set(first[: first.index(p)])
    return [u for u in second[: second.index(p)] if u in above]


def solve_pp_two_voters(pe: PartyElection) -> Verdict:
    """Linear-time Possible President for two voters.

    With two voters a candidate wins iff nobody beats it, so p is a possible
    president iff every other party keeps a member once p's in-neighbours
    are struck out.
    """
    _require_voters(pe, 2, "two-voter")
    start = time.perf_counter()
    stats = Stats()
    for p in pe.distinguished_party:
        stats.nominations += 1
        struck = set(_two_voter_beaten_by(pe, p))
        fixed = {pe.distinguished: p}
        for i, party in enumerate(pe.parties):
            if i == pe.distinguished:
                continue
            survivors = [c for c in party if c not in struck]
            if not survivors:
                break
            fixed[i] = survivors[0]
        else:
            stats.elapsed = time.perf_counter() - start
            return Verdict("possible", True, "two-voter", witness=_fill(pe, fixed), stats=stats)
    stats.elapsed = time.perf_counter() - start
    return Verdict("possible", False, "two-voter", stats=stats)


def solve_np_two_voters(pe: PartyElection) -> Verdict:
    _require_voters(pe, 2, "two-voter")
    start = time.perf_counter()
    stats = Stats()
    own = set(pe.distinguished_party)
    party_of = pe.party_of
    counterexamples = {}
    for p in pe.distinguished_party:
        stats.nominations += 1
        # rivals inside the distinguished party never run against p
        beaters = [u for u in _two_voter_beaten_by(pe, p) if u not in own]
        if not beaters:
            stats.elapsed = time.perf_counter() - start
            return Verdict("necessary", True, "two-voter", president=p, stats=stats)
        u = min(beaters, key=pe.election.index.__getitem__)
        counterexamples[p] = _fill(pe, {pe.distinguished: p, party_of[u]: u})
    stats.elapsed = time.perf_counter() - start
    return Verdict("necessary", False, "two-voter", counterexamples=counterexamples, stats=stats)


# ---------------------------------------------------------------- brute force


def solve_pp_brute(pe: PartyElection, budget: int | None = DEFAULT_BUDGET) -> Verdict:
    _check_budget(pe.nomination_count(), budget)
    start = time.perf_counter()
    lg = LevelGraph(weighted_majority_graph(pe.election))
    d = pe.distinguished
    stats = Stats()
    for nomination in enumerate_nominations(pe):
        stats.nominations += 1
        if lg.wins(lg.index[nomination.picks[d]], lg.mask(nomination.picks)):
            stats.elapsed = time.perf_counter() - start
            return Verdict("possible", True, "brute", witness=nomination, stats=stats)
    stats.elapsed = time.perf_counter() - start
    return Verdict("possible", False, "brute", stats=stats)


def solve_np_brute(pe: PartyElection, budget: int | None = DEFAULT_BUDGET) -> Verdict:
    _check_budget(pe.nomination_count(), budget)
    start = time.perf_counter()
    lg = LevelGraph(weighted_majority_graph(pe.election))
    d = pe.distinguished
    others = [party if i != d else None for i, party in enumerate(pe.parties)]
    stats = Stats()
    counterexamples = {}
    for p in pe.distinguished_party:
        choices = [party if party is not None else (p,) for party in others]
        v = lg.index[p]
        for picks in itertools.product(*choices):
            stats.nominations += 1
            if not lg.wins(v, lg.mask(picks)):
                counterexamples[p] = Nomination(picks)
                break
        else:
            stats.elapsed = time.perf_counter() - start
            return Verdict("necessary", True, "brute", president=p, stats=stats)
    stats.elapsed = time.perf_counter() - start
    return Verdict("necessary", False, "brute", counterexamples=counterexamples, stats=stats)


# ---------------------------------------------------------------- three voters, FPT


@dataclass(frozen=True)
class PartyTree:
    """Out-tree on party indices; ``parent[root]`` is None."""

    root: int
    parent: tuple[int | None, ...]

    @property
    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for v, u in enumerate(self.parent):
            if u is not None:
                kids[u].append(v)
        return kids

    def postorder(self) -> list[int]:
        kids = self.children
        order, stack = [], [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                order.append(v)
                continue
            stack.append((v, True))
            stack.extend((c, False) for c in reversed(kids[v]))
        return order


def _prufer_edges(seq: Sequence[int], k: int) -> list[tuple[int, int]]:
    degree = [1] * k
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(k) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def enumerate_party_trees(k: int, root: int) -> Iterator[PartyTree]:
    """Every labelled tree on k parties, oriented away from ``root`` (k**(k-2) of them)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= root < k:
        raise ValueError("root out of range")
    if k == 1:
        yield PartyTree(root, (None,))
        return
    for seq in itertools.product(range(k), repeat=k - 2):
        adj: list[list[int]] = [[] for _ in range(k)]
        for a, b in _prufer_edges(seq, k):
            adj[a].append(b)
            adj[b].append(a)
        parent: list[int | None] = [None] * k
        seen = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    stack.append(w)
        yield PartyTree(root, tuple(parent))


def compatible_sets(pe: PartyElection, g: WeightedMajorityGraph, t: PartyTree) -> dict[int, list[str]]:
    """Bottom-up compatibility table for one party tree.

    A leaf party is compatible in full; an internal member q is compatible
    when every child party has a compatible member that q beats.
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    out = [0] * len(g.vertices)
    for a, b in g.weights:
        out[index[a]] |= 1 << index[b]
    kids = t.children
    comp_mask: dict[int, int] = {}
    table: dict[int, list[str]] = {}
    for q in t.postorder():
        members = [c for c in pe.parties[q] if c in index]
        keep = [c for c in members if all(out[index[c]] & comp_mask[child] for child in kids[q])]
        table[q] = keep
        m = 0
        for c in keep:
            m |= 1 << index[c]
        comp_mask[q] = m
    return table


def _prune_for_three_voters(pe: PartyElection, p: str) -> PartyElection | None:
    """Fix the distinguished party to ``p`` and drop everyone with a weight-3 arc into p.

    Returns None when a party runs empty.
    """
    single = pe.restrict_party(pe.distinguished, [p])
    g = weighted_majority_graph(single.election)
    doomed = {u for u in g.vertices if g.weight(u, p) == 3}
    pruned = []
    for party in single.parties:
        left = [c for c in party if c not in doomed]
        if not left:
            return None
        pruned.append(left)
    keep = [c for c in single.candidates if c not in doomed]
    return PartyElection(reduce_to(single.election, keep), pruned, single.distinguished)


def _witness_from_tree(pe: PartyElection, g: WeightedMajorityGraph, t: PartyTree,
                       table: dict[int, list[str]], p: str) -> dict[int, str]:
    kids = t.children
    chosen = {t.root: p}
    stack = [t.root]
    while stack:
        q = stack.pop()
        for child in kids[q]:
            chosen[child] = next(s for s in table[child] if g.has_arc(chosen[q], s))
            stack.append(child)
    return chosen


def solve_pp_three_voters_fpt(pe: PartyElection, budget: int | None = DEFAULT_BUDGET) -> Verdict:
    """Possible President for three voters, FPT in the number of parties."""
    _require_voters(pe, 3, "fpt3")
    k = len(pe.parties)
    _check_budget(k ** (k - 2) if k >= 2 else 1, budget, "party trees")
    start = time.perf_counter()
    stats = Stats()
    # each tree is enumerated once and tried for every distinguished candidate
    prepared = []
    for p in pe.distinguished_party:
        reduced = _prune_for_three_voters(pe, p)
        if reduced is not None:
            prepared.append((p, reduced, weighted_majority_graph(reduced.election)))
    if prepared:
        for tree in enumerate_party_trees(k, pe.distinguished):
            stats.trees += 1
            for p, reduced, g in prepared:
                table = compatible_sets(reduced, g, tree)
                if p in table[pe.distinguished]:
                    chosen = _witness_from_tree(reduced, g, tree, table, p)
                    stats.elapsed = time.perf_counter() - start
                    return Verdict("possible", True, "fpt3", witness=_fill(pe, chosen), stats=stats)
    stats.elapsed = time.perf_counter() - start
    return Verdict("possible", False, "fpt3", stats=stats)


# ---------------------------------------------------------------- dispatch


def choose_algorithm(pe: PartyElection, problem: Problem) -> str:
    voters = len(pe.votes)
    if voters == 2:
        return "two-voter"
    k = len(pe.parties)
    if voters == 3 and problem == "possible" and (k < 2 or k ** (k - 2) <= FPT_TREE_LIMIT):
        return "fpt3"
    if pe.nomination_count() <= BRUTE_AUTO_LIMIT:
        return "brute"
    return "search"


def solve(pe: PartyElection, problem: Problem = "possible", algorithm: str = "auto",
          budget: int | None = DEFAULT_BUDGET) -> Verdict:
    from . import search

    if problem not in ("possible", "necessary"):
        raise SolverError(f"unknown problem {problem!r}")
    if algorithm not in ALGORITHMS:
        raise SolverError(f"unknown algorithm {algorithm!r}")
    if algorithm == "auto":
        algorithm = choose_algorithm(pe, problem)
    if algorithm == "two-voter":
        return solve_pp_two_voters(pe) if problem == "possible" else solve_np_two_voters(pe)
    if algorithm == "fpt3":
        if problem != "possible":
            raise SolverError("fpt3 only decides Possible President")
        return solve_pp_three_voters_fpt(pe, budget)
    if algorithm == "brute":
        return solve_pp_brute(pe, budget) if problem == "possible" else solve_np_brute(pe, budget)
    if problem == "possible":
        return search.solve_pp_search(pe, budget)
    return search.solve_np_search(pe, budget)


def verify_verdict(pe: PartyElection, verdict: Verdict) -> bool:
    """Re-check every certificate in ``verdict`` from scratch with the Schulze engine."""
    from .core import reduce
    from .schulze import is_schulze_winner

    d = pe.distinguished
    if verdict.problem == "possible":
        if not verdict.answer:
            return verdict.witness is None
        w = pe.nominate(verdict.witness.picks)
        return is_schulze_winner(reduce(pe.election, w), w.picks[d])
    if verdict.answer:
        return verdict.president in pe.distinguished_party
    if set(verdict.counterexamples) != set(pe.distinguished_party):
        return False
    for p, n in verdict.counterexamples.items():
        n = pe.nominate(n.picks)
        if n.picks[d] != p or is_schulze_winner(reduce(pe.election, n), p):
            return False
    return True


__all__ = [
    "ALGORITHMS", "BudgetExceeded", "ElectionError", "PartyTree", "SolverError", "Stats", "Verdict",
    "choose_algorithm", "compatible_sets", "enumerate_party_trees", "solve", "solve_np_brute",
    "solve_np_two_voters", "solve_pp_brute", "solve_pp_three_voters_fpt", "solve_pp_two_voters",
    "verify_verdict",
]
