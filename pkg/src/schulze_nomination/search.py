"""Exact branch-and-bound over nominations.

Brute force is hopeless on the larger reduction instances (2^24 nominations
for a three-voter SAT instance at six variables), so this module searches the
nomination space party by party and prunes with two sound bounds. Let A be
the nominees fixed so far and S = A plus every member of an open party; any
completion N satisfies A ⊆ N ⊆ S.

* Certain loss: at some weight level, a vertex reaches p inside A but p
  cannot reach it even inside S. Every completion keeps that defeat.
* Certain win: at every level, all vertices that could reach p inside S are
  either reachable from p inside A, or are open candidates beaten at that
  level by something reachable from p inside A. Whichever of them ends up
  nominated is then reachable from p.

Both tests are exact once every party is fixed, so the search never needs a
separate leaf evaluation. Party order is chosen dynamically: the open party
with the fewest options that survive the prune is expanded next.
"""

from __future__ import annotations

import time

from .core import Nomination, PartyElection, weighted_majority_graph
from .schulze import LevelGraph
from .solvers import DEFAULT_BUDGET, BudgetExceeded, Stats, Verdict


class _Bounds:
    def __init__(self, lg: LevelGraph, p: int):
        self.lg = lg
        self.p = p
        self.levels = range(len(lg.levels))

    def certain_loss(self, fixed: int, sup: int) -> bool:
        lg, p = self.lg, self.p
        for level in self.levels:
            if lg.reach_to(level, p, fixed) & ~lg.reach_from(level, p, sup):
                return True
        return False

    def certain_win(self, fixed: int, sup: int) -> bool:
        lg, p = self.lg, self.p
        open_cands = sup & ~fixed
        for level in self.levels:
            reached = lg.reach_from(level, p, fixed)
            out = lg.out[level]
            frontier = 0
            m = reached
            while m:
                low = m & -m
                frontier |= out[low.bit_length() - 1]
                m ^= low
            if lg.reach_to(level, p, sup) & ~(reached | (frontier & open_cands)):
                return False
        return True


def _search(pe: PartyElection, lg: LevelGraph, p: str, want_win: bool, stats: Stats,
            budget: int | None) -> Nomination | None:
    """Find a nomination with p nominated where p wins (``want_win``) or loses."""
    bounds = _Bounds(lg, lg.index[p])
    done, dead = (bounds.certain_win, bounds.certain_loss) if want_win else (bounds.certain_loss, bounds.certain_win)
    party_masks = [[1 << lg.index[c] for c in party] for party in pe.parties]
    whole = [sum(ms) for ms in party_masks]
    d = pe.distinguished

    def finish(chosen: dict[int, int]) -> Nomination:
        picks = []
        for i, party in enumerate(pe.parties):
            picks.append(party[chosen.get(i, 0)])
        return Nomination(tuple(picks))

    def visit(fixed: int, sup: int, chosen: dict[int, int], open_parties: list[int]) -> Nomination | None:
        stats.nodes += 1
        if budget is not None and stats.nodes > budget:
            raise BudgetExceeded(f"search exceeded the budget of {budget} nodes")
        if done(fixed, sup):
            return finish(chosen)
        if dead(fixed, sup):
            return None
        best = None
        for i in open_parties:
            rest = sup & ~whole[i]
            options = []
            for j, m in enumerate(party_masks[i]):
                f2, s2 = fixed | m, rest | m
                if done(f2, s2):
                    chosen[i] = j
                    result = finish(chosen)
                    del chosen[i]
                    return result
                if not dead(f2, s2):
                    options.append((j, f2, s2))
            if best is None or len(options) < len(best[1]):
                best = (i, options)
                if not options:
                    return None
        i, options = best
        remaining = [q for q in open_parties if q != i]
        for j, f2, s2 in options:
            chosen[i] = j
            found = visit(f2, s2, chosen, remaining)
            del chosen[i]
            if found is not None:
                return found
        return None

    pm = 1 << lg.index[p]
    sup = pm
    for i, ms in enumerate(whole):
        if i != d:
            sup |= ms
    chosen = {d: pe.parties[d].index(p)}
    open_parties = [i for i in range(len(pe.parties)) if i != d]
    return visit(pm, sup, chosen, open_parties)


def solve_pp_search(pe: PartyElection, budget: int | None = DEFAULT_BUDGET) -> Verdict:
    start = time.perf_counter()
    lg = LevelGraph(weighted_majority_graph(pe.election))
    stats = Stats()
    for p in pe.distinguished_party:
        found = _search(pe, lg, p, True, stats, budget)
        if found is not None:
            stats.elapsed = time.perf_counter() - start
            return Verdict("possible", True, "search", witness=found, stats=stats)
    stats.elapsed = time.perf_counter() - start
    return Verdict("possible", False, "search", stats=stats)


def solve_np_search(pe: PartyElection, budget: int | None = DEFAULT_BUDGET) -> Verdict:
    start = time.perf_counter()
    lg = LevelGraph(weighted_majority_graph(pe.election))
    stats = Stats()
    counterexamples = {}
    for p in pe.distinguished_party:
        found = _search(pe, lg, p, False, stats, budget)
        if found is None:
            stats.elapsed = time.perf_counter() - start
            return Verdict("necessary", True, "search", president=p, stats=stats)
        counterexamples[p] = found
    stats.elapsed = time.perf_counter() - start
    return Verdict("necessary", False, "search", counterexamples=counterexamples, stats=stats)
