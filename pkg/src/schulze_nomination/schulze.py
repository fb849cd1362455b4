"""Beatpath strengths and Schulze winners (nonunique-winner model)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import Election, ElectionError, WeightedMajorityGraph, weighted_majority_graph


@dataclass(frozen=True)
class StrengthMatrix:
    """Widest-path strengths; ``strength[(a, b)]`` is defined for a != b only."""

    vertices: tuple[str, ...]
    strength: Mapping[tuple[str, str], int]

    def __getitem__(self, pair: tuple[str, str]) -> int:
        a, b = pair
        if a == b:
            raise KeyError("beatpath strength is undefined on the diagonal")
        return self.strength[pair]

    def to_tsv(self) -> str:
        rows = ["\t".join(("",) + self.vertices)]
        for a in self.vertices:
            cells = ["-" if a == b else str(self.strength[(a, b)]) for b in self.vertices]
            rows.append("\t".join([a] + cells))
        return "\n".join(rows) + "\n"


def beatpath_strengths(g: WeightedMajorityGraph) -> StrengthMatrix:
    verts = g.vertices
    n = len(verts)
    p = [[g.weights.get((verts[i], verts[j]), 0) for j in range(n)] for i in range(n)]
    # max-min closure over intermediate vertices
    for k in range(n):
        pk = p[k]
        for i in range(n):
            if i == k:
                continue
            pik = p[i][k]
            if not pik:
                continue
            pi = p[i]
            for j in range(n):
                if j == i or j == k:
                    continue
                via = pik if pik < pk[j] else pk[j]
                if via > pi[j]:
                    pi[j] = via
    strength = {(verts[i], verts[j]): p[i][j] for i in range(n) for j in range(n) if i != j}
    return StrengthMatrix(verts, strength)


def winners_from_strengths(s: StrengthMatrix) -> tuple[str, ...]:
    return tuple(
        a for a in s.vertices
        if all(s.strength[(a, b)] >= s.strength[(b, a)] for b in s.vertices if b != a)
    )


def schulze_winners(e: Election) -> tuple[str, ...]:
    """All Schulze winners of ``e`` in roster order. Never empty."""
    return winners_from_strengths(beatpath_strengths(weighted_majority_graph(e)))


def is_schulze_winner(e: Election, c: str) -> bool:
    if c not in e.index:
        raise ElectionError(f"unknown candidate {c!r}")
    s = beatpath_strengths(weighted_majority_graph(e))
    return all(s.strength[(c, b)] >= s.strength[(b, c)] for b in e.candidates if b != c)


def _closure(start: int, adj: list[int], mask: int) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen


class LevelGraph:
    """Bitmask view of a majority graph, one adjacency layer per distinct weight.

    ``str(a, b) >= w`` holds exactly when b is reachable from a using arcs of
    weight at least w, so a candidate's Schulze status on any induced
    subgraph reduces to a few reachability closures.
    """

    def __init__(self, g: WeightedMajorityGraph):
        self.vertices = g.vertices
        self.index = {v: i for i, v in enumerate(g.vertices)}
        self.levels = sorted(set(g.weights.values()), reverse=True)
        n = len(g.vertices)
        self.out: list[list[int]] = []
        self.inn: list[list[int]] = []
        for w in self.levels:
            out = [0] * n
            inn = [0] * n
            for (a, b), weight in g.weights.items():
                if weight >= w:
                    i, j = self.index[a], self.index[b]
                    out[i] |= 1 << j
                    inn[j] |= 1 << i
            self.out.append(out)
            self.inn.append(inn)
        self.full = (1 << n) - 1

    def mask(self, candidates: Iterable[str]) -> int:
        m = 0
        for c in candidates:
            m |= 1 << self.index[c]
        return m

    def reach_from(self, level: int, v: int, mask: int) -> int:
        return _closure(1 << v, self.out[level], mask)

    def reach_to(self, level: int, v: int, mask: int) -> int:
        return _closure(1 << v, self.inn[level], mask)

    def wins(self, v: int, mask: int) -> bool:
        """Is vertex ``v`` a Schulze winner of the subgraph induced by ``mask``?"""
        for level in range(len(self.levels)):
            back = self.reach_to(level, v, mask)
            if back & ~self.reach_from(level, v, mask):
                return False
        return True

    def names(self, mask: int) -> list[str]:
        return [v for i, v in enumerate(self.vertices) if mask >> i & 1]
