"""Vertex-colored graphs for the multicolored clique reductions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

DEFAULT_CLIQUE_LIMIT = 10**6


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class ColoredGraph:
    """q color classes of equal size x; every pair of classes has exactly y edges.

    ``edges`` holds (u, v) with u in the lower-numbered class.
    """

    classes: tuple[tuple[str, ...], ...]
    edges: tuple[tuple[str, str], ...]

    def __init__(self, classes: Sequence[Sequence[str]], edges: Sequence[Sequence[str]]):
        classes = tuple(tuple(c) for c in classes)
        color = {}
        for i, cls in enumerate(classes):
            for u in cls:
                if u in color:
                    raise GraphError(f"vertex {u!r} appears in classes {color[u] + 1} and {i + 1}")
                color[u] = i
        oriented = []
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {tuple(e)} does not have two endpoints")
            u, v = e
            for w in (u, v):
                if w not in color:
                    raise GraphError(f"edge {u}-{v} uses unknown vertex {w!r}")
            if color[u] == color[v]:
                raise GraphError(f"edge {u}-{v} joins two vertices of class {color[u] + 1}")
            oriented.append((u, v) if color[u] < color[v] else (v, u))
        if len(set(oriented)) != len(oriented):
            raise GraphError("duplicate edge")
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "edges", tuple(oriented))
        self._validate(color)

    def _validate(self, color: dict[str, int]) -> None:
        if not self.classes:
            raise GraphError("need at least one color class")
        sizes = {len(c) for c in self.classes}
        if len(sizes) != 1 or 0 in sizes:
            raise GraphError(f"color classes must be nonempty and equal-sized, got sizes {[len(c) for c in self.classes]}")
        counts = {pair: len(f) for pair, f in self.edge_sets().items()}
        if len(set(counts.values())) > 1 or 0 in counts.values():
            detail = ", ".join(f"F{i + 1},{j + 1}={c}" for (i, j), c in counts.items())
            raise GraphError(f"edge sets between classes must be nonempty and equal-sized: {detail}")

    @property
    def q(self) -> int:
        return len(self.classes)

    @property
    def x(self) -> int:
        return len(self.classes[0])

    @property
    def y(self) -> int:
        sets = self.edge_sets()
        return len(next(iter(sets.values()))) if sets else 0

    @property
    def color(self) -> dict[str, int]:
        return {u: i for i, cls in enumerate(self.classes) for u in cls}

    def edge_sets(self) -> dict[tuple[int, int], list[tuple[str, str]]]:
        color = self.color
        sets: dict[tuple[int, int], list[tuple[str, str]]] = {
            (i, j): [] for i in range(self.q) for j in range(i + 1, self.q)
        }
        for u, v in self.edges:
            sets[(color[u], color[v])].append((u, v))
        return sets

    def adjacent(self, u: str, v: str) -> bool:
        return (u, v) in self._edge_set or (v, u) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges)

    def is_clique(self, vertices: Sequence[str]) -> bool:
        edges = self._edge_set
        return all((u, v) in edges or (v, u) in edges for u, v in itertools.combinations(vertices, 2))


def parse_graph(text: str) -> ColoredGraph:
    classes: dict[int, list[str]] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise GraphError(f"line {lineno}: expected 'color <i>: ...' or 'edge: u v'")
        words = head.split()
        if words == ["edge"]:
            ends = rest.split()
            if len(ends) != 2:
                raise GraphError(f"line {lineno}: an edge needs exactly two endpoints")
            edges.append(ends)
        elif len(words) == 2 and words[0] == "color" and words[1].isdigit():
            i = int(words[1])
            if i in classes:
                raise GraphError(f"line {lineno}: color {i} declared twice")
            classes[i] = rest.split()
        else:
            raise GraphError(f"line {lineno}: unknown record {head!r}")
    if sorted(classes) != list(range(1, len(classes) + 1)):
        raise GraphError(f"colors must be numbered 1..q, got {sorted(classes)}")
    try:
        return ColoredGraph([classes[i] for i in sorted(classes)], edges)
    except GraphError as exc:
        raise GraphError(f"invalid graph: {exc}") from None


def format_graph(h: ColoredGraph) -> str:
    lines = [f"color {i + 1}: " + " ".join(cls) for i, cls in enumerate(h.classes)]
    lines += [f"edge: {u} {v}" for u, v in h.edges]
    return "\n".join(lines) + "\n"


def random_colored_graph(q: int, x: int, y: int, rng: random.Random) -> ColoredGraph:
    if not 1 <= y <= x * x:
        raise GraphError(f"y must lie in 1..{x * x}")
    classes = [[f"{chr(ord('a') + i)}{l}" for l in range(1, x + 1)] for i in range(q)]
    edges = []
    for i, j in itertools.combinations(range(q), 2):
        pairs = list(itertools.product(classes[i], classes[j]))
        edges += rng.sample(pairs, y)
    return ColoredGraph(classes, edges)


def oracle_multicolored_clique(h: ColoredGraph, limit: int = DEFAULT_CLIQUE_LIMIT) -> tuple[bool, tuple[str, ...] | None]:
    """Scan color transversals in lexicographic order; return the first clique found."""
    if h.x ** h.q > limit:
        raise GraphError(f"{h.x}^{h.q} transversals exceed the oracle limit of {limit}")
    for pick in itertools.product(*h.classes):
        if h.is_clique(pick):
            return True, pick
    return False, None
