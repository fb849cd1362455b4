"""Three-vote profiles built around a path, and local edits that add detours to it.

Positions are 1-based indices into the path, matching how the constructions
are usually written down (q_1 ... q_t).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..core import Election


class GadgetError(ValueError):
    pass


@dataclass(frozen=True)
class Profile:
    """Three ballots under construction plus the path they are based on."""

    votes: tuple[tuple[str, ...], ...]
    path: tuple[str, ...]

    @property
    def candidates(self) -> tuple[str, ...]:
        return self.votes[0]

    def to_election(self, roster: Sequence[str] | None = None) -> Election:
        return Election(roster if roster is not None else self.votes[1], self.votes)

    def q(self, i: int) -> str:
        if not 1 <= i <= len(self.path):
            raise GadgetError(f"path position {i} outside 1..{len(self.path)}")
        return self.path[i - 1]

    def _fresh(self, names: Sequence[str]) -> None:
        taken = set(self.candidates)
        for c in names:
            if c in taken:
                raise GadgetError(f"candidate {c!r} already exists")
        if len(set(names)) != len(names):
            raise GadgetError("new candidates must be distinct")


def _insert_after(vote: list[str], anchor: str, new: Sequence[str]) -> list[str]:
    k = vote.index(anchor) + 1
    return vote[:k] + list(new) + vote[k:]


def path_tournament_profile(t: int, names: Sequence[str] | None = None) -> Profile:
    """Three votes whose majority graph is the path q_1..q_t plus every back arc (q_i, q_j), i > j+1."""
    if t < 1:
        raise GadgetError("a path needs at least one candidate")
    if names is None:
        names = [f"q{i}" for i in range(1, t + 1)]
    names = list(names)
    if len(names) != t or len(set(names)) != t:
        raise GadgetError(f"need {t} distinct names")
    if t % 2 == 0:
        full = path_tournament_profile(t + 1, names + ["__extra__"])
        votes = tuple(tuple(c for c in v if c != "__extra__") for v in full.votes)
        return Profile(votes, tuple(names))
    q = lambda i: names[i - 1]  # noqa: E731
    v1 = [q(t)]
    for k in range(t - 2, 0, -2):
        v1 += [q(k), q(k + 1)]
    v2 = [q(i) for i in range(1, t + 1)]
    v3 = []
    for k in range(t - 1, 1, -2):
        v3 += [q(k), q(k + 1)]
    v3.append(q(1))
    return Profile((tuple(v1), tuple(v2), tuple(v3)), tuple(names))


def attach_alt_path3(p: Profile, i: int, primes: Sequence[str] | None = None) -> Profile:
    """Add a detour q_i -> q'_{i+1} -> q'_{i+2} -> q_{i+3} running parallel to the path.

    The primed pair never mixes with the unprimed one: q_{i+1} does not beat
    q'_{i+2} and q'_{i+1} does not beat q_{i+2}.
    """
    if i < 1 or i + 3 > len(p.path):
        raise GadgetError(f"position {i} needs path positions {i}..{i + 3}, path has {len(p.path)}")
    u, w = p.q(i + 1), p.q(i + 2)
    if primes is None:
        primes = (u + "'", w + "'")
    u2, w2 = primes
    p._fresh([u2, w2])
    v1, v2, v3 = (list(v) for v in p.votes)
    out = []
    for vote in (v1, v3):
        k = vote.index(u)
        if k + 1 < len(vote) and vote[k + 1] == w:
            vote = vote[:k] + [u2, w2, u, w] + vote[k + 2:]
        else:
            vote = _insert_after(_insert_after(vote, u, [u2]), w, [w2])
        out.append(vote)
    v2 = _insert_after(v2, w, [u2, w2])
    return Profile((tuple(out[0]), tuple(v2), tuple(out[1])), p.path)


def attach_two_alt_paths2(p: Profile, i: int, primes: Sequence[str] | None = None) -> Profile:
    """Add two detours q_i -> q'_{i+1} -> q_{i+2} and q_i -> q''_{i+1} -> q_{i+2}.

    The three middle candidates end up in a weight-3 transitive triangle.
    """
    if i < 1 or i + 2 > len(p.path):
        raise GadgetError(f"position {i} needs path positions {i}..{i + 2}, path has {len(p.path)}")
    u = p.q(i + 1)
    if primes is None:
        primes = (u + "'", u + "''")
    p._fresh(list(primes))
    votes = tuple(tuple(_insert_after(list(v), u, primes)) for v in p.votes)
    return Profile(votes, p.path)
