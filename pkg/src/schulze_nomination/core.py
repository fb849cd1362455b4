"""Elections, parties, nominations and weighted majority graphs.

Candidates are plain strings at the interface. The roster order of an
:class:`Election` is the canonical fixed order used whenever a set of
candidates has to be written out inside a ballot.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence


class ElectionError(ValueError):
    """Raised when an election, party structure or nomination is malformed."""


@dataclass(frozen=True)
class Election:
    candidates: tuple[str, ...]
    votes: tuple[tuple[str, ...], ...]

    def __init__(self, candidates: Sequence[str], votes: Sequence[Sequence[str]] = ()):
        object.__setattr__(self, "candidates", tuple(candidates))
        object.__setattr__(self, "votes", tuple(tuple(v) for v in votes))
        self._validate()

    def _validate(self) -> None:
        if not self.candidates:
            raise ElectionError("an election needs at least one candidate")
        roster = set(self.candidates)
        if len(roster) != len(self.candidates):
            dup = [c for c in self.candidates if self.candidates.count(c) > 1]
            raise ElectionError(f"duplicate candidate {dup[0]!r}")
        for n, vote in enumerate(self.votes, 1):
            if len(vote) != len(set(vote)) or set(vote) != roster:
                missing = [c for c in self.candidates if c not in vote]
                extra = [c for c in vote if c not in roster]
                repeated = [c for c in vote if vote.count(c) > 1]
                detail = (
                    f"missing {missing[0]!r}" if missing
                    else f"unknown {extra[0]!r}" if extra
                    else f"repeated {repeated[0]!r}"
                )
                raise ElectionError(f"vote {n} is not a ranking of the roster: {detail}")

    @property
    def index(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.candidates)}

    def __len__(self) -> int:
        return len(self.candidates)


@dataclass(frozen=True)
class Nomination:
    """One nominee per party; ``picks[i]`` is the nominee of party ``i``."""

    picks: tuple[str, ...]

    @property
    def nominees(self) -> frozenset[str]:
        return frozenset(self.picks)

    def __iter__(self) -> Iterator[str]:
        return iter(self.picks)


@dataclass(frozen=True)
class PartyElection:
    election: Election
    parties: tuple[tuple[str, ...], ...]
    distinguished: int

    def __init__(self, election: Election, parties: Sequence[Sequence[str]], distinguished: int = 0):
        index = election.index
        # within a party, members are kept in roster order
        normalized = tuple(tuple(sorted(p, key=lambda c: index.get(c, -1))) for p in parties)
        object.__setattr__(self, "election", election)
        object.__setattr__(self, "parties", normalized)
        object.__setattr__(self, "distinguished", distinguished)
        self._validate()

    def _validate(self) -> None:
        seen: dict[str, int] = {}
        for i, party in enumerate(self.parties):
            if not party:
                raise ElectionError(f"party {i} is empty")
            for c in party:
                if c not in self.election.index:
                    raise ElectionError(f"party {i} names unknown candidate {c!r}")
                if c in seen:
                    raise ElectionError(f"candidate {c!r} belongs to parties {seen[c]} and {i}")
                seen[c] = i
        missing = [c for c in self.election.candidates if c not in seen]
        if missing:
            raise ElectionError(f"candidate {missing[0]!r} belongs to no party")
        if not 0 <= self.distinguished < len(self.parties):
            raise ElectionError(f"distinguished party index {self.distinguished} out of range")

    @property
    def candidates(self) -> tuple[str, ...]:
        return self.election.candidates

    @property
    def votes(self) -> tuple[tuple[str, ...], ...]:
        return self.election.votes

    @property
    def distinguished_party(self) -> tuple[str, ...]:
        return self.parties[self.distinguished]

    @property
    def party_of(self) -> dict[str, int]:
        return {c: i for i, party in enumerate(self.parties) for c in party}

    @property
    def max_party_size(self) -> int:
        return max(len(p) for p in self.parties)

    def nomination_count(self) -> int:
        total = 1
        for party in self.parties:
            total *= len(party)
        return total

    def nominate(self, picks: Sequence[str]) -> Nomination:
        """Build a nomination from one pick per party (in party order)."""
        picks = tuple(picks)
        if len(picks) != len(self.parties):
            raise ElectionError(f"expected {len(self.parties)} nominees, got {len(picks)}")
        for i, (c, party) in enumerate(zip(picks, self.parties)):
            if c not in party:
                raise ElectionError(f"{c!r} is not a member of party {i}")
        return Nomination(picks)

    def nomination_from_set(self, nominees) -> Nomination:
        """Build a nomination from an unordered collection of nominees."""
        nominees = set(nominees)
        picks = []
        for i, party in enumerate(self.parties):
            chosen = [c for c in party if c in nominees]
            if len(chosen) != 1:
                raise ElectionError(f"party {i} has {len(chosen)} nominees, expected exactly one")
            picks.append(chosen[0])
        unknown = nominees - set(self.candidates)
        if unknown:
            raise ElectionError(f"unknown nominee {sorted(unknown)[0]!r}")
        return Nomination(tuple(picks))

    def restrict_party(self, party: int, members: Sequence[str]) -> "PartyElection":
        """Copy of this instance where ``party`` keeps only ``members``; other candidates drop out."""
        keep = set(members)
        dropped = set(self.parties[party]) - keep
        roster = [c for c in self.candidates if c not in dropped]
        election = reduce_to(self.election, roster)
        parties = [p if i != party else tuple(c for c in p if c in keep) for i, p in enumerate(self.parties)]
        return PartyElection(election, parties, self.distinguished)


@dataclass(frozen=True)
class WeightedMajorityGraph:
    """Majority digraph; ``weights[(a, b)]`` is the margin of a over b when positive.

    Ties are absent from ``weights`` rather than stored as zero.
    """

    vertices: tuple[str, ...]
    weights: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.weights.items())))

    def weight(self, a: str, b: str) -> int:
        return self.weights.get((a, b), 0)

    def has_arc(self, a: str, b: str) -> bool:
        return (a, b) in self.weights

    @property
    def arcs(self) -> set[tuple[str, str]]:
        return set(self.weights)

    def in_neighbors(self, v: str) -> list[str]:
        return [u for u in self.vertices if (u, v) in self.weights]

    def out_neighbors(self, v: str) -> list[str]:
        return [u for u in self.vertices if (v, u) in self.weights]

    def induced(self, keep) -> "WeightedMajorityGraph":
        keep = set(keep)
        vertices = tuple(v for v in self.vertices if v in keep)
        weights = {(a, b): w for (a, b), w in self.weights.items() if a in keep and b in keep}
        return WeightedMajorityGraph(vertices, weights)

    def max_weight(self) -> int:
        return max(self.weights.values(), default=0)

    def is_transitive(self) -> bool:
        out = {v: set(self.out_neighbors(v)) for v in self.vertices}
        return all(z in out[u] for u in self.vertices for v in out[u] for z in out[v] if z != u)


def pairwise_counts(e: Election) -> list[list[int]]:
    """``counts[i][j]`` = number of ballots ranking candidate i above candidate j."""
    n = len(e.candidates)
    index = e.index
    counts = [[0] * n for _ in range(n)]
    for vote in e.votes:
        ranked = [index[c] for c in vote]
        for pos, i in enumerate(ranked):
            row = counts[i]
            for j in ranked[pos + 1:]:
                row[j] += 1
    return counts


def weighted_majority_graph(e: Election) -> WeightedMajorityGraph:
    counts = pairwise_counts(e)
    cands = e.candidates
    weights = {}
    for i, a in enumerate(cands):
        for j, b in enumerate(cands):
            margin = counts[i][j] - counts[j][i]
            if margin > 0:
                weights[(a, b)] = margin
    return WeightedMajorityGraph(cands, weights)


def threshold_subgraph(g: WeightedMajorityGraph, k: int) -> WeightedMajorityGraph:
    """Keep only the arcs of weight exactly ``k``."""
    return WeightedMajorityGraph(g.vertices, {arc: w for arc, w in g.weights.items() if w == k})


def reduce_to(e: Election, keep) -> Election:
    keep = set(keep)
    unknown = keep - set(e.candidates)
    if unknown:
        raise ElectionError(f"nominee {sorted(unknown)[0]!r} is not in the roster")
    roster = [c for c in e.candidates if c in keep]
    return Election(roster, [[c for c in vote if c in keep] for vote in e.votes])


def reduce(e: Election, n: Nomination | Sequence[str]) -> Election:
    """The reduced election: ballots restricted to the nominees, order preserved."""
    return reduce_to(e, n.nominees if isinstance(n, Nomination) else n)


def pad_reversed_pairs(e: Election, pairs: int) -> Election:
    """Append ``pairs`` copies of the ballot pair (roster order, reversed roster order).

    Every appended pair cancels itself out in each pairwise comparison, so
    the majority graph is unchanged.
    """
    if pairs < 0:
        raise ElectionError("pairs must be nonnegative")
    forward = e.candidates
    backward = tuple(reversed(forward))
    return Election(forward, list(e.votes) + [backward, forward] * pairs)


def enumerate_nominations(pe: PartyElection) -> Iterator[Nomination]:
    """All valid nominations, lexicographic in (party index, roster order within party)."""
    for picks in itertools.product(*pe.parties):
        yield Nomination(picks)


def random_party_election(rng: random.Random, candidates: int, voters: int, parties: int) -> PartyElection:
    """Uniform random ballots; every party gets at least one member, the rest are spread at random."""
    if not 1 <= parties <= candidates:
        raise ElectionError("need 1 <= parties <= candidates")
    names = [f"c{i}" for i in range(candidates)]
    votes = [rng.sample(names, candidates) for _ in range(voters)]
    labels = list(range(parties)) + [rng.randrange(parties) for _ in range(candidates - parties)]
    rng.shuffle(labels)
    groups = [[c for c, l in zip(names, labels) if l == i] for i in range(parties)]
    return PartyElection(Election(names, votes), groups, rng.randrange(parties))
