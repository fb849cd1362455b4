"""Text formats for elections, party elections, nominations and verdicts.

Election files::

    # comment
    candidates: a b c p
    party: a b
    party*: p          # '*' marks the distinguished party
    vote: p a b c

Plain elections have no party lines.
"""

from __future__ import annotations

from .core import Election, ElectionError, Nomination, PartyElection
from .solvers import Verdict


class ParseError(ElectionError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: values', got {line!r}", lineno)
        yield lineno, key.strip(), rest.split()


def _parse(text: str):
    candidates: list[str] | None = None
    cand_line = None
    parties: list[tuple[int, list[str]]] = []
    starred: list[int] = []
    votes: list[tuple[int, list[str]]] = []
    for lineno, key, words in _records(text):
        if key == "candidates":
            if candidates is not None:
                raise ParseError(f"second candidates line (first on line {cand_line})", lineno)
            seen = set()
            for c in words:
                if c in seen:
                    raise ParseError(f"duplicate candidate {c!r}", lineno)
                seen.add(c)
            if not words:
                raise ParseError("an election needs at least one candidate", lineno)
            candidates, cand_line = words, lineno
        elif key in ("party", "party*"):
            if key == "party*":
                starred.append(lineno)
            parties.append((lineno, words))
        elif key == "vote":
            votes.append((lineno, words))
        else:
            raise ParseError(f"unknown record {key!r}", lineno)
    if candidates is None:
        raise ParseError("missing candidates line")
    roster = set(candidates)
    for lineno, vote in votes:
        for c in vote:
            if c not in roster:
                raise ParseError(f"vote names unknown candidate {c!r}", lineno)
        seen = set()
        for c in vote:
            if c in seen:
                raise ParseError(f"vote ranks {c!r} twice", lineno)
            seen.add(c)
        missing = [c for c in candidates if c not in seen]
        if missing:
            raise ParseError(f"vote does not rank {missing[0]!r}", lineno)
    owner: dict[str, int] = {}
    for lineno, party in parties:
        if not party:
            raise ParseError("empty party", lineno)
        for c in party:
            if c not in roster:
                raise ParseError(f"party names unknown candidate {c!r}", lineno)
            if c in owner:
                raise ParseError(f"candidate {c!r} already belongs to the party on line {owner[c]}", lineno)
            owner[c] = lineno
    return candidates, cand_line, parties, starred, votes


def parse_election(text: str) -> Election:
    candidates, _, parties, _, votes = _parse(text)
    if parties:
        raise ParseError("party lines found; use parse_party_election", parties[0][0])
    return Election(candidates, [v for _, v in votes])


def parse_party_election(text: str) -> PartyElection:
    candidates, cand_line, parties, starred, votes = _parse(text)
    if not parties:
        raise ParseError("no party lines")
    if len(starred) != 1:
        where = ", ".join(map(str, starred))
        raise ParseError(
            "no distinguished party (mark one with 'party*:')" if not starred
            else f"several distinguished parties (lines {where})",
            starred[1] if len(starred) > 1 else None,
        )
    covered = {c for _, p in parties for c in p}
    missing = [c for c in candidates if c not in covered]
    if missing:
        raise ParseError(f"candidate {missing[0]!r} belongs to no party", cand_line)
    distinguished = next(i for i, (lineno, _) in enumerate(parties) if lineno == starred[0])
    election = Election(candidates, [v for _, v in votes])
    return PartyElection(election, [p for _, p in parties], distinguished)


def parse_any(text: str) -> Election | PartyElection:
    candidates, _, parties, _, _ = _parse(text)
    return parse_party_election(text) if parties else parse_election(text)


def format_election(e: Election) -> str:
    lines = ["candidates: " + " ".join(e.candidates)]
    lines += ["vote: " + " ".join(v) for v in e.votes]
    return "\n".join(lines) + "\n"


def format_party_election(pe: PartyElection) -> str:
    lines = ["candidates: " + " ".join(pe.candidates)]
    for i, party in enumerate(pe.parties):
        lines.append(("party*: " if i == pe.distinguished else "party: ") + " ".join(party))
    lines += ["vote: " + " ".join(v) for v in pe.votes]
    return "\n".join(lines) + "\n"


def parse_nomination(text: str, pe: PartyElection) -> Nomination:
    """Nominees separated by whitespace; an optional ``nominees:`` prefix and ``#`` comments are ignored."""
    names = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("nominees:"):
            line = line[len("nominees:"):]
        names += line.split()
    try:
        return pe.nomination_from_set(names)
    except ElectionError as exc:
        raise ParseError(str(exc)) from None


def format_nomination(n: Nomination) -> str:
    return "nominees: " + " ".join(n.picks) + "\n"


def format_verdict(v: Verdict) -> str:
    lines = [
        f"answer: {'yes' if v.answer else 'no'}",
        f"problem: {v.problem}",
        f"algorithm: {v.algorithm}",
    ]
    if v.witness is not None:
        lines.append("witness: " + " ".join(v.witness.picks))
    if v.president is not None:
        lines.append(f"president: {v.president}")
    for p, n in v.counterexamples.items():
        lines.append(f"counterexample {p}: " + " ".join(n.picks))
    s = v.stats
    lines.append(f"stats: nominations={s.nominations} trees={s.trees} nodes={s.nodes} elapsed={s.elapsed:.6f}")
    return "\n".join(lines) + "\n"


def certificate(v: Verdict) -> Nomination | None:
    """The nomination that backs the verdict, if there is one."""
    if v.witness is not None:
        return v.witness
    return next(iter(v.counterexamples.values()), None)
