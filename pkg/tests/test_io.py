import random

import pytest
from conftest import party_elections
from hypothesis import given

from schulze_nomination.core import random_party_election
from schulze_nomination.io import (
    ParseError,
    format_election,
    format_nomination,
    format_party_election,
    format_verdict,
    parse_any,
    parse_election,
    parse_nomination,
    parse_party_election,
)
from schulze_nomination.reductions import (
    BUILDERS,
    random_balanced_cnf,
    random_colored_graph,
)
from schulze_nomination.solvers import solve

GOOD = """# small example
candidates: a b p
party: a b
party*: p   # distinguished
vote: p a b
vote: a b p
"""


def test_parse_example():
    pe = parse_party_election(GOOD)
    assert pe.candidates == ("a", "b", "p")
    assert pe.distinguished_party == ("p",)
    assert len(pe.votes) == 2


@given(party_elections())
def test_round_trip(pe):
    text = format_party_election(pe)
    again = parse_party_election(text)
    assert again == pe
    assert format_party_election(again) == text


def test_plain_election_round_trip():
    e = parse_election("candidates: a b c\nvote: a b c\nvote: c b a\n")
    assert parse_election(format_election(e)) == e
    assert parse_any(format_election(e)) == e


@pytest.mark.parametrize("text, needle, line", [
    ("candidates: a a\n", "duplicate candidate 'a'", 1),
    ("candidates: a b\nparty*: a b\nvote: a\n", "does not rank 'b'", 3),
    ("candidates: a b\nparty*: a b\nvote: a z\n", "unknown candidate 'z'", 3),
    ("candidates: a b\nparty*: a b\nvote: a a\n", "twice", 3),
    ("candidates: a b\nparty*: a z\n", "unknown candidate 'z'", 2),
    ("candidates: a b\nparty*: a\nparty: a b\n", "already belongs", 3),
    ("candidates: a b\nparty: a\nparty*: b\nparty*:\n", "empty party", 4),
    ("candidates: a b\nparty*: a\nparty*: b\n", "several distinguished", 3),
    ("candidates: a b\nparty*: a\n", "belongs to no party", 1),
    ("candidates: a\nballot: a\n", "unknown record", 2),
    ("candidates: a\nvote a\n", "key: values", 2),
])
def test_errors_carry_line_numbers(text, needle, line):
    with pytest.raises(ParseError, match=needle) as info:
        parse_party_election(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_missing_distinguished_party():
    with pytest.raises(ParseError, match="no distinguished"):
        parse_party_election("candidates: a b\nparty: a b\n")


def test_parse_election_rejects_parties():
    with pytest.raises(ParseError, match="party lines"):
        parse_election(GOOD)


def test_nomination_round_trip():
    pe = parse_party_election(GOOD)
    n = parse_nomination("nominees: b p  # chosen\n", pe)
    assert n.picks == ("b", "p")
    assert parse_nomination(format_nomination(n), pe) == n
    with pytest.raises(ParseError):
        parse_nomination("a b p", pe)


def test_verdict_text_is_stable():
    pe = parse_party_election(GOOD)
    v = solve(pe, "possible", "brute")
    text = format_verdict(v)
    assert text.splitlines()[:3] == ["answer: yes", "problem: possible", "algorithm: brute"]
    assert any(line.startswith("witness: ") for line in text.splitlines())


def test_generator_outputs_reparse_losslessly():
    rng = random.Random(3)
    f = random_balanced_cnf(3, rng)
    h = random_colored_graph(3, 2, 2, rng)
    for kind, build in BUILDERS.items():
        pe = build(h if kind.endswith("mcc") else f)
        text = format_party_election(pe)
        assert parse_party_election(text) == pe
        assert format_party_election(parse_party_election(text)) == text
    pe = random_party_election(rng, 8, 3, 4)
    assert parse_party_election(format_party_election(pe)) == pe
