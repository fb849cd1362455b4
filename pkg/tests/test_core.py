import pytest
from conftest import elections, party_elections
from hypothesis import given
from hypothesis import strategies as st
from oracles import ALT_PATH_ARCS, ALT_PATH_VOTES, pairwise_margins

from schulze_nomination.core import (
    Election,
    ElectionError,
    Nomination,
    PartyElection,
    enumerate_nominations,
    pad_reversed_pairs,
    random_party_election,
    reduce,
    threshold_subgraph,
    weighted_majority_graph,
)


def test_alt_path_profile_arcs():
    e = Election(sorted(ALT_PATH_VOTES[1]), ALT_PATH_VOTES)
    g = weighted_majority_graph(e)
    assert g.arcs == ALT_PATH_ARCS
    assert set(g.weights.values()) == {1}


def test_reversed_pair_has_no_arcs():
    e = Election("abc", ["abc", "cba"])
    assert weighted_majority_graph(e).weights == {}


def test_margins_match_double_loop(rng):
    for _ in range(200):
        cands = [f"c{i}" for i in range(6)]
        votes = [rng.sample(cands, 6) for _ in range(3)]
        g = weighted_majority_graph(Election(cands, votes))
        assert dict(g.weights) == pairwise_margins(cands, votes)


@given(elections(max_voters=6))
def test_antisymmetry_and_parity(e):
    g = weighted_majority_graph(e)
    for (a, b), w in g.weights.items():
        assert a != b
        assert (b, a) not in g.weights
        assert w % 2 == len(e.votes) % 2
        assert 1 <= w <= len(e.votes)


def test_threshold_subgraph_keeps_exact_weight():
    e = Election(["q1", "q2", "q2'", "q2''", "q3"],
                 [["q3", "q1", "q2", "q2'", "q2''"], ["q1", "q2", "q2'", "q2''", "q3"], ["q2", "q2'", "q2''", "q3", "q1"]])
    g3 = threshold_subgraph(weighted_majority_graph(e), 3)
    assert g3.arcs == {("q2", "q2'"), ("q2'", "q2''"), ("q2", "q2''")}
    assert threshold_subgraph(weighted_majority_graph(e), 5).arcs == set()


@given(elections(min_candidates=2, max_candidates=5, voters=3))
def test_three_voter_levels_partition_arcs(e):
    g = weighted_majority_graph(e)
    g1, g3 = threshold_subgraph(g, 1), threshold_subgraph(g, 3)
    assert g1.arcs | g3.arcs == g.arcs
    assert not g1.arcs & g3.arcs


def test_reduce_preserves_order():
    e = Election("abcd", ["abcd", "dcba"])
    r = reduce(e, ["b", "d"])
    assert r.votes == (("b", "d"), ("d", "b"))
    assert reduce(e, e.candidates) == e
    with pytest.raises(ElectionError, match="'z'"):
        reduce(e, ["a", "z"])


@given(party_elections(), st.data())
def test_reduction_commutes_with_majority_graph(pe, data):
    picks = [data.draw(st.sampled_from(p)) for p in pe.parties]
    n = pe.nominate(picks)
    assert weighted_majority_graph(reduce(pe.election, n)) == weighted_majority_graph(pe.election).induced(picks)


@given(elections(max_voters=4), st.integers(0, 3))
def test_padding_keeps_graph(e, pairs):
    padded = pad_reversed_pairs(e, pairs)
    assert len(padded.votes) == len(e.votes) + 2 * pairs
    assert weighted_majority_graph(padded) == weighted_majority_graph(e)


def test_padding_zero_is_identity():
    e = Election("abc", ["bca"])
    assert pad_reversed_pairs(e, 0) == e


def test_enumeration_order_and_count():
    e = Election("abcde", ["abcde"])
    pe = PartyElection(e, [["a", "b"], ["c"], ["d", "e"]])
    got = [n.picks for n in enumerate_nominations(pe)]
    assert got == [("a", "c", "d"), ("a", "c", "e"), ("b", "c", "d"), ("b", "c", "e")]
    single = PartyElection(Election("ab", []), [["a"], ["b"]])
    assert [n.picks for n in enumerate_nominations(single)] == [("a", "b")]


def test_enumeration_count_2_3_2():
    e = Election("abcdefg", [])
    pe = PartyElection(e, [["a", "b"], ["c", "d", "e"], ["f", "g"]])
    noms = list(enumerate_nominations(pe))
    assert len(noms) == 12 == pe.nomination_count()
    assert len(set(noms)) == 12


@pytest.mark.parametrize("cands, votes, needle", [
    ([], [], "at least one"),
    (["a", "a"], [], "duplicate"),
    (["a", "b"], [["a"]], "missing 'b'"),
    (["a", "b"], [["a", "z"]], "missing 'b'"),
    (["a", "b"], [["a", "a"]], "missing 'b'"),
])
def test_election_validation(cands, votes, needle):
    with pytest.raises(ElectionError, match=needle):
        Election(cands, votes)


@pytest.mark.parametrize("parties, needle", [
    ([["a"], ["b"]], "'c' belongs to no party"),
    ([["a", "b"], ["b", "c"]], "belongs to parties"),
    ([["a", "b", "c"], []], "empty"),
    ([["a", "z"], ["b", "c"]], "unknown"),
])
def test_party_validation(parties, needle):
    with pytest.raises(ElectionError, match=needle):
        PartyElection(Election("abc", ["abc"]), parties)


def test_nomination_validation():
    pe = PartyElection(Election("abc", ["abc"]), [["a", "b"], ["c"]])
    assert pe.nominate(["b", "c"]) == Nomination(("b", "c"))
    assert pe.nomination_from_set({"c", "a"}).picks == ("a", "c")
    with pytest.raises(ElectionError):
        pe.nominate(["c", "c"])
    with pytest.raises(ElectionError):
        pe.nomination_from_set({"a", "b", "c"})
    with pytest.raises(ElectionError):
        PartyElection(pe.election, pe.parties, 5)


def test_zero_and_one_voter_graphs():
    assert weighted_majority_graph(Election("abc", [])).weights == {}
    g = weighted_majority_graph(Election("abc", ["bca"]))
    assert g.weights == {("b", "c"): 1, ("b", "a"): 1, ("c", "a"): 1}


def test_random_party_election_is_valid(rng):
    pe = random_party_election(rng, 7, 3, 4)
    assert len(pe.parties) == 4 and len(pe.votes) == 3
