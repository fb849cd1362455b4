import pytest
from conftest import party_elections
from hypothesis import given, settings

from schulze_nomination.core import Election, PartyElection, random_party_election
from schulze_nomination.search import solve_np_search, solve_pp_search
from schulze_nomination.solvers import BudgetExceeded, solve_np_brute, solve_pp_brute, verify_verdict


@settings(max_examples=200)
@given(party_elections(max_candidates=9, max_voters=6, max_parties=5))
def test_search_matches_brute(pe):
    for fast, slow in ((solve_pp_search, solve_pp_brute), (solve_np_search, solve_np_brute)):
        v = fast(pe)
        assert v.answer == slow(pe).answer
        assert verify_verdict(pe, v)


def test_search_on_larger_random_instances(rng):
    for _ in range(40):
        pe = random_party_election(rng, 12, rng.choice([3, 4, 5]), 6)
        for fast, slow in ((solve_pp_search, solve_pp_brute), (solve_np_search, solve_np_brute)):
            assert fast(pe).answer == slow(pe).answer


def test_search_budget_counts_nodes():
    cands = [f"c{i}" for i in range(12)]
    pe = PartyElection(Election(cands, [cands, cands[1:] + cands[:1], cands[::-1]]),
                       [cands[i:i + 2] for i in range(0, 12, 2)], 5)
    with pytest.raises(BudgetExceeded):
        solve_np_search(pe, budget=1)
