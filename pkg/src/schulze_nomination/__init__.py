"""Possible and Necessary President under Schulze voting: solvers, reductions, oracles."""

from .core import (
    Election, ElectionError, Nomination, PartyElection, WeightedMajorityGraph, enumerate_nominations,
    pad_reversed_pairs, random_party_election, reduce, reduce_to, threshold_subgraph, weighted_majority_graph,
)
from .schulze import LevelGraph, StrengthMatrix, beatpath_strengths, is_schulze_winner, schulze_winners
from .search import solve_np_search, solve_pp_search
from .solvers import (
    BudgetExceeded, PartyTree, SolverError, Stats, Verdict, compatible_sets, enumerate_party_trees, solve,
    solve_np_brute, solve_np_two_voters, solve_pp_brute, solve_pp_three_voters_fpt, solve_pp_two_voters,
    verify_verdict,
)

__all__ = [
    "BudgetExceeded", "Election", "ElectionError", "LevelGraph", "Nomination", "PartyElection", "PartyTree",
    "SolverError", "Stats", "StrengthMatrix", "Verdict", "WeightedMajorityGraph", "beatpath_strengths",
    "compatible_sets", "enumerate_nominations", "enumerate_party_trees", "is_schulze_winner", "pad_reversed_pairs",
    "random_party_election", "reduce", "reduce_to", "schulze_winners", "solve", "solve_np_brute", "solve_np_search",
    "solve_np_two_voters", "solve_pp_brute", "solve_pp_search", "solve_pp_three_voters_fpt", "solve_pp_two_voters",
    "threshold_subgraph", "verify_verdict", "weighted_majority_graph",
]
