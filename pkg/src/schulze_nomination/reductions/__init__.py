"""Hardness constructions as instance generators, with decoders and oracles."""

from .builders import (
    BUILDERS, PROBLEM_OF, build_np3, build_np4, build_np_mcc, build_pp3, build_pp4, build_pp_mcc,
)
from .cnf import BalancedCnf, Cnf, CnfError, all_balanced_cnfs, oracle_sat, parse_dimacs, random_balanced_cnf, to_dimacs
from .decode import KINDS, decode_certificate
from .gadgets import GadgetError, Profile, attach_alt_path3, attach_two_alt_paths2, path_tournament_profile
from .graphs import ColoredGraph, GraphError, format_graph, oracle_multicolored_clique, parse_graph, random_colored_graph

__all__ = [
    "BUILDERS", "PROBLEM_OF", "BalancedCnf", "Cnf", "CnfError", "ColoredGraph", "GadgetError", "GraphError", "KINDS",
    "Profile", "all_balanced_cnfs", "attach_alt_path3", "attach_two_alt_paths2", "build_np3", "build_np4",
    "build_np_mcc", "build_pp3", "build_pp4", "build_pp_mcc", "decode_certificate", "format_graph",
    "oracle_multicolored_clique", "oracle_sat", "parse_dimacs", "parse_graph", "path_tournament_profile",
    "random_balanced_cnf", "random_colored_graph", "to_dimacs",
]
