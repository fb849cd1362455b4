"""Command-line interface.

Exit codes: 0 = yes (or success), 1 = no, 2 = error or budget exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import io
from .batch import format_report, parse_manifest, run_batch
from .core import ElectionError, PartyElection, pad_reversed_pairs, random_party_election, weighted_majority_graph
from .reductions import (
    BUILDERS, KINDS, CnfError, GadgetError, GraphError, decode_certificate, format_graph, oracle_multicolored_clique,
    oracle_sat, parse_dimacs, parse_graph, random_balanced_cnf, random_colored_graph, to_dimacs,
)
from .schulze import beatpath_strengths, schulze_winners
from .solvers import ALGORITHMS, DEFAULT_BUDGET, BudgetExceeded, SolverError, solve

YES, NO, ERROR = 0, 1, 2
RANDOM_KINDS = ("cnf", "graph", "election")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_winners(args) -> int:
    e = io.parse_any(_read(args.file))
    election = e.election if isinstance(e, PartyElection) else e
    for c in schulze_winners(election):
        print(c)
    if args.strengths:
        sys.stdout.write(beatpath_strengths(weighted_majority_graph(election)).to_tsv())
    return YES


def cmd_solve(args) -> int:
    pe = io.parse_party_election(_read(args.file))
    v = solve(pe, args.problem, args.algorithm, args.budget)
    sys.stdout.write(io.format_verdict(v))
    cert = io.certificate(v)
    if args.certificate and cert is not None:
        Path(args.certificate).write_text(io.format_nomination(cert))
    return YES if v.answer else NO


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "cnf":
        _write(args.out, to_dimacs(random_balanced_cnf(args.n, rng)))
    elif args.kind == "graph":
        _write(args.out, format_graph(random_colored_graph(args.q, args.x, args.y, rng)))
    elif args.kind == "election":
        pe = random_party_election(rng, args.candidates, args.voters, args.parties)
        _write(args.out, io.format_party_election(pe))
    else:
        if args.input is None:
            raise SystemExit(f"generate {args.kind} needs --in")
        text = _read(args.input)
        source = parse_graph(text) if args.kind.endswith("mcc") else parse_dimacs(text)
        pe = BUILDERS[args.kind](source)
        if args.pad:
            pe = PartyElection(pad_reversed_pairs(pe.election, args.pad), pe.parties, pe.distinguished)
        _write(args.out, io.format_party_election(pe))
    return YES


def cmd_oracle(args) -> int:
    text = _read(args.input)
    if args.kind == "sat":
        sat, bits = oracle_sat(parse_dimacs(text), args.limit or 24)
        print("sat" if sat else "unsat")
        if sat:
            print(" ".join(f"{'' if b else '-'}{i}" for i, b in enumerate(bits, 1)))
        return YES if sat else NO
    found, clique = oracle_multicolored_clique(parse_graph(text), args.limit or 10**6)
    print("clique" if found else "no-clique")
    if found:
        print(" ".join(clique))
    return YES if found else NO


def cmd_decode(args) -> int:
    pe = io.parse_party_election(_read(args.instance))
    n = io.parse_nomination(_read(args.nomination), pe)
    result = decode_certificate(args.kind, n)
    if isinstance(result, dict):
        print(" ".join(f"{'' if b else '-'}{i}" for i, b in result.items()))
    else:
        print(" ".join(result))
    return YES


def cmd_batch(args) -> int:
    jobs = parse_manifest(_read(args.manifest), Path(args.manifest).parent if args.manifest != "-" else None)
    reports = run_batch(jobs, args.jobs, args.budget)
    _write(args.out, format_report(reports))
    return ERROR if any(r.agreement == "false" for r in reports) else YES


def cmd_pad(args) -> int:
    e = io.parse_any(_read(args.file))
    if isinstance(e, PartyElection):
        padded = PartyElection(pad_reversed_pairs(e.election, args.pairs), e.parties, e.distinguished)
        _write(args.out, io.format_party_election(padded))
    else:
        _write(args.out, io.format_election(pad_reversed_pairs(e, args.pairs)))
    return YES


def cmd_validate(args) -> int:
    text = _read(args.file)
    fmt = args.format
    if fmt == "auto":
        suffix = Path(args.file).suffix
        fmt = {".cnf": "cnf", ".graph": "graph"}.get(suffix, "election")
    if fmt == "cnf":
        f = parse_dimacs(text)
        print(f"ok: 2-balanced 3-CNF, n={f.n} m={f.m}")
    elif fmt == "graph":
        h = parse_graph(text)
        print(f"ok: colored graph, q={h.q} x={h.x} y={h.y}")
    else:
        e = io.parse_any(text)
        if isinstance(e, PartyElection):
            print(f"ok: party election, {len(e.candidates)} candidates, {len(e.votes)} votes, "
                  f"{len(e.parties)} parties, max party size {e.max_party_size}")
        else:
            print(f"ok: election, {len(e.candidates)} candidates, {len(e.votes)} votes")
    return YES


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random generation")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="parallel workers for batch")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help=f"work limit for solvers (default {DEFAULT_BUDGET})")

    parser = argparse.ArgumentParser(prog="schulze-nom", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("winners", parents=[common], help="print the Schulze winners")
    p.add_argument("file")
    p.add_argument("--strengths", action="store_true", help="also print beatpath strengths as TSV")
    p.set_defaults(func=cmd_winners)

    p = sub.add_parser("solve", parents=[common], help="decide Possible or Necessary President")
    p.add_argument("file")
    p.add_argument("--problem", choices=("possible", "necessary"), default="possible")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--certificate", help="write the witness or first counterexample nomination here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", parents=[common], help="build a reduction instance or a random input")
    p.add_argument("kind", choices=KINDS + RANDOM_KINDS)
    p.add_argument("--in", dest="input", help="source CNF (DIMACS) or colored graph")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--pad", type=int, default=0, help="append this many reversed ballot pairs")
    p.add_argument("--n", type=int, default=6, help="variables for random cnf")
    p.add_argument("--q", type=int, default=3, help="colors for random graph")
    p.add_argument("--x", type=int, default=2, help="class size for random graph")
    p.add_argument("--y", type=int, default=2, help="edges per class pair for random graph")
    p.add_argument("--candidates", type=int, default=8)
    p.add_argument("--voters", type=int, default=3)
    p.add_argument("--parties", type=int, default=4)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", parents=[common], help="brute-force SAT or multicolored clique")
    p.add_argument("kind", choices=("sat", "clique"))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--limit", type=int, help="refuse instances above this size")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("decode", parents=[common], help="map a nomination back to an assignment or clique")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--instance", required=True)
    p.add_argument("--nomination", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("batch", parents=[common], help="run a manifest of solver jobs")
    p.add_argument("manifest")
    p.add_argument("--out", help="TSV report (default stdout)")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("pad", parents=[common], help="append reversed ballot pairs")
    p.add_argument("file")
    p.add_argument("--pairs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pad)

    p = sub.add_parser("validate", parents=[common], help="check an input file")
    p.add_argument("file")
    p.add_argument("--format", choices=("auto", "election", "cnf", "graph"), default="auto")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ElectionError, SolverError, BudgetExceeded, CnfError, GraphError, GadgetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
