"""Check the four SAT reductions against the SAT oracle and report timings.

    python3 scripts/reduction_equivalence.py --random 20 --seed 1
"""

import argparse
import random
import time
from dataclasses import dataclass

from schulze_nomination.reductions import (
    all_balanced_cnfs, build_np3, build_np4, build_pp3, build_pp4, decode_certificate, oracle_sat,
    random_balanced_cnf,
)
from schulze_nomination.solvers import solve

REDUCTIONS = (("pp3", build_pp3, "possible"), ("pp4", build_pp4, "possible"),
              ("np3", build_np3, "necessary"), ("np4", build_np4, "necessary"))


@dataclass
class Config:
    random: int = 20  # random formulas with n=6
    exhaustive: bool = False  # every n=3 formula instead of only the unsat ones
    seed: int = 0


def formula_pool(cfg: Config):
    rng = random.Random(cfg.seed)
    n3 = list(all_balanced_cnfs(3))
    pool = n3 if cfg.exhaustive else [f for f in n3 if not oracle_sat(f)[0]]
    return pool + [random_balanced_cnf(6, rng) for _ in range(cfg.random)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=Config.random)
    ap.add_argument("--exhaustive", action="store_true")
    ap.add_argument("--seed", type=int, default=Config.seed)
    pool = formula_pool(Config(**vars(ap.parse_args())))

    print("kind\tformulas\tagree\tseconds\tmax_nodes")
    for kind, build, problem in REDUCTIONS:
        agree, nodes, start = 0, 0, time.perf_counter()
        for f in pool:
            sat = oracle_sat(f)[0]
            v = solve(build(f), problem)
            ok = v.answer == (sat if problem == "possible" else not sat)
            cert = v.witness if v.witness is not None else next(iter(v.counterexamples.values()), None)
            if ok and cert is not None:
                bits = decode_certificate(kind, cert)
                ok = f.evaluate({i: bits[i] for i in range(1, f.n + 1)})
            agree += ok
            nodes = max(nodes, v.stats.nodes + v.stats.nominations)
        print(f"{kind}\t{len(pool)}\t{agree}\t{time.perf_counter() - start:.2f}\t{nodes}")


if __name__ == "__main__":
    main()
