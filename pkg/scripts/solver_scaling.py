"""Time the two-voter solvers and the three-voter FPT solver as instances grow."""

import argparse
import random
import time
from dataclasses import dataclass

from schulze_nomination.core import random_party_election
from schulze_nomination.solvers import solve_np_two_voters, solve_pp_three_voters_fpt, solve_pp_two_voters


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


@dataclass
class Config:
    seed: int = 0
    repeats: int = 5
    sizes: tuple[int, ...] = (250, 500, 1000, 2000, 4000)
    max_parties: int = 7


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--repeats", type=int, default=Config.repeats)
    args = Config(**vars(ap.parse_args()))
    rng = random.Random(args.seed)

    print("# two voters: candidates vs seconds (expect roughly linear growth)")
    print("candidates\tpp_s\tnp_s")
    for size in args.sizes:
        pp = np_ = 0.0
        for _ in range(args.repeats):
            pe = random_party_election(rng, size, 2, size // 4)
            pp += timed(solve_pp_two_voters, pe)[1]
            np_ += timed(solve_np_two_voters, pe)[1]
        print(f"{size}\t{pp / args.repeats:.5f}\t{np_ / args.repeats:.5f}")

    print("# three voters: parties vs trees and seconds (FPT in the number of parties)")
    print("parties\tcandidates\ttrees\tseconds")
    for k in range(2, args.max_parties + 1):
        pe = random_party_election(rng, 3 * k, 3, k)
        v, secs = timed(solve_pp_three_voters_fpt, pe)
        print(f"{k}\t{3 * k}\t{v.stats.trees}\t{secs:.4f}")


if __name__ == "__main__":
    main()
