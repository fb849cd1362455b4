"""Compare the clique reductions with the clique oracle for q = 2 and q = 3.

For q = 3 the reductions answer every clique instance wrongly. The script
prints the offending path for the smallest such instance: a vertex nominee of
the third color is not incident to the chosen edge between the other two
colors, and that non-incidence yields an arc which closes a beating path.
"""

import argparse
import random
from collections import Counter

from schulze_nomination.core import reduce, weighted_majority_graph
from schulze_nomination.schulze import beatpath_strengths
from schulze_nomination.reductions import (
    build_np_mcc, build_pp_mcc, format_graph, oracle_multicolored_clique, random_colored_graph,
)
from schulze_nomination.reductions.builders import edge_candidate, vertex_candidate
from schulze_nomination.solvers import solve


def tally(q, graphs):
    rows = Counter()
    for h in graphs:
        found, _ = oracle_multicolored_clique(h)
        pp = solve(build_pp_mcc(h), "possible").answer == found
        np_ = solve(build_np_mcc(h), "necessary").answer == (not found)
        rows[("clique" if found else "none", pp, np_)] += 1
    for (kind, pp, np_), count in sorted(rows.items()):
        print(f"q={q}\t{kind}\tpp_correct={pp}\tnp_correct={np_}\tcount={count}")


def explain(h):
    found, clique = oracle_multicolored_clique(h)
    print("\n# smallest q=3 clique instance")
    print(format_graph(h), end="")
    print(f"# oracle clique: {' '.join(clique)}")
    pe = build_pp_mcc(h)
    picks = {"p", "a", "b"} | {vertex_candidate(u) for u in clique}
    picks |= {edge_candidate(e) for e in h.edges if e[0] in clique and e[1] in clique}
    g = weighted_majority_graph(reduce(pe.election, pe.nomination_from_set(picks)))
    for u in clique:
        for e in h.edges:
            if u not in e and e[0] in clique and e[1] in clique:
                vu, fe = vertex_candidate(u), edge_candidate(e)
                print(f"# {vu} is not incident to {e[0]}-{e[1]}: arc {vu}->{fe} present: {g.has_arc(vu, fe)}")
    print(f"# path b -> p: {' -> '.join(_path(g, 'b', 'p'))}")
    s = beatpath_strengths(g)
    print(f"# str(b, p) = {s['b', 'p']}, str(p, b) = {s['p', 'b']}")


def _path(g, src, dst):
    parent, queue = {src: None}, [src]
    for node in queue:
        for w in g.out_neighbors(node):
            if w not in parent:
                parent[w] = node
                queue.append(w)
    path, node = [], dst
    while node is not None:
        path.append(node)
        node = parent.get(node)
    return path[::-1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for q in (2, 3):
        graphs = []
        for _ in range(args.count):
            x = rng.choice([2, 3])
            graphs.append(random_colored_graph(q, x, rng.randint(1, x * x), rng))
        tally(q, graphs)
    h = random_colored_graph(3, 1, 1, rng)
    explain(h)


if __name__ == "__main__":
    main()
