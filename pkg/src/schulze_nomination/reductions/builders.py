"""Party elections encoding 2-balanced 3-SAT and multicolored clique.

Naming scheme shared by all builders and the decoder:

* variable candidates ``x3`` / ``~x3``
* literal occurrence candidates ``x3.1`` / ``~x3.2`` (see BalancedCnf.occurrences)
* clause candidates ``k5``, selection candidates ``y3.1`` / ``~y3.1`` and ``s5.1``
* path dummies ``a3`` and ``b5``
* vertex candidates ``u.<vertex>``, edge candidates ``f.<u>.<v>``

Set shorthands inside ballots expand in roster order, ascending or descending.
"""

from __future__ import annotations

from ..core import Election, PartyElection
from .cnf import BalancedCnf, literal_name
from .gadgets import attach_alt_path3, attach_two_alt_paths2, path_tournament_profile
from .graphs import ColoredGraph


def _x(i: int) -> str:
    return literal_name(i)


def _nx(i: int) -> str:
    return literal_name(-i)


def _occ(lit: int, h: int) -> str:
    return f"{literal_name(lit)}.{h}"


def _occurrence_roster(n: int) -> list[str]:
    return [_occ(s * i, h) for i in range(1, n + 1) for s in (1, -1) for h in (1, 2)]


# ---------------------------------------------------------------- SAT, Possible President


def build_pp3(f: BalancedCnf) -> PartyElection:
    """Three voters, parties of size at most two. p = a1 can win iff f is satisfiable."""
    if f.n % 2:
        f = f.duplicated()
    n, m = f.n, f.m
    occ = f.occurrences()
    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{j}" for j in range(1, m + 2)]
    path = []
    for i in range(1, n + 1):
        path += [a[i - 1], f"y{i}.1", f"y{i}.2"]
    for j in range(1, m + 1):
        path += [b[j - 1], occ[j - 1][0]]
    path.append(b[m])

    prof = path_tournament_profile(len(path), path)
    for i in range(1, n + 1):
        prof = attach_alt_path3(prof, 3 * i - 2, (f"~y{i}.1", f"~y{i}.2"))
    for j in range(1, m + 1):
        prof = attach_two_alt_paths2(prof, 3 * n + 2 * j - 1, (occ[j - 1][1], occ[j - 1][2]))

    selection = [f"{s}y{i}.{h}" for i in range(1, n + 1) for s in ("", "~") for h in (1, 2)]
    roster = a + b + selection + _occurrence_roster(n)
    parties = [[c] for c in a + b]
    for i in range(1, n + 1):
        for s in ("", "~"):
            for h in (1, 2):
                parties.append([f"{s}x{i}.{h}", f"{s}y{i}.{h}"])
    return PartyElection(Election(roster, prof.votes), parties, 0)


def build_pp4(f: BalancedCnf) -> PartyElection:
    """Four voters; every arc has weight 2. p can win iff f is satisfiable."""
    n, m = f.n, f.m
    occ = f.occurrences()
    clauses = [f"k{j}" for j in range(1, m + 1)]
    variables = [_x(i) for i in range(1, n + 1)] + [_nx(i) for i in range(1, n + 1)]
    roster = ["p"] + clauses + variables + _occurrence_roster(n)

    v1 = clauses + ["p"]
    for lit in list(range(1, n + 1)) + [-i for i in range(1, n + 1)]:
        v1 += [literal_name(lit), _occ(lit, 1), _occ(lit, 2)]
    v2 = ["p"]
    for lit in [-i for i in range(n, 0, -1)] + list(range(n, 0, -1)):
        v2 += [literal_name(lit), _occ(lit, 2), _occ(lit, 1)]
    v2 += clauses[::-1]
    v3 = list(variables)
    for j in range(m):
        v3 += occ[j] + [clauses[j]]
    v3.append("p")
    v4 = []
    for j in reversed(range(m)):
        v4 += occ[j][::-1] + [clauses[j]]
    v4 += ["p"] + variables[::-1]

    parties = [["p"]]
    parties += [[_x(i), _nx(i)] for i in range(1, n + 1)]
    parties += [[k] for k in clauses]
    for h in (1, 2):
        parties += [[_occ(i, h), _occ(-i, h)] for i in range(1, n + 1)]
    return PartyElection(Election(roster, [v1, v2, v3, v4]), parties, 0)


# ---------------------------------------------------------------- SAT, Necessary President


def build_np3(f: BalancedCnf) -> PartyElection:
    """Three voters, parties of size at most three. p is a necessary president iff f is unsatisfiable."""
    n = f.n
    occ = f.occurrences()
    idx = range(1, n + 1)
    variables = [_x(i) for i in idx] + [_nx(i) for i in idx]
    roster = ["p", "a", "b"] + variables + _occurrence_roster(n)

    v1 = ["b"]
    v1 += [_occ(-i, h) for i in idx for h in (1, 2)]
    v1 += [_occ(i, h) for i in idx for h in (1, 2)]
    v1 += ["a", "p"] + variables
    v2 = ["p"]
    for i in idx:
        v2 += [_x(i), _occ(-i, 1), _occ(-i, 2)]
    for i in idx:
        v2 += [_nx(i), _occ(i, 1), _occ(i, 2)]
    v2 += ["a", "b"]
    v3 = ["a", "b"]
    for i in reversed(idx):
        v3 += [_nx(i), _occ(i, 2), _occ(i, 1)]
    for i in reversed(idx):
        v3 += [_x(i), _occ(-i, 2), _occ(-i, 1)]
    v3.append("p")

    parties = [["p"], ["a"], ["b"]]
    parties += [[_x(i), _nx(i)] for i in idx]
    parties += [list(row) for row in occ]
    return PartyElection(Election(roster, [v1, v2, v3]), parties, 0)


def build_np4(f: BalancedCnf) -> PartyElection:
    """Four voters, parties of size at most two. p is a necessary president iff f is unsatisfiable."""
    n, m = f.n, f.m
    occ = f.occurrences()
    idx = range(1, n + 1)
    variables = [_x(i) for i in idx] + [_nx(i) for i in idx]
    sel = [[f"s{j}.1", f"s{j}.2"] for j in range(1, m + 1)]
    selection = [s for pair in sel for s in pair]
    roster = ["p", "a", "b", "c"] + variables + _occurrence_roster(n) + selection

    v1 = ["p", "a", "b", "c"] + variables
    for j in range(m):
        l1, l2, l3 = occ[j]
        v1 += [l1, sel[j][0], l2, l3, sel[j][1]]
    v2 = selection + ["a", "b", "c", "p"]
    for i in idx:
        v2 += [_x(i), _occ(-i, 1), _occ(-i, 2)]
    for i in idx:
        v2 += [_nx(i), _occ(i, 1), _occ(i, 2)]
    v3 = ["b", "c"]
    for j in reversed(range(m)):
        l1, l2, l3 = occ[j]
        v3 += [l2, l3, sel[j][1], l1, sel[j][0]]
    v3 += ["a", "p"] + variables[::-1]
    v4 = []
    for i in reversed(idx):
        v4 += [_nx(i), _occ(i, 2), _occ(i, 1)]
    for i in reversed(idx):
        v4 += [_x(i), _occ(-i, 2), _occ(-i, 1)]
    v4 += ["c"] + selection[::-1] + ["a", "b", "p"]

    parties = [["p"], ["a"], ["b"], ["c"]]
    parties += [[_x(i), _nx(i)] for i in idx]
    for j in range(m):
        parties += [[occ[j][0]], occ[j][1:], sel[j]]
    return PartyElection(Election(roster, [v1, v2, v3, v4]), parties, 0)


# ---------------------------------------------------------------- multicolored clique


def vertex_candidate(u: str) -> str:
    return f"u.{u}"


def edge_candidate(e: tuple[str, str]) -> str:
    return f"f.{e[0]}.{e[1]}"


class _Incidence:
    """Vertex/edge candidate series shared by both clique constructions."""

    def __init__(self, h: ColoredGraph):
        self.h = h
        color = h.color
        self.U = [vertex_candidate(u) for cls in h.classes for u in cls]
        sets = h.edge_sets()
        self.F = [edge_candidate(e) for pair in sorted(sets) for e in sets[pair]]
        rank = {f: k for k, f in enumerate(self.F)}
        # F_{i->}(u): edges from u to a later class; F_{->i}(u): edges from u to an earlier class
        self.later: dict[str, list[str]] = {u: [] for cls in h.classes for u in cls}
        self.earlier: dict[str, list[str]] = {u: [] for cls in h.classes for u in cls}
        for u, v in h.edges:
            # edges are stored with u in the lower class
            assert color[u] < color[v]
            self.later[u].append(edge_candidate((u, v)))
            self.earlier[v].append(edge_candidate((u, v)))
        for table in (self.later, self.earlier):
            for u in table:
                table[u].sort(key=rank.__getitem__)

    def block(self, i: int, table: dict[str, list[str]], reverse: bool) -> list[str]:
        cls = self.h.classes[i]
        out = []
        for u in (reversed(cls) if reverse else cls):
            fs = table[u]
            out += (fs[::-1] if reverse else fs) + [vertex_candidate(u)]
        return out

    def series(self, table: dict[str, list[str]], reverse: bool) -> list[str]:
        order = range(self.h.q - 1, -1, -1) if reverse else range(self.h.q)
        out = []
        for i in order:
            out += self.block(i, table, reverse)
        return out

    def parties(self) -> list[list[str]]:
        parties = [["p"], ["a"], ["b"]]
        parties += [[vertex_candidate(u) for u in cls] for cls in self.h.classes]
        sets = self.h.edge_sets()
        parties += [[edge_candidate(e) for e in sets[pair]] for pair in sorted(sets)]
        return parties

    @property
    def roster(self) -> list[str]:
        return ["p", "a", "b"] + self.U + self.F


def build_pp_mcc(h: ColoredGraph) -> PartyElection:
    """Eight voters (four base, four incidence); parameter is the number of parties."""
    inc = _Incidence(h)
    U, F = inc.U, inc.F
    votes = [
        ["b"] + U + F + ["a", "p"],
        ["p"] + F[::-1] + ["a", "b"] + U[::-1],
        U + F + ["a", "p", "b"],
        ["b", "a"] + U[::-1] + F[::-1] + ["p"],
        ["p"] + inc.series(inc.later, False) + ["a", "b"],
        ["b", "a", "p"] + inc.series(inc.later, True),
        ["p"] + inc.series(inc.earlier, False) + ["a", "b"],
        ["b", "a", "p"] + inc.series(inc.earlier, True),
    ]
    return PartyElection(Election(inc.roster, votes), inc.parties(), 0)


def build_np_mcc(h: ColoredGraph) -> PartyElection:
    """Seven voters (three base, four incidence)."""
    inc = _Incidence(h)
    U, F = inc.U, inc.F
    votes = [
        ["b"] + F + ["a", "p"] + U,
        ["p"] + U + F + ["a", "b"],
        ["a", "b"] + U[::-1] + F[::-1] + ["p"],
        ["p", "a", "b"] + inc.series(inc.later, False),
        inc.series(inc.later, True) + ["b", "a", "p"],
        ["p", "a", "b"] + inc.series(inc.earlier, False),
        inc.series(inc.earlier, True) + ["b", "a", "p"],
    ]
    return PartyElection(Election(inc.roster, votes), inc.parties(), 0)


BUILDERS = {
    "pp3": build_pp3,
    "pp4": build_pp4,
    "np3": build_np3,
    "np4": build_np4,
    "ppmcc": build_pp_mcc,
    "npmcc": build_np_mcc,
}

PROBLEM_OF = {
    "pp3": "possible", "pp4": "possible", "ppmcc": "possible",
    "np3": "necessary", "np4": "necessary", "npmcc": "necessary",
}
