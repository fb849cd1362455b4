"""2-balanced 3-CNF formulas: validation, DIMACS I/O, random generation, SAT oracle."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_SAT_LIMIT = 24


class CnfError(ValueError):
    pass


def var_name(i: int) -> str:
    return f"x{i}"


def literal_name(lit: int) -> str:
    """Variable candidate for a literal: ``x3`` or ``~x3``."""
    return ("~" if lit < 0 else "") + var_name(abs(lit))


@dataclass(frozen=True)
class Cnf:
    """Plain 3-CNF over variables 1..n; literals are DIMACS integers."""

    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, clauses: Sequence[Sequence[int]]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment: Sequence[bool] | dict[int, bool]) -> bool:
        if not isinstance(assignment, dict):
            assignment = {i + 1: v for i, v in enumerate(assignment)}
        return all(any(assignment[abs(l)] == (l > 0) for l in clause) for clause in self.clauses)


@dataclass(frozen=True, init=False)
class BalancedCnf(Cnf):
    """3-CNF where each variable occurs exactly twice unnegated and twice negated.

    Occurrence labels follow clause order: the first time literal ``-3``
    appears it is ``~x3.1``, the second time ``~x3.2``.
    """

    def __init__(self, n: int, clauses: Sequence[Sequence[int]]):
        super().__init__(n, clauses)
        check_balanced(self.n, self.clauses)

    def occurrences(self) -> list[list[str]]:
        """``result[j][h]`` names the occurrence candidate at position h of clause j."""
        seen: dict[int, int] = {}
        rows = []
        for clause in self.clauses:
            row = []
            for lit in clause:
                seen[lit] = seen.get(lit, 0) + 1
                row.append(f"{literal_name(lit)}.{seen[lit]}")
            rows.append(row)
        return rows

    def duplicated(self) -> "BalancedCnf":
        """The formula conjoined with a copy of itself on fresh variables."""
        shifted = [tuple(l + self.n if l > 0 else l - self.n for l in c) for c in self.clauses]
        return BalancedCnf(2 * self.n, self.clauses + tuple(shifted))

    def canonical(self) -> "BalancedCnf":
        return BalancedCnf(self.n, sorted(tuple(sorted(c)) for c in self.clauses))


def check_balanced(n: int, clauses: Sequence[Sequence[int]]) -> None:
    if n < 0:
        raise CnfError("variable count must be nonnegative")
    for j, clause in enumerate(clauses, 1):
        if len(clause) != 3:
            raise CnfError(f"clause {j} has {len(clause)} literals, expected 3")
        for lit in clause:
            if lit == 0 or abs(lit) > n:
                raise CnfError(f"clause {j} uses literal {lit} outside 1..{n}")
    pos = [0] * (n + 1)
    neg = [0] * (n + 1)
    for clause in clauses:
        for lit in clause:
            (pos if lit > 0 else neg)[abs(lit)] += 1
    bad = [i for i in range(1, n + 1) if pos[i] != 2 or neg[i] != 2]
    if bad:
        detail = ", ".join(f"x{i} (+{pos[i]}/-{neg[i]})" for i in bad)
        raise CnfError(f"formula is not 2-balanced: {detail}")


def parse_dimacs(text: str) -> BalancedCnf:
    n = None
    declared = None
    literals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: malformed problem line")
            n, declared = int(parts[2]), int(parts[3])
            continue
        if n is None:
            raise CnfError(f"line {lineno}: clause before problem line")
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError as exc:
            raise CnfError(f"line {lineno}: {exc}") from None
    if n is None:
        raise CnfError("missing problem line")
    clauses, current = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(current)
            current = []
        else:
            current.append(lit)
    if current:
        raise CnfError("last clause is not terminated by 0")
    if declared != len(clauses):
        raise CnfError(f"problem line declares {declared} clauses, found {len(clauses)}")
    return BalancedCnf(n, clauses)


def to_dimacs(f: BalancedCnf) -> str:
    lines = [f"p cnf {f.n} {f.m}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def random_balanced_cnf(n: int, rng: random.Random) -> BalancedCnf:
    """Uniformly shuffle the 4n literal occurrences into 4n/3 clauses."""
    if n % 3:
        raise CnfError("a 2-balanced 3-CNF needs n divisible by 3")
    pool = [l for i in range(1, n + 1) for l in (i, i, -i, -i)]
    rng.shuffle(pool)
    return BalancedCnf(n, [pool[k:k + 3] for k in range(0, len(pool), 3)])


def all_balanced_cnfs(n: int) -> Iterator[BalancedCnf]:
    """Every 2-balanced 3-CNF on n variables up to clause and literal order."""
    if n % 3:
        return
    need = {l: 2 for i in range(1, n + 1) for l in (i, -i)}
    lits = sorted(need)
    triples = [t for t in itertools.combinations_with_replacement(lits, 3)]

    def extend(start: int, chosen: list[tuple[int, ...]]) -> Iterator[BalancedCnf]:
        if all(v == 0 for v in need.values()):
            yield BalancedCnf(n, chosen)
            return
        for k in range(start, len(triples)):
            t = triples[k]
            counts = {l: t.count(l) for l in set(t)}
            if all(need[l] >= c for l, c in counts.items()):
                for l, c in counts.items():
                    need[l] -= c
                chosen.append(t)
                yield from extend(k, chosen)
                chosen.pop()
                for l, c in counts.items():
                    need[l] += c

    yield from extend(0, [])


def oracle_sat(f: Cnf, limit: int = DEFAULT_SAT_LIMIT) -> tuple[bool, tuple[bool, ...] | None]:
    """Exhaustive scan; returns the lexicographically least satisfying assignment (False < True)."""
    if f.n > limit:
        raise CnfError(f"{f.n} variables exceed the oracle limit of {limit}")
    for bits in itertools.product((False, True), repeat=f.n):
        if f.evaluate(bits):
            return True, bits
    return False, None
