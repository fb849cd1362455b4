"""Turn a nomination of a generated instance back into a source certificate."""

from __future__ import annotations

import re
from typing import Iterable

from ..core import Nomination

KINDS = ("pp3", "pp4", "np3", "np4", "ppmcc", "npmcc")

_VAR = re.compile(r"^~?x(\d+)$")
_SEL = re.compile(r"^~y(\d+)\.[12]$")


def decode_certificate(kind: str, n: Nomination | Iterable[str]) -> dict[int, bool] | tuple[str, ...]:
    """Assignment (variable index -> value) for SAT kinds, clique vertices for clique kinds.

    pp3: x_i is true iff both negated selection candidates of x_i are nominated,
    which leaves the unnegated occurrences free to be nominated.
    pp4/np3/np4: x_i is true iff the variable candidate ``x_i`` is nominated.
    """
    nominees = set(n.nominees if isinstance(n, Nomination) else n)
    if kind == "pp3":
        variables = set()
        for c in nominees:
            m = re.match(r"^~?[xy](\d+)\.[12]$", c)
            if m:
                variables.add(int(m.group(1)))
        return {i: f"~y{i}.1" in nominees and f"~y{i}.2" in nominees for i in sorted(variables)}
    if kind in ("pp4", "np3", "np4"):
        out = {}
        for c in nominees:
            m = _VAR.match(c)
            if m:
                out[int(m.group(1))] = not c.startswith("~")
        return dict(sorted(out.items()))
    if kind in ("ppmcc", "npmcc"):
        return tuple(sorted(c[2:] for c in nominees if c.startswith("u.")))
    raise ValueError(f"unknown certificate kind {kind!r}; expected one of {', '.join(KINDS)}")
