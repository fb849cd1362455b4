import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from schulze_nomination.core import Election, PartyElection  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def elections(draw, min_candidates=1, max_candidates=6, voters=None, max_voters=5):
    n = draw(st.integers(min_candidates, max_candidates))
    cands = [f"c{i}" for i in range(n)]
    nv = voters if voters is not None else draw(st.integers(0, max_voters))
    votes = [draw(st.permutations(cands)) for _ in range(nv)]
    return Election(cands, votes)


@st.composite
def party_elections(draw, max_candidates=7, voters=None, max_voters=5, max_parties=4):
    e = draw(elections(1, max_candidates, voters, max_voters))
    n = len(e.candidates)
    k = draw(st.integers(1, min(n, max_parties)))
    labels = list(range(k)) + [draw(st.integers(0, k - 1)) for _ in range(n - k)]
    labels = draw(st.permutations(labels))
    parties = [[c for c, l in zip(e.candidates, labels) if l == i] for i in range(k)]
    return PartyElection(e, parties, draw(st.integers(0, k - 1)))


@pytest.fixture
def rng():
    return random.Random(20241016)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
