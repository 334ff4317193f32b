import os
import random

import pytest
from hypothesis import strategies as st

from stablecount.graph import Graph, pair_count


def all_labeled(n):
    for code in range(1 << pair_count(n)):
        yield Graph.from_code(n, code)


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << pair_count(n)) - 1))
    return Graph.from_code(n, code)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_collection_modifyitems(config, items):
    if os.environ.get("STABLECOUNT_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="set STABLECOUNT_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def canonical_code(g):
    """Smallest labeled code over all relabelings (brute force, small n only)."""
    from itertools import permutations

    best = None
    edges = g.edges()
    for perm in permutations(range(g.n)):
        code = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in edges]).to_code()
        if best is None or code < best:
            best = code
    return best


def unlabeled_catalog(n):
    """One graph6 line per isomorphism class, smallest code first."""
    classes = {canonical_code(g) for g in all_labeled(n)}
    return [Graph.from_code(n, c).to_graph6() for c in sorted(classes)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    skipped = [r for r in terminalreporter.stats.get("skipped", []) if "test_acceptance" in r.nodeid]
    if not (ACCEPTANCE_LINES or skipped):
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    for r in skipped:
        terminalreporter.write_line(f"[SKIP] {r.nodeid.split('::')[-1]}: {r.longrepr[-1]}")
