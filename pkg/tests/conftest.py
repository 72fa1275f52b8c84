import random

import pytest
from hypothesis import settings

from nonrep.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("default")


def brute_even_paths(g: Graph, through=None):
    """All even simple paths as frozen canonical tuples, by plain recursion."""
    out = set()

    def grow(path):
        if len(path) % 2 == 0 and path[0] < path[-1]:
            if through is None or through in path:
                out.add(tuple(path))
        for u in g.adj[path[-1]]:
            if u not in path:
                grow(path + [u])

    for s in range(g.n):
        grow([s])
    return out


def brute_is_nonrepetitive(g: Graph, colour) -> bool:
    for p in brute_even_paths(g):
        h = len(p) // 2
        if [colour[u] for u in p[:h]] == [colour[u] for u in p[h:]]:
            return False
    return True


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
