import random

import pytest

from covertrees.covers import VoltageGraph
from covertrees.multigraph import Multigraph

_acceptance = {}


def random_connected_multigraph(rng, max_vertices=8, max_edges=14, loops=True):
    """Random spanning tree plus extra edges (parallels and loops allowed)."""
    n = rng.randint(1, max_vertices)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[rng.randrange(i)]) for i in range(1, n)]
    extra = rng.randint(0, max_edges - len(edges))
    for _ in range(extra):
        u = rng.randrange(n)
        v = u if loops and rng.random() < 0.1 else rng.randrange(n)
        edges.append((u, v))
    rng.shuffle(edges)
    return Multigraph(n, tuple(edges))


def random_multigraph(rng, max_vertices=5, max_edges=8, loops=True):
    """Not necessarily connected."""
    n = rng.randint(1, max_vertices)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u = rng.randrange(n)
        v = u if loops and rng.random() < 0.1 else rng.randrange(n)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def random_voltage_graph(rng, base, max_rank=3):
    m = rng.randint(0, max_rank)
    return VoltageGraph(base, m, tuple(rng.randrange(1 << m) for _ in base.edges))


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    ok = call.excinfo is None
    prev = _acceptance.get(number, (title, True))
    _acceptance[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line("criterion %d %s: %s" % (number, "PASS" if ok else "FAIL", title))
