from itertools import combinations
from math import comb, prod

import pytest

from covertrees.errors import InvalidParameterError, SizeLimitError
from covertrees.multigraph import (Multigraph, b_graph, components, hypercube,
                                   is_connected, theta)
from covertrees.spanning import (binomial_row, divides, kappa, kappa_b,
                                 kappa_bruteforce, kappa_cube_closed,
                                 kappa_theta)

from conftest import random_connected_multigraph, random_multigraph

TRIANGLE = Multigraph(3, ((0, 1), (1, 2), (0, 2)))


def count_by_subsets(G):
    """Enumerate (n-1)-edge subsets and keep the acyclic ones. Tiny graphs only."""
    n = G.vertex_count
    edges = [e for e in G.edges if e[0] != e[1]]
    count = 0
    for subset in combinations(range(len(edges)), n - 1):
        sub = Multigraph(n, tuple(edges[i] for i in subset))
        if len(components(sub)) == 1:
            count += 1
    return count


def test_kappa_examples():
    assert kappa(theta(5)) == 5
    assert kappa(hypercube(2)) == 4
    assert kappa(b_graph(1, 2)) == 12
    assert kappa(hypercube(3)) == 384
    assert kappa(Multigraph(1)) == 1
    assert kappa(Multigraph(1, ((0, 0),))) == 1
    assert kappa(b_graph(1, 0)) == 0


def test_kappa_empty_graph():
    with pytest.raises(InvalidParameterError):
        kappa(Multigraph(0))
    with pytest.raises(InvalidParameterError):
        kappa_bruteforce(Multigraph(0))


def test_bruteforce_examples():
    assert kappa_bruteforce(Multigraph(2, ((0, 1),))) == 1
    assert kappa_bruteforce(TRIANGLE) == 3
    assert kappa_bruteforce(theta(4)) == 4
    assert kappa_bruteforce(hypercube(3)) == 384
    assert kappa_bruteforce(Multigraph(1)) == 1
    assert kappa_bruteforce(Multigraph(3, ((0, 1), (2, 2)))) == 0


def test_bruteforce_edge_budget():
    assert kappa_bruteforce(theta(16)) == 16
    with pytest.raises(SizeLimitError):
        kappa_bruteforce(theta(17))


def test_subset_enumeration_agrees_with_bruteforce(rng):
    # third route, so the oracle itself is checked against something
    for _ in range(40):
        g = random_connected_multigraph(rng, max_vertices=5, max_edges=8)
        assert count_by_subsets(g) == kappa_bruteforce(g)


def test_kappa_matches_bruteforce(rng):
    for _ in range(200):
        g = random_connected_multigraph(rng, max_vertices=8, max_edges=14)
        assert kappa(g) == kappa_bruteforce(g)


def test_kappa_invariant_under_relabeling(rng):
    for _ in range(50):
        g = random_connected_multigraph(rng)
        perm = list(range(g.vertex_count))
        rng.shuffle(perm)
        assert kappa(g.relabel(perm)) == kappa(g)


def test_kappa_zero_iff_disconnected(rng):
    seen = set()
    for _ in range(150):
        g = random_multigraph(rng, max_vertices=6, max_edges=7)
        if g.vertex_count < 2:
            continue
        k = kappa(g)
        assert (k == 0) == (not is_connected(g))
        seen.add(k == 0)
    assert seen == {True, False}


@pytest.mark.parametrize("n", range(1, 13))
def test_kappa_theta(n):
    assert kappa(theta(n)) == kappa_theta(n) == n


def test_kappa_theta_errors():
    assert [kappa_theta(n) for n in (1, 3, 7)] == [1, 3, 7]
    with pytest.raises(InvalidParameterError):
        kappa_theta(0)


@pytest.mark.parametrize("a, b", [(a, b) for a in range(7) for b in range(7) if a + b])
def test_kappa_b(a, b):
    assert kappa(b_graph(a, b)) == kappa_b(a, b) == 2 * a * b * (a + b)


def test_kappa_b_examples():
    assert kappa_b(1, 2) == 12
    assert kappa_b(1, 0) == 0
    assert kappa_b(3, 3) == 108 == kappa(b_graph(3, 3))
    with pytest.raises(InvalidParameterError):
        kappa_b(0, 0)


def test_kappa_cube_closed_values():
    assert kappa_cube_closed(1) == 1
    assert kappa_cube_closed(2) == 2 ** 1 * 1 ** 2 * 2 ** 1 == 4
    assert kappa_cube_closed(3) == 2 ** 4 * 1 ** 3 * 2 ** 3 * 3 ** 1 == 384
    assert kappa_cube_closed(4) == 2 ** 11 * 2 ** 6 * 3 ** 4 * 4 ** 1 == 42467328
    # independent evaluation with math.comb instead of Pascal's rule
    for n in (10, 16):
        expected = 2 ** (2 ** n - n - 1) * prod(i ** comb(n, i) for i in range(1, n + 1))
        assert kappa_cube_closed(n) == expected
    for n in (25, 64):
        with pytest.raises(SizeLimitError):
            kappa_cube_closed(n)
    for n in (0, 65):
        with pytest.raises(InvalidParameterError):
            kappa_cube_closed(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_kappa_cube_closed_matches_matrix_tree(n):
    assert kappa(hypercube(n)) == kappa_cube_closed(n)


def test_binomial_row():
    assert binomial_row(0) == [1]
    assert binomial_row(4) == [1, 4, 6, 4, 1]
    assert sum(binomial_row(30)) == 2 ** 30
    assert binomial_row(64) == [comb(64, i) for i in range(65)]


def test_divides():
    assert divides(3, 384)
    assert divides(3, 12)
    assert not divides(5, 12)
    assert divides(7, 0)
    with pytest.raises(InvalidParameterError):
        divides(0, 12)
