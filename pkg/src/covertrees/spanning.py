"""
Spanning-tree counts.

``kappa`` is the Matrix-Tree route (a principal cofactor of the Laplacian).
``kappa_bruteforce`` is an independent deletion-contraction oracle that
never touches a matrix. The remaining functions are closed forms for the
theta graphs, the B(a, b) double covers and the n-cube.

Parallel edges are distinct: theta(n) has n spanning trees.
"""

from functools import lru_cache

from .errors import InvalidParameterError, SizeLimitError
from .exact_linalg import first_cofactor
from .multigraph import laplacian

BRUTEFORCE_MAX_EDGES = 16
MAX_CUBE_CLOSED = 64
# the value has about 2**n bits; beyond this it is minutes of work and gigabytes
MAX_CUBE_MATERIALIZE = 24


def kappa(G):
    """Number of spanning trees of G, via the (last, last) Laplacian cofactor."""
    if G.vertex_count < 1:
        raise InvalidParameterError("spanning trees of the empty graph are undefined")
    n = G.vertex_count
    return first_cofactor(laplacian(G), n - 1, n - 1)


def _connected(n, edges):
    seen = {0}
    stack = [0]
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _contract(edges, u, v):
    # merge v into u, close the gap at v, drop the loops this creates
    def f(w):
        w = u if w == v else w
        return w - 1 if w > v else w
    out = []
    for a, b in edges:
        a, b = f(a), f(b)
        if a != b:
            out.append((a, b) if a < b else (b, a))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _dc(n, edges):
    # edges: sorted tuple of (a, b) with a < b, loop-free
    if n == 1:
        return 1
    if len(edges) < n - 1 or not _connected(n, edges):
        return 0
    e = edges[0]
    k = edges.count(e)
    rest = tuple(x for x in edges if x != e)
    # deleting the k parallel copies one at a time: each contraction G/e_i
    # turns the other copies into loops, so all k contractions coincide
    return _dc(n, rest) + k * _dc(n - 1, _contract(rest, *e))


def kappa_bruteforce(G):
    """Spanning-tree count by deletion-contraction; at most 16 edges."""
    if G.vertex_count < 1:
        raise InvalidParameterError("spanning trees of the empty graph are undefined")
    if G.edge_count > BRUTEFORCE_MAX_EDGES:
        raise SizeLimitError("deletion-contraction limited to %d edges, got %d"
                             % (BRUTEFORCE_MAX_EDGES, G.edge_count))
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in G.edges if u != v))
    try:
        return _dc(G.vertex_count, edges)
    finally:
        _dc.cache_clear()


def kappa_theta(n):
    if n < 1:
        raise InvalidParameterError("theta graph needs n >= 1, got %d" % n)
    return n


def kappa_b(a, b):
    """Spanning trees of B(a, b): 2ab(a+b)."""
    if a < 0 or b < 0 or a + b < 1:
        raise InvalidParameterError("kappa_b needs a, b >= 0 and a + b >= 1")
    return 2 * a * b * (a + b)


def binomial_row(n):
    """[C(n, 0), ..., C(n, n)] by Pascal's rule."""
    row = [1]
    for _ in range(n):
        row = [1] + [x + y for x, y in zip(row, row[1:])] + [1]
    return row


def kappa_cube_closed(n):
    """2**(2**n - n - 1) * prod_{i=1..n} i**C(n, i)."""
    if not 1 <= n <= MAX_CUBE_CLOSED:
        raise InvalidParameterError("kappa_cube_closed needs 1 <= n <= %d, got %d"
                                    % (MAX_CUBE_CLOSED, n))
    if n > MAX_CUBE_MATERIALIZE:
        raise SizeLimitError("kappa_cube_closed(%d) has about 2**%d bits; limit is n <= %d"
                             % (n, n, MAX_CUBE_MATERIALIZE))
    result = 1 << (2 ** n - n - 1)
    for i, c in enumerate(binomial_row(n)):
        if i:
            result *= i ** c
    return result


def divides(d, k):
    if d < 1:
        raise InvalidParameterError("divisor must be >= 1, got %d" % d)
    return k % d == 0
