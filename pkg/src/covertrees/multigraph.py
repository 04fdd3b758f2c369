"""
Undirected multigraphs, the graph families used for cover computations,
their Laplacians, and a plain-text edge-list format.

Edge-list format::

    # comment
    vertices N
    u v
    u v        (repeat a line for a parallel edge)
    v v        (loop)

Vertices are 0-based dense integers.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations

from .errors import InvalidParameterError, ParseError, SizeLimitError
from .exact_linalg import IntMatrix

MAX_CUBE_DIM = 20


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple = ()
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidParameterError("negative vertex count")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        n = self.vertex_count
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(
                    "edge (%d, %d) has endpoint outside [0, %d)" % (u, v, n))
        object.__setattr__(self, "edges", edges)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise InvalidParameterError("need one label per vertex")
            object.__setattr__(self, "labels", labels)

    @property
    def edge_count(self):
        return len(self.edges)

    def edge_multiset(self):
        """Counter of edges with endpoints sorted; independent of edge order."""
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def degrees(self):
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_regular(self, k):
        return all(d == k for d in self.degrees())

    def adjacency_lists(self):
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return adj

    def relabel(self, perm):
        """Graph with vertex i renamed perm[i]."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise InvalidParameterError("not a permutation of the vertices")
        return Multigraph(self.vertex_count,
                          tuple((perm[u], perm[v]) for u, v in self.edges))

    def with_edges(self, edges):
        return Multigraph(self.vertex_count, tuple(edges), self.labels)


def theta(n):
    """Two vertices x, y joined by n parallel edges."""
    if n < 1:
        raise InvalidParameterError("theta graph needs n >= 1, got %d" % n)
    return Multigraph(2, ((0, 1),) * n, ("x", "y"))


def b_graph(a, b):
    """
    The 4-vertex bipartite multigraph with vertices (x1, x2, y1, y2):
    a copies each of x1-y1 and x2-y2, b copies each of x1-y2 and x2-y1.
    It is (a+b)-regular with 2(a+b) edges.
    """
    if a < 0 or b < 0:
        raise InvalidParameterError("b_graph needs a, b >= 0")
    if a + b < 1:
        raise InvalidParameterError("b_graph needs a + b >= 1")
    x1, x2, y1, y2 = range(4)
    edges = ([(x1, y1)] * a + [(x2, y2)] * a
             + [(x1, y2)] * b + [(x2, y1)] * b)
    return Multigraph(4, tuple(edges), ("x1", "x2", "y1", "y2"))


def hypercube(n):
    """The n-cube on bitstrings 0 .. 2**n - 1, edges at Hamming distance 1."""
    if n < 1:
        raise InvalidParameterError("hypercube needs n >= 1, got %d" % n)
    if n > MAX_CUBE_DIM:
        raise SizeLimitError("hypercube dimension %d exceeds %d" % (n, MAX_CUBE_DIM))
    edges = [(v, v | 1 << i) for v in range(1 << n) for i in range(n)
             if not v >> i & 1]
    labels = tuple(format(v, "0%db" % n) for v in range(1 << n))
    return Multigraph(1 << n, tuple(edges), labels)


def laplacian(G):
    """D - A counting multiplicity. Loops add 2 to both D and A, so cancel."""
    n = G.vertex_count
    L = [[0] * n for _ in range(n)]
    for u, v in G.edges:
        if u == v:
            continue
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return IntMatrix.from_rows(L) if n else IntMatrix(0, 0, ())


def components(G):
    """List of vertex sets, one per connected component."""
    parent = list(range(G.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups = {}
    for v in range(G.vertex_count):
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def is_connected(G):
    return len(components(G)) == 1


def is_bipartite(G):
    color = [None] * G.vertex_count
    adj = G.adjacency_lists()
    for s in range(G.vertex_count):
        if color[s] is not None:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] is None:
                    color[w] = color[u] ^ 1
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_isomorphic(G, H, max_vertices=8):
    """Brute force over vertex permutations; for small graphs only."""
    n = G.vertex_count
    if n != H.vertex_count or G.edge_count != H.edge_count:
        return False
    if n > max_vertices:
        raise SizeLimitError("isomorphism search limited to %d vertices" % max_vertices)
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    target = H.edge_multiset()
    return any(G.relabel(p).edge_multiset() == target
               for p in permutations(range(n)))


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _parse_int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError("expected integer, got %r" % token, lineno) from None


def _parse_header(lines, keyword):
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing '%s' header" % keyword) from None
    if len(tokens) != 2 or tokens[0] != keyword:
        raise ParseError("expected '%s <count>'" % keyword, lineno)
    value = _parse_int(tokens[1], lineno)
    if value < 0:
        raise ParseError("%s must be non-negative" % keyword, lineno)
    return value


def parse_edge_list(text):
    lines = _data_lines(text)
    n = _parse_header(lines, "vertices")
    edges = []
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError("expected 'u v', got %d tokens" % len(tokens), lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError("vertex %d out of range [0, %d)" % (w, n), lineno)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def serialize_edge_list(G):
    out = ["vertices %d" % G.vertex_count]
    out.extend("%d %d" % e for e in G.edges)
    return "\n".join(out) + "\n"
