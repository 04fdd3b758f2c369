"""
Voltage graphs over (Z/2Z)^m, their derived covers, and the character
(twisted Laplacian) route to spanning-tree counts.

Group elements and character masks are ints. Basis vector i of
(Z/2Z)^m is the bit ``1 << (m - 1 - i)``, so the binary string of an
element, written with m digits, lists the basis coefficients in order.
This matches the voltage file format, where the most significant
character is basis vector 0.

Voltage file format::

    # comment
    vertices N
    rank M
    u v g      (g: M-digit binary string; '-' when M = 0)
"""

from dataclasses import dataclass

from .errors import (ConsistencyError, InvalidParameterError, ParseError,
                     SizeLimitError)
from .exact_linalg import IntMatrix, determinant
from .multigraph import (Multigraph, _data_lines, _parse_header, _parse_int,
                         theta)
from .spanning import kappa

MAX_CHARACTER_RANK = 24


def parity(x):
    return bin(x).count("1") & 1


def format_bits(x, m):
    return format(x, "0%db" % m) if m else "-"


def parse_bits(text, m):
    """Inverse of format_bits; raises ValueError on bad input."""
    if m == 0:
        if text not in ("-", ""):
            raise ValueError("rank 0 takes '-', got %r" % text)
        return 0
    if len(text) != m or set(text) - {"0", "1"}:
        raise ValueError("expected %d-digit binary string, got %r" % (m, text))
    return int(text, 2)


def basis_vector(i, m):
    return 1 << (m - 1 - i)


@dataclass(frozen=True)
class Character:
    """chi(g) = (-1)**<mask, g> on (Z/2Z)^rank."""
    mask: int
    rank: int

    def __post_init__(self):
        if not 0 <= self.mask < 1 << self.rank:
            raise InvalidParameterError(
                "mask %d does not fit rank %d" % (self.mask, self.rank))

    @classmethod
    def from_bits(cls, text, rank):
        try:
            return cls(parse_bits(text, rank), rank)
        except ValueError as e:
            raise InvalidParameterError(str(e)) from None

    @property
    def is_trivial(self):
        return self.mask == 0

    def __call__(self, g):
        return -1 if parity(self.mask & g) else 1

    def __str__(self):
        return format_bits(self.mask, self.rank)


@dataclass(frozen=True)
class VoltageGraph:
    base: Multigraph
    rank: int
    voltages: tuple

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidParameterError("negative rank")
        voltages = tuple(self.voltages)
        if len(voltages) != self.base.edge_count:
            raise InvalidParameterError(
                "%d voltages for %d edges" % (len(voltages), self.base.edge_count))
        for g in voltages:
            if not 0 <= g < 1 << self.rank:
                raise InvalidParameterError(
                    "voltage %d is not a %d-bit vector" % (g, self.rank))
        object.__setattr__(self, "voltages", voltages)

    @property
    def order(self):
        return 1 << self.rank

    @property
    def cover_vertex_count(self):
        return self.base.vertex_count << self.rank

    def oriented_edges(self):
        """(u, v, voltage) with u <= v; orientation is immaterial for involutions."""
        return [(min(u, v), max(u, v), g)
                for (u, v), g in zip(self.base.edges, self.voltages)]


def derived_graph(VG):
    """
    The cover realised by VG. Vertex (v, g) gets id v * 2**m + g; base edge
    u -> v with voltage s lifts to the 2**m edges (u, g) -- (v, g ^ s).
    """
    N = VG.order
    edges = [(u * N + g, v * N + (g ^ s))
             for u, v, s in VG.oriented_edges() for g in range(N)]
    return Multigraph(VG.cover_vertex_count, tuple(edges))


def cube_voltage_graph(n):
    """theta(n) with basis vectors on edges 0..n-2 and zero on the last edge."""
    if n < 1:
        raise InvalidParameterError("cube_voltage_graph needs n >= 1, got %d" % n)
    m = n - 1
    voltages = [basis_vector(i, m) for i in range(m)] + [0]
    return VoltageGraph(theta(n), m, tuple(voltages))


def cube_isomorphism(n):
    """
    Vertex map from derived_graph(cube_voltage_graph(n)) onto hypercube(n):
    (x, g) -> g followed by parity(g), (y, g) -> g followed by parity(g) ^ 1.
    Returned as a list indexed by derived-graph vertex id.
    """
    m = n - 1
    N = 1 << m
    phi = [0] * (2 * N)
    for g in range(N):
        p = parity(g)
        phi[g] = g << 1 | p
        phi[N + g] = g << 1 | (p ^ 1)
    return phi


def _check_character(VG, chi):
    if chi.rank != VG.rank:
        raise InvalidParameterError(
            "character of rank %d for a rank-%d voltage graph" % (chi.rank, VG.rank))


def intermediate_double_cover(VG, chi):
    """The double cover cut out by a nontrivial character: voltage s -> [chi(s) = -1]."""
    _check_character(VG, chi)
    if chi.is_trivial:
        raise InvalidParameterError("trivial character has no double cover")
    bits = tuple(int(chi(s) == -1) for s in VG.voltages)
    return derived_graph(VoltageGraph(VG.base, 1, bits))


def twisted_laplacian(VG, chi):
    """Degree matrix minus the chi-twisted adjacency matrix of the base."""
    _check_character(VG, chi)
    n = VG.base.vertex_count
    L = [[0] * n for _ in range(n)]
    for u, v, s in VG.oriented_edges():
        c = chi(s)
        if u == v:
            L[u][u] += 2 - 2 * c
        else:
            L[u][u] += 1
            L[v][v] += 1
            L[u][v] -= c
            L[v][u] -= c
    return IntMatrix.from_rows(L) if n else IntMatrix(0, 0, ())


def l_special_value(VG, chi):
    """L-function value at u = 1 for a nontrivial character, as det of L_chi."""
    _check_character(VG, chi)
    if chi.is_trivial:
        raise InvalidParameterError(
            "trivial character: the untwisted Laplacian is singular")
    return determinant(twisted_laplacian(VG, chi))


def enumerate_characters(m):
    """All 2**m - 1 nontrivial characters of (Z/2Z)^m, mask ascending."""
    if not 0 <= m <= MAX_CHARACTER_RANK:
        raise SizeLimitError("character rank must be in [0, %d], got %d"
                             % (MAX_CHARACTER_RANK, m))
    return [Character(mask, m) for mask in range(1, 1 << m)]


def kappa_via_characters(VG):
    """kappa(base) * prod over nontrivial chi of det L_chi, divided by 2**m."""
    total = kappa(VG.base)
    for chi in enumerate_characters(VG.rank):
        if not total:
            break
        total *= l_special_value(VG, chi)
    q, r = divmod(total, VG.order)
    if r:
        raise ConsistencyError(
            "character product %d not divisible by %d" % (total, VG.order))
    return q


def parse_voltage_graph(text):
    lines = _data_lines(text)
    n = _parse_header(lines, "vertices")
    m = _parse_header(lines, "rank")
    if m > MAX_CHARACTER_RANK:
        raise ParseError("rank %d exceeds %d" % (m, MAX_CHARACTER_RANK))
    edges, voltages = [], []
    for lineno, tokens in lines:
        if len(tokens) != 3:
            raise ParseError("expected 'u v g', got %d tokens" % len(tokens), lineno)
        u, v = (_parse_int(t, lineno) for t in tokens[:2])
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError("vertex %d out of range [0, %d)" % (w, n), lineno)
        try:
            g = parse_bits(tokens[2], m)
        except ValueError as e:
            raise ParseError(str(e), lineno) from None
        edges.append((u, v))
        voltages.append(g)
    return VoltageGraph(Multigraph(n, tuple(edges)), m, tuple(voltages))


def serialize_voltage_graph(VG):
    out = ["vertices %d" % VG.base.vertex_count, "rank %d" % VG.rank]
    out.extend("%d %d %s" % (u, v, format_bits(g, VG.rank))
               for (u, v), g in zip(VG.base.edges, VG.voltages))
    return "\n".join(out) + "\n"
