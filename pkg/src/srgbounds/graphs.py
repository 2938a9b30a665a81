"""Concrete graphs: constructions, strong-regularity check, graph6 files.

Adjacency is a dense symmetric bit matrix stored as one Python int per
row; bitwise AND plus popcount drive all common-neighbour counting.
"""

from __future__ import annotations

from dataclasses import dataclass

from srgbounds.parameters import SrgParams

__all__ = [
    "Graph",
    "graph_from_edges",
    "paley_graph",
    "square_lattice",
    "complement_graph",
    "builtin",
    "BUILTIN_NAMES",
    "srg_parameters_of",
    "read_graph6",
    "write_graph6",
]


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple  # adj[i] has bit j set iff i ~ j

    def __post_init__(self):
        if self.order < 1 or len(self.adj) != self.order:
            raise ValueError("adjacency rows do not match order")
        for i, row in enumerate(self.adj):
            if row >> self.order:
                raise ValueError(f"row {i} has bits beyond the vertex range")
            if row & (1 << i):
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.order):
            for j in range(i + 1, self.order):
                if bool(self.adj[i] & (1 << j)) != bool(self.adj[j] & (1 << i)):
                    raise ValueError(f"asymmetric adjacency at ({i},{j})")

    def has_edge(self, i, j):
        return bool(self.adj[i] & (1 << j))

    def degree(self, i):
        return self.adj[i].bit_count()

    def edges(self):
        return [(i, j) for i in range(self.order)
                for j in range(i + 1, self.order) if self.has_edge(i, j)]

    @property
    def num_edges(self):
        return sum(self.degree(i) for i in range(self.order)) // 2


def graph_from_edges(n, edges):
    rows = [0] * n
    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"bad edge ({i},{j}) for order {n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def paley_graph(p):
    """Vertices 0..p-1, i ~ j iff i-j is a nonzero square mod p (p prime, 1 mod 4)."""
    from srgbounds.strictness import is_prime

    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"{p} is not a prime congruent to 1 mod 4")
    residues = {(x * x) % p for x in range(1, p)}
    edges = [(i, j) for i in range(p) for j in range(i + 1, p)
             if (i - j) % p in residues]
    return graph_from_edges(p, edges)


def square_lattice(n):
    """Rook's graph on an n x n grid: same row or same column."""
    if n < 2:
        raise ValueError("lattice needs n >= 2")
    edges = []
    for a in range(n * n):
        for b in range(a + 1, n * n):
            if a // n == b // n or a % n == b % n:
                edges.append((a, b))
    return graph_from_edges(n * n, edges)


def complement_graph(g):
    full = (1 << g.order) - 1
    return Graph(g.order, tuple((full ^ row ^ (1 << i))
                                for i, row in enumerate(g.adj)))


def _petersen():
    """Complement of the triangular graph T(5): 2-subsets, adjacent iff disjoint."""
    from itertools import combinations

    pairs = list(combinations(range(5), 2))
    edges = [(a, b) for a in range(10) for b in range(a + 1, 10)
             if not set(pairs[a]) & set(pairs[b])]
    return graph_from_edges(10, edges)


def _pentagon():
    return graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def _clebsch():
    """Folded 5-cube: F_2^4, adjacent iff the difference has weight 1 or 4."""
    edges = [(a, b) for a in range(16) for b in range(a + 1, 16)
             if (a ^ b).bit_count() in (1, 4)]
    return graph_from_edges(16, edges)


BUILTIN_NAMES = ("petersen", "pentagon", "clebsch")


def builtin(name):
    makers = {"petersen": _petersen, "pentagon": _pentagon, "clebsch": _clebsch}
    if name not in makers:
        raise ValueError(f"unknown builtin graph {name!r}; available: {BUILTIN_NAMES}")
    return makers[name]()


def srg_parameters_of(g):
    """The (v, k, lambda, mu) of g, or None if g is not strongly regular.

    Requires non-complete, non-null, regular, and constant common-neighbour
    counts over adjacent and over non-adjacent pairs.
    """
    n = g.order
    if n < 2:
        return None
    k = g.degree(0)
    if any(g.degree(i) != k for i in range(1, n)):
        return None
    if k == 0 or k == n - 1:
        return None  # null or complete
    lam = mu = None
    for i in range(n):
        for j in range(i + 1, n):
            common = (g.adj[i] & g.adj[j]).bit_count()
            if g.has_edge(i, j):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        return None
    try:
        return SrgParams(n, k, lam, mu)
    except ValueError:
        return None


# -- graph6 ------------------------------------------------------------------

def _g6_bits(g):
    bits = []
    for j in range(1, g.order):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    return bits


def write_graph6(g):
    """Standard graph6 text: length header then 6-bit chunks of the upper triangle."""
    n = g.order
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = _g6_bits(g)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for i in range(0, len(bits), 6):
        b = 0
        for bit in bits[i:i + 6]:
            b = (b << 1) | bit
        chunks.append(chr(b + 63))
    return head + "".join(chunks)


def read_graph6(text):
    """Decode one graph6 string; bit-exact inverse of write_graph6."""
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ValueError("non-printable or out-of-range character in graph6 string")
    if s.startswith("~~"):
        if len(s) < 8:
            raise ValueError("truncated extended graph6 length header")
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[8:]
    elif s.startswith("~"):
        if len(s) < 4:
            raise ValueError("truncated extended graph6 length header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise ValueError(f"graph6 order {n} out of range")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"graph6 body length {len(body)} does not match order {n}")
    bits = []
    for ch in body:
        b = ord(ch) - 63
        bits.extend((b >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 string")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))
