"""Immutable bitset-backed simple graphs and vertex sets.

Vertices are the integers 0..n-1.  Adjacency rows and vertex sets are stored
as Python integers used as bit vectors, so set algebra (union, intersection,
complement, popcount) is a handful of word operations.  Interchange formats:
graph6 lines and a plain "n m" edge-list text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "VertexSet",
    "Graph",
    "Graph6Error",
    "make_graph",
    "parse_graph6",
    "emit_graph6",
    "parse_edgelist",
    "emit_edgelist",
    "named_graph",
    "NAMED_GRAPHS",
]


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices 0..n-1 of an ambient graph, as a bit vector."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative universe size {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"vertex set has bits outside 0..{self.n - 1}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in indices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"mixing vertex sets over {self.n} and {other.n} vertices")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.bits & ((1 << self.n) - 1))

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def indices(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the open neighborhood of v as a bit mask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"{len(self.adj)} adjacency rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row of {v} mentions vertices >= {self.n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            bits = row
            while bits:
                low = bits & -bits
                u = low.bit_length() - 1
                bits ^= low
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            bits = self.adj[v] >> (v + 1)
            u = v + 1
            while bits:
                if bits & 1:
                    out.append((v, u))
                bits >>= 1
                u += 1
        return out

    def neighborhood(self, v: int) -> VertexSet:
        """Open neighborhood N(v)."""
        self._check_vertex(v)
        return VertexSet(self.n, self.adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        """N[v] = {v} together with the neighbors of v."""
        self._check_vertex(v)
        return VertexSet(self.n, self.adj[v] | (1 << v))

    def anti_neighborhood(self, v: int) -> VertexSet:
        """AN[v] = everything outside the closed neighborhood of v."""
        self._check_vertex(v)
        full = (1 << self.n) - 1
        return VertexSet(self.n, full & ~(self.adj[v] | (1 << v)))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self.adj[u] >> v) & 1 == 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            bits = frontier
            while bits:
                low = bits & -bits
                grow |= self.adj[low.bit_length() - 1]
                bits ^= low
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered index pairs, rejecting loops and bad endpoints."""
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header tolerated)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    data = []
    for i, ch in enumerate(s):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 alphabet", i)
        data.append(b - 63)

    pos = 0
    if data[0] < 63:
        n = data[0]
        pos = 1
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise Graph6Error("truncated extended vertex count", len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated extended vertex count", len(data))
        n = 0
        for j in range(2, 8):
            n = (n << 6) | data[j]
        pos = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(data) - pos}",
            pos,
        )

    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + bit // 6]
            if (byte >> (5 - bit % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    # trailing pad bits must be zero
    if nbytes:
        tail = data[pos + nbytes - 1]
        pad = nbytes * 6 - nbits
        if tail & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of g under the identity vertex order."""
    n = g.n
    if n <= 62:
        head = [chr(n + 63)]
    elif n <= 258047:
        head = ["~", chr(((n >> 12) & 63) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    else:
        head = ["~", "~"] + [chr(((n >> (6 * k)) & 63) + 63) for k in range(5, -1, -1)]
    chunks = []
    acc = 0
    fill = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            fill += 1
            if fill == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                fill = 0
    if fill:
        acc <<= 6 - fill
        chunks.append(chr(acc + 63))
    return "".join(head) + "".join(chunks)


def parse_edgelist(text: str) -> Graph:
    """Read the "n m" header / "u v" pairs text format."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge list needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise ValueError(f"edge list header promises {m} edges, found {(len(tokens) - 2) // 2}")
    pairs = [(int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i])) for i in range(m)]
    return make_graph(n, pairs)


def emit_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _complete(k: int) -> Graph:
    return make_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def _path(k: int) -> Graph:
    return make_graph(k, [(i, i + 1) for i in range(k - 1)])


def _cycle(k: int) -> Graph:
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


NAMED_GRAPHS = {
    "k1": _complete(1),
    "k2": _complete(2),
    "k3": _complete(3),
    "k4": _complete(4),
    "p2": _path(2),
    "p3": _path(3),
    "p4": _path(4),
    "p5": _path(5),
    "c4": _cycle(4),
    "c5": _cycle(5),
}


def named_graph(name: str) -> Graph:
    """Look up a small named base graph (k1..k4, p2..p5, c4, c5)."""
    try:
        return NAMED_GRAPHS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown graph name {name!r}; known: {sorted(NAMED_GRAPHS)}") from None
