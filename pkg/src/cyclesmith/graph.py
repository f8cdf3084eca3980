"""Immutable simple graphs on bitset adjacency, plus graph6 I/O.

Vertices are dense integers ``0..n-1``. Each vertex's neighborhood is a
Python int used as a bitset, so neighborhood intersections are single
``&`` operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import TextIO

__all__ = [
    "MAX_VERTICES",
    "UNREACHABLE",
    "Graph",
    "GraphError",
    "Graph6Error",
    "from_edge_list",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "degree",
    "common_neighbors",
    "distance",
    "is_two_connected",
    "is_connected",
    "bits",
]

#: Largest vertex count a Graph may have.
MAX_VERTICES = 64

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction or vertex argument."""


class Graph6Error(GraphError):
    """Malformed graph6 record."""


class _Unreachable:
    __slots__ = ()

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return "UNREACHABLE"


#: Returned by :func:`distance` for vertices in different components.
UNREACHABLE = _Unreachable()


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={write_graph6(self)!r})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in the given order."""
        order = list(vertices)
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return from_edge_list(len(order), edges)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates collapse, loops are rejected."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# graph6


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of ``g`` (no header, no newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record. Padding bits are ignored."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    data = []
    for ch in s:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126")
        data.append(code - 63)
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise Graph6Error("truncated length header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated length header")
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        pos = 8
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"record too short: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} data bytes")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds MAX_VERTICES={MAX_VERTICES}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(stream: TextIO | Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each record, skipping blanks and headers.

    A :class:`Graph6Error` raised here carries the 1-based line number in
    its message.
    """
    for lineno, raw in enumerate(stream, start=1):
        s = raw.strip()
        if s.startswith(GRAPH6_HEADER):
            s = s[len(GRAPH6_HEADER):].strip()
        if not s:
            continue
        try:
            yield lineno, parse_graph6(s)
        except GraphError as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


# queries


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v].bit_count()


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    """N(u) ∩ N(v); ``u`` and ``v`` themselves never appear."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return set(bits(g.adj[u] & g.adj[v]))


def distance(g: Graph, u: int, v: int) -> int | _Unreachable:
    """BFS distance, or :data:`UNREACHABLE` across components."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if nxt >> v & 1:
            return d
        seen |= nxt
        frontier = nxt
    return UNREACHABLE


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices via iterative low-link DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    """True iff n >= 3, connected, and no articulation vertex."""
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


