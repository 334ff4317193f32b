"""Small immutable graphs stored as per-vertex neighbour bit masks.

Vertices are ``0..n-1`` with ``n <= 64``.  Deleting vertices closes the gap
in the numbering (order preserving), so the result of every deletion is again
a plain :class:`Graph`.

The labeled *code* of a graph is its graph6 adjacency bit stream read as one
big-endian integer: pair ``(i, j)``, ``i < j``, listed column by column
(``(0,1), (0,2), (1,2), (0,3), ...``), occupies the most significant bit
first.  Numeric order of codes therefore equals lexicographic order of the
graph6 strings of graphs with the same ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64
GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input."""


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"loop edge ({a}, {b})")
        return cls(a, b) if a < b else cls(b, a)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"loop edge ({a}, {b})")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        total = pair_count(n)
        if not 0 <= code < (1 << total):
            raise ValueError(f"code {code} out of range for n={n}")
        adj = [0] * n
        k = total - 1
        for j in range(1, n):
            for i in range(j):
                if code >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k -= 1
        return cls(n, tuple(adj))

    def to_code(self) -> int:
        code = 0
        for j in range(1, self.n):
            col = self.adj[j]
            for i in range(j):
                code = (code << 1) | (col >> i & 1)
        return code

    # -- basic queries ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [Edge(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def is_clique(self, mask: int | None = None) -> bool:
        if mask is None:
            mask = self.vertex_mask
        return all((mask & ~(1 << v)) & ~self.adj[v] == 0 for v in bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(self.adj[v] & mask == 0 for v in bits(mask))

    # -- deletions ----------------------------------------------------------

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices of ``mask``, renumbered in order."""
        keep = list(bits(mask & self.vertex_mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v] & mask):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def remove_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced(self.vertex_mask & ~(1 << v))

    def remove_closed_neighborhood(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced(self.vertex_mask & ~(self.adj[v] | 1 << v))

    def remove_edge(self, e: tuple[int, int]) -> "Graph":
        u, v = e
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
            raise ValueError(f"edge {tuple(e)} not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    # -- connectivity -------------------------------------------------------

    def component_of(self, v: int, within: int | None = None) -> int:
        if within is None:
            within = self.vertex_mask
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by smallest vertex."""
        out = []
        rest = self.vertex_mask
        while rest:
            comp = self.component_of((rest & -rest).bit_length() - 1, rest)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and self.component_of(0) == self.vertex_mask

    def bridges(self) -> list[Edge]:
        """Bridges found by one DFS per component using low-points, sorted."""
        disc = [-1] * self.n
        low = [0] * self.n
        found = []
        clock = 0
        for root in range(self.n):
            if disc[root] >= 0:
                continue
            disc[root] = low[root] = clock
            clock += 1
            # (vertex, parent, remaining neighbours to visit)
            stack = [(root, -1, self.adj[root])]
            while stack:
                v, parent, todo = stack[-1]
                if todo:
                    w = (todo & -todo).bit_length() - 1
                    stack[-1] = (v, parent, todo & (todo - 1))
                    if disc[w] < 0:
                        disc[w] = low[w] = clock
                        clock += 1
                        stack.append((w, v, self.adj[w]))
                    elif w != parent:
                        low[v] = min(low[v], disc[w])
                    continue
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.append(Edge.of(parent, v))
        return sorted(found)

    # -- serialization ------------------------------------------------------

    def to_graph6(self) -> str:
        return to_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return from_graph6(text)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})"


def _size_field(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    total = pair_count(g.n)
    code = g.to_code()
    pad = -total % 6
    code <<= pad
    groups = (total + pad) // 6
    body = "".join(chr(((code >> (6 * (groups - 1 - i))) & 63) + 63) for i in range(groups))
    return _size_field(g.n) + body


def from_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 line")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ord(ch)} outside the printable graph6 range")
    if line[0] == "~":
        if len(line) < 4 or line[1] == "~":
            raise GraphFormatError("malformed size field")
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = line[4:]
        if n <= 62:
            raise GraphFormatError("non-canonical long size field")
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph6 encodes n={n}, limit is {MAX_VERTICES}")
    total = pair_count(n)
    groups = -(-total // 6)
    if len(body) != groups:
        raise GraphFormatError(f"expected {groups} data bytes for n={n}, got {len(body)}")
    code = 0
    for ch in body:
        code = (code << 6) | (ord(ch) - 63)
    pad = groups * 6 - total
    if code & ((1 << pad) - 1):
        raise GraphFormatError("non-zero padding bits")
    return Graph.from_code(n, code >> pad)
