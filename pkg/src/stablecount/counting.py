"""Stable-set counting, stability number and alpha-criticality."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Edge, Graph, bits

BRUTEFORCE_MAX_N = 25
_CHUNK_BITS = 20


class EdgeKind(str, Enum):
    ALPHA_CRITICAL = "alpha-critical"
    ALPHA_SAFE = "alpha-safe"


@dataclass(frozen=True)
class EdgeClassification:
    edge: Edge
    kind: EdgeKind
    is_bridge: bool


@dataclass(frozen=True)
class Decomposition:
    """Split of a connected graph along an alpha-safe bridge ``v1 v2``.

    ``g1`` holds ``v1`` and ``g2`` holds ``v2``; both are renumbered induced
    subgraphs.  ``bridge`` uses the parent's vertex numbers and ``g1_mask``
    is the parent vertex set of ``g1``.
    """

    g1: Graph
    v1: int
    g2: Graph
    v2: int
    bridge: Edge
    g1_mask: int
    critical: bool


def _component_within(adj: tuple[int, ...], start: int, within: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def _split(adj: tuple[int, ...], mask: int) -> list[int]:
    parts = []
    while mask:
        comp = _component_within(adj, (mask & -mask).bit_length() - 1, mask)
        parts.append(comp)
        mask &= ~comp
    return parts


def _branch_vertex(adj: tuple[int, ...], mask: int) -> int:
    """Maximum-degree vertex of the induced subgraph (smallest index on ties)."""
    best, best_deg = -1, -1
    for v in bits(mask):
        d = (adj[v] & mask).bit_count()
        if d > best_deg:
            best, best_deg = v, d
    return best


def fibonacci_index(g: Graph) -> int:
    """Number of stable sets of ``g``, the empty set included.

    Components multiply; inside a component the count splits on a
    maximum-degree vertex ``v`` into ``F(G - v) + F(G - N[v])``.  Results are
    memoised on the vertex mask of the induced subgraph for this call only.
    """
    adj = g.adj
    memo: dict[int, int] = {}

    def count(mask: int) -> int:
        if mask == 0:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        parts = _split(adj, mask)
        if len(parts) > 1:
            result = 1
            for part in parts:
                result *= count(part)
        else:
            v = _branch_vertex(adj, mask)
            result = count(mask & ~(1 << v)) + count(mask & ~(adj[v] | 1 << v))
        memo[mask] = result
        return result

    return count(g.vertex_mask)


def stability_number(g: Graph) -> int:
    """Size of a maximum stable set; 0 for the empty graph."""
    adj = g.adj
    memo: dict[int, int] = {}

    def alpha(mask: int) -> int:
        if mask == 0:
            return 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        parts = _split(adj, mask)
        if len(parts) > 1:
            result = sum(alpha(part) for part in parts)
        else:
            v = _branch_vertex(adj, mask)
            result = max(alpha(mask & ~(1 << v)), 1 + alpha(mask & ~(adj[v] | 1 << v)))
        memo[mask] = result
        return result

    return alpha(g.vertex_mask)


def _subset_scan(g: Graph):
    """Yield ``(subsets, stable)`` chunks covering every vertex subset."""
    n = g.n
    total = 1 << n
    step = 1 << min(n, _CHUNK_BITS)
    for start in range(0, total, step):
        subsets = np.arange(start, start + step, dtype=np.uint64)
        bad = np.zeros(step, dtype=bool)
        for v, row in enumerate(g.adj):
            if row:
                has_v = (subsets >> np.uint64(v)) & np.uint64(1)
                bad |= (has_v != 0) & ((subsets & np.uint64(row)) != 0)
        yield subsets, ~bad


def fibonacci_index_bruteforce(g: Graph) -> int:
    """Count stable sets by testing every vertex subset directly."""
    if g.n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {g.n}")
    return int(sum(int(stable.sum()) for _, stable in _subset_scan(g)))


def stability_number_bruteforce(g: Graph) -> int:
    if g.n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {g.n}")
    best = 0
    for subsets, stable in _subset_scan(g):
        sizes = np.bitwise_count(subsets[stable])
        best = max(best, int(sizes.max()))
    return best


def classify_edges(g: Graph) -> list[EdgeClassification]:
    alpha = stability_number(g)
    bridge_set = set(g.bridges())
    out = []
    for e in g.edges():
        kind = EdgeKind.ALPHA_CRITICAL if stability_number(g.remove_edge(e)) > alpha else EdgeKind.ALPHA_SAFE
        out.append(EdgeClassification(e, kind, e in bridge_set))
    return out


def is_alpha_critical(g: Graph) -> bool:
    """True when deleting any edge raises the stability number.

    Edgeless graphs count as alpha-critical.
    """
    alpha = stability_number(g)
    return all(stability_number(g.remove_edge(e)) > alpha for e in g.edges())


def alpha_critical_decomposition(g: Graph) -> Decomposition | None:
    """Decomposition along an alpha-safe bridge with the smallest side first.

    Among all alpha-safe bridges and both orientations, ``g1`` is the side of
    minimum order, ties going to the smaller parent vertex mask.  Returns
    ``None`` when ``g`` has no alpha-safe bridge.
    """
    if not g.is_connected():
        raise ValueError("decomposition needs a connected graph")
    best = None
    for rec in classify_edges(g):
        if rec.kind is not EdgeKind.ALPHA_SAFE or not rec.is_bridge:
            continue
        u, v = rec.edge
        cut = g.remove_edge(rec.edge)
        side_u = cut.component_of(u)
        side_v = g.vertex_mask & ~side_u
        for a, b, side in ((u, v, side_u), (v, u, side_v)):
            key = (side.bit_count(), side)
            if best is None or key < best[0]:
                best = (key, a, b, side, rec.edge)
    if best is None:
        return None
    _, a, b, side, edge = best
    other = g.vertex_mask & ~side
    g1 = g.induced(side)
    g2 = g.induced(other)
    v1 = (side & ((1 << a) - 1)).bit_count()
    v2 = (other & ((1 << b) - 1)).bit_count()
    return Decomposition(g1, v1, g2, v2, edge, side, is_alpha_critical(g1))
