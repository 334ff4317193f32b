"""Named graph families, their recognizers and Fibonacci-index formulas.

Labeled layout used by :func:`generate`: cliques occupy contiguous index
blocks with the larger cliques first; the Turan-connected hub is vertex 0
and is joined to the lowest vertex of every other clique.  Complete split
graphs put the stable side on ``0..alpha-1`` and the clique after it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, bits

SYMBOLIC_MAX_N = 10**6


class Kind(str, Enum):
    COMPLETE = "complete"
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE_SPLIT = "complete-split"
    TURAN = "turan"
    TURAN_CONNECTED = "turan-connected"


_NEEDS_ALPHA = {Kind.COMPLETE_SPLIT, Kind.TURAN, Kind.TURAN_CONNECTED}


@dataclass(frozen=True)
class FamilySpec:
    kind: Kind
    n: int
    alpha: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", _validate(self.kind, self.n, self.alpha, 64))


def _validate(kind, n: int, a: int | None, n_max: int) -> Kind:
    kind = Kind(kind)
    if kind in _NEEDS_ALPHA:
        if a is None:
            raise ValueError(f"{kind.value} needs alpha")
        hi = n - 1 if kind is Kind.TURAN_CONNECTED else n
        if not 1 <= a <= hi:
            raise ValueError(f"{kind.value}({n}, {a}) needs 1 <= alpha <= {hi}")
    elif a is not None:
        raise ValueError(f"{kind.value} takes no alpha")
    low = 3 if kind is Kind.CYCLE else (0 if kind in (Kind.COMPLETE, Kind.EMPTY) else 1)
    if n < low or n > n_max:
        raise ValueError(f"{kind.value} needs {low} <= n <= {n_max}, got {n}")
    return kind


def _clique_sizes(n: int, alpha: int) -> list[int]:
    q, p = divmod(n, alpha)
    return [q + 1] * p + [q] * (alpha - p)


def _cliques(sizes: list[int]) -> tuple[list[tuple[int, int]], list[int]]:
    edges = []
    starts = []
    base = 0
    for s in sizes:
        starts.append(base)
        edges += [(i, j) for i in range(base, base + s) for j in range(i + 1, base + s)]
        base += s
    return edges, starts


def generate(spec: FamilySpec) -> Graph:
    n, a, kind = spec.n, spec.alpha, spec.kind
    if kind is Kind.COMPLETE:
        edges = _cliques([n])[0] if n else []
    elif kind is Kind.EMPTY:
        edges = []
    elif kind is Kind.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind is Kind.CYCLE:
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind is Kind.STAR:
        edges = [(0, i) for i in range(1, n)]
    elif kind is Kind.COMPLETE_SPLIT:
        clique = range(a, n)
        edges = [(i, j) for i in range(n) for j in clique if i < j]
    else:
        edges, starts = _cliques(_clique_sizes(n, a))
        if kind is Kind.TURAN_CONNECTED:
            edges += [(0, s) for s in starts[1:]]
    return Graph.from_edges(n, edges)


# -- recognizers ----------------------------------------------------------


def _balanced(sizes: list[int]) -> bool:
    return max(sizes) - min(sizes) <= 1


def is_turan(g: Graph) -> bool:
    """Disjoint union of cliques whose orders differ by at most one."""
    if g.n == 0:
        return False
    comps = g.components()
    return all(g.is_clique(c) for c in comps) and _balanced([c.bit_count() for c in comps])


def is_complete_split(g: Graph) -> bool:
    """Stable set fully joined to a clique (``K_n`` included)."""
    if g.n == 0:
        return False
    full = g.vertex_mask
    universal = 0
    for v, row in enumerate(g.adj):
        if row | (1 << v) == full:
            universal |= 1 << v
    return g.is_independent(full & ~universal)


def is_turan_connected(g: Graph) -> bool:
    """Balanced cliques chained to one hub lying in a largest clique.

    Tries every vertex as hub ``h``: each component of ``G - h`` must be a
    clique, ``h`` must see all of exactly one of them (its own clique minus
    itself) and exactly one vertex of each of the others.
    """
    if g.n < 2 or not g.is_connected():
        return False
    for h in range(g.n):
        rest = g.remove_vertex(h)
        nbrs = g.adj[h]
        # map components of G-h back to parent numbering
        keep = [v for v in range(g.n) if v != h]
        comps = []
        for c in rest.components():
            mask = 0
            for i in bits(c):
                mask |= 1 << keep[i]
            comps.append(mask)
        if not all(g.is_clique(c) for c in comps):
            continue
        for own in comps:
            if own & ~nbrs:
                continue
            others = [c for c in comps if c != own]
            if any((c & nbrs).bit_count() != 1 for c in others):
                continue
            sizes = [own.bit_count() + 1] + [c.bit_count() for c in others]
            if _balanced(sizes) and sizes[0] == max(sizes):
                return True
    return False


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(row.bit_count() == 2 for row in g.adj)


def is_star(g: Graph) -> bool:
    if g.n < 2 or g.m != g.n - 1:
        return False
    return any(row.bit_count() == g.n - 1 for row in g.adj)


def recognize(g: Graph, kind: Kind | str) -> bool:
    kind = Kind(kind)
    if kind is Kind.COMPLETE:
        return g.is_clique()
    if kind is Kind.EMPTY:
        return g.m == 0
    if kind is Kind.PATH:
        return g.is_connected() and g.m == g.n - 1 and g.max_degree() <= 2
    if kind is Kind.CYCLE:
        return is_cycle(g)
    if kind is Kind.STAR:
        return is_star(g)
    if kind is Kind.COMPLETE_SPLIT:
        return is_complete_split(g)
    if kind is Kind.TURAN:
        return is_turan(g)
    return is_turan_connected(g)


# -- closed forms ---------------------------------------------------------


def _check_symbolic(n: int, alpha: int, hi: int) -> None:
    if not (1 <= alpha <= hi and n <= SYMBOLIC_MAX_N):
        raise ValueError(f"({n}, {alpha}) outside 1 <= alpha <= {hi}, n <= {SYMBOLIC_MAX_N}")


def _turan_value(n: int, alpha: int) -> int:
    if alpha == 0:
        return 1
    q, p = divmod(n, alpha)
    return (q + 2) ** p * (q + 1) ** (alpha - p)


def f_turan(n: int, alpha: int) -> int:
    """Fibonacci index of the Turan graph T(n, alpha)."""
    _check_symbolic(n, alpha, n)
    return _turan_value(n, alpha)


def f_turan_recursive(n: int, alpha: int) -> int:
    """Same value via the max-degree deletion recurrence (iterative table)."""
    _check_symbolic(n, alpha, n)
    table: dict[tuple[int, int], int] = {}
    # every (n', a') with a' <= alpha and n' - a' <= n - alpha is reachable
    gap = n - alpha
    for a in range(1, alpha + 1):
        for m in range(a, a + gap + 1):
            if a == 1:
                table[m, a] = m + 1
            elif a == m:
                table[m, a] = 2**m
            else:
                table[m, a] = table[m - 1, a] + table[m - -(-m // a), a - 1]
    return table[n, alpha]


def f_turan_connected(n: int, alpha: int) -> int:
    """Fibonacci index of the Turan-connected graph TC(n, alpha)."""
    _check_symbolic(n, alpha, n - 1)
    if alpha == 1:
        return n + 1
    if alpha == n - 1:
        return 2 ** (n - 1) + 1
    n2 = n - (-(-n // alpha)) - alpha + 1
    return _turan_value(n - 1, alpha) + _turan_value(n2, min(n2, alpha - 1))


def f_tree_bound(n: int, alpha: int) -> int:
    """Closed form of f_TC for ``alpha >= n / 2`` (spiders with legs 1 and 2)."""
    if n < 2 or not (2 * alpha >= n and alpha <= n - 1):
        raise ValueError(f"tree formula needs n/2 <= alpha <= n-1, got ({n}, {alpha})")
    x = n - alpha - 1
    return 3**x * 2 ** (2 * alpha - n + 1) + 2**x


def lower_bound_value(n: int, alpha: int) -> int:
    """Fibonacci index of CS(n, alpha): ``2**alpha + n - alpha``."""
    _check_symbolic(n, alpha, n)
    return 2**alpha + n - alpha


def _fib_pair(k: int) -> tuple[int, int]:
    """(Fib(k), Fib(k+1)) by fast doubling."""
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k // 2)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if k % 2 else (c, d)


def family_value(kind: Kind | str, n: int, alpha: int | None = None) -> int:
    """Fibonacci index of a family member from its closed form, without building it."""
    kind = _validate(kind, n, alpha, SYMBOLIC_MAX_N)
    if kind is Kind.COMPLETE:
        return n + 1
    if kind is Kind.EMPTY:
        return 2**n
    if kind is Kind.PATH:
        return _fib_pair(n + 2)[0]
    if kind is Kind.CYCLE:
        # Lucas number L_n = Fib(n-1) + Fib(n+1)
        a, b = _fib_pair(n - 1)
        return a + a + b
    if kind is Kind.STAR:
        return 2 ** (n - 1) + 1
    if kind is Kind.COMPLETE_SPLIT:
        return lower_bound_value(n, alpha)
    if kind is Kind.TURAN:
        return f_turan(n, alpha)
    return f_turan_connected(n, alpha)
