"""Exhaustive enumeration and verification of the extremal bounds.

Labeled graphs on ``n <= 8`` vertices and labeled trees on ``n <= 10``
vertices are scanned by the kernels in shards; each shard becomes a
:class:`Batch` of invariant arrays that the theorem checkers consume.
External unlabeled catalogs arrive as graph6 streams and are checked the
same way, only without the "bound is attained" completeness checks.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator

import numpy as np

from . import families
from .counting import fibonacci_index, stability_number
from .families import FamilySpec, Kind
from .graph import Graph, GraphFormatError, from_graph6, pair_count
from .kernels import backend

LABELED_MAX_N = 8
TREE_MAX_N = 10
SHARD_BITS = 18
MAX_RECORDED_VIOLATIONS = 1000


class Connectivity(str, Enum):
    ALL = "all"
    CONNECTED = "connected"
    TREES = "trees"


@dataclass(frozen=True)
class ClassFilter:
    n: int
    connectivity: Connectivity = Connectivity.ALL
    alpha: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "connectivity", Connectivity(self.connectivity))
        if self.n < 1:
            raise ValueError("class filter needs n >= 1")
        if self.alpha is not None:
            lo, hi = self.alpha_range()
            if not lo <= self.alpha <= hi:
                raise ValueError(f"alpha={self.alpha} outside {lo}..{hi} for {self.describe()}")

    def alpha_range(self) -> tuple[int, int]:
        n = self.n
        if n == 1 or self.connectivity is Connectivity.ALL:
            return 1, n
        if self.connectivity is Connectivity.CONNECTED:
            return 1, n - 1
        return (n + 1) // 2, n - 1

    def describe(self) -> dict:
        return {"n": self.n, "connectivity": self.connectivity.value, "alpha": self.alpha}


@dataclass
class VerificationReport:
    theorem_id: str
    cls: dict
    graphs_checked: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    extremal_witnesses: list[tuple[int, int, str]] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "class": self.cls,
            "graphs_checked": self.graphs_checked,
            "passed": self.passed,
            "violations": [{"graph6": g6, "detail": d} for g6, d in sorted(self.violations)],
            "extremal_witnesses": [
                {"alpha": a, "F": f, "graph6": g6} for a, f, g6 in sorted(self.extremal_witnesses)
            ],
            "details": self.details,
        }


@dataclass
class Batch:
    """Invariants of a group of graphs plus a way to rebuild any of them.

    ``codes`` holds graph6-ordered labeled codes when available, letting the
    smallest graph6 among candidates be found without building graphs.
    """

    n: int
    alpha: np.ndarray
    fib: np.ndarray
    m: np.ndarray
    graph_at: Callable[[int], Graph]
    codes: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.alpha)

    def smallest_g6(self, idx: np.ndarray) -> tuple[int, str]:
        if self.codes is not None:
            best = int(idx[np.argmin(self.codes[idx])])
            return best, self.graph_at(best).to_graph6()
        return min(((int(i), self.graph_at(int(i)).to_graph6()) for i in idx), key=lambda t: t[1])


# -- enumeration ----------------------------------------------------------


def thread_count() -> int:
    raw = os.environ.get("THREADS")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _shards(total: int) -> list[tuple[int, int]]:
    step = 1 << SHARD_BITS
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _run_sharded(scan, n: int, total: int, threads: int | None) -> Iterator[tuple[int, tuple]]:
    """Yield ``(start, kernel output)`` per shard in order, ``threads`` at a time."""
    shards = _shards(total)
    threads = threads or thread_count()
    if threads == 1 or len(shards) == 1:
        for lo, hi in shards:
            yield lo, scan(n, lo, hi)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        window = 2 * threads
        for w in range(0, len(shards), window):
            chunk = shards[w:w + window]
            for (lo, _), out in zip(chunk, pool.map(lambda s: scan(n, *s), chunk)):
                yield lo, out


def prufer_tree(n: int, index: int) -> Graph:
    """Labeled tree of the Prufer sequence whose base-n value is ``index``."""
    if n == 1:
        return Graph.empty(1)
    seq = []
    for _ in range(n - 2):
        index, d = divmod(index, n)
        seq.append(d)
    seq.reverse()
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    edges = []
    for s in seq:
        leaf = deg.index(1)
        edges.append((leaf, s))
        deg[leaf] -= 1
        deg[s] -= 1
    u, w = [v for v in range(n) if deg[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def labeled_batches(flt: ClassFilter, threads: int | None = None) -> Iterator[Batch]:
    n = flt.n
    if flt.connectivity is Connectivity.TREES:
        yield from tree_batches(flt, threads)
        return
    if n > LABELED_MAX_N:
        raise ValueError(f"labeled enumeration capped at n <= {LABELED_MAX_N}")
    for lo, (alpha, fib, conn, m) in _run_sharded(backend.scan_labeled, n, 1 << pair_count(n), threads):
        keep = np.ones(len(alpha), dtype=bool)
        if flt.connectivity is Connectivity.CONNECTED:
            keep &= conn
        if flt.alpha is not None:
            keep &= alpha == flt.alpha
        idx = np.nonzero(keep)[0]
        codes = idx.astype(np.uint64) + np.uint64(lo)
        yield Batch(n, alpha[idx], fib[idx], m[idx],
                    lambda i, codes=codes: Graph.from_code(n, int(codes[i])), codes)


def tree_batches(flt: ClassFilter, threads: int | None = None) -> Iterator[Batch]:
    n = flt.n
    if n > TREE_MAX_N:
        raise ValueError(f"tree enumeration capped at n <= {TREE_MAX_N}")
    if n == 1:
        one = np.ones(1, dtype=np.uint8)
        if flt.alpha in (None, 1):
            yield Batch(1, one, np.array([2], dtype=np.int64), np.zeros(1, dtype=np.uint8),
                        lambda i: Graph.empty(1))
        return
    for lo, (alpha, fib) in _run_sharded(backend.scan_prufer, n, n ** (n - 2), threads):
        idx = np.arange(len(alpha)) if flt.alpha is None else np.nonzero(alpha == flt.alpha)[0]
        m = np.full(len(idx), n - 1, dtype=np.uint8)
        yield Batch(n, alpha[idx], fib[idx], m,
                    lambda i, idx=idx, lo=lo: prufer_tree(n, lo + int(idx[i])))


def _passes(g: Graph, flt: ClassFilter, alpha: int | None = None) -> bool:
    if flt.connectivity is not Connectivity.ALL and not g.is_connected():
        return False
    if flt.connectivity is Connectivity.TREES and g.m != g.n - 1:
        return False
    if flt.alpha is not None:
        return (alpha if alpha is not None else stability_number(g)) == flt.alpha
    return True


def enumerate_labeled(flt: ClassFilter, visit: Callable[[Graph], object], threads: int | None = None) -> int:
    """Call ``visit`` once per labeled graph in the class; return the count."""
    count = 0
    for batch in labeled_batches(flt, threads):
        for i in range(len(batch)):
            visit(batch.graph_at(i))
            count += 1
    return count


class StreamError(ValueError):
    pass


def ingest_graph6_stream(source: Iterable[str], flt: ClassFilter, visit: Callable[[Graph], object]) -> int:
    """Parse graph6 lines, forward the graphs in the class, return how many matched."""
    matched = 0
    for lineno, line in enumerate(source, 1):
        if not line.strip():
            continue
        try:
            g = from_graph6(line.strip())
        except GraphFormatError as exc:
            raise StreamError(f"line {lineno}: {exc}") from None
        if g.n != flt.n:
            raise StreamError(f"line {lineno}: graph has n={g.n}, class expects n={flt.n}")
        if _passes(g, flt):
            visit(g)
            matched += 1
    return matched


def graph_batch(graphs: list[Graph]) -> Batch:
    """Batch over explicit graphs, exact Python integers throughout."""
    n = graphs[0].n if graphs else 0
    alpha = np.array([stability_number(g) for g in graphs], dtype=np.int64)
    fib = np.array([fibonacci_index(g) for g in graphs], dtype=object)
    m = np.array([g.m for g in graphs], dtype=np.int64)
    return Batch(n, alpha, fib, m, lambda i: graphs[i])


def _stream_batches(lines: Iterable[str], flt: ClassFilter) -> Iterator[Batch]:
    graphs: list[Graph] = []
    ingest_graph6_stream(lines, flt, graphs.append)
    if graphs:
        yield graph_batch(graphs)


# -- theorem checks -------------------------------------------------------


class _Check:
    """Accumulates one theorem's verdict over a sequence of batches."""

    def __init__(self, theorem_id: str, flt: ClassFilter, sense: str,
                 bound: Callable[[int], int], recognize: Callable[[Graph, int], str | None]):
        self.report = VerificationReport(theorem_id, flt.describe())
        self.flt = flt
        self.sense = sense  # "min": F >= bound, "max": F <= bound
        self.bound = bound
        self.recognize = recognize
        self.best: dict[int, tuple[int, str]] = {}
        self.equality: dict[int, dict[str, int]] = defaultdict(lambda: defaultdict(int))
        self.violation_count = 0

    def violate(self, g6: str, detail: str) -> None:
        self.violation_count += 1
        if len(self.report.violations) < MAX_RECORDED_VIOLATIONS:
            self.report.violations.append((g6, detail))

    def feed(self, batch: Batch) -> None:
        if not len(batch):
            return
        self.report.graphs_checked += len(batch)
        for a in np.unique(batch.alpha):
            a = int(a)
            sel = np.nonzero(batch.alpha == a)[0]
            fib = batch.fib[sel]
            b = self.bound(a)
            bad = sel[fib > b] if self.sense == "max" else sel[fib < b]
            for i in bad[:MAX_RECORDED_VIOLATIONS]:
                g = batch.graph_at(int(i))
                self.violate(g.to_graph6(), f"alpha={a} F={int(batch.fib[i])} bound={b}")
            self.violation_count += max(0, len(bad) - MAX_RECORDED_VIOLATIONS)
            for i in sel[fib == b]:
                g = batch.graph_at(int(i))
                label = self.recognize(g, a)
                if label is None:
                    self.violate(g.to_graph6(), f"alpha={a} attains bound {b} but is not an extremal graph")
                else:
                    self.equality[a][label] += 1
            ext = fib.max() if self.sense == "max" else fib.min()
            _, g6 = batch.smallest_g6(sel[fib == ext])
            ext = int(ext)
            old = self.best.get(a)
            better = old is None or (ext > old[0] if self.sense == "max" else ext < old[0])
            if better or (ext == old[0] and g6 < old[1]):
                self.best[a] = (ext, g6)

    def finish(self, exhaustive: bool, expected: dict[int, set[str]] | None = None) -> VerificationReport:
        rep = self.report
        rep.extremal_witnesses = [(a, f, g6) for a, (f, g6) in sorted(self.best.items())]
        if exhaustive and expected is not None:
            lo, hi = self.flt.alpha_range()
            alphas = [self.flt.alpha] if self.flt.alpha is not None else range(lo, hi + 1)
            for a in alphas:
                want = expected.get(a, set())
                got = set(self.equality.get(a, {}))
                if got != want:
                    self.violate("", f"alpha={a}: equality classes {sorted(got)} expected {sorted(want)}")
        rep.details["equality_counts"] = {
            str(a): dict(sorted(c.items())) for a, c in sorted(self.equality.items())
        }
        rep.details["violation_count"] = self.violation_count
        rep.details["exhaustive"] = exhaustive
        rep.details["backend"] = backend.__name__.rsplit(".", 1)[-1]
        return rep


def _batches(flt: ClassFilter, lines: Iterable[str] | None, threads: int | None) -> tuple[Iterable[Batch], bool]:
    if lines is not None:
        return _stream_batches(lines, flt), False
    return labeled_batches(flt, threads), True


def _representative_ok(kind: Kind, n: int, a: int, value: int, check: _Check) -> None:
    """The family graph itself must reach the bound (F is an isomorphism invariant)."""
    g = families.generate(FamilySpec(kind, n, a))
    if fibonacci_index(g) != value or stability_number(g) != a:
        check.violate(g.to_graph6(), f"{kind.value}({n},{a}) does not attain {value}")


def verify_lower_bound(flt: ClassFilter, lines: Iterable[str] | None = None,
                       threads: int | None = None) -> VerificationReport:
    """F >= 2**alpha + n - alpha, equality exactly on complete split graphs."""
    n = flt.n
    check = _Check("lower", flt, "min", lambda a: families.lower_bound_value(n, a),
                   lambda g, a: "complete-split" if families.is_complete_split(g) else None)
    batches, exhaustive = _batches(flt, lines, threads)
    for batch in batches:
        check.feed(batch)
    lo, hi = flt.alpha_range()
    for a in range(lo, hi + 1):
        if flt.alpha in (None, a):
            _representative_ok(Kind.COMPLETE_SPLIT, n, a, families.lower_bound_value(n, a), check)
    expected = None
    if flt.connectivity is not Connectivity.TREES:
        expected = {a: {"complete-split"} for a in range(lo, hi + 1)}
    return check.finish(exhaustive, expected)


def verify_upper_bound_general(n: int, alpha: int | None = None, lines: Iterable[str] | None = None,
                               threads: int | None = None) -> VerificationReport:
    """F <= f_T(n, alpha), equality exactly on Turan graphs."""
    flt = ClassFilter(n, Connectivity.ALL, alpha)
    check = _Check("upper-general", flt, "max", lambda a: families.f_turan(n, a),
                   lambda g, a: "turan" if families.is_turan(g) else None)
    batches, exhaustive = _batches(flt, lines, threads)
    for batch in batches:
        check.feed(batch)
    for a in range(1, n + 1):
        if alpha in (None, a):
            _representative_ok(Kind.TURAN, n, a, families.f_turan(n, a), check)
    return check.finish(exhaustive, {a: {"turan"} for a in range(1, n + 1)})


def _connected_label(g: Graph, a: int) -> str | None:
    if families.is_turan_connected(g):
        return "turan-connected"
    if g.n == 5 and a == 2 and families.is_cycle(g):
        return "cycle"
    return None


def verify_upper_bound_connected(n: int, alpha: int | None = None, lines: Iterable[str] | None = None,
                                 threads: int | None = None) -> VerificationReport:
    """F <= f_TC(n, alpha) on connected graphs; C5 ties with TC(5, 2)."""
    if n < 2:
        raise ValueError("connected upper bound needs n >= 2")
    flt = ClassFilter(n, Connectivity.CONNECTED, alpha)
    check = _Check("upper-connected", flt, "max", lambda a: families.f_turan_connected(n, a), _connected_label)
    batches, exhaustive = _batches(flt, lines, threads)
    for batch in batches:
        check.feed(batch)
    for a in range(1, n):
        if alpha in (None, a):
            _representative_ok(Kind.TURAN_CONNECTED, n, a, families.f_turan_connected(n, a), check)
    expected = {a: {"turan-connected"} for a in range(1, n)}
    if n == 5:
        expected[2] = {"turan-connected", "cycle"}
    return check.finish(exhaustive, expected)


def verify_tree_bound(n: int, alpha: int | None = None, threads: int | None = None) -> VerificationReport:
    """Trees: alpha >= n/2 and F <= 3**(n-a-1) * 2**(2a-n+1) + 2**(n-a-1)."""
    if n < 2:
        raise ValueError("tree bound needs n >= 2")
    flt = ClassFilter(n, Connectivity.TREES, alpha)

    def bound(a: int) -> int:
        # alpha < n/2 cannot occur for a tree; make every such graph a violation
        return families.f_tree_bound(n, a) if 2 * a >= n else -1

    check = _Check("tree", flt, "max", bound,
                   lambda g, a: "turan-connected" if families.is_turan_connected(g) else None)
    for batch in tree_batches(flt, threads):
        check.feed(batch)
    lo, hi = flt.alpha_range()
    for a in range(lo, hi + 1):
        if alpha in (None, a):
            _representative_ok(Kind.TURAN_CONNECTED, n, a, families.f_tree_bound(n, a), check)
    rep = check.finish(True, {a: {"turan-connected"} for a in range(lo, hi + 1)})
    rep.details["labeled_trees"] = n ** (n - 2)
    return rep


def verify_monotonicity(n_max: int) -> VerificationReport:
    """f_T and f_TC strictly increasing in n and in alpha for n <= n_max."""
    if not 2 <= n_max <= 200:
        raise ValueError("monotonicity check supports 2 <= n_max <= 200")
    rep = VerificationReport("monotonicity", {"n_max": n_max})
    cases = 0
    f_t = families.f_turan
    f_tc = families.f_turan_connected
    for n in range(1, n_max + 1):
        for a in range(1, n + 1):
            if n < n_max:
                cases += 1
                if not f_t(n, a) < f_t(n + 1, a):
                    rep.violations.append(("", f"f_T({n},{a}) >= f_T({n + 1},{a})"))
            if a < n:
                cases += 1
                if not f_t(n, a) < f_t(n, a + 1):
                    rep.violations.append(("", f"f_T({n},{a}) >= f_T({n},{a + 1})"))
            if a <= n - 1:
                if n < n_max:
                    cases += 1
                    if not f_tc(n, a) < f_tc(n + 1, a):
                        rep.violations.append(("", f"f_TC({n},{a}) >= f_TC({n + 1},{a})"))
                if a < n - 1:
                    cases += 1
                    if not f_tc(n, a) < f_tc(n, a + 1):
                        rep.violations.append(("", f"f_TC({n},{a}) >= f_TC({n},{a + 1})"))
    rep.details["comparisons"] = cases
    return rep


# -- size versus Fibonacci index -------------------------------------------


def search_size_fibonacci_pairs(n: int, alpha: int, threads: int | None = None) -> list[tuple[Graph, Graph]]:
    """Pairs in G(n, alpha) where the graph with more edges has more stable sets.

    One representative (smallest graph6) per ``(m, F)`` signature.
    """
    if n > 7:
        raise ValueError("exhaustive pair search supports n <= 7")
    flt = ClassFilter(n, Connectivity.ALL, alpha)
    reps: dict[tuple[int, int], tuple[int, Graph]] = {}
    for batch in labeled_batches(flt, threads):
        if not len(batch):
            continue
        sig = batch.m.astype(np.int64) * (1 << 20) + batch.fib
        for s in np.unique(sig):
            idx = np.nonzero(sig == s)[0]
            best = int(idx[np.argmin(batch.codes[idx])])
            key = (int(batch.m[best]), int(batch.fib[best]))
            code = int(batch.codes[best])
            if key not in reps or code < reps[key][0]:
                reps[key] = (code, batch.graph_at(best))
    sigs = sorted(reps)
    return [
        (reps[s][1], reps[t][1])
        for s in sigs for t in sigs
        if s[0] < t[0] and s[1] < t[1]
    ]
