"""Exact 2-D hulls of (alpha, F) points and their facet systems.

All arithmetic is on Python integers and :class:`fractions.Fraction`.  A
facet ``a*x + b*y <= c`` is stored with coprime integer coefficients and
oriented so the polytope lies on the ``<=`` side, which makes facet lists
comparable by plain equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

import numpy as np

from . import families
from .extremal import ClassFilter, Connectivity, VerificationReport, labeled_batches

Point2 = tuple[int, int]


class GraphClass(str, Enum):
    GENERAL = "general"
    CONNECTED = "connected"


THRESHOLD = {GraphClass.GENERAL: 5, GraphClass.CONNECTED: 8}


@dataclass(frozen=True, order=True)
class Facet:
    a: int
    b: int
    c: int

    @classmethod
    def normalized(cls, a, b, c) -> "Facet":
        """Integer form of ``a*x + b*y <= c`` from rational coefficients."""
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate facet (a, b) = (0, 0)")
        scale = lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = (int(t * scale) for t in (a, b, c))
        g = gcd(ia, ib, ic)
        return cls(ia // g, ib // g, ic // g)

    def value(self, p: Point2) -> int:
        return self.a * p[0] + self.b * p[1]

    def holds(self, p: Point2) -> bool:
        return self.value(p) <= self.c

    def tight(self, p: Point2) -> bool:
        return self.value(p) == self.c

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y <= {self.c}"


@dataclass(frozen=True)
class Polytope2:
    vertices: tuple[Point2, ...]
    facets: tuple[Facet, ...]


class TheoremFacets(list):
    """Facet list that remembers whether it was requested below the proven range."""

    below_threshold: bool = False


def _cross(o: Point2, a: Point2, b: Point2) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull2d(points: Iterable[Point2]) -> Polytope2:
    """Monotone-chain hull; vertices counterclockwise from the lowest-left point."""
    pts = sorted({(int(x), int(y)) for x, y in points})
    if len(pts) < 3:
        raise ValueError("hull needs at least 3 distinct points")
    lower: list[Point2] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 3:
        raise ValueError("all points are collinear")
    facets = []
    for p, q in zip(verts, verts[1:] + verts[:1]):
        dx, dy = q[0] - p[0], q[1] - p[1]
        facets.append(Facet.normalized(dy, -dx, dy * p[0] - dx * p[1]))
    return Polytope2(tuple(verts), tuple(facets))


def upper_line_slope(n: int, cls: GraphClass) -> Fraction:
    if GraphClass(cls) is GraphClass.GENERAL:
        return Fraction(2**n - n - 1, n - 1)
    return Fraction(2 ** (n - 1) - n, n - 2)


def upper_line(n: int, cls: GraphClass, x) -> Fraction:
    """Height of the chord through the K_n point and the far-right vertex."""
    return upper_line_slope(n, cls) * (x - 1) + n + 1


def below_threshold(n: int, cls: GraphClass) -> bool:
    return n < THRESHOLD[GraphClass(cls)]


def theorem_facets(n: int, cls: GraphClass, override: bool = False) -> TheoremFacets:
    """Facets of conv{(alpha(G), F(G))} over general or connected graphs.

    Listed counterclockwise from the ``K_n`` vertex: the lower facets through
    consecutive complete split points, then the upper chord.
    """
    cls = GraphClass(cls)
    low = below_threshold(n, cls)
    if low and not override:
        raise ValueError(f"{cls.value} facet system is proven for n >= {THRESHOLD[cls]}")
    if n < 3 or (cls is GraphClass.CONNECTED and n < 4):
        raise ValueError("facet formulas need a 2-D polytope")
    last_k = n - 1 if cls is GraphClass.GENERAL else n - 2
    out = TheoremFacets()
    for k in range(1, last_k + 1):
        # y >= (2^k - 1) x + 2^k (1 - k) + n
        out.append(Facet.normalized(2**k - 1, -1, -(2**k) * (1 - k) - n))
    s = upper_line_slope(n, cls)
    out.append(Facet.normalized(-s, 1, -s + n + 1))
    out.below_threshold = low
    return out


def formula_vertices(n: int, cls: GraphClass) -> list[Point2]:
    last = n if GraphClass(cls) is GraphClass.GENERAL else n - 1
    return [(x, families.lower_bound_value(n, x)) for x in range(1, last + 1)]


def polytope_from_formulas(n: int, cls: GraphClass, override: bool = False) -> Polytope2:
    cls = GraphClass(cls)
    if below_threshold(n, cls) and not override:
        raise ValueError(f"{cls.value} polytope formulas are proven for n >= {THRESHOLD[cls]}")
    poly = hull2d(formula_vertices(n, cls))
    want = n if cls is GraphClass.GENERAL else n - 1
    if len(poly.vertices) != want:
        raise AssertionError(f"expected {want} vertices, hull has {len(poly.vertices)}")
    return poly


def family_points(n: int, cls: GraphClass) -> list[Point2]:
    """(alpha, F) of the minimizing and maximizing family graphs for every alpha."""
    cls = GraphClass(cls)
    if cls is GraphClass.GENERAL:
        return [(a, v) for a in range(1, n + 1)
                for v in (families.lower_bound_value(n, a), families.f_turan(n, a))]
    return [(a, v) for a in range(1, n)
            for v in (families.lower_bound_value(n, a), families.f_turan_connected(n, a))]


def exhaustive_points(n: int, cls: GraphClass, threads: int | None = None) -> tuple[set[Point2], int, dict]:
    """Distinct points over all labeled graphs, with the smallest graph6 per point."""
    conn = Connectivity.ALL if GraphClass(cls) is GraphClass.GENERAL else Connectivity.CONNECTED
    seen: dict[Point2, tuple[int, object]] = {}
    checked = 0
    for batch in labeled_batches(ClassFilter(n, conn), threads):
        checked += len(batch)
        if not len(batch):
            continue
        key = batch.alpha.astype(np.int64) * (1 << 40) + batch.fib
        for k in np.unique(key):
            idx = np.nonzero(key == k)[0]
            best = int(idx[np.argmin(batch.codes[idx])])
            p = (int(batch.alpha[best]), int(batch.fib[best]))
            code = int(batch.codes[best])
            if p not in seen or code < seen[p][0]:
                seen[p] = (code, batch.graph_at(best))
    return set(seen), checked, {p: g.to_graph6() for p, (_, g) in seen.items()}


def points_from_graphs(graphs, cls: GraphClass) -> set[Point2]:
    from .counting import fibonacci_index, stability_number

    need_conn = GraphClass(cls) is GraphClass.CONNECTED
    return {(stability_number(g), fibonacci_index(g)) for g in graphs if not need_conn or g.is_connected()}


def polytope_dict(poly: Polytope2) -> dict:
    return {
        "vertices": [{"alpha": x, "F": y} for x, y in poly.vertices],
        "facets": [{"a": f.a, "b": f.b, "c": f.c} for f in poly.facets],
    }


def verify_polytope(n: int, cls: GraphClass, points="formulas", override: bool = False,
                    complete: bool | None = None, threads: int | None = None) -> VerificationReport:
    """Check observed (alpha, F) points against the facet system.

    ``points`` is ``"formulas"``, ``"exhaustive"`` or an iterable of pairs.
    Facet-list equality with the hull is asserted only for complete point
    sets; below the proven range everything is recorded but not asserted.
    """
    cls = GraphClass(cls)
    observational = below_threshold(n, cls)
    if observational and not override:
        raise ValueError(f"{cls.value} facet system is proven for n >= {THRESHOLD[cls]}; pass override")
    rep = VerificationReport("polytope", {"n": n, "class": cls.value})
    witnesses: dict[Point2, str] = {}
    if points == "formulas":
        observed = set(family_points(n, cls))
        source = "formulas"
        complete = True if complete is None else complete
    elif points == "exhaustive":
        observed, rep.graphs_checked, witnesses = exhaustive_points(n, cls, threads)
        source = "exhaustive"
        complete = True if complete is None else complete
    else:
        observed = {(int(x), int(y)) for x, y in points}
        source = "file"
        complete = bool(complete)
    facets = theorem_facets(n, cls, override=override)
    problems: list[tuple[str, str]] = []
    for p in sorted(observed):
        for f in facets:
            if not f.holds(p):
                problems.append((witnesses.get(p, ""), f"point {p} violates {f}"))
    for f in facets:
        if not any(f.tight(p) for p in observed):
            problems.append(("", f"facet {f} is not tight at any observed point"))
    hull = hull2d(observed)
    same = list(hull.facets) == list(facets)
    if complete and not same:
        extra = sorted(set(hull.facets) - set(facets))
        missing = sorted(set(facets) - set(hull.facets))
        problems.append(("", f"hull facets differ: unexpected {[str(f) for f in extra]}, "
                             f"missing {[str(f) for f in missing]}"))
    if observational:
        rep.details["theorem_holds"] = not problems
        rep.details["observations"] = [d for _, d in problems]
    else:
        rep.violations.extend(problems)
    rep.extremal_witnesses = [(x, y, witnesses[(x, y)]) for x, y in hull.vertices if (x, y) in witnesses]
    rep.details.update({
        "source": source,
        "observational": observational,
        "complete": complete,
        "distinct_points": len(observed),
        "hull_matches_theorem": same,
        "hull": polytope_dict(hull),
        "theorem_facets": [{"a": f.a, "b": f.b, "c": f.c} for f in facets],
    })
    return rep


def check_slope_lemmas(n_max: int) -> VerificationReport:
    """Slope bounds on f_T and strict separation of f_T, f_TC from the upper chords."""
    if not 7 <= n_max <= 200:
        raise ValueError("slope lemmas are checked for 7 <= n_max <= 200")
    rep = VerificationReport("slopes", {"n_max": n_max})
    counts = {"general_slope": 0, "connected_slope": 0, "general_chord": 0, "connected_chord": 0}
    for n in range(5, n_max + 1):
        if n >= 7:
            for a in range(2, n + 1):
                counts["general_slope"] += 1
                if Fraction(families.f_turan(n, a), a - 1) > Fraction(2**n, n - 1):
                    rep.violations.append(("", f"f_T({n},{a})/(alpha-1) > 2^n/(n-1)"))
        if n >= 11:
            for a in range(2, n - 3):
                counts["connected_slope"] += 1
                if Fraction(families.f_turan(n, a), a - 1) > Fraction(2 ** (n - 1), n - 2):
                    rep.violations.append(("", f"f_T({n},{a})/(alpha-1) > 2^(n-1)/(n-2)"))
        for a in range(2, n):
            counts["general_chord"] += 1
            if not families.f_turan(n, a) < upper_line(n, GraphClass.GENERAL, a):
                rep.violations.append(("", f"f_T({n},{a}) not below the general chord"))
        if n >= 8:
            for a in range(2, n - 1):
                counts["connected_chord"] += 1
                if not families.f_turan_connected(n, a) < upper_line(n, GraphClass.CONNECTED, a):
                    rep.violations.append(("", f"f_TC({n},{a}) not below the connected chord"))
    rep.details["comparisons"] = counts
    return rep
