from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stablecount import families
from stablecount.polytope import (
    Facet, GraphClass, check_slope_lemmas, formula_vertices, hull2d, points_from_graphs,
    polytope_from_formulas, theorem_facets, upper_line, verify_polytope,
)

from conftest import all_labeled


def test_triangle_and_duplicates():
    poly = hull2d([(0, 0), (1, 0), (0, 1), (1, 0), (0, 0)])
    assert poly.vertices == ((0, 0), (1, 0), (0, 1))
    assert len(poly.facets) == 3


def test_collinear_points_dropped():
    poly = hull2d([(0, 0), (1, 0), (2, 0), (2, 2), (1, 1), (0, 2), (1, 2)])
    assert poly.vertices == ((0, 0), (2, 0), (2, 2), (0, 2))


@pytest.mark.parametrize("pts", [[], [(0, 0), (1, 1)], [(0, 0), (1, 1), (2, 2), (5, 5)]])
def test_degenerate_hulls_rejected(pts):
    with pytest.raises(ValueError):
        hull2d(pts)


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=3, max_size=40))
@settings(max_examples=300, deadline=None)
def test_hull_contains_points_and_facets_are_tight(pts):
    try:
        poly = hull2d(pts)
    except ValueError:
        return
    assert len(poly.facets) == len(poly.vertices)
    for f in poly.facets:
        assert all(f.holds(p) for p in pts)
        assert sum(f.tight(v) for v in poly.vertices) == 2
    assert poly.vertices[0] == min(poly.vertices)


def test_facet_normalization():
    assert Facet.normalized(Fraction(1, 2), Fraction(-1, 3), 1) == Facet(3, -2, 6)
    assert Facet.normalized(4, -2, 6) == Facet(2, -1, 3)
    with pytest.raises(ValueError):
        Facet.normalized(0, 0, 1)


def test_general_ten_facets():
    facets = theorem_facets(10, "general")
    assert len(facets) == 10
    first, upper = facets[0], facets[-1]
    assert first == Facet(1, -1, -10)  # y >= x + 10
    assert first.tight((1, 11)) and first.tight((2, 12))
    assert upper.tight((1, 11)) and upper.tight((10, 1024))
    assert upper_line(10, "general", 10) == 1024
    assert Fraction(-upper.a, upper.b) == Fraction(1013, 9)


def test_connected_ten_facets():
    facets = theorem_facets(10, "connected")
    assert len(facets) == 9
    assert facets[-1].tight((1, 11)) and facets[-1].tight((9, 513))


@pytest.mark.parametrize("n", range(5, 13))
def test_formula_polytope_general(n):
    poly = polytope_from_formulas(n, "general")
    assert len(poly.vertices) == len(poly.facets) == n
    assert list(poly.facets) == theorem_facets(n, "general")
    assert poly.vertices[0] == (1, n + 1) and (n, 2**n) in poly.vertices


@pytest.mark.parametrize("n", range(8, 13))
def test_formula_polytope_connected(n):
    poly = polytope_from_formulas(n, "connected")
    assert len(poly.vertices) == len(poly.facets) == n - 1
    assert list(poly.facets) == theorem_facets(n, "connected")


def test_thresholds_enforced():
    with pytest.raises(ValueError):
        theorem_facets(4, "general")
    with pytest.raises(ValueError):
        theorem_facets(7, "connected")
    assert theorem_facets(7, "connected", override=True).below_threshold
    with pytest.raises(ValueError):
        polytope_from_formulas(7, "connected")


def test_exhaustive_hull_five_is_complete_split_points():
    pts = points_from_graphs(all_labeled(5), "general")
    assert hull2d(pts).vertices == tuple(formula_vertices(5, "general"))


@pytest.mark.parametrize("n", [5, 6])
def test_verify_exhaustive_general(n):
    rep = verify_polytope(n, "general", "exhaustive")
    assert rep.passed, rep.violations
    assert rep.details["hull_matches_theorem"]
    assert rep.graphs_checked == 2 ** (n * (n - 1) // 2)


@pytest.mark.parametrize("n, cls", [(10, "general"), (8, "connected"), (12, "connected")])
def test_verify_formulas(n, cls):
    assert verify_polytope(n, cls).passed


@pytest.mark.parametrize("n, holds", [(4, False), (5, False), (6, False), (7, False)])
def test_connected_below_threshold_is_observational(n, holds):
    rep = verify_polytope(n, "connected", "exhaustive", override=True)
    assert rep.passed  # nothing asserted below the proven range
    assert rep.details["observational"]
    assert rep.details["theorem_holds"] is holds


def test_file_points_partial_set():
    pts = [(1, 11), (10, 1024), (5, 40)]
    rep = verify_polytope(10, "general", pts)
    assert not rep.passed  # most facets are not tight on three points
    assert rep.details["source"] == "file"
    rep = verify_polytope(10, "general", pts + [(3, 5)])
    assert any("violates" in d for _, d in rep.violations)


def test_slope_lemmas():
    rep = check_slope_lemmas(200)
    assert rep.passed
    assert all(v > 0 for v in rep.details["comparisons"].values())
    assert families.f_turan(7, 2) == 20 and Fraction(20) <= Fraction(2**7, 6)
    with pytest.raises(ValueError):
        check_slope_lemmas(201)
