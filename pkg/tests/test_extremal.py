import json

import numpy as np
import pytest

from stablecount import extremal, families
from stablecount.counting import fibonacci_index
from stablecount.extremal import (
    ClassFilter, Connectivity, StreamError, VerificationReport, enumerate_labeled, ingest_graph6_stream,
    search_size_fibonacci_pairs, verify_lower_bound, verify_monotonicity, verify_tree_bound,
    verify_upper_bound_connected, verify_upper_bound_general,
)
from stablecount.graph import Graph, pair_count
from stablecount.kernels import backend

from conftest import canonical_code, unlabeled_catalog


@pytest.fixture(scope="module")
def catalog5():
    return unlabeled_catalog(5)


def test_class_filter_ranges():
    assert ClassFilter(5).alpha_range() == (1, 5)
    assert ClassFilter(5, "connected").alpha_range() == (1, 4)
    assert ClassFilter(7, "trees").alpha_range() == (4, 6)
    assert ClassFilter(1, "connected").alpha_range() == (1, 1)
    with pytest.raises(ValueError):
        ClassFilter(5, "connected", 5)
    with pytest.raises(ValueError):
        ClassFilter(0)


def test_report_dict_is_sorted_and_ordered():
    rep = VerificationReport("x", {"n": 3}, 2, [("b", "2"), ("a", "1")], [(2, 5, "Bw"), (1, 4, "B?")])
    d = rep.to_dict()
    assert list(d) == ["theorem_id", "class", "graphs_checked", "passed", "violations",
                       "extremal_witnesses", "details"]
    assert [v["graph6"] for v in d["violations"]] == ["a", "b"]
    assert [w["alpha"] for w in d["extremal_witnesses"]] == [1, 2]
    assert not d["passed"]


@pytest.mark.parametrize("n, conn, count", [(4, "all", 64), (4, "connected", 38), (5, "connected", 728),
                                            (6, "trees", 6**4)])
def test_enumeration_counts(n, conn, count):
    assert enumerate_labeled(ClassFilter(n, conn), lambda g: None) == count


def test_enumeration_alpha_filter():
    seen = []
    enumerate_labeled(ClassFilter(4, "all", 3), seen.append)
    assert seen and all(extremal.stability_number(g) == 3 for g in seen)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("conn", ["all", "connected"])
def test_lower_bound_small(n, conn):
    flt = ClassFilter(n, conn)
    rep = verify_lower_bound(flt)
    assert rep.passed, rep.violations[:3]
    lo, hi = flt.alpha_range()
    want = [(a, families.lower_bound_value(n, a)) for a in range(lo, hi + 1)]
    assert [(a, f) for a, f, _ in rep.extremal_witnesses] == want


@pytest.mark.parametrize("n", range(1, 7))
def test_upper_general_small(n):
    rep = verify_upper_bound_general(n)
    assert rep.passed, rep.violations[:3]
    assert rep.graphs_checked == 1 << pair_count(n)
    assert [f for _, f, _ in rep.extremal_witnesses] == [families.f_turan(n, a) for a in range(1, n + 1)]


@pytest.mark.parametrize("n", range(2, 7))
def test_upper_connected_small(n):
    rep = verify_upper_bound_connected(n)
    assert rep.passed, rep.violations[:3]
    assert [f for _, f, _ in rep.extremal_witnesses] == [families.f_turan_connected(n, a) for a in range(1, n)]


def test_connected_tie_at_five_two():
    rep = verify_upper_bound_connected(5, 2)
    assert rep.passed
    assert rep.details["equality_counts"] == {"2": {"cycle": 12, "turan-connected": 60}}


@pytest.mark.parametrize("n", range(2, 9))
def test_tree_bound(n):
    rep = verify_tree_bound(n)
    assert rep.passed, rep.violations[:3]
    assert rep.graphs_checked == n ** (n - 2)


def equality_classes(n, bound, connected):
    """Isomorphism classes attaining ``bound(alpha)``, via canonical forms."""
    alpha, fib, conn, _ = backend.scan_labeled(n, 0, 1 << pair_count(n))
    out = {}
    for a in np.unique(alpha):
        a = int(a)
        if connected and a == n:
            continue
        sel = (alpha == a) & (fib == bound(a))
        if connected:
            sel &= conn
        out[a] = {canonical_code(Graph.from_code(n, int(c))) for c in np.nonzero(sel)[0]}
    return out


@pytest.mark.parametrize("n", range(2, 7))
def test_equality_classes_by_canonical_form(n):
    lower = equality_classes(n, lambda a: families.lower_bound_value(n, a), False)
    upper = equality_classes(n, lambda a: families.f_turan(n, a), False)
    conn = equality_classes(n, lambda a: families.f_turan_connected(n, a), True)
    for a in range(1, n + 1):
        cs = canonical_code(families.generate(families.FamilySpec("complete-split", n, a)))
        t = canonical_code(families.generate(families.FamilySpec("turan", n, a)))
        assert lower[a] == {cs}
        assert upper[a] == {t}
    for a in range(1, n):
        tc = canonical_code(families.generate(families.FamilySpec("turan-connected", n, a)))
        want = {tc}
        if (n, a) == (5, 2):
            want.add(canonical_code(families.generate(families.FamilySpec("cycle", 5))))
        assert conn[a] == want


def test_unlabeled_catalog_ingest(catalog5):
    assert len(catalog5) == 34
    assert ingest_graph6_stream(catalog5, ClassFilter(5), lambda g: None) == 34
    assert ingest_graph6_stream(catalog5, ClassFilter(5, "connected"), lambda g: None) == 21
    assert ingest_graph6_stream([], ClassFilter(5), lambda g: None) == 0


def test_theorems_on_catalog(catalog5):
    for rep in (verify_lower_bound(ClassFilter(5), catalog5),
                verify_upper_bound_general(5, lines=catalog5),
                verify_upper_bound_connected(5, lines=catalog5)):
        assert rep.passed
        assert not rep.details["exhaustive"]
    rep = verify_upper_bound_connected(5, lines=catalog5)
    assert rep.graphs_checked == 21
    assert rep.details["equality_counts"]["2"] == {"cycle": 1, "turan-connected": 1}


def test_stream_errors():
    with pytest.raises(StreamError, match="line 2"):
        ingest_graph6_stream(["D?{", "D!!"], ClassFilter(5), lambda g: None)
    with pytest.raises(StreamError, match="n=3"):
        ingest_graph6_stream(["", "Bw"], ClassFilter(5), lambda g: None)


def test_broken_bound_is_reported(monkeypatch):
    monkeypatch.setattr(families, "lower_bound_value", lambda n, a: 2**a + n - a + 1)
    rep = verify_lower_bound(ClassFilter(4))
    assert not rep.passed
    assert rep.details["violation_count"] > 0
    json.dumps(rep.to_dict())


def test_unrecognized_equality_graph_is_a_violation(monkeypatch):
    monkeypatch.setattr(families, "is_turan", lambda g: False)
    rep = verify_upper_bound_general(4)
    assert any("not an extremal graph" in d for _, d in rep.violations)


def test_monotonicity():
    rep = verify_monotonicity(200)
    assert rep.passed and rep.details["comparisons"] > 0
    with pytest.raises(ValueError):
        verify_monotonicity(201)


def test_size_fibonacci_pairs():
    pairs = search_size_fibonacci_pairs(6, 4)
    assert pairs
    for g, h in pairs:
        assert g.m < h.m and fibonacci_index(g) < fibonacci_index(h)
        assert extremal.stability_number(g) == extremal.stability_number(h) == 4
    assert ("E?N?", "E?Dw") in [(g.to_graph6(), h.to_graph6()) for g, h in pairs]
    assert search_size_fibonacci_pairs(4, 2) == []
    with pytest.raises(ValueError):
        search_size_fibonacci_pairs(8, 3)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("THREADS", "3")
    assert extremal.thread_count() == 3
    a = verify_upper_bound_general(6, threads=1).to_dict()
    b = verify_upper_bound_general(6, threads=4).to_dict()
    assert a == b


def test_tree_alpha_range_errors():
    with pytest.raises(ValueError):
        verify_tree_bound(1)
    with pytest.raises(ValueError):
        verify_tree_bound(11)
