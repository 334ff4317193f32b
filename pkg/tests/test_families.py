import pytest
from hypothesis import given, settings, strategies as st

from stablecount import families
from stablecount.counting import fibonacci_index, fibonacci_index_bruteforce, is_alpha_critical, stability_number
from stablecount.families import (
    FamilySpec, Kind, f_tree_bound, f_turan, f_turan_connected, f_turan_recursive, family_value,
    generate, is_complete_split, is_turan, is_turan_connected, lower_bound_value,
)
from stablecount.graph import Graph

from conftest import all_labeled


def valid_specs(n_max):
    for kind in Kind:
        for n in range(0, n_max + 1):
            for a in [None, *range(1, n + 1)]:
                try:
                    yield FamilySpec(kind, n, a)
                except ValueError:
                    pass


def relabel(g, perm):
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_turan_layout():
    g = generate(FamilySpec("turan", 7, 3))
    assert [c.bit_count() for c in g.components()] == [3, 2, 2]
    assert all(g.induced(c).is_clique() for c in g.components())


def test_turan_connected_layout():
    g = generate(FamilySpec("turan-connected", 7, 3))
    assert g.adj[0] == 0b0101110  # own clique {1, 2} plus first vertices 3 and 5
    assert g.is_connected() and g.m == 3 + 1 + 1 + 2


def test_special_coincidences():
    for n in range(2, 9):
        star = generate(FamilySpec("star", n))
        assert generate(FamilySpec("turan-connected", n, n - 1)) == star
        assert is_complete_split(star) and is_turan_connected(star)
        assert generate(FamilySpec("turan", n, n)) == generate(FamilySpec("empty", n))
        kn = generate(FamilySpec("complete", n))
        assert generate(FamilySpec("turan", n, 1)) == kn
        assert is_turan(kn) and is_turan_connected(kn) and is_complete_split(kn)


def test_complete_split_layout():
    g = generate(FamilySpec("complete-split", 7, 3))
    assert g.is_independent(0b111)
    assert g.is_clique(0b1111000)
    assert all(g.adj[v] & 0b1111000 == 0b1111000 & ~(1 << v) for v in range(7))


def test_cycle_fails_all_recognizers():
    c5 = generate(FamilySpec("cycle", 5))
    assert not (is_turan(c5) or is_turan_connected(c5) or is_complete_split(c5))


@pytest.mark.parametrize("bad", [
    ("turan", 5, None), ("turan", 5, 6), ("turan-connected", 5, 5), ("cycle", 2, None),
    ("star", 5, 2), ("complete", 65, None), ("turan", 0, 1),
])
def test_spec_validation(bad):
    with pytest.raises(ValueError):
        FamilySpec(*bad)


def test_closure_formula_and_alpha_up_to_12():
    for spec in valid_specs(12):
        g = generate(spec)
        kind, n, a = spec.kind, spec.n, spec.alpha
        assert families.recognize(g, kind) if kind in (Kind.TURAN, Kind.TURAN_CONNECTED, Kind.COMPLETE_SPLIT) else True
        assert fibonacci_index(g) == family_value(kind, n, a)
        if a is not None:
            assert stability_number(g) == a


@given(st.integers(2, 12), st.data())
@settings(max_examples=150, deadline=None)
def test_recognizers_ignore_labels(n, data):
    kind = data.draw(st.sampled_from([Kind.TURAN, Kind.TURAN_CONNECTED, Kind.COMPLETE_SPLIT]))
    hi = n - 1 if kind is Kind.TURAN_CONNECTED else n
    a = data.draw(st.integers(1, hi))
    perm = data.draw(st.permutations(range(n)))
    g = relabel(generate(FamilySpec(kind, n, a)), perm)
    assert families.recognize(g, kind)


@pytest.mark.parametrize("n", range(1, 7))
def test_recognizers_match_isomorphism_classes(n):
    """Each recognizer accepts exactly the relabelings of one family member."""
    for g in all_labeled(n):
        a = stability_number(g)
        for kind, ok in ((Kind.TURAN, True), (Kind.COMPLETE_SPLIT, True), (Kind.TURAN_CONNECTED, a < n or n == 1)):
            if not ok:
                continue
            if families.recognize(g, kind):
                assert fibonacci_index(g) == family_value(kind, n, a)
                assert g.m == generate(FamilySpec(kind, n, a)).m
                if kind is Kind.TURAN_CONNECTED:
                    assert g.is_connected()


@pytest.mark.parametrize("n, a, value", [(7, 3, 36), (10, 2, 36), (5, 5, 32), (9, 1, 10)])
def test_f_turan_values(n, a, value):
    assert f_turan(n, a) == value
    assert fibonacci_index_bruteforce(generate(FamilySpec("turan", n, a))) == value


@pytest.mark.parametrize("n, a, value", [(5, 2, 11), (7, 3, 31), (7, 4, 40), (6, 1, 7), (6, 5, 33)])
def test_f_turan_connected_values(n, a, value):
    assert f_turan_connected(n, a) == value
    assert fibonacci_index_bruteforce(generate(FamilySpec("turan-connected", n, a))) == value


def test_lower_bound_values():
    assert lower_bound_value(7, 3) == 12
    assert fibonacci_index_bruteforce(generate(FamilySpec("complete-split", 7, 3))) == 12
    for n in range(1, 30):
        assert lower_bound_value(n, 1) == n + 1
        assert lower_bound_value(n, n) == 2**n


def test_recurrence_matches_closed_form():
    for n in range(2, 202):
        for a in range(1, n + 1):
            assert f_turan_recursive(n, a) == f_turan(n, a)
            if 2 <= a <= n - 1:
                assert f_turan(n, a) == f_turan(n - 1, a) + f_turan(n + (-n // a), a - 1)


def test_tree_closed_form_agrees():
    for n in range(2, 200):
        for a in range(-(-n // 2), n):
            assert f_tree_bound(n, a) == f_turan_connected(n, a)
    with pytest.raises(ValueError):
        f_tree_bound(7, 3)


def test_strict_monotonicity():
    for n in range(1, 200):
        for a in range(1, n + 1):
            assert f_turan(n, a) < f_turan(n + 1, a)
            if a < n:
                assert f_turan(n, a) < f_turan(n, a + 1)
            if a < n:
                assert f_turan_connected(n, a) < f_turan_connected(n + 1, a)
            if a < n - 1:
                assert f_turan_connected(n, a) < f_turan_connected(n, a + 1)


def test_alpha_criticality_of_families():
    for n in range(1, 11):
        for a in range(1, n + 1):
            assert is_alpha_critical(generate(FamilySpec("turan", n, a)))
            if 2 <= a <= n - 1:
                assert not is_alpha_critical(generate(FamilySpec("turan-connected", n, a)))


def test_symbolic_range():
    assert f_turan(10**6, 3) > 0
    with pytest.raises(ValueError):
        f_turan(10**6 + 1, 3)
    with pytest.raises(ValueError):
        f_turan_connected(5, 5)
    assert family_value("turan", 1000, 7) == f_turan(1000, 7)
    assert family_value("path", 10) == 144
    assert family_value("cycle", 10) == 123
