import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from halfabelian.commgraph import CommutationGraph, for_diagram
from halfabelian.mis import (
    brute_force_mis,
    clique_cover_bound,
    enumerate_independent_sets,
    max_independent_set,
)

from conftest import row


def graphs(max_n=12):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        pairs = list(itertools.combinations(range(n), 2))
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return CommutationGraph.from_edges(n, [p for p, b in zip(pairs, mask) if b])
    return build()


def naive_mis(g):
    for k in range(g.n, -1, -1):
        if any(g.is_independent(c) for c in itertools.combinations(range(g.n), k)):
            return k
    return 0


def test_e6_worked_examples(table_rows):
    g = for_diagram(row(table_rows, "E6s", "A2+A1").diagram)[1]
    res = max_independent_set(g)
    assert (res.size, res.proven_optimal) == (6, True)
    assert list(enumerate_independent_sets(g, 7)) == []
    capped = max_independent_set(
        for_diagram(row(table_rows, "E6s", "A3+A1").diagram)[1], cap=5)
    assert capped.size == 5 and capped.capped_by_bound and not capped.proven_optimal


def test_empty_graph():
    res = max_independent_set(CommutationGraph((), ()))
    assert res.size == 0 and res.witness == () and res.proven_optimal


def test_e8_2a1(table_rows):
    g = for_diagram(row(table_rows, "E8s", "2A1").diagram)[1]
    assert g.n == 64
    res = max_independent_set(g, cap=32)
    assert res.size == 22 and res.proven_optimal
    assert g.is_independent(res.witness)


@pytest.mark.parametrize("tid,name,size", [("G2s", "A1", 2), ("F4s", "~A1", 2), ("F4s", "A2+~A1", 2)])
def test_brute_force_examples(table_rows, tid, name, size):
    assert brute_force_mis(for_diagram(row(table_rows, tid, name).diagram)[1]) == size


def test_enumeration_basics():
    tri = CommutationGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert list(enumerate_independent_sets(tri, 0)) == [()]
    assert list(enumerate_independent_sets(tri, 2)) == []
    path = CommutationGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert list(enumerate_independent_sets(path, 2)) == [(0, 2), (0, 3), (1, 3)]
    with pytest.raises(ValueError):
        list(enumerate_independent_sets(path, 5))


def test_cap_must_be_an_upper_bound():
    g = CommutationGraph.from_edges(4, [])
    with pytest.raises(ValueError):
        max_independent_set(g, cap=2)


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_mis(CommutationGraph.from_edges(31, []))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_solver_matches_naive(g):
    res = max_independent_set(g)
    assert res.size == naive_mis(g) == brute_force_mis(g)
    assert g.is_independent(res.witness)
    assert res.size <= clique_cover_bound(g.rows, (1 << g.n) - 1)
    # the witness is the lexicographically first maximum independent set
    first = next(iter(enumerate_independent_sets(g, res.size)), ())
    assert res.witness == first


@settings(max_examples=60, deadline=None)
@given(graphs(), st.randoms())
def test_permutation_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert max_independent_set(g.permuted(perm)).size == max_independent_set(g).size


@settings(max_examples=40, deadline=None)
@given(graphs(9), st.integers(0, 9))
def test_enumeration_is_complete(g, d):
    if d > g.n:
        return
    want = [c for c in itertools.combinations(range(g.n), d) if g.is_independent(c)]
    assert list(enumerate_independent_sets(g, d)) == want


def test_random_dense_graphs_against_brute_force():
    rnd = random.Random(7)
    for _ in range(20):
        n = rnd.randint(15, 26)
        edges = [p for p in itertools.combinations(range(n), 2) if rnd.random() < 0.35]
        g = CommutationGraph.from_edges(n, edges)
        assert max_independent_set(g).size == brute_force_mis(g)
