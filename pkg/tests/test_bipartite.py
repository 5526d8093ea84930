from __future__ import annotations

from fractions import Fraction
from itertools import product

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bookgraph.bipartite import (
    cut_bound,
    is_bipartite,
    lemma1_cut,
    lemma2_extract,
    max_induced_bipartite,
)
from bookgraph.census import book_number, triangle_count
from bookgraph.constructions import s_graph
from bookgraph.graph import Graph, GraphInputError, edges_inside, mask_of

from conftest import random_corpus, to_nx


def _interior(g, x):
    side = g.adj[x]
    rest = frozenset(range(g.n)) - side
    return edges_inside(g, side) + edges_inside(g, rest)


def test_lemma1_examples():
    r = lemma1_cut(Graph.complete_bipartite(2, 2))
    assert (r.deleted_edges, r.bound) == (0, 0)
    r = lemma1_cut(Graph.cycle(5))
    assert (r.deleted_edges, r.bound) == (1, 1)
    assert all(_interior(Graph.cycle(5), x) == 1 for x in range(5))
    # N(x) in K4 is a triangle and the rest is a single vertex
    r = lemma1_cut(Graph.complete(4))
    assert (r.deleted_edges, r.bound, r.pivot) == (3, 3, 0)
    assert r.side_N == {1, 2, 3} and r.side_rest == {0}


def test_lemma1_empty_graph_rejected():
    with pytest.raises(GraphInputError):
        lemma1_cut(Graph.empty(0))


def test_lemma1_minimizes_over_pivots():
    for g in random_corpus(21, 300, 14):
        r = lemma1_cut(g)
        vals = [_interior(g, x) for x in range(g.n)]
        assert r.deleted_edges == min(vals)
        assert r.pivot == vals.index(min(vals))
        assert r.side_N | r.side_rest == frozenset(range(g.n))
        assert not r.side_N & r.side_rest
        assert r.deleted_edges <= r.bound


def test_cut_bound_is_exact_rational():
    assert cut_bound(5, 5, 0) == 1
    assert cut_bound(7, 10, 1) == Fraction(10) - Fraction(400, 49) + Fraction(6, 7)


def test_is_bipartite_matches_networkx():
    for g in random_corpus(22, 200, 12, probs=(0.1, 0.2, 0.3)):
        assert is_bipartite(g) == nx.is_bipartite(to_nx(g))
    assert is_bipartite(Graph.complete(3), frozenset({0, 1}))


def test_lemma2_examples():
    r = lemma2_extract(Graph.complete_bipartite(4, 5), Fraction(1, 4), 0)
    assert r.removed == frozenset()
    # m = 20 < 81/4, so the lemma's edge hypothesis fails at n = 9
    assert r.guarantee_applies is False
    r = lemma2_extract(Graph.cycle(4), Fraction(1, 4), 0)
    assert r.removed == frozenset() and r.guarantee_applies
    g = s_graph(2, 9)
    r = lemma2_extract(g, Fraction(1, 4), 2)
    assert not r.guarantee_applies
    assert is_bipartite(g, r.A | r.B)
    assert edges_inside(g, r.A) == 0 and edges_inside(g, r.B) == 0


def test_lemma2_rejects_bad_c():
    for c in (0, Fraction(1, 2), -1):
        with pytest.raises(GraphInputError):
            lemma2_extract(Graph.cycle(4), c, 0)


@given(
    st.integers(2, 14),
    st.sampled_from([0.3, 0.5, 0.7]),
    st.integers(0, 10**6),
    st.sampled_from([Fraction(1, 100), Fraction(1, 10), Fraction(1, 4), Fraction(2, 5)]),
    st.integers(0, 6),
)
def test_lemma2_properties(n, p, seed, c, b_cap):
    g = random_corpus(seed, 1, n, probs=(p,), n_min=n)[0]
    r = lemma2_extract(g, c, b_cap)
    assert edges_inside(g, r.A) == 0 and edges_inside(g, r.B) == 0
    assert is_bipartite(g, r.A | r.B)
    assert r.A <= r.A0 and r.B <= r.B0
    assert r.removed == frozenset(range(n)) - r.A - r.B
    mb0, ma0 = mask_of(r.B0), mask_of(r.A0)
    for v in r.A:
        assert 2 * (g.masks[v] & mb0).bit_count() > b_cap + len(r.B0)
    for v in r.B:
        assert 2 * (g.masks[v] & ma0).bit_count() > b_cap + len(r.A0)
    if book_number(g) <= b_cap:
        # the filter alone already yields independent sets
        assert not r.greedy_pruned
    if r.guarantee_applies:
        assert len(r.removed) <= Fraction(48 * triangle_count(g)) / (c * n * n)


def test_lemma2_guarantee_applies_near_quarter():
    # S_(23,96): m = n^2/4, t = 2116 <= c^2 n^3/24 = 2500 and b = (1/2 - c) n
    g = s_graph(23, 96)
    c = Fraction(25, 96)
    r = lemma2_extract(g, c, 23)
    assert r.guarantee_applies
    assert r.removal_bound == Fraction(1058, 25)
    assert len(r.removed) <= r.removal_bound
    assert is_bipartite(g, r.A | r.B)


def _brute_max_bipartite(g):
    best = 0
    for colour in product((0, 1, 2), repeat=g.n):
        a = {v for v in range(g.n) if colour[v] == 1}
        b = {v for v in range(g.n) if colour[v] == 2}
        if edges_inside(g, a) == 0 and edges_inside(g, b) == 0:
            best = max(best, len(a) + len(b))
    return best


def test_max_induced_bipartite_vs_bruteforce():
    for g in random_corpus(23, 60, 7):
        a, b = max_induced_bipartite(g)
        assert len(a) >= len(b)
        assert edges_inside(g, a) == 0 and edges_inside(g, b) == 0
        assert len(a) + len(b) == _brute_max_bipartite(g)


def test_max_induced_bipartite_limit():
    with pytest.raises(GraphInputError):
        max_induced_bipartite(Graph.empty(17))
    a, b = max_induced_bipartite(s_graph(2, 9))
    assert len(a) + len(b) == 8
