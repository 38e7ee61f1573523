from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import digraphs
from dichordal.classes import is_extended_semicomplete
from dichordal.digraph import (
    Digraph,
    PairRelation,
    complement_graph,
    in_nbrs,
    induced_subdigraph,
    out_nbrs,
    pair_relation,
    relabel,
    reverse,
    substitution,
    symmetric_part,
    synchronous,
    underlying_graph,
)
from dichordal.errors import UsageError
from dichordal.digraph import complete_symmetric
from dichordal.fixtures import C3O, DIGON, F_A, F_B, F_C, K1, TT3
from oracles import arcset, symmetric_arcs


def test_pair_relation_examples():
    assert pair_relation(DIGON, 0, 1) is PairRelation.SYMMETRIC
    assert pair_relation(C3O, 0, 1) is PairRelation.FORWARD
    assert pair_relation(C3O, 1, 0) is PairRelation.BACKWARD
    assert pair_relation(Digraph(2), 0, 1) is PairRelation.NON_ADJACENT


@pytest.mark.parametrize("u,v", [(0, 0), (0, 3), (-1, 0)])
def test_pair_relation_usage_errors(u, v):
    with pytest.raises(UsageError):
        pair_relation(C3O, u, v)


def test_neighbourhoods():
    assert in_nbrs(C3O, 1) == {0} and out_nbrs(C3O, 1) == {2}
    assert in_nbrs(DIGON, 0) == {1} and out_nbrs(DIGON, 0) == {1}
    assert in_nbrs(K1, 0) == set() and out_nbrs(K1, 0) == set()
    with pytest.raises(UsageError):
        in_nbrs(C3O, 3)


def test_symmetric_part_examples():
    assert symmetric_part(C3O) == Digraph(3)
    s = symmetric_part(F_A)
    assert {frozenset(a) for a in s.arcs()} == {frozenset(p) for p in [(0, 2), (1, 3), (2, 3)]}


def test_underlying_graph_examples():
    tri = underlying_graph(C3O)
    assert len(tri.arcs()) == 6
    assert underlying_graph(Digraph(4)) == Digraph(4)
    assert underlying_graph(F_C) == Digraph(4, [(a, b) for a in range(4) for b in range(4) if a != b])


def test_induced_subdigraph_examples():
    sub, mapping = induced_subdigraph(F_A, [0, 1, 2])
    assert mapping == (0, 1, 2)
    assert set(sub.arcs()) == {(0, 1), (1, 2), (0, 2), (2, 0)}
    whole, _ = induced_subdigraph(F_A, range(4))
    assert whole == F_A
    single, mapping = induced_subdigraph(F_A, [3])
    assert single == K1 and mapping == (3,)
    with pytest.raises(UsageError):
        induced_subdigraph(F_A, [4])


def test_induced_subdigraph_mapping_translates_arcs():
    sub, mapping = induced_subdigraph(F_B, [1, 3, 2])
    assert mapping == (1, 2, 3)
    for a, b in sub.arcs():
        assert F_B.has_arc(mapping[a], mapping[b])


def test_substitution_examples(edgeless2):
    assert substitution(C3O, [K1, K1, K1]) == C3O
    assert substitution(K1, [C3O]) == C3O
    d = substitution(DIGON, [edgeless2, K1])
    assert set(d.arcs()) == {(0, 2), (2, 0), (1, 2), (2, 1)}
    assert is_extended_semicomplete(d)


def test_substitution_errors():
    with pytest.raises(UsageError):
        substitution(DIGON, [K1])
    with pytest.raises(UsageError):
        substitution(DIGON, [K1, Digraph(0)])


def test_synchronous_examples():
    assert not synchronous(C3O, 1, 0, 2)
    tri = complete_symmetric(3)
    assert all(synchronous(tri, v, u, w) for v in range(3) for u, w in combinations(set(range(3)) - {v}, 2))
    assert not synchronous(F_B, 0, 2, 1)
    with pytest.raises(UsageError):
        synchronous(C3O, 0, 1, 1)
    with pytest.raises(UsageError):
        synchronous(Digraph(3, [(0, 1)]), 0, 1, 2)


def test_digraph_rejects_loops_and_bad_vertices():
    with pytest.raises(UsageError):
        Digraph(2, [(0, 0)])
    with pytest.raises(UsageError):
        Digraph(2, [(0, 2)])


@given(digraphs())
def test_pair_relation_consistency(d):
    A = arcset(d)
    for u, v in combinations(range(d.n), 2):
        rel = pair_relation(d, u, v)
        assert rel == PairRelation(((u, v) in A) | ((v, u) in A) << 1)
        assert pair_relation(d, v, u) == rel.mirror()


@given(digraphs())
def test_symmetric_part_properties(d):
    s = symmetric_part(d)
    assert symmetric_part(s) == s
    assert arcset(s) == symmetric_arcs(arcset(d))
    assert arcset(underlying_graph(s)) <= arcset(underlying_graph(d))


@given(digraphs())
def test_reverse_and_complement(d):
    assert reverse(reverse(d)) == d
    c = complement_graph(d)
    for u, v in combinations(range(d.n), 2):
        assert c.has_arc(u, v) == (not d.adjacent(u, v))


@given(digraphs(max_n=5), st.data())
def test_relabel_round_trip(d, data):
    perm = data.draw(st.permutations(range(d.n)))
    r = relabel(d, perm)
    for u, v in d.arcs():
        assert r.has_arc(perm[u], perm[v])
    inv = [0] * d.n
    for i, p in enumerate(perm):
        inv[p] = i
    assert relabel(r, inv) == d


@given(digraphs(max_n=4), st.data())
def test_substitution_nesting_flattens(d, data):
    i = data.draw(st.integers(0, d.n - 1))
    k = data.draw(digraphs(max_n=3))
    inner = [data.draw(digraphs(max_n=2)) for _ in range(k.n)]
    others = [data.draw(digraphs(max_n=2)) for _ in range(d.n)]
    nested = substitution(d, [substitution(k, inner) if j == i else others[j] for j in range(d.n)])
    expanded = substitution(d, [k if j == i else K1 for j in range(d.n)])
    flat_parts = others[:i] + inner + others[i + 1:]
    assert nested == substitution(expanded, flat_parts)


@given(digraphs(max_n=6))
def test_synchronous_is_an_equivalence(d):
    for v in range(d.n):
        nb = sorted(in_nbrs(d, v) | out_nbrs(d, v))
        for a, b, c in combinations(nb, 3):
            if synchronous(d, v, a, b) and synchronous(d, v, b, c):
                assert synchronous(d, v, a, c)
        classes = {pair_relation(d, v, u) for u in nb}
        assert len(classes) <= 3


def test_equality_and_hash():
    assert Digraph(3, [(0, 1)]) == Digraph(3, [(0, 1)])
    assert hash(Digraph(3, [(0, 1)])) == hash(Digraph(3, [(0, 1)]))
    assert Digraph(3, [(0, 1)]) != Digraph(3, [(1, 0)])
    assert TT3.relations() == (1, 1, 1)
