from itertools import product

import pytest

from dichordal.chordality import is_di_simplicial
from dichordal.classes import (
    is_extended_semicomplete,
    is_locally_semicomplete,
    is_quasi_transitive,
    is_semicomplete,
    is_strong,
    is_symmetric,
    is_transitive_oriented,
    is_weakly_quasi_transitive,
)
from dichordal.digraph import Digraph, complete_symmetric, in_nbrs, out_nbrs
from dichordal.errors import GenerationFailure, UsageError
from dichordal.fixtures import C4O
from dichordal.generators import (
    GENERATORS,
    GenConfig,
    count_digraphs,
    digraph_at,
    digraph_index,
    enumerate_digraphs,
    gen_extended_semicomplete,
    gen_locally_semicomplete,
    gen_qt,
    gen_semicomplete,
    gen_symmetric,
    gen_transitive_oriented,
    gen_wqt,
    round_digraph,
)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 64)])
def test_enumeration_counts(n, count):
    ds = list(enumerate_digraphs(n))
    assert len(ds) == count == count_digraphs(n)
    assert len(set(ds)) == count


def test_enumeration_n4_is_complete_and_indexed():
    ds = list(enumerate_digraphs(4))
    assert len(set(ds)) == 4096
    for i in (0, 1, 17, 4095):
        assert digraph_at(4, i) == ds[i]
        assert digraph_index(ds[i]) == i
    assert list(enumerate_digraphs(4, 100, 110)) == ds[100:110]


@pytest.mark.parametrize("n", [0, 6, -1])
def test_enumeration_range(n):
    with pytest.raises(UsageError):
        list(enumerate_digraphs(n))


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_determinism(name):
    gen = GENERATORS[name]
    for seed in range(20):
        cfg = GenConfig(n=6, seed=seed)
        assert gen(cfg) == gen(cfg)
    assert len({gen(GenConfig(n=6, seed=s)) for s in range(20)}) > 1


def test_streams_differ():
    a = gen_wqt(GenConfig(n=10, seed=1, stream=0))
    b = gen_wqt(GenConfig(n=10, seed=1, stream=1))
    assert a != b


def test_semicomplete_examples_and_coverage():
    assert gen_semicomplete(GenConfig(n=1)) == Digraph(1)
    seen = set()
    for i in range(10_000):
        d = gen_semicomplete(GenConfig(n=3, seed=i))
        assert is_semicomplete(d)
        seen.add(d)
    assert len(seen) == 27
    for i in range(10_000):
        assert is_semicomplete(gen_semicomplete(GenConfig(n=6, seed=i)))


def test_symmetric_and_transitive_oriented_edge_cases():
    assert gen_symmetric(GenConfig(n=5, p=0.0)) == Digraph(5)
    assert gen_transitive_oriented(GenConfig(n=5, p=0.0)) == Digraph(5)
    assert gen_symmetric(GenConfig(n=5, p=1.0)) == complete_symmetric(5)
    for seed in range(20):
        t = gen_transitive_oriented(GenConfig(n=6, p=1.0, seed=seed))
        assert is_transitive_oriented(t) and is_semicomplete(t)


def test_symmetric_and_transitive_oriented_soundness():
    for i in range(10_000):
        assert is_symmetric(gen_symmetric(GenConfig(n=8, seed=i)))
        t = gen_transitive_oriented(GenConfig(n=8, seed=i))
        assert is_transitive_oriented(t)
        assert all(is_di_simplicial(t, v) for v in range(t.n))


def test_wqt_soundness_and_strictness():
    non_qt = non_sym = 0
    for i in range(10_000):
        d = gen_wqt(GenConfig(n=1 + i % 30, seed=i))
        assert d.n == 1 + i % 30
        assert is_weakly_quasi_transitive(d)
        non_qt += not is_quasi_transitive(d)
        non_sym += not is_symmetric(d)
    assert non_qt > 0 and non_sym > 0
    assert any(not is_quasi_transitive(d) and not is_symmetric(d)
               for d in (gen_wqt(GenConfig(n=8, seed=s)) for s in range(200)))


def test_wqt_depth_zero_is_base_class():
    for seed in range(200):
        d = gen_wqt(GenConfig(n=7, seed=seed, depth=0))
        assert is_transitive_oriented(d) or is_semicomplete(d) or is_symmetric(d)


def test_qt_soundness():
    for i in range(10_000):
        d = gen_qt(GenConfig(n=1 + i % 20, seed=i))
        assert d.n == 1 + i % 20
        assert is_quasi_transitive(d) and is_weakly_quasi_transitive(d)
    for seed in range(200):
        d = gen_qt(GenConfig(n=6, seed=seed, depth=0))
        assert is_transitive_oriented(d) or is_semicomplete(d)


def test_extended_semicomplete_soundness():
    for i in range(2000):
        d = gen_extended_semicomplete(GenConfig(n=1 + i % 10, seed=i))
        assert is_extended_semicomplete(d) and is_weakly_quasi_transitive(d)


def test_round_examples():
    for n in range(2, 8):
        cyc = round_digraph([1] * n)
        assert cyc == Digraph(n, [(i, (i + 1) % n) for i in range(n)])
        assert round_digraph([n - 1] * n) == complete_symmetric(n)
        assert is_semicomplete(round_digraph([n - 1] * n))
    assert round_digraph([1, 1, 1, 1]) == C4O
    d = gen_locally_semicomplete(GenConfig(n=6, lengths=(1,) * 6, seed=3))
    assert is_strong(d) and all(len(out_nbrs(d, v)) == len(in_nbrs(d, v)) == 1 for v in range(6))


def test_round_soundness():
    for i in range(10_000):
        assert is_locally_semicomplete(gen_locally_semicomplete(GenConfig(n=10, seed=i)))


def test_rejection_strategy():
    for i in range(300):
        d = gen_locally_semicomplete(GenConfig(n=1 + i % 6, seed=i, strategy="rejection"))
        assert is_locally_semicomplete(d)
    with pytest.raises(UsageError):
        gen_locally_semicomplete(GenConfig(n=7, strategy="rejection"))


def test_generation_failures():
    with pytest.raises(GenerationFailure):
        gen_locally_semicomplete(GenConfig(n=4, lengths=(3, 1, 1, 1)))
    with pytest.raises(UsageError):
        gen_locally_semicomplete(GenConfig(n=4, lengths=(1, 1)))
    with pytest.raises(UsageError):
        gen_locally_semicomplete(GenConfig(n=4, strategy="bogus"))
    with pytest.raises(GenerationFailure):
        gen_locally_semicomplete(GenConfig(n=4, strategy="rejection", max_attempts=0))
    with pytest.raises(UsageError):
        gen_wqt(GenConfig(n=0))


def test_wqt_base_covers_all_semicomplete_n3():
    targets = {
        d for codes in product(range(4), repeat=3)
        for d in [Digraph.from_relations(3, codes)]
        if is_semicomplete(d)
    }
    seen = {gen_wqt(GenConfig(n=3, seed=s, depth=0)) for s in range(5000)}
    assert targets <= seen
