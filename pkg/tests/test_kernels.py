from __future__ import annotations

import random

import numpy as np
import pytest

from bookgraph import _kernels
from bookgraph._kernels import _pykernels
from bookgraph.graph import Graph
from bookgraph.search import SearchParams, count_classes, level_minimums

from conftest import random_corpus

needs_ext = pytest.mark.skipif("cython" not in _kernels.AVAILABLE, reason="compiled kernels not built")


@pytest.fixture
def python_backend():
    old = _kernels.get_backend()
    _kernels.set_backend("python")
    yield
    _kernels.set_backend(old)


def test_set_backend_validation():
    with pytest.raises(ValueError):
        _kernels.set_backend("fortran")
    assert _kernels.get_backend() in _kernels.AVAILABLE


@needs_ext
def test_backends_agree_on_random_graphs():
    from bookgraph._kernels import _ckernels

    rng = np.random.default_rng(61)
    for g in random_corpus(62, 600, 14, probs=(0.15, 0.4, 0.6, 0.85)):
        masks = g.masks
        assert _ckernels.triangle_count(masks) == _pykernels.triangle_count(masks)
        assert _ckernels.max_edge_codegree(masks) == _pykernels.max_edge_codegree(masks)
        assert list(_ckernels.pivot_cut_sizes(masks)) == list(_pykernels.pivot_cut_sizes(masks))
        co, cc = _ckernels.canonical_label(masks)
        po, pc = _pykernels.canonical_label(masks)
        assert list(co) == list(po) and tuple(cc) == tuple(pc)
        if g.n >= 2:
            w = g.n // 2
            assert tuple(_ckernels.delete_vertex(masks, w)) == tuple(_pykernels.delete_vertex(masks, w))
        randoms = rng.integers(0, 2**64, size=400, dtype=np.uint64)
        for cap in (-1, 1, 3):
            assert _ckernels.descend(masks, cap, randoms) == _pykernels.descend(masks, cap, randoms)


@needs_ext
def test_backends_agree_on_expand():
    from bookgraph._kernels import _ckernels

    n = 7
    req = level_minimums(n, 10)
    level = [(0,)]
    for k in range(1, n):
        nxt = []
        for node in level:
            for cap in (-1, 2):
                c = [tuple(x) for x in _ckernels.expand(node, cap, req[k + 1])]
                p = [tuple(x) for x in _pykernels.expand(node, cap, req[k + 1])]
                assert c == p
            nxt.extend(_pykernels.expand(node, -1, req[k + 1]))
        level = nxt


@needs_ext
def test_large_graphs_fall_back():
    g = random_corpus(63, 1, 70, probs=(0.3,), n_min=70)[0]
    assert _kernels.triangle_count(g.masks) == _pykernels.triangle_count(g.masks)


def test_python_backend_enumerates(python_backend):
    counts = [count_classes(SearchParams(n=n, edge_threshold_mode="any", exclude_balanced_bipartite=False))
              for n in range(1, 7)]
    assert counts == [1, 2, 4, 11, 34, 156]


def test_python_descend_keeps_edge_count(python_backend):
    rng = random.Random(64)
    g = Graph.from_edges(9, [(u, v) for u in range(9) for v in range(u + 1, 9) if rng.random() < 0.6])
    randoms = np.random.default_rng(1).integers(0, 2**64, size=2000, dtype=np.uint64)
    t, best, _ = _kernels.descend(g.masks, 2, randoms)
    if best is not None:
        h = Graph.from_masks(best)
        assert h.m == g.m
        assert _pykernels.triangle_count(best) == t
        assert _pykernels.max_edge_codegree(best) <= 2
