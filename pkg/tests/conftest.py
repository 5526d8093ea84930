from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Dict, List, Tuple

import pytest
from hypothesis import settings

from bookgraph.graph import Graph

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_corpus(seed: int, count: int, n_max: int, probs=(0.2, 0.5, 0.8), n_min: int = 1) -> List[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(n_min, n_max), probs[i % len(probs)]) for i in range(count)]


def to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def labeled_classes(n: int) -> List[Graph]:
    """One representative per isomorphism class, by orbit marking over all
    labeled graphs.  Independent of the package's canonical labeling."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    seen = bytearray(1 << len(pairs))
    reps = []
    for code in range(1 << len(pairs)):
        if seen[code]:
            continue
        bits = [i for i in range(len(pairs)) if (code >> i) & 1]
        for pm in perm_maps:
            img = 0
            for i in bits:
                img |= 1 << pm[i]
            seen[img] = 1
        reps.append(Graph.from_edges(n, [pairs[i] for i in bits]))
    return reps


_CLASS_CACHE: Dict[int, List[Graph]] = {}


@pytest.fixture(scope="session")
def classes_upto6() -> Dict[int, List[Graph]]:
    if not _CLASS_CACHE:
        for n in range(1, 7):
            _CLASS_CACHE[n] = labeled_classes(n)
    return _CLASS_CACHE


def part_sets(spec) -> Tuple[frozenset, ...]:
    return tuple(frozenset(r) for r in spec.parts())
