"""Seeded generator of inputs on which both surgeries are feasible."""

from __future__ import annotations

import random
from typing import Iterator, Tuple

from bookgraph.graph import Graph, GraphInputError
from bookgraph.surgery import SurgeryInfeasible, TriPartition, to_G1, to_G2


def random_instance(rng: random.Random) -> Tuple[Graph, TriPartition, int]:
    b = rng.randint(1, 3)
    sa, sb, sc = rng.randint(b, b + 5), rng.randint(b, b + 5), rng.randint(1, 7)
    n = sa + sb + sc
    labels = list(range(n))
    rng.shuffle(labels)
    a = labels[:sa]
    bb = labels[sa : sa + sb]
    c = labels[sa + sb :]
    q = rng.uniform(0.5, 1.0)
    edges = [(x, y) for x in a for y in bb if rng.random() < q]
    for v in c:
        for side in (a, bb):
            k = rng.randint(0, min(b + 1, len(side)))
            edges += [(v, u) for u in rng.sample(side, k)]
    r = rng.uniform(0.4, 1.0)
    edges += [(c[i], c[j]) for i in range(sc) for j in range(i + 1, sc) if rng.random() < r]
    return Graph.from_edges(n, edges), TriPartition(a, bb, c), b


def feasible_instances(seed: int, count: int) -> Iterator[Tuple[Graph, TriPartition, int]]:
    rng = random.Random(seed)
    found = 0
    while found < count:
        g, p, b = random_instance(rng)
        try:
            g1, _ = to_G1(g, p, b)
            to_G2(g1, p, b)
        except (SurgeryInfeasible, GraphInputError):
            continue
        found += 1
        yield g, p, b


def quarter_instances(seed: int, count: int) -> Iterator[Tuple[Graph, TriPartition, int]]:
    """Inputs with |A| = |B| = 2b, |C| = n - 4b and at least n^2/4 edges."""
    rng = random.Random(seed)
    found = 0
    while found < count:
        b = rng.randint(1, 3)
        r = rng.randint(2, 24 - 4 * b)
        n = 4 * b + r
        labels = list(range(n))
        rng.shuffle(labels)
        a, bb, c = labels[: 2 * b], labels[2 * b : 4 * b], labels[4 * b :]
        edges = [(x, y) for x in a for y in bb]
        for v in c:
            for side in (a, bb):
                edges += [(v, u) for u in rng.sample(side, rng.randint(0, b))]
        deficit = 2 * b * r - (len(edges) - 4 * b * b)
        need = -(-(n * n) // 4) - len(edges)
        pairs = [(c[i], c[j]) for i in range(r) for j in range(i + 1, r)]
        lo = max(need, deficit, 0)
        if lo > len(pairs):
            continue
        edges += rng.sample(pairs, rng.randint(lo, len(pairs)))
        found += 1
        yield Graph.from_edges(n, edges), TriPartition(a, bb, c), b
