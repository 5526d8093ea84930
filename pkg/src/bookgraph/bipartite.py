"""Vertex-neighborhood cuts and induced bipartite extraction.

All bound comparisons use :class:`fractions.Fraction`; nothing here is
approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from . import _kernels
from .census import book_number, triangle_count
from .graph import Graph, GraphInputError, _bits, edges_inside, mask_of


@dataclass(frozen=True)
class CutResult:
    pivot: int
    side_N: FrozenSet[int]
    side_rest: FrozenSet[int]
    deleted_edges: int
    bound: Fraction

    @property
    def within_bound(self) -> bool:
        return self.deleted_edges <= self.bound

    def to_json(self) -> dict:
        return {
            "pivot": self.pivot,
            "side_N": sorted(self.side_N),
            "side_rest": sorted(self.side_rest),
            "deleted_edges": self.deleted_edges,
            "bound": str(self.bound),
            "within_bound": self.within_bound,
        }


@dataclass(frozen=True)
class ExtractionResult:
    A0: FrozenSet[int]
    B0: FrozenSet[int]
    A: FrozenSet[int]
    B: FrozenSet[int]
    removed: FrozenSet[int]
    c: Fraction
    b_cap: int
    guarantee_applies: bool
    removal_bound: Fraction
    greedy_pruned: Tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "A0": sorted(self.A0),
            "B0": sorted(self.B0),
            "A": sorted(self.A),
            "B": sorted(self.B),
            "removed": sorted(self.removed),
            "c": str(self.c),
            "b_cap": self.b_cap,
            "guarantee_applies": self.guarantee_applies,
            "removal_bound": str(self.removal_bound),
            "greedy_pruned": list(self.greedy_pruned),
        }


def cut_bound(n: int, m: int, t: int) -> Fraction:
    """m - 4m^2/n^2 + 6t/n."""
    return Fraction(m) - Fraction(4 * m * m, n * n) + Fraction(6 * t, n)


def lemma1_cut(g: Graph) -> CutResult:
    """Best neighborhood bipartition N(x) | V - N(x) over all pivots x.

    Ties go to the smallest pivot.  The averaging argument over pivots
    guarantees the minimum is within :func:`cut_bound`.
    """
    if g.n == 0:
        raise GraphInputError("lemma1_cut needs at least one vertex")
    sizes = _kernels.pivot_cut_sizes(g.masks)
    best = min(range(g.n), key=lambda x: (sizes[x], x))
    side_n = g.adj[best]
    rest = frozenset(range(g.n)) - side_n
    return CutResult(best, side_n, rest, sizes[best], cut_bound(g.n, g.m, triangle_count(g)))


def is_bipartite(g: Graph, vertices: Optional[FrozenSet[int]] = None) -> bool:
    """2-coloring check of the subgraph induced on ``vertices`` (default all)."""
    keep = mask_of(range(g.n)) if vertices is None else mask_of(vertices)
    color = {}
    for s in _bits(keep):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in _bits(g.masks[u] & keep):
                if v not in color:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _greedy_independent(g: Graph, side: FrozenSet[int]) -> Tuple[FrozenSet[int], List[int]]:
    """Drop vertices of largest internal degree (ties: smallest label) until
    independent, then re-add dropped vertices that fit, in label order."""
    cur = mask_of(side)
    dropped = []
    while True:
        worst, wdeg = -1, 0
        for v in _bits(cur):
            d = (g.masks[v] & cur).bit_count()
            if d > wdeg:
                worst, wdeg = v, d
        if worst < 0:
            break
        cur &= ~(1 << worst)
        dropped.append(worst)
    pruned = []
    for v in sorted(dropped):
        if not g.masks[v] & cur:
            cur |= 1 << v
        else:
            pruned.append(v)
    return frozenset(_bits(cur)), pruned


def lemma2_extract(g: Graph, c: Fraction, b_cap: int) -> ExtractionResult:
    """Filter a neighborhood cut down to two independent sets.

    A keeps the vertices of A0 with more than (b_cap + |B0|)/2 neighbors in
    B0, and symmetrically for B.  ``guarantee_applies`` records whether
    m >= n^2/4, t <= c^2 n^3/24 and b(G) <= b_cap <= (1/2 - c) n all hold,
    in which case at most 48t/(c n^2) vertices are removed.
    """
    c = Fraction(c)
    if not 0 < c < Fraction(1, 2):
        raise GraphInputError(f"c must satisfy 0 < c < 1/2, got {c}")
    if b_cap < 0:
        raise GraphInputError("b_cap must be nonnegative")
    n = g.n
    cut = lemma1_cut(g)
    a0, b0 = cut.side_N, cut.side_rest
    ma0, mb0 = mask_of(a0), mask_of(b0)
    # 2 d > b_cap + |side| avoids halves
    a = frozenset(v for v in a0 if 2 * (g.masks[v] & mb0).bit_count() > b_cap + len(b0))
    b = frozenset(v for v in b0 if 2 * (g.masks[v] & ma0).bit_count() > b_cap + len(a0))
    pruned: List[int] = []
    if edges_inside(g, a):
        a, p = _greedy_independent(g, a)
        pruned += p
    if edges_inside(g, b):
        b, p = _greedy_independent(g, b)
        pruned += p
    t = triangle_count(g)
    bg = book_number(g)
    applies = (
        4 * g.m >= n * n
        and Fraction(t) <= c * c * n ** 3 / 24
        and bg <= b_cap
        and b_cap <= (Fraction(1, 2) - c) * n
    )
    return ExtractionResult(
        A0=a0,
        B0=b0,
        A=a,
        B=b,
        removed=frozenset(range(n)) - a - b,
        c=c,
        b_cap=b_cap,
        guarantee_applies=applies,
        removal_bound=Fraction(48 * t) / (c * n * n) if n else Fraction(0),
        greedy_pruned=tuple(sorted(pruned)),
    )


def max_induced_bipartite(g: Graph, limit: int = 16) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Exact largest induced bipartite subgraph by branch and bound.

    Returns sides ``(A, B)`` with ``|A| >= |B|``; the first optimum in the
    search order (vertex i goes to A, then B, then is dropped) wins.
    """
    n = g.n
    if n > limit:
        raise GraphInputError(f"exact search limited to n <= {limit}, got {n}")
    masks = g.masks
    best = [-1, 0, 0]

    def go(i: int, a: int, b: int, size: int) -> None:
        if size + (n - i) <= best[0]:
            return
        if i == n:
            best[:] = [size, a, b]
            return
        bit = 1 << i
        if not masks[i] & a:
            go(i + 1, a | bit, b, size + 1)
        # the first kept vertex may go to A without loss of generality
        if a and not masks[i] & b:
            go(i + 1, a, b | bit, size + 1)
        go(i + 1, a, b, size)

    go(0, 0, 0, 0)
    a, b = frozenset(_bits(best[1])), frozenset(_bits(best[2]))
    if len(b) > len(a):
        a, b = b, a
    return a, b
