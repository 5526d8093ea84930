"""Simple undirected graphs on vertices ``0..n-1``.

:class:`Graph` is immutable and hashable; it keeps both adjacency sets and
adjacency bitmasks, the latter feeding the kernels.  Mutation goes through
:class:`GraphBuilder`.
"""

from __future__ import annotations

from itertools import combinations
from typing import AbstractSet, Iterable, Iterator, List, Sequence, Tuple


class GraphInputError(ValueError):
    """Invalid vertex, vertex set or adjacency data."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    ``Graph(n, adj)`` takes ``n`` adjacency rows; rows must be symmetric and
    loop-free.  Two graphs compare equal iff they have the same labeled edge
    set.
    """

    __slots__ = ("n", "_masks", "_adj", "_m")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise GraphInputError(f"expected {n} adjacency rows, got {len(adj)}")
        masks = []
        for u, row in enumerate(adj):
            m = 0
            for v in row:
                if not 0 <= v < n:
                    raise GraphInputError(f"neighbor {v} of {u} out of range")
                m |= 1 << v
            masks.append(m)
        self._init(n, tuple(masks))

    def _init(self, n: int, masks: Tuple[int, ...]) -> None:
        for u, m in enumerate(masks):
            if (m >> u) & 1:
                raise GraphInputError(f"loop at vertex {u}")
            if m >> n:
                raise GraphInputError(f"row {u} mentions vertices beyond {n - 1}")
            for v in _bits(m):
                if not (masks[v] >> u) & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self._masks = masks
        self._adj = None
        self._m = sum(m.bit_count() for m in masks) // 2

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g._init(len(masks), tuple(int(m) for m in masks))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls.from_masks(masks)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_masks([0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls.from_masks([full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])

    @property
    def masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def adj(self) -> Tuple[frozenset, ...]:
        if self._adj is None:
            self._adj = tuple(frozenset(_bits(m)) for m in self._masks)
        return self._adj

    @property
    def m(self) -> int:
        return self._m

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._masks[v].bit_count()

    def degrees(self) -> List[int]:
        return [m.bit_count() for m in self._masks]

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._masks[u] >> v) & 1)

    def codegree(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphInputError("codegree needs two distinct vertices")
        return (self._masks[u] & self._masks[v]).bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u, m in enumerate(self._masks):
            out.extend((u, v) for v in _bits(m >> (u + 1) << (u + 1)))
        return out

    def degree_into(self, v: int, vertices: AbstractSet[int]) -> int:
        return (self._masks[v] & mask_of(vertices)).bit_count()

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("relabel needs a permutation of 0..n-1")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        idx = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(idx[u], idx[v]) for u, v in combinations(vertices, 2) if self.has_edge(u, v)],
        )

    def builder(self) -> "GraphBuilder":
        return GraphBuilder(self.n, self._masks)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class GraphBuilder:
    """Mutable companion of :class:`Graph` for constructions and surgery."""

    def __init__(self, n: int, masks: Sequence[int] = ()):
        self.n = n
        self.masks = list(masks) if masks else [0] * n
        if len(self.masks) != n:
            raise GraphInputError("mask count does not match n")

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphInputError(f"edge ({u}, {v}) out of range")
        self.masks[u] |= 1 << v
        self.masks[v] |= 1 << u

    def remove_edge(self, u: int, v: int) -> None:
        if not (self.masks[u] >> v) & 1:
            raise GraphInputError(f"no edge ({u}, {v}) to remove")
        self.masks[u] &= ~(1 << v)
        self.masks[v] &= ~(1 << u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def join(self, xs: Iterable[int], ys: Iterable[int]) -> None:
        ys = list(ys)
        for x in xs:
            for y in ys:
                self.add_edge(x, y)

    def freeze(self) -> Graph:
        return Graph.from_masks(self.masks)


# -- notation-level helpers ---------------------------------------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def codegree(g: Graph, u: int, v: int) -> int:
    return g.codegree(u, v)


def _vertex_mask(g: Graph, xs: Iterable[int]) -> int:
    m = 0
    for v in xs:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} out of range 0..{g.n - 1}")
        m |= 1 << v
    return m


def edges_inside(g: Graph, xs: Iterable[int]) -> int:
    """e(X)."""
    x = _vertex_mask(g, xs)
    return sum((g.masks[u] & x).bit_count() for u in _bits(x)) // 2


def cross_edges(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> int:
    """e(X, Y) for disjoint X and Y."""
    x = _vertex_mask(g, xs)
    y = _vertex_mask(g, ys)
    if x & y:
        raise GraphInputError("cross_edges requires disjoint vertex sets")
    return sum((g.masks[u] & y).bit_count() for u in _bits(x))
