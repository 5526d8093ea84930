"""Blow-ups of the 3-prism and related extremal constructions.

Parts are laid out contiguously in the order U1, U2, U3, V1, V2, V3, so the
same parameters always produce the same labeled graph (and graph6 string).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .graph import Graph, GraphBuilder, GraphInputError

PART_NAMES = ("U1", "U2", "U3", "V1", "V2", "V3")


@dataclass(frozen=True)
class PrismSpec:
    """Part sizes (|U1|, |U2|, |U3|, |V1|, |V2|, |V3|)."""

    part_sizes: Tuple[int, int, int, int, int, int]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.part_sizes)
        if len(sizes) != 6 or any(s < 0 for s in sizes):
            raise GraphInputError(f"need six nonnegative part sizes, got {self.part_sizes}")
        object.__setattr__(self, "part_sizes", sizes)

    @property
    def n(self) -> int:
        return sum(self.part_sizes)

    def parts(self) -> List[range]:
        out, start = [], 0
        for s in self.part_sizes:
            out.append(range(start, start + s))
            start += s
        return out

    def expected_edges(self) -> int:
        u1, u2, u3, v1, v2, v3 = self.part_sizes
        return u1 * u2 + u1 * u3 + u2 * u3 + v1 * v2 + v1 * v3 + v2 * v3 + u1 * v1 + u2 * v2 + u3 * v3

    def expected_triangles(self) -> int:
        u1, u2, u3, v1, v2, v3 = self.part_sizes
        return u1 * u2 * u3 + v1 * v2 * v3


# prism edges between part indices
_PRISM_EDGES = ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5))


def _prism_builder(spec: PrismSpec) -> GraphBuilder:
    parts = spec.parts()
    gb = GraphBuilder(spec.n)
    for i, j in _PRISM_EDGES:
        gb.join(parts[i], parts[j])
    return gb


def prism_blowup(spec: PrismSpec) -> Graph:
    return _prism_builder(spec).freeze()


def balanced_bipartite(n: int) -> Graph:
    if n < 0:
        raise GraphInputError("n must be nonnegative")
    return Graph.complete_bipartite(n // 2, n - n // 2)


def s_graph_spec(b: int, n: int) -> PrismSpec:
    if b < 0 or 4 * b > n:
        raise GraphInputError(f"S_(b,n) needs 0 <= 4b <= n, got b={b}, n={n}")
    r = n - 4 * b
    return PrismSpec((b, b, r // 2, b, b, r - r // 2))


def s_graph(b: int, n: int) -> Graph:
    return prism_blowup(s_graph_spec(b, n))


def s_graph_book_number(b: int, n: int) -> int:
    """True book number of S_(b,n).

    Equals max(b, ceil((n-4b)/2)) whenever the graph has a triangle; the
    degenerate cases b = 0 and 4b = n are bipartite and have book number 0.
    """
    s_graph_spec(b, n)
    if b == 0 or 4 * b == n:
        return 0
    return max(b, -(-(n - 4 * b) // 2))


def in_conjecture_range(b: int, n: int) -> bool:
    """n/6 <= b < n/4."""
    return 6 * b >= n and 4 * b < n


class UpperConstruction(NamedTuple):
    graph: Graph
    expected_triangles: int
    spec: PrismSpec
    deleted_edges: Tuple[Tuple[int, int], ...]
    metadata: dict


def mubayi_upper(b: int, n: int) -> UpperConstruction:
    """Graph with floor(n^2/4)+1 edges, book number <= b+1 and few triangles.

    Starts from S_(b,n), moves one vertex from each V_i to U_i, then deletes
    two U1-U3 edges sharing their U1 endpoint (n even) or one U1-U3 edge
    (n odd); each deleted edge lies in exactly b+1 triangles.
    """
    if not (b >= 1 and in_conjecture_range(b, n)):
        raise GraphInputError(f"need n/6 <= b < n/4 and b >= 1, got b={b}, n={n}")
    base = s_graph_spec(b, n)
    u1, u2, u3, v1, v2, v3 = base.part_sizes
    if v3 < 1:
        raise GraphInputError("V3 is empty; cannot move a vertex out of it")
    spec = PrismSpec((u1 + 1, u2 + 1, u3 + 1, v1 - 1, v2 - 1, v3 - 1))
    gb = _prism_builder(spec)
    parts = spec.parts()
    a = parts[0][0]
    if n % 2 == 0:
        deleted = ((a, parts[2][0]), (a, parts[2][1]))
        expected = b * b * (n - 4 * b) + n - 2 * (b + 1)
    else:
        deleted = ((a, parts[2][0]),)
        expected = b * b * (n - 4 * b) + n - 2 * b - (b + 1)
    for u, v in deleted:
        gb.remove_edge(u, v)
    meta = {
        "base_parts": list(base.part_sizes),
        "parts": list(spec.part_sizes),
        "deleted_edges": [list(e) for e in deleted],
        "deletion_rule": "U1-U3 edges sharing the lowest U1 vertex" if n % 2 == 0 else "lowest U1-U3 edge",
        "removed_vertex_rule": "highest-labeled vertex of each V_i (all choices are isomorphic)",
    }
    return UpperConstruction(gb.freeze(), expected, spec, deleted, meta)


def prism_spec_from_string(text: str) -> PrismSpec:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 6:
        raise GraphInputError(f"expected six comma-separated sizes, got {text!r}")
    return PrismSpec(tuple(int(p) for p in parts))


def part_labels(spec: PrismSpec) -> List[str]:
    labels: List[str] = []
    for name, size in zip(PART_NAMES, spec.part_sizes):
        labels.extend([name] * size)
    return labels


def named_parts(spec: PrismSpec) -> dict:
    return {name: list(r) for name, r in zip(PART_NAMES, spec.parts())}
