"""Triangle and book statistics, plus the classical pointwise bounds."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Optional, Tuple

from . import _kernels
from .graph import Graph


@dataclass(frozen=True)
class BookProfile:
    per_edge: Dict[Tuple[int, int], int]
    book_number: int
    triangle_count: int
    degree_square_sum: int


def triangle_count(g: Graph) -> int:
    return _kernels.triangle_count(g.masks)


def triangle_count_bruteforce(g: Graph) -> int:
    """O(n^3) triple scan; the reference the fast path is tested against."""
    adj = g.adj
    return sum(
        1 for a, b, c in combinations(range(g.n), 3) if b in adj[a] and c in adj[a] and c in adj[b]
    )


def book_number(g: Graph) -> int:
    return _kernels.max_edge_codegree(g.masks)


def degree_square_sum(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def book_profile(g: Graph) -> BookProfile:
    masks = g.masks
    per_edge = {(u, v): (masks[u] & masks[v]).bit_count() for u, v in g.edges()}
    return BookProfile(
        per_edge=per_edge,
        book_number=max(per_edge.values(), default=0),
        triangle_count=triangle_count(g),
        degree_square_sum=degree_square_sum(g),
    )


def bn_inequality_check(g: Graph) -> Tuple[int, int, bool]:
    """Both sides of (6b - n) t >= b (sum d^2 - n m), and whether it holds."""
    b = book_number(g)
    t = triangle_count(g)
    lhs = (6 * b - g.n) * t
    rhs = b * (degree_square_sum(g) - g.n * g.m)
    return lhs, rhs, lhs >= rhs


def above_mantel(g: Graph) -> bool:
    return g.m >= g.n * g.n // 4 + 1


def rademacher_check(g: Graph) -> Optional[bool]:
    """t >= floor(n/2); ``None`` when m <= floor(n^2/4) (not applicable)."""
    if not above_mantel(g):
        return None
    return triangle_count(g) >= g.n // 2


def edwards_check(g: Graph) -> Optional[bool]:
    """6 b >= n; ``None`` when m <= floor(n^2/4) (not applicable)."""
    if not above_mantel(g):
        return None
    return 6 * book_number(g) >= g.n


def stats(g: Graph) -> dict:
    lhs, rhs, _ = bn_inequality_check(g)
    return {
        "n": g.n,
        "m": g.m,
        "triangles": triangle_count(g),
        "book_number": book_number(g),
        "degree_square_sum": degree_square_sum(g),
        "bn_lhs": lhs,
        "bn_rhs": rhs,
    }
