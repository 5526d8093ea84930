"""Canonical labeling and isomorphism testing."""

from __future__ import annotations

from typing import List, Tuple

from . import _kernels
from .formats import to_graph6
from .graph import Graph


def canonical_labeling(g: Graph) -> List[int]:
    """``order[i]`` is the vertex of ``g`` placed at canonical position ``i``."""
    order, _ = _kernels.canonical_label(g.masks)
    return order


def certificate(g: Graph) -> Tuple[int, ...]:
    """Adjacency masks of the canonical relabeling; equal iff isomorphic."""
    _, cert = _kernels.canonical_label(g.masks)
    return cert


def canonical_form(g: Graph) -> Graph:
    return Graph.from_masks(certificate(g))


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)
