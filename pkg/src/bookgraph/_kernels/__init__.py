"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled module (``_ckernels``, built from Cython) is used when it imports
and the graph fits in 64-bit masks; otherwise calls route to ``_pykernels``.
Set ``BOOKGRAPH_KERNELS=python`` to force the fallback, or call
:func:`set_backend` at runtime.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

AVAILABLE = ("cython", "python") if _ckernels is not None else ("python",)

_backend = "python"


def set_backend(name: str) -> None:
    global _backend
    if name not in ("cython", "python"):
        raise ValueError(f"unknown kernel backend {name!r}")
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not built")
    _backend = name


def get_backend() -> str:
    return _backend


if _ckernels is not None and os.environ.get("BOOKGRAPH_KERNELS", "").lower() != "python":
    _backend = "cython"


def _impl(n: int):
    if _backend == "cython" and n <= 64:
        return _ckernels
    return _pykernels


def triangle_count(masks) -> int:
    return _impl(len(masks)).triangle_count(masks)


def max_edge_codegree(masks) -> int:
    return _impl(len(masks)).max_edge_codegree(masks)


def pivot_cut_sizes(masks) -> list:
    return _impl(len(masks)).pivot_cut_sizes(masks)


def canonical_label(masks):
    return _impl(len(masks)).canonical_label(masks)


def delete_vertex(masks, w: int):
    return _impl(len(masks)).delete_vertex(masks, w)


def expand(parent, b_cap: int, min_child_edges: int):
    return _impl(len(parent) + 2).expand(parent, b_cap, min_child_edges)


def descend(masks, b_cap: int, randoms):
    return _impl(len(masks)).descend(masks, b_cap, randoms)
