"""Isomorph-free enumeration, exhaustive/randomized verification, certificates.

Enumeration is canonical augmentation by vertex addition: every node of the
search tree is a canonically labeled graph, and a child (parent plus a new
vertex) is kept only if deleting its canonical minimum-degree vertex gives back
the parent.  Two filters prune whole subtrees:

* book cap: codegrees never drop when vertices are added, and the canonical
  parent is an induced subgraph, so a node above the cap has no good leaves;
* edge budget: the canonical parent loses a minimum-degree vertex, at most
  ``floor(2m/k)`` edges, so each level has a computable minimum edge count.

The tree is cut at a fixed split level; subtrees below it are independent and
are farmed out to worker processes.  Output order depends only on the
parameters, never on the worker count.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .canon import certificate as canonical_certificate
from .census import book_number, edwards_check, rademacher_check, triangle_count
from .constructions import balanced_bipartite, in_conjecture_range, s_graph
from .formats import decode_graph6, to_graph6
from .graph import Graph, GraphInputError

SCHEMA = "bookgraph.certificate/1"
THRESHOLD_MODES = ("floor_quarter", "strict_quarter", "floor_quarter_plus_one", "any")
EXHAUSTIVE_LIMIT = 10
SUITE_LIMIT = 8


class SearchRefused(RuntimeError):
    """Exhaustive search beyond the guard rail without an override."""


def edge_threshold(n: int, mode: str) -> int:
    if mode == "floor_quarter":
        return n * n // 4
    if mode == "strict_quarter":
        return (n * n + 3) // 4
    if mode == "floor_quarter_plus_one":
        return n * n // 4 + 1
    if mode == "any":
        return 0
    raise GraphInputError(f"unknown edge threshold mode {mode!r}")


def level_minimums(n: int, threshold: int) -> List[int]:
    """``req[k]``: fewest edges a k-vertex tree node may have and still lead
    to a leaf with ``threshold`` edges."""
    req = [0] * (n + 1)
    req[n] = max(threshold, 0)
    for k in range(n - 1, 0, -1):
        nxt = req[k + 1]
        # removing a min-degree vertex of a (k+1)-vertex graph with m edges
        # leaves m - floor(2m/(k+1)), which is nondecreasing in m
        req[k] = max(0, nxt - (2 * nxt) // (k + 1))
    return req


def conjectured_bound(n: int, b: int) -> int:
    return b * b * (n - 4 * b)


@dataclass
class SearchParams:
    n: int
    b_cap: Optional[int] = None
    edge_threshold_mode: str = "floor_quarter"
    exclude_balanced_bipartite: bool = True
    mode: str = "exhaustive"
    stress_iterations: int = 0
    seed: int = 0
    allow_large: bool = False
    restart_every: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise GraphInputError("n must be at least 1")
        if self.b_cap is not None and self.b_cap < 0:
            raise GraphInputError("b_cap must be nonnegative")
        if self.edge_threshold_mode not in THRESHOLD_MODES:
            raise GraphInputError(f"unknown edge threshold mode {self.edge_threshold_mode!r}")
        if self.mode not in ("exhaustive", "stress"):
            raise GraphInputError(f"unknown mode {self.mode!r}")
        if self.stress_iterations < 0 or self.restart_every < 0:
            raise GraphInputError("iteration counts must be nonnegative")

    @property
    def threshold(self) -> int:
        return edge_threshold(self.n, self.edge_threshold_mode)

    def kernel_cap(self) -> int:
        return -1 if self.b_cap is None else self.b_cap


@dataclass
class Certificate:
    params: dict
    graphs_examined: int
    nodes_visited: int
    min_triangles_found: Optional[int]
    conjectured_bound: Optional[int]
    in_conjecture_range: bool
    extremal_witnesses: List[str]
    matches_conjecture: Optional[bool]
    unique_extremal_is_s_graph: Optional[bool]
    violation: bool
    suite_results: Dict[str, dict] = field(default_factory=dict)
    extra: Dict[str, object] = field(default_factory=dict)
    schema: str = SCHEMA

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, obj) -> "Certificate":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("schema") != SCHEMA:
            raise GraphInputError(f"unsupported certificate schema {obj.get('schema')!r}")
        return cls(**obj)


# ----------------------------------------------------------------------------
# enumeration


def _balanced_cert(n: int) -> Tuple[int, ...]:
    return canonical_certificate(balanced_bipartite(n))


def _dfs(node: Tuple[int, ...], n: int, cap: int, req: Sequence[int], counter: List[int]) -> Iterator[Tuple[int, ...]]:
    k = len(node)
    if k == n:
        yield node
        return
    for child in _kernels.expand(node, cap, req[k + 1]):
        counter[0] += 1
        yield from _dfs(child, n, cap, req, counter)


def _frontier(params: SearchParams, split: int) -> Tuple[List[Tuple[int, ...]], int]:
    n, cap = params.n, params.kernel_cap()
    req = level_minimums(n, params.threshold)
    level: List[Tuple[int, ...]] = [(0,)]
    visited = 1
    for k in range(1, split):
        nxt = []
        for node in level:
            nxt.extend(_kernels.expand(node, cap, req[k + 1]))
        visited += len(nxt)
        level = nxt
    return level, visited


def _split_level(n: int) -> int:
    # deep enough to yield many independent subtrees, shallow enough that
    # the serial prefix stays cheap
    return max(1, min(n, n - 3))


def _guard(params: SearchParams) -> None:
    if params.n > EXHAUSTIVE_LIMIT and not params.allow_large:
        n = params.n
        log10_classes = (n * (n - 1) / 2) * math.log10(2) - math.lgamma(n + 1) / math.log(10)
        raise SearchRefused(
            f"exhaustive search at n={n} exceeds the n <= {EXHAUSTIVE_LIMIT} guard rail "
            f"(about 10^{log10_classes:.1f} isomorphism classes before filtering); "
            "pass allow_large to override"
        )


def _leaf_ok(cert: Tuple[int, ...], params: SearchParams, balanced) -> bool:
    return not (params.exclude_balanced_bipartite and cert == balanced)


def _subtree_leaves(args) -> Tuple[List[Tuple[int, ...]], int]:
    node, n, cap, req, backend = args
    _kernels.set_backend(backend)
    counter = [0]
    leaves = list(_dfs(node, n, cap, req, counter))
    return leaves, counter[0]


def _subtree_summary(args) -> Tuple[int, Optional[int], List[Tuple[int, ...]], int]:
    """(leaves, min triangles, minimizers, nodes) for one subtree."""
    node, n, cap, req, backend, exclude = args
    _kernels.set_backend(backend)
    counter = [0]
    count, best, winners = 0, None, []
    for leaf in _dfs(node, n, cap, req, counter):
        if leaf == exclude:
            continue
        count += 1
        t = _kernels.triangle_count(leaf)
        if best is None or t < best:
            best, winners = t, [leaf]
        elif t == best:
            winners.append(leaf)
    return count, best, winners, counter[0]


def _run_subtrees(fn: Callable, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    chunk = max(1, len(jobs) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, jobs, chunksize=chunk))


def _prepare(params: SearchParams):
    _guard(params)
    n = params.n
    req = level_minimums(n, params.threshold)
    if req[n] > n * (n - 1) // 2:
        return None, req, 0
    split = _split_level(n)
    frontier, visited = _frontier(params, split)
    return frontier, req, visited


def enumerate_filtered(params: SearchParams, workers: int = 1, stats: Optional[dict] = None) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class with at
    least ``params.threshold`` edges and book number at most ``params.b_cap``.

    The balanced complete bipartite graph is dropped when
    ``params.exclude_balanced_bipartite`` is set.
    """
    frontier, req, visited = _prepare(params)
    if stats is not None:
        stats["nodes_visited"] = visited
    if frontier is None:
        return
    n, cap = params.n, params.kernel_cap()
    backend = _kernels.get_backend()
    balanced = _balanced_cert(n)
    results = _run_subtrees(_subtree_leaves, [(f, n, cap, req, backend) for f in frontier], workers)
    for leaves, nodes in results:
        if stats is not None:
            stats["nodes_visited"] += nodes
        for leaf in leaves:
            if _leaf_ok(leaf, params, balanced):
                yield Graph.from_masks(leaf)


def count_classes(params: SearchParams, workers: int = 1) -> int:
    return sum(1 for _ in enumerate_filtered(params, workers))


# ----------------------------------------------------------------------------
# verification


def _conjecture_fields(n: int, b_cap: Optional[int], min_t: Optional[int], witnesses: List[Graph]):
    in_range = b_cap is not None and in_conjecture_range(b_cap, n)
    bound = conjectured_bound(n, b_cap) if b_cap is not None and 4 * b_cap <= n else None
    if not in_range or min_t is None:
        return in_range, bound, None, None, False
    matches = min_t == bound
    unique = None
    if matches:
        target = canonical_certificate(s_graph(b_cap, n))
        unique = len(witnesses) == 1 and canonical_certificate(witnesses[0]) == target
    return in_range, bound, matches, unique, min_t < bound


def verify_conjecture(params: SearchParams, workers: int = 1) -> Certificate:
    """Minimum triangle count over all filtered classes, with every minimizer.

    A result below the conjectured bound is recorded as a violation, not
    raised.
    """
    if params.mode == "stress":
        return stress_search(params, workers)
    frontier, req, visited = _prepare(params)
    count, best, winners = 0, None, []
    if frontier is not None:
        n, cap = params.n, params.kernel_cap()
        exclude = _balanced_cert(n) if params.exclude_balanced_bipartite else None
        jobs = [(f, n, cap, req, _kernels.get_backend(), exclude) for f in frontier]
        for c, t, w, nodes in _run_subtrees(_subtree_summary, jobs, workers):
            count += c
            visited += nodes
            if t is None:
                continue
            if best is None or t < best:
                best, winners = t, list(w)
            elif t == best:
                winners.extend(w)
    graphs = [Graph.from_masks(w) for w in winners]
    in_range, bound, matches, unique, violation = _conjecture_fields(params.n, params.b_cap, best, graphs)
    return Certificate(
        params=asdict(params),
        graphs_examined=count,
        nodes_visited=visited,
        min_triangles_found=best,
        conjectured_bound=bound,
        in_conjecture_range=in_range,
        extremal_witnesses=sorted(to_graph6(g) for g in graphs),
        matches_conjecture=matches,
        unique_extremal_is_s_graph=unique,
        violation=violation,
    )


def recheck_certificate(cert: Certificate) -> List[str]:
    """Re-census every witness; returns a list of discrepancies (empty = ok)."""
    problems = []
    p = SearchParams(**cert.params)
    balanced = _balanced_cert(p.n)
    for w in cert.extremal_witnesses:
        g = decode_graph6(w)
        if g.n != p.n:
            problems.append(f"{w}: has {g.n} vertices, expected {p.n}")
            continue
        if g.m < p.threshold:
            problems.append(f"{w}: {g.m} edges below threshold {p.threshold}")
        if p.b_cap is not None and book_number(g) > p.b_cap:
            problems.append(f"{w}: book number {book_number(g)} above cap {p.b_cap}")
        if p.exclude_balanced_bipartite and canonical_certificate(g) == balanced:
            problems.append(f"{w}: is the excluded balanced bipartite graph")
        t = triangle_count(g)
        if t != cert.min_triangles_found:
            problems.append(f"{w}: {t} triangles, certificate says {cert.min_triangles_found}")
    if cert.min_triangles_found is not None and not cert.extremal_witnesses:
        problems.append("minimum recorded without a witness")
    graphs = [decode_graph6(w) for w in cert.extremal_witnesses]
    fields = _conjecture_fields(p.n, p.b_cap, cert.min_triangles_found, graphs)
    recorded = (
        cert.in_conjecture_range,
        cert.conjectured_bound,
        cert.matches_conjecture,
        cert.unique_extremal_is_s_graph,
        cert.violation,
    )
    if p.mode == "stress":
        # uniqueness is not claimed from a single stress witness
        fields = fields[:3] + (recorded[3],) + fields[4:]
    if tuple(fields) != recorded:
        problems.append(f"derived fields {fields} disagree with recorded {recorded}")
    return problems


def classical_suite(n_max: int, workers: int = 1, allow_large: bool = False) -> Dict[str, dict]:
    """Check the triangle (floor(n/2)) and book (n/6) lower bounds on every
    class with more than floor(n^2/4) edges, n = 1..n_max."""
    if n_max > SUITE_LIMIT and not allow_large:
        raise SearchRefused(f"classical suite limited to n_max <= {SUITE_LIMIT}; pass allow_large to override")
    out = {
        "rademacher": {"status": "pass", "witnesses": []},
        "edwards": {"status": "pass", "witnesses": []},
        "classes_per_n": {},
    }
    for n in range(1, n_max + 1):
        params = SearchParams(
            n=n,
            edge_threshold_mode="floor_quarter_plus_one",
            exclude_balanced_bipartite=False,
            allow_large=allow_large,
        )
        count = 0
        for g in enumerate_filtered(params, workers):
            count += 1
            for name, check in (("rademacher", rademacher_check), ("edwards", edwards_check)):
                if check(g) is False:
                    out[name]["status"] = "fail"
                    out[name]["witnesses"].append(to_graph6(g))
        out["classes_per_n"][str(n)] = count
    return out


# ----------------------------------------------------------------------------
# stress search


def _random_graph_masks(n: int, m: int, rng: np.random.Generator) -> List[int]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    pick = rng.choice(len(pairs), size=m, replace=False) if m else []
    masks = [0] * n
    for i in sorted(int(x) for x in pick):
        u, v = pairs[i]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _stress_restart(args) -> Tuple[int, Optional[Tuple[int, ...]], int]:
    n, m, cap, seed, index, iters, backend = args
    _kernels.set_backend(backend)
    rng = np.random.default_rng([seed, index])
    masks = _random_graph_masks(n, m, rng)
    randoms = rng.integers(0, 2**64, size=2 * iters, dtype=np.uint64)
    return _kernels.descend(masks, cap, randoms)


def stress_search(params: SearchParams, workers: int = 1) -> Certificate:
    """Seeded penalized hill descent over m-preserving edge swaps.

    Each restart starts from a random graph with exactly ``threshold`` edges
    and descends on ``triangles + n * codegree excess``; only states within
    the book cap and with at least one triangle count as found.  Restart
    ``i`` draws from ``default_rng([seed, i])`` so results do not depend on
    how restarts are spread over workers.
    """
    n, total = params.n, params.stress_iterations
    m = params.threshold
    per = params.restart_every or total
    jobs = []
    if total and m <= n * (n - 1) // 2:
        left, i = total, 0
        while left > 0:
            step = min(per, left)
            jobs.append((n, m, params.kernel_cap(), params.seed, i, step, _kernels.get_backend()))
            left -= step
            i += 1
    best, best_g, accepted = None, None, 0
    for t, g, acc in _run_subtrees(_stress_restart, jobs, workers):
        accepted += acc
        if t >= 0 and (best is None or t < best):
            best, best_g = t, g
    graphs = [Graph.from_masks(canonical_certificate(Graph.from_masks(best_g)))] if best_g else []
    in_range, bound, matches, _, violation = _conjecture_fields(n, params.b_cap, best, graphs)
    return Certificate(
        params=asdict(params),
        graphs_examined=total if jobs else 0,
        nodes_visited=total if jobs else 0,
        min_triangles_found=best,
        conjectured_bound=bound,
        in_conjecture_range=in_range,
        extremal_witnesses=[to_graph6(g) for g in graphs],
        matches_conjecture=matches,
        unique_extremal_is_s_graph=None,
        violation=violation,
        extra={"restarts": len(jobs), "accepted_moves": accepted},
    )


def default_workers() -> int:
    return os.cpu_count() or 1
