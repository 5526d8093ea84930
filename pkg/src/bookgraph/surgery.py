"""Tripartition functionals and the two edge-moving surgeries.

A :class:`TriPartition` splits V into A, B (meant to be the sides of an
induced bipartite subgraph H) and the remainder C.  Triangles are typed by how
many vertices they have in C.  The surgeries transform a graph while keeping
its edge count:

* :func:`to_G1` fills in A x B completely and pays for it by deleting the same
  number of (A u B)-C edges, always from a C vertex of currently largest
  degree into A or B.
* :func:`to_G2` then trades edges inside C for (A u B)-C edges until every C
  vertex has exactly ``b_cap`` neighbors on each side.

Neither surgery asserts the monotonicity facts that hold in the asymptotic
regime; the reports carry before/after values so callers can check them.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .bipartite import lemma2_extract, max_induced_bipartite
from .graph import Graph, GraphBuilder, GraphInputError, _bits, mask_of


class SurgeryInfeasible(ValueError):
    """The requested surgery cannot be carried out on this input."""


class UndefinedValue(ValueError):
    """A ratio with an empty denominator was requested."""


@dataclass(frozen=True)
class TriPartition:
    A: FrozenSet[int]
    B: FrozenSet[int]
    C: FrozenSet[int]

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @classmethod
    def from_json(cls, obj) -> "TriPartition":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(obj["A"], obj["B"], obj["C"])
        except KeyError as exc:
            raise GraphInputError(f"partition JSON missing key {exc}") from None

    def to_json(self) -> dict:
        return {"A": sorted(self.A), "B": sorted(self.B), "C": sorted(self.C)}

    def validate(self, g: Graph) -> None:
        if self.A & self.B or self.A & self.C or self.B & self.C:
            raise GraphInputError("partition parts overlap")
        if self.A | self.B | self.C != frozenset(range(g.n)):
            raise GraphInputError("partition does not cover the vertex set exactly")

    def masks(self) -> Tuple[int, int, int]:
        return mask_of(self.A), mask_of(self.B), mask_of(self.C)

    def is_proper(self, g: Graph) -> bool:
        """A and B independent, i.e. G[A u B] is bipartite with these sides."""
        ma, mb, _ = self.masks()
        return all(not g.masks[v] & ma for v in self.A) and all(not g.masks[v] & mb for v in self.B)

    def is_complete_bipartite(self, g: Graph) -> bool:
        ma, mb, _ = self.masks()
        return self.is_proper(g) and all(g.masks[a] & mb == mb for a in self.A)


def classify_triangles(g: Graph, p: TriPartition) -> Tuple[int, int, int, int]:
    """(t0, t1, t2, t3): triangles with exactly i vertices in C."""
    p.validate(g)
    _, _, mc = p.masks()
    masks = g.masks
    counts = [0, 0, 0, 0]
    for u in range(g.n):
        cu = (mc >> u) & 1
        for v in _bits(masks[u] >> (u + 1) << (u + 1)):
            common = masks[u] & masks[v] & ~((2 << v) - 1)
            if not common:
                continue
            base = cu + ((mc >> v) & 1)
            in_c = (common & mc).bit_count()
            counts[base + 1] += in_c
            counts[base] += common.bit_count() - in_c
    return tuple(counts)


def t_prime(g: Graph, p: TriPartition) -> int:
    t = classify_triangles(g, p)
    return t[1] + t[2]


def _side_degrees(g: Graph, p: TriPartition, v: int) -> Tuple[int, int, int]:
    ma, mb, mc = p.masks()
    m = g.masks[v]
    return (m & ma).bit_count(), (m & mb).bit_count(), (m & mc).bit_count()


def ab_c_edges(g: Graph, p: TriPartition) -> int:
    """e(A u B, C)."""
    _, _, mc = p.masks()
    return sum((g.masks[v] & ~mc).bit_count() for v in p.C)


def bar_b(g: Graph, p: TriPartition) -> Fraction:
    """Average triangle count of an (A u B)-C edge: 2 t' / e(A u B, C)."""
    p.validate(g)
    e = ab_c_edges(g, p)
    if e == 0:
        raise UndefinedValue("e(A u B, C) = 0, so the average is undefined")
    return Fraction(2 * t_prime(g, p), e)


def tilde_t_doubled(g: Graph, p: TriPartition) -> int:
    """2 * t~ : the lower-bound functional for type-1/2 triangles."""
    p.validate(g)
    ma, mb, mc = p.masks()
    mab = ma | mb
    masks = g.masks
    size_c = len(p.C)
    total = -size_c * ab_c_edges(g, p)
    for v in p.C:
        m = masks[v]
        da, db, dc = (m & ma).bit_count(), (m & mb).bit_count(), (m & mc).bit_count()
        total += 2 * da * db + dc * (m & mab).bit_count()
    for u in p.A | p.B:
        total += (masks[u] & mc).bit_count() ** 2
    return total


def tilde_t(g: Graph, p: TriPartition) -> Fraction:
    return Fraction(tilde_t_doubled(g, p), 2)


def c_degree_extremes(g: Graph, p: TriPartition) -> Tuple[Optional[int], Optional[int]]:
    """(D, d): max and min of d_A(v), d_B(v) over v in C; ``None`` if C is empty."""
    if not p.C:
        return None, None
    ds = [_side_degrees(g, p, v)[:2] for v in p.C]
    return max(max(x) for x in ds), min(min(x) for x in ds)


def snapshot(g: Graph, p: TriPartition) -> dict:
    types = classify_triangles(g, p)
    e = ab_c_edges(g, p)
    big_d, small_d = c_degree_extremes(g, p)
    return {
        "edges": g.m,
        "triangles": sum(types),
        "t_by_type": list(types),
        "t_prime": types[1] + types[2],
        "e_ab_c": e,
        "bar_b": Fraction(2 * (types[1] + types[2]), e) if e else None,
        "tilde_t_doubled": tilde_t_doubled(g, p),
        "D": big_d,
        "d_min": small_d,
    }


@dataclass
class Move:
    """One G1 -> G2 step: delete a C-C edge, then add an (A u B)-C edge."""

    deleted: Tuple[int, int]
    added: Tuple[int, int]
    delete_delta: int
    add_delta: int


@dataclass
class SurgeryReport:
    stage: str
    s: int
    moved_C_edges: int
    D: Optional[int]
    d_min: Optional[int]
    t_by_type: Tuple[int, int, int, int]
    t_prime: int
    bar_b: Optional[Fraction]
    tilde_t_doubled: int
    edge_count: int
    D_within_cap: Optional[bool]
    before: dict
    added_edges: List[Tuple[int, int]] = field(default_factory=list)
    deleted_edges: List[Tuple[int, int]] = field(default_factory=list)
    moves: List[Move] = field(default_factory=list)

    def monotone(self) -> Dict[str, Optional[bool]]:
        b0 = self.before
        return {
            "t_nonincreasing": sum(self.t_by_type) <= b0["triangles"],
            "t_prime_nonincreasing": self.t_prime <= b0["t_prime"],
            "bar_b_nonincreasing": (
                None if self.bar_b is None or b0["bar_b"] is None else self.bar_b <= b0["bar_b"]
            ),
            "tilde_t_nonincreasing": self.tilde_t_doubled <= b0["tilde_t_doubled"],
        }

    def to_json(self) -> dict:
        def conv(x):
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, dict):
                return {k: conv(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [conv(v) for v in x]
            return x

        d = asdict(self)
        d["monotone"] = self.monotone()
        return conv(d)


def _report(stage, g_out, p, b_cap, before, s, moved, added, deleted, moves) -> SurgeryReport:
    snap = snapshot(g_out, p)
    return SurgeryReport(
        stage=stage,
        s=s,
        moved_C_edges=moved,
        D=snap["D"],
        d_min=snap["d_min"],
        t_by_type=tuple(snap["t_by_type"]),
        t_prime=snap["t_prime"],
        bar_b=snap["bar_b"],
        tilde_t_doubled=snap["tilde_t_doubled"],
        edge_count=g_out.m,
        D_within_cap=None if snap["D"] is None else snap["D"] <= b_cap,
        before=before,
        added_edges=added,
        deleted_edges=deleted,
        moves=moves,
    )


def to_G1(g: Graph, p: TriPartition, b_cap: int) -> Tuple[Graph, SurgeryReport]:
    """Complete A x B, then delete as many (A u B)-C edges.

    Each deletion takes a C vertex maximizing max(d_A, d_B) (ties: smallest
    label), on the side realizing that maximum (A on ties), and removes its
    edge to the lowest-labeled neighbor there.
    """
    p.validate(g)
    if not p.is_proper(g):
        raise GraphInputError("to_G1 needs A and B to be independent sets")
    before = snapshot(g, p)
    missing = [(a, b) for a in sorted(p.A) for b in sorted(p.B) if not g.has_edge(a, b)]
    s = len(missing)
    available = before["e_ab_c"]
    if available < s:
        raise SurgeryInfeasible(
            f"need to delete {s} (A u B)-C edges but only {available} exist (shortfall {s - available})"
        )
    gb = g.builder()
    for a, b in missing:
        gb.add_edge(a, b)
    ma, mb, _ = p.masks()
    cs = sorted(p.C)
    deleted = []
    for _ in range(s):
        best = None
        for v in cs:
            da = (gb.masks[v] & ma).bit_count()
            db = (gb.masks[v] & mb).bit_count()
            key = max(da, db)
            if best is None or key > best[0]:
                best = (key, v, ma if da >= db else mb)
        _, v, side = best
        u = next(_bits(gb.masks[v] & side))
        gb.remove_edge(u, v)
        deleted.append((min(u, v), max(u, v)))
    g1 = gb.freeze()
    return g1, _report("g1", g1, p, b_cap, before, s, 0, missing, deleted, [])


def move_delete_delta(gb: GraphBuilder, p: TriPartition, v: int, w: int) -> int:
    """Change of 2t~ when deleting C-C edge vw: -(d_{AuB}(v) + d_{AuB}(w))."""
    ma, mb, _ = p.masks()
    mab = ma | mb
    return -((gb.masks[v] & mab).bit_count() + (gb.masks[w] & mab).bit_count())


def move_add_delta(gb: GraphBuilder, p: TriPartition, u: int, v: int) -> int:
    """Change of 2t~ when adding uv, u in A u B, v in C:
    -|C| + 2 d_other(v) + d_C(v) + 2 d_C(u) + 1."""
    ma, mb, mc = p.masks()
    other = mb if u in p.A else ma
    return (
        -len(p.C)
        + 2 * (gb.masks[v] & other).bit_count()
        + (gb.masks[v] & mc).bit_count()
        + 2 * (gb.masks[u] & mc).bit_count()
        + 1
    )


def to_G2(g1: Graph, p: TriPartition, b_cap: int) -> Tuple[Graph, SurgeryReport]:
    """Trade C-C edges for (A u B)-C edges until d_A(v) = d_B(v) = b_cap on C.

    Each move deletes an edge at the C vertex of largest C-degree (ties:
    smallest label) to its lowest-labeled C neighbor, then adds an edge at
    the (vertex, side) of largest deficit (ties: smallest label, A first) to
    the lowest-labeled non-neighbor on that side.
    """
    p.validate(g1)
    if not p.is_proper(g1):
        raise GraphInputError("to_G2 needs A and B to be independent sets")
    if b_cap < 0:
        raise GraphInputError("b_cap must be nonnegative")
    ma, mb, mc = p.masks()
    if p.C and (len(p.A) < b_cap or len(p.B) < b_cap):
        raise SurgeryInfeasible(f"sides of sizes {len(p.A)}, {len(p.B)} cannot give degree {b_cap}")
    deficit = 0
    for v in p.C:
        da, db, _ = _side_degrees(g1, p, v)
        if da > b_cap or db > b_cap:
            raise SurgeryInfeasible(f"C vertex {v} has (d_A, d_B) = ({da}, {db}) above b_cap={b_cap}")
        deficit += 2 * b_cap - da - db
    e_c = sum((g1.masks[v] & mc).bit_count() for v in p.C) // 2
    if e_c < deficit:
        raise SurgeryInfeasible(
            f"need {deficit} C-C edges to trade but only {e_c} exist (shortfall {deficit - e_c})"
        )
    before = snapshot(g1, p)
    gb = g1.builder()
    cs = sorted(p.C)
    moves: List[Move] = []
    added, deleted = [], []
    for _ in range(deficit):
        v = max(cs, key=lambda x: ((gb.masks[x] & mc).bit_count(), -x))
        w = next(_bits(gb.masks[v] & mc))
        dd = move_delete_delta(gb, p, v, w)
        gb.remove_edge(v, w)
        best = None
        for x in cs:
            for side in (ma, mb):
                gap = b_cap - (gb.masks[x] & side).bit_count()
                if best is None or gap > best[0]:
                    best = (gap, x, side)
        _, x, side = best
        u = next(_bits(side & ~gb.masks[x]))
        da = move_add_delta(gb, p, u, x)
        gb.add_edge(u, x)
        moves.append(Move((min(v, w), max(v, w)), (u, x), dd, da))
        deleted.append((min(v, w), max(v, w)))
        added.append((u, x))
    g2 = gb.freeze()
    return g2, _report("g2", g2, p, b_cap, before, 0, deficit, added, deleted, moves)


def partition_from_extraction(g: Graph, c: Fraction, b_cap: int) -> TriPartition:
    """Heuristic partition: the independent sides found by lemma2_extract."""
    r = lemma2_extract(g, c, b_cap)
    a, b = (r.A, r.B) if len(r.A) >= len(r.B) else (r.B, r.A)
    return TriPartition(a, b, r.removed)


def exact_partition(g: Graph) -> TriPartition:
    """Partition from a maximum induced bipartite subgraph (n <= 16)."""
    a, b = max_induced_bipartite(g)
    return TriPartition(a, b, frozenset(range(g.n)) - a - b)


def apply_moves(g: Graph, moves: Iterable[Move]) -> List[Graph]:
    """Replay a move log, returning the graph after every half-step."""
    gb = g.builder()
    out = []
    for mv in moves:
        gb.remove_edge(*mv.deleted)
        out.append(gb.freeze())
        gb.add_edge(*mv.added)
        out.append(gb.freeze())
    return out
