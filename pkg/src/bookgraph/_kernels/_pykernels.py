"""Pure-Python reference kernels.

Graphs are passed as sequences of adjacency bitmasks (bit ``j`` of
``masks[i]`` set iff ``i ~ j``).  The compiled module mirrors every function
here step for step, so both backends return identical results, including
canonical labelings and stress-search trajectories.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

AUTO_CAP = 128


def triangle_count(masks: Sequence[int]) -> int:
    t = 0
    for u, mu in enumerate(masks):
        higher = mu >> (u + 1)
        v = u + 1
        while higher:
            if higher & 1:
                t += ((mu & masks[v]) >> (v + 1)).bit_count()
            higher >>= 1
            v += 1
    return t


def max_edge_codegree(masks: Sequence[int]) -> int:
    best = 0
    for u, mu in enumerate(masks):
        rest = mu >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1:
                c = (mu & masks[v]).bit_count()
                if c > best:
                    best = c
            rest >>= 1
            v += 1
    return best


def _edges_within(masks: Sequence[int], x: int) -> int:
    total = 0
    y = x
    u = 0
    while y:
        if y & 1:
            total += (masks[u] & x).bit_count()
        y >>= 1
        u += 1
    return total // 2


def pivot_cut_sizes(masks: Sequence[int]) -> List[int]:
    """e(N(x)) + e(V - N(x)) for every pivot x."""
    n = len(masks)
    full = (1 << n) - 1
    out = []
    for x in range(n):
        nx = masks[x]
        out.append(_edges_within(masks, nx) + _edges_within(masks, full & ~nx))
    return out


# ----------------------------------------------------------------------------
# canonical labeling: equitable refinement + individualization, with
# automorphism pruning


def _refine(g: Sequence[int], lab: List[int], ends: List[bool]) -> None:
    n = len(lab)
    i = 0
    while i < n:
        j = i
        while not ends[j]:
            j += 1
        w = 0
        for p in range(i, j + 1):
            w |= 1 << lab[p]
        split = False
        s = 0
        while s < n:
            e = s
            while not ends[e]:
                e += 1
            if e > s:
                cnt = [(g[lab[p]] & w).bit_count() for p in range(s, e + 1)]
                first = cnt[0]
                if any(c != first for c in cnt):
                    pairs = sorted(zip(cnt, lab[s : e + 1]), key=lambda cv: cv[0])
                    for off, (c, v) in enumerate(pairs):
                        lab[s + off] = v
                        cnt[off] = c
                    for off in range(e - s):
                        ends[s + off] = cnt[off] != cnt[off + 1]
                    split = True
            s = e + 1
        if split:
            i = 0
        else:
            i = j + 1


def _certificate(g: Sequence[int], lab: Sequence[int]) -> Tuple[int, ...]:
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    cert = []
    for i in range(n):
        row = g[lab[i]]
        r = 0
        u = 0
        while row:
            if row & 1:
                r |= 1 << pos[u]
            row >>= 1
            u += 1
        cert.append(r)
    return tuple(cert)


class _Canon:
    def __init__(self, g: Sequence[int]):
        self.g = g
        self.n = len(g)
        self.first_lab: Optional[List[int]] = None
        self.first_cert: Optional[Tuple[int, ...]] = None
        self.first_path: List[int] = []
        self.best_lab: Optional[List[int]] = None
        self.best_cert: Optional[Tuple[int, ...]] = None
        self.autos: List[List[int]] = []

    def _add_auto(self, src: Sequence[int], dst: Sequence[int]) -> None:
        if len(self.autos) >= AUTO_CAP:
            return
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        self.autos.append(gamma)

    def _orbit_roots(self, path: Sequence[int]) -> List[int]:
        n = self.n
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if any(gamma[p] != p for p in path):
                continue
            for x in range(n):
                a, b = find(x), find(gamma[x])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        return [find(x) for x in range(n)]

    def search(self, lab: List[int], ends: List[bool], path: List[int]) -> int:
        """Returns the depth to backjump to, or -1 to continue normally."""
        _refine(self.g, lab, ends)
        n = self.n
        depth = len(path)
        # target cell: first non-singleton cell of minimum size
        ts, te, tsize = -1, -1, n + 1
        s = 0
        while s < n:
            e = s
            while not ends[e]:
                e += 1
            if e > s and e - s + 1 < tsize:
                ts, te, tsize = s, e, e - s + 1
            s = e + 1
        if ts < 0:
            cert = _certificate(self.g, lab)
            if self.first_cert is None:
                self.first_lab = list(lab)
                self.first_cert = cert
                self.first_path = list(path)
                self.best_lab = list(lab)
                self.best_cert = cert
                return -1
            if cert == self.first_cert:
                self._add_auto(self.first_lab, lab)
                d = 0
                while d < depth and path[d] == self.first_path[d]:
                    d += 1
                return d
            if cert == self.best_cert:
                self._add_auto(self.best_lab, lab)
                return -1
            if cert > self.best_cert:
                self.best_cert = cert
                self.best_lab = list(lab)
            return -1

        cands = sorted(lab[ts : te + 1])
        tried_roots: List[int] = []
        for v in cands:
            if tried_roots:
                roots = self._orbit_roots(path)
                rv = roots[v]
                if any(roots[u] == rv for u in tried_roots):
                    continue
            tried_roots.append(v)
            lab2 = list(lab)
            rest = [x for x in lab[ts : te + 1] if x != v]
            lab2[ts] = v
            lab2[ts + 1 : te + 1] = rest
            ends2 = list(ends)
            ends2[ts] = True
            r = self.search(lab2, ends2, path + [v])
            if r >= 0 and r < depth:
                return r
        return -1


def canonical_label(masks: Sequence[int]) -> Tuple[List[int], Tuple[int, ...]]:
    """Return ``(order, cert)``: ``order[i]`` is the vertex placed at position
    ``i`` and ``cert`` the adjacency masks of the relabeled graph."""
    n = len(masks)
    if n == 0:
        return [], ()
    c = _Canon(masks)
    ends = [False] * n
    ends[n - 1] = True
    c.search(list(range(n)), ends, [])
    return list(c.best_lab), c.best_cert


def delete_vertex(masks: Sequence[int], w: int) -> Tuple[int, ...]:
    low = (1 << w) - 1
    out = []
    for u, m in enumerate(masks):
        if u == w:
            continue
        out.append((m & low) | ((m >> (w + 1)) << w))
    return tuple(out)


def expand(parent: Sequence[int], b_cap: int, min_child_edges: int) -> List[Tuple[int, ...]]:
    """Canonical children of a canonically-labeled parent on ``k`` vertices.

    A child adds vertex ``k`` adjacent to a subset ``S``.  It is kept iff its
    book number stays within ``b_cap`` (``-1``: uncapped), it has at least
    ``min_child_edges`` edges, the new vertex has minimum degree, and deleting
    the canonical min-degree vertex gives back the parent's class.
    """
    k = len(parent)
    deg = [m.bit_count() for m in parent]
    m_par = sum(deg) // 2
    need = min_child_edges - m_par
    parent_t = tuple(parent)
    seen = set()
    out: List[Tuple[int, ...]] = []
    newbit = 1 << k
    for s in range(1 << k):
        d = s.bit_count()
        if d < need:
            continue
        ok = True
        for u in range(k):
            if (s >> u) & 1:
                if d > deg[u] + 1:
                    ok = False
                    break
            elif d > deg[u]:
                ok = False
                break
        if not ok:
            continue
        if b_cap >= 0:
            for u in range(k):
                if not (s >> u) & 1:
                    continue
                mu = parent[u]
                if (mu & s).bit_count() > b_cap:
                    ok = False
                    break
                inner = mu & s & ~((2 << u) - 1)
                v = u + 1
                inner >>= u + 1
                while inner:
                    if inner & 1 and (mu & parent[v]).bit_count() + 1 > b_cap:
                        ok = False
                        break
                    inner >>= 1
                    v += 1
                if not ok:
                    break
            if not ok:
                continue
        child = [parent[u] | newbit if (s >> u) & 1 else parent[u] for u in range(k)]
        child.append(s)
        order, cert = canonical_label(child)
        cdeg = [m.bit_count() for m in child]
        md = min(cdeg)
        w = -1
        for v in reversed(order):
            if cdeg[v] == md:
                w = v
                break
        if w != k:
            _, rc = canonical_label(delete_vertex(child, w))
            if rc != parent_t:
                continue
        if cert in seen:
            continue
        seen.add(cert)
        out.append(cert)
    return out


# ----------------------------------------------------------------------------
# stress search: penalized hill descent over m-preserving edge swaps


def _book_excess(g: Sequence[int], b_cap: int) -> int:
    if b_cap < 0:
        return 0
    ex = 0
    for u, mu in enumerate(g):
        rest = mu >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1:
                c = (mu & g[v]).bit_count()
                if c > b_cap:
                    ex += c - b_cap
            rest >>= 1
            v += 1
    return ex


def descend(
    masks: Sequence[int], b_cap: int, randoms: Sequence[int]
) -> Tuple[int, Optional[Tuple[int, ...]], int]:
    """Run ``len(randoms) // 2`` swap attempts from ``masks``.

    Objective is ``t + n * excess`` where excess sums codegree overshoot
    above ``b_cap``; moves reaching a triangle-free graph are refused.
    Returns ``(best_t, best_masks, accepted)`` over feasible visited states
    (excess 0, t > 0); ``best_t`` is -1 when none was seen.
    """
    n = len(masks)
    g = list(masks)
    edges = []
    non = []
    for u in range(n):
        for v in range(u + 1, n):
            (edges if (g[u] >> v) & 1 else non).append((u, v))
    t = triangle_count(g)
    ex = _book_excess(g, b_cap)
    penalty = n
    best_t = -1
    best: Optional[Tuple[int, ...]] = None
    if ex == 0 and t > 0:
        best_t, best = t, tuple(g)
    accepted = 0
    if not edges or not non:
        return best_t, best, accepted
    me, mn = len(edges), len(non)
    for i in range(len(randoms) // 2):
        ei = int(randoms[2 * i]) % me
        nj = int(randoms[2 * i + 1]) % mn
        u, v = edges[ei]
        x, y = non[nj]
        g[u] &= ~(1 << v)
        g[v] &= ~(1 << u)
        t2 = t - (g[u] & g[v]).bit_count()
        t2 += (g[x] & g[y]).bit_count()
        g[x] |= 1 << y
        g[y] |= 1 << x
        ex2 = _book_excess(g, b_cap)
        if t2 > 0 and t2 + penalty * ex2 <= t + penalty * ex:
            t, ex = t2, ex2
            edges[ei], non[nj] = (x, y), (u, v)
            accepted += 1
            if ex == 0 and (best_t < 0 or t < best_t):
                best_t, best = t, tuple(g)
        else:
            g[x] &= ~(1 << y)
            g[y] &= ~(1 << x)
            g[u] |= 1 << v
            g[v] |= 1 << u
    return best_t, best, accepted
