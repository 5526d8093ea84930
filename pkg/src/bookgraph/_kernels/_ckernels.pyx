# cython: language_level=3
"""Compiled kernels over uint64 adjacency bitmasks (n <= 64).

Semantics match ``_pykernels`` exactly; see that module for documentation.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef enum:
    MAXN = 64
    MAXPAIRS = 2016
    AUTO_CAP = 128


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline uint64_t bit(int i) noexcept nogil:
    return (<uint64_t>1) << i


cdef int load(object masks, uint64_t* g) except -1:
    cdef int n = len(masks)
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        g[i] = <uint64_t>masks[i]
    return n


cdef inline uint64_t above(int v) noexcept nogil:
    # bits strictly greater than v
    if v >= 63:
        return 0
    return ~((bit(v + 1)) - 1)


cdef long long c_triangles(uint64_t* g, int n) noexcept nogil:
    cdef long long t = 0
    cdef int u, v
    cdef uint64_t rest
    for u in range(n):
        rest = g[u] & above(u)
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            t += popc(g[u] & g[v] & above(v))
    return t


def triangle_count(masks):
    cdef uint64_t g[MAXN]
    cdef int n = load(masks, g)
    return c_triangles(g, n)


def max_edge_codegree(masks):
    cdef uint64_t g[MAXN]
    cdef int n = load(masks, g)
    cdef int u, v, c, best = 0
    cdef uint64_t rest
    for u in range(n):
        rest = g[u] & above(u)
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            c = popc(g[u] & g[v])
            if c > best:
                best = c
    return best


cdef int edges_within(uint64_t* g, uint64_t x) noexcept nogil:
    cdef int total = 0
    cdef int u
    cdef uint64_t y = x
    while y:
        u = __builtin_ctzll(y)
        y &= y - 1
        total += popc(g[u] & x)
    return total // 2


def pivot_cut_sizes(masks):
    cdef uint64_t g[MAXN]
    cdef int n = load(masks, g)
    cdef uint64_t full = (~(<uint64_t>0)) if n == 64 else bit(n) - 1
    cdef int x
    out = []
    for x in range(n):
        out.append(edges_within(g, g[x]) + edges_within(g, full & ~g[x]))
    return out


# ---------------------------------------------------------------------------
# canonical labeling


cdef void refine(uint64_t* g, int n, int* lab, char* ends) noexcept nogil:
    cdef int i = 0, j, s, e, p, q, keyc, keyv, split
    cdef int cnt[MAXN]
    cdef uint64_t w
    while i < n:
        j = i
        while not ends[j]:
            j += 1
        w = 0
        for p in range(i, j + 1):
            w |= bit(lab[p])
        split = 0
        s = 0
        while s < n:
            e = s
            while not ends[e]:
                e += 1
            if e > s:
                for p in range(s, e + 1):
                    cnt[p] = popc(g[lab[p]] & w)
                q = 0
                for p in range(s + 1, e + 1):
                    if cnt[p] != cnt[s]:
                        q = 1
                        break
                if q:
                    # stable insertion sort by count
                    for p in range(s + 1, e + 1):
                        keyc = cnt[p]
                        keyv = lab[p]
                        q = p - 1
                        while q >= s and cnt[q] > keyc:
                            cnt[q + 1] = cnt[q]
                            lab[q + 1] = lab[q]
                            q -= 1
                        cnt[q + 1] = keyc
                        lab[q + 1] = keyv
                    for p in range(s, e):
                        ends[p] = cnt[p] != cnt[p + 1]
                    split = 1
            s = e + 1
        if split:
            i = 0
        else:
            i = j + 1


cdef void certificate(uint64_t* g, int n, int* lab, uint64_t* cert) noexcept nogil:
    cdef int pos[MAXN]
    cdef int i, u
    cdef uint64_t row, r
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        row = g[lab[i]]
        r = 0
        while row:
            u = __builtin_ctzll(row)
            row &= row - 1
            r |= bit(pos[u])
        cert[i] = r


cdef int cert_cmp(uint64_t* a, uint64_t* b, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


cdef class Canon:
    cdef uint64_t g[MAXN]
    cdef int n
    cdef int have_first
    cdef int first_lab[MAXN]
    cdef uint64_t first_cert[MAXN]
    cdef int first_path[MAXN]
    cdef int best_lab[MAXN]
    cdef uint64_t best_cert[MAXN]
    cdef int autos[AUTO_CAP][MAXN]
    cdef int nautos

    cdef void add_auto(self, int* src, int* dst) noexcept nogil:
        cdef int i
        if self.nautos >= AUTO_CAP:
            return
        for i in range(self.n):
            self.autos[self.nautos][src[i]] = dst[i]
        self.nautos += 1

    cdef void orbit_roots(self, int* path, int depth, int* root) noexcept nogil:
        cdef int a, x, p, ok, ra, rb, y
        cdef int n = self.n
        for x in range(n):
            root[x] = x
        for a in range(self.nautos):
            ok = 1
            for p in range(depth):
                if self.autos[a][path[p]] != path[p]:
                    ok = 0
                    break
            if not ok:
                continue
            for x in range(n):
                ra = x
                while root[ra] != ra:
                    root[ra] = root[root[ra]]
                    ra = root[ra]
                rb = self.autos[a][x]
                while root[rb] != rb:
                    root[rb] = root[root[rb]]
                    rb = root[rb]
                if ra != rb:
                    if ra < rb:
                        root[rb] = ra
                    else:
                        root[ra] = rb
        for x in range(n):
            y = x
            while root[y] != y:
                y = root[y]
            root[x] = y

    cdef int search(self, int* lab, char* ends, int* path, int depth) noexcept nogil:
        cdef int n = self.n
        cdef int ts = -1, te = -1, tsize = n + 1, s, e, d, c, i, v, r, k
        cdef uint64_t cert[MAXN]
        cdef int cands[MAXN]
        cdef int ncand, tried[MAXN], ntried, skip
        cdef int root[MAXN]
        cdef int lab2[MAXN]
        cdef char ends2[MAXN]
        refine(self.g, n, lab, ends)
        s = 0
        while s < n:
            e = s
            while not ends[e]:
                e += 1
            if e > s and e - s + 1 < tsize:
                ts = s
                te = e
                tsize = e - s + 1
            s = e + 1
        if ts < 0:
            certificate(self.g, n, lab, cert)
            if not self.have_first:
                self.have_first = 1
                memcpy(self.first_lab, lab, n * sizeof(int))
                memcpy(self.first_cert, cert, n * sizeof(uint64_t))
                memcpy(self.first_path, path, depth * sizeof(int))
                memcpy(self.best_lab, lab, n * sizeof(int))
                memcpy(self.best_cert, cert, n * sizeof(uint64_t))
                return -1
            if cert_cmp(cert, self.first_cert, n) == 0:
                self.add_auto(self.first_lab, lab)
                d = 0
                while d < depth and path[d] == self.first_path[d]:
                    d += 1
                return d
            c = cert_cmp(cert, self.best_cert, n)
            if c == 0:
                self.add_auto(self.best_lab, lab)
                return -1
            if c > 0:
                memcpy(self.best_lab, lab, n * sizeof(int))
                memcpy(self.best_cert, cert, n * sizeof(uint64_t))
            return -1

        # candidates in ascending vertex order
        ncand = 0
        for i in range(ts, te + 1):
            v = lab[i]
            k = ncand
            while k > 0 and cands[k - 1] > v:
                cands[k] = cands[k - 1]
                k -= 1
            cands[k] = v
            ncand += 1
        ntried = 0
        for i in range(ncand):
            v = cands[i]
            if ntried:
                self.orbit_roots(path, depth, root)
                skip = 0
                for k in range(ntried):
                    if root[tried[k]] == root[v]:
                        skip = 1
                        break
                if skip:
                    continue
            tried[ntried] = v
            ntried += 1
            memcpy(lab2, lab, n * sizeof(int))
            memcpy(ends2, ends, n * sizeof(char))
            lab2[ts] = v
            k = ts + 1
            for c in range(ts, te + 1):
                if lab[c] != v:
                    lab2[k] = lab[c]
                    k += 1
            ends2[ts] = 1
            path[depth] = v
            r = self.search(lab2, ends2, path, depth + 1)
            if r >= 0 and r < depth:
                return r
        return -1

    cdef void run(self, uint64_t* g, int n) noexcept nogil:
        cdef int lab[MAXN]
        cdef char ends[MAXN]
        cdef int path[MAXN]
        cdef int i
        self.n = n
        self.have_first = 0
        self.nautos = 0
        for i in range(n):
            self.g[i] = g[i]
            lab[i] = i
            ends[i] = 0
        if n > 0:
            ends[n - 1] = 1
            self.search(lab, ends, path, 0)


def canonical_label(masks):
    cdef uint64_t g[MAXN]
    cdef int n = load(masks, g)
    cdef Canon c
    cdef int i
    if n == 0:
        return [], ()
    c = Canon()
    c.run(g, n)
    return [c.best_lab[i] for i in range(n)], tuple([c.best_cert[i] for i in range(n)])


cdef int delete_vertex_c(uint64_t* g, int n, int w, uint64_t* out) noexcept nogil:
    cdef uint64_t low = bit(w) - 1
    cdef int u, k = 0
    for u in range(n):
        if u == w:
            continue
        out[k] = (g[u] & low) | ((g[u] >> (w + 1)) << w)
        k += 1
    return k


def delete_vertex(masks, int w):
    cdef uint64_t g[MAXN]
    cdef uint64_t out[MAXN]
    cdef int n = load(masks, g)
    cdef int k = delete_vertex_c(g, n, w, out)
    return tuple([out[i] for i in range(k)])


def expand(parent, int b_cap, int min_child_edges):
    cdef uint64_t par[MAXN]
    cdef uint64_t child[MAXN]
    cdef uint64_t reduced[MAXN]
    cdef int deg[MAXN]
    cdef int cdeg[MAXN]
    cdef int k = load(parent, par)
    cdef int u, v, d, ok, need, md, w, i, m2 = 0
    cdef uint64_t s, limit, newbit, inner
    cdef Canon canon = Canon()
    cdef Canon canon2 = Canon()
    if k >= 63:
        raise ValueError("expand supports parents with at most 62 vertices")
    for u in range(k):
        deg[u] = popc(par[u])
        m2 += deg[u]
    need = min_child_edges - m2 // 2
    newbit = bit(k)
    limit = bit(k)
    seen = set()
    out = []
    s = 0
    while s < limit:
        d = popc(s)
        if d < need:
            s += 1
            continue
        ok = 1
        for u in range(k):
            if (s >> u) & 1:
                if d > deg[u] + 1:
                    ok = 0
                    break
            elif d > deg[u]:
                ok = 0
                break
        if ok and b_cap >= 0:
            for u in range(k):
                if not ((s >> u) & 1):
                    continue
                if popc(par[u] & s) > b_cap:
                    ok = 0
                    break
                inner = par[u] & s & above(u)
                while inner:
                    v = __builtin_ctzll(inner)
                    inner &= inner - 1
                    if popc(par[u] & par[v]) + 1 > b_cap:
                        ok = 0
                        break
                if not ok:
                    break
        if not ok:
            s += 1
            continue
        for u in range(k):
            child[u] = (par[u] | newbit) if (s >> u) & 1 else par[u]
        child[k] = s
        canon.run(child, k + 1)
        md = k + 1
        for u in range(k + 1):
            cdeg[u] = popc(child[u])
            if cdeg[u] < md:
                md = cdeg[u]
        w = -1
        for i in range(k, -1, -1):
            if cdeg[canon.best_lab[i]] == md:
                w = canon.best_lab[i]
                break
        if w != k:
            delete_vertex_c(child, k + 1, w, reduced)
            canon2.run(reduced, k)
            ok = 1
            for i in range(k):
                if canon2.best_cert[i] != par[i]:
                    ok = 0
                    break
            if not ok:
                s += 1
                continue
        cert = tuple([canon.best_cert[i] for i in range(k + 1)])
        if cert not in seen:
            seen.add(cert)
            out.append(cert)
        s += 1
    return out


# ---------------------------------------------------------------------------
# stress search


cdef long long book_excess(uint64_t* g, int n, int b_cap) noexcept nogil:
    cdef long long ex = 0
    cdef int u, v, c
    cdef uint64_t rest
    if b_cap < 0:
        return 0
    for u in range(n):
        rest = g[u] & above(u)
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            c = popc(g[u] & g[v])
            if c > b_cap:
                ex += c - b_cap
    return ex


def descend(masks, int b_cap, randoms):
    cdef uint64_t g[MAXN]
    cdef int n = load(masks, g)
    cdef int eu[MAXPAIRS]
    cdef int ev[MAXPAIRS]
    cdef int nu[MAXPAIRS]
    cdef int nv[MAXPAIRS]
    cdef int me = 0, mn = 0, u, v, x, y, i
    cdef long long t, t2, ex, ex2, best_t = -1, accepted = 0
    cdef long long penalty = n
    cdef Py_ssize_t iters = len(randoms) // 2
    cdef const unsigned long long[:] rv
    cdef unsigned long long ei, nj
    best = None
    for u in range(n):
        for v in range(u + 1, n):
            if (g[u] >> v) & 1:
                eu[me] = u
                ev[me] = v
                me += 1
            else:
                nu[mn] = u
                nv[mn] = v
                mn += 1
    t = c_triangles(g, n)
    ex = book_excess(g, n, b_cap)
    if ex == 0 and t > 0:
        best_t = t
        best = tuple([g[i] for i in range(n)])
    if me == 0 or mn == 0 or iters == 0:
        return best_t, best, accepted
    rv = randoms
    for i in range(iters):
        ei = rv[2 * i] % <unsigned long long>me
        nj = rv[2 * i + 1] % <unsigned long long>mn
        u = eu[ei]
        v = ev[ei]
        x = nu[nj]
        y = nv[nj]
        g[u] &= ~bit(v)
        g[v] &= ~bit(u)
        t2 = t - popc(g[u] & g[v])
        t2 += popc(g[x] & g[y])
        g[x] |= bit(y)
        g[y] |= bit(x)
        ex2 = book_excess(g, n, b_cap)
        if t2 > 0 and t2 + penalty * ex2 <= t + penalty * ex:
            t = t2
            ex = ex2
            eu[ei] = x
            ev[ei] = y
            nu[nj] = u
            nv[nj] = v
            accepted += 1
            if ex == 0 and (best_t < 0 or t < best_t):
                best_t = t
                best = tuple([g[k] for k in range(n)])
        else:
            g[x] &= ~bit(y)
            g[y] &= ~bit(x)
            g[u] |= bit(v)
            g[v] |= bit(u)
    return best_t, best, accepted
