# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same API and results as ``_pykernels``."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy, memset

__all__ = ["canonical_edges", "split_subset", "coproduct_counts"]


cdef tuple _pairs_to_tuple(int m, int* a, int* b):
    cdef list out = [None] * m
    cdef int i
    for i in range(m):
        out[i] = (a[i], b[i])
    return tuple(out)


cdef int _canon(int m, const int* eu, const int* ev, int nv,
                int* outa, int* outb) except -1:
    """Canonical labelling of a dense edge list (vertex ids 0..nv-1).

    Writes the canonical pairs to ``outa``/``outb``.  A state is a label
    vector of length ``nv`` with 0 meaning "unlabelled or no longer needed".
    """
    cdef int i, s, t, k, x, nxt, n_states, n_keep, cap, a, b, lo, hi, best_a, best_b
    cdef int u, v
    cdef bint seen_u, seen_v, same
    cdef int* last
    cdef int* states
    cdef int* tmp

    if m == 0:
        return 0
    last = <int*> malloc(nv * sizeof(int))
    cap = 4
    states = <int*> malloc(cap * nv * sizeof(int))
    if last == NULL or states == NULL:
        free(last)
        free(states)
        raise MemoryError()
    for i in range(m):
        last[eu[i]] = i
        last[ev[i]] = i
    memset(states, 0, nv * sizeof(int))
    n_states = 1
    nxt = 1

    for i in range(m):
        u = eu[i]
        v = ev[i]
        seen_u = states[u] != 0
        seen_v = states[v] != 0
        if u == v:
            if seen_u:
                best_a = -1
                n_keep = 0
                for s in range(n_states):
                    a = states[s * nv + u]
                    if best_a < 0 or a < best_a:
                        best_a = a
                        n_keep = 0
                    if a == best_a:
                        if n_keep != s:
                            memcpy(&states[n_keep * nv], &states[s * nv], nv * sizeof(int))
                        n_keep += 1
                n_states = n_keep
                outa[i] = best_a
                outb[i] = best_a
            else:
                for s in range(n_states):
                    states[s * nv + u] = nxt
                outa[i] = nxt
                outb[i] = nxt
                nxt += 1
        elif seen_u and seen_v:
            best_a = -1
            best_b = -1
            n_keep = 0
            for s in range(n_states):
                a = states[s * nv + u]
                b = states[s * nv + v]
                if a < b:
                    lo = a
                    hi = b
                else:
                    lo = b
                    hi = a
                if best_a < 0 or lo < best_a or (lo == best_a and hi < best_b):
                    best_a = lo
                    best_b = hi
                    n_keep = 0
                if lo == best_a and hi == best_b:
                    if n_keep != s:
                        memcpy(&states[n_keep * nv], &states[s * nv], nv * sizeof(int))
                    n_keep += 1
            n_states = n_keep
            outa[i] = best_a
            outb[i] = best_b
        elif seen_u or seen_v:
            if seen_u:
                x = u
                k = v
            else:
                x = v
                k = u
            best_a = -1
            n_keep = 0
            for s in range(n_states):
                a = states[s * nv + x]
                if best_a < 0 or a < best_a:
                    best_a = a
                    n_keep = 0
                if a == best_a:
                    if n_keep != s:
                        memcpy(&states[n_keep * nv], &states[s * nv], nv * sizeof(int))
                    n_keep += 1
            n_states = n_keep
            for s in range(n_states):
                states[s * nv + k] = nxt
            outa[i] = best_a
            outb[i] = nxt
            nxt += 1
        else:
            if 2 * n_states > cap:
                cap = 4 * n_states
                tmp = <int*> realloc(states, cap * nv * sizeof(int))
                if tmp == NULL:
                    free(last)
                    free(states)
                    raise MemoryError()
                states = tmp
            for s in range(n_states):
                t = n_states + s
                memcpy(&states[t * nv], &states[s * nv], nv * sizeof(int))
                states[s * nv + u] = nxt
                states[s * nv + v] = nxt + 1
                states[t * nv + u] = nxt + 1
                states[t * nv + v] = nxt
            n_states *= 2
            outa[i] = nxt
            outb[i] = nxt + 1
            nxt += 2

        if last[u] == i or last[v] == i:
            for s in range(n_states):
                if last[u] == i:
                    states[s * nv + u] = 0
                if last[v] == i:
                    states[s * nv + v] = 0
        if n_states > 1:
            n_keep = 0
            for s in range(n_states):
                same = False
                for t in range(n_keep):
                    same = True
                    for x in range(nv):
                        if states[t * nv + x] != states[s * nv + x]:
                            same = False
                            break
                    if same:
                        break
                if not same:
                    if n_keep != s:
                        memcpy(&states[n_keep * nv], &states[s * nv], nv * sizeof(int))
                    n_keep += 1
            n_states = n_keep

    free(last)
    free(states)
    return 0


cdef int _densify(edges, int* eu, int* ev) except -1:
    """Map arbitrary vertex ids to 0..nv-1; returns nv."""
    cdef dict ids = {}
    cdef int i = 0
    cdef object u, v
    for u, v in edges:
        eu[i] = ids.setdefault(u, len(ids))
        ev[i] = ids.setdefault(v, len(ids))
        i += 1
    return len(ids)


def canonical_edges(edges):
    cdef int m = len(edges)
    cdef int nv
    cdef int* buf
    if m == 0:
        return ()
    buf = <int*> malloc(4 * m * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        nv = _densify(edges, buf, buf + m)
        _canon(m, buf, buf + m, nv, buf + 2 * m, buf + 3 * m)
        return _pairs_to_tuple(m, buf + 2 * m, buf + 3 * m)
    finally:
        free(buf)


cdef int _uf_find(int* parent, int x) noexcept:
    cdef int root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


cdef tuple _split(int m, const int* eu, const int* ev, int nv, unsigned long long mask,
                  int* parent, int* su, int* sv, int* qu, int* qv, int* oa, int* ob):
    cdef int i, ns = 0, nq = 0, ru, rv
    cdef tuple sub, quot
    for i in range(nv):
        parent[i] = i
    for i in range(m):
        if (mask >> i) & 1:
            su[ns] = eu[i]
            sv[ns] = ev[i]
            ns += 1
            ru = _uf_find(parent, eu[i])
            rv = _uf_find(parent, ev[i])
            if ru != rv:
                parent[ru] = rv
    for i in range(m):
        if not (mask >> i) & 1:
            qu[nq] = _uf_find(parent, eu[i])
            qv[nq] = _uf_find(parent, ev[i])
            nq += 1
    _canon(ns, su, sv, nv, oa, ob)
    sub = _pairs_to_tuple(ns, oa, ob)
    _canon(nq, qu, qv, nv, oa, ob)
    quot = _pairs_to_tuple(nq, oa, ob)
    return (sub, quot)


cdef class _Workspace:
    cdef int m, nv
    cdef int* buf

    def __cinit__(self, edges):
        self.m = len(edges)
        if self.m > 63:
            raise OverflowError("at most 63 edges fit in a subset mask")
        # eu, ev, parent, su, sv, qu, qv, oa, ob
        self.buf = <int*> malloc((9 * self.m + 2 * self.m + 1) * sizeof(int))
        if self.buf == NULL:
            raise MemoryError()
        self.nv = _densify(edges, self.buf, self.buf + self.m)

    def __dealloc__(self):
        free(self.buf)

    cdef tuple split(self, unsigned long long mask):
        cdef int m = self.m
        cdef int* b = self.buf
        return _split(m, b, b + m, self.nv, mask,
                      b + 2 * m, b + 4 * m, b + 5 * m, b + 6 * m, b + 7 * m,
                      b + 8 * m, b + 9 * m)


def split_subset(edges, mask):
    cdef _Workspace ws = _Workspace(tuple(edges))
    return ws.split(mask)


def coproduct_counts(edges, lo, hi):
    cdef _Workspace ws = _Workspace(tuple(edges))
    cdef unsigned long long mask, start = lo, stop = hi
    cdef dict counts = {}
    cdef tuple key
    mask = start
    while mask < stop:
        key = ws.split(mask)
        counts[key] = counts.get(key, 0) + 1
        mask += 1
    return counts
