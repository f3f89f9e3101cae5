# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled backtracking kernel for graph automorphism search.

Same algorithm as _search_py (bitmask forward checking over adjacency and
common-neighbor-count constraints), with candidate sets held in uint64
words.  Kept in lockstep with the pure-python kernel: identical inputs must
produce identical output.
"""

import numpy as np

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef int _assign(int v, int w, int nv, int nw,
                 unsigned long long[:, ::1] nbr,
                 int[:, ::1] cn,
                 unsigned long long[:, ::1] cn_mask,
                 unsigned long long[:, ::1] cand,
                 int[::1] mapping,
                 unsigned long long[::1] used) nogil:
    """Record v -> w and propagate; partial writes are rolled back by the
    caller restoring cand from a snapshot."""
    cdef int u, k, cnt, alive, adjacent
    cdef unsigned long long m
    mapping[v] = w
    used[w >> 6] |= (<unsigned long long>1) << (w & 63)
    for u in range(nv):
        if mapping[u] >= 0:
            continue
        cnt = cn[v, u]
        adjacent = <int>((nbr[v, u >> 6] >> (u & 63)) & 1)
        alive = 0
        for k in range(nw):
            m = cand[u, k]
            if adjacent:
                m &= nbr[w, k]
            else:
                m &= ~nbr[w, k]
            m &= cn_mask[w, cnt * nw + k]
            cand[u, k] = m
            if m & ~used[k]:
                alive = 1
        if not alive:
            return 0
    return 1


cdef int _select(int nv, int nw,
                 unsigned long long[:, ::1] cand,
                 int[::1] mapping,
                 unsigned long long[::1] used) nogil:
    cdef int v, k, c, best_v = -1, best_c = -1
    for v in range(nv):
        if mapping[v] >= 0:
            continue
        c = 0
        for k in range(nw):
            c += __builtin_popcountll(cand[v, k] & ~used[k])
        if best_c < 0 or c < best_c:
            best_v = v
            best_c = c
            if c == 0:
                break
    return best_v


def search(unsigned long long[:, ::1] nbr,
           int[:, ::1] cn,
           unsigned long long[:, ::1] cand0,
           unsigned long long[:, ::1] cn_mask,
           int maxc,
           int[:, ::1] pins,
           int limit):
    cdef int nv = nbr.shape[0]
    cdef int nw = nbr.shape[1]
    cdef int i, k, v, w, lvl, depth0, ok
    cdef unsigned long long t, bit

    cand_arr = np.array(cand0, dtype=np.uint64, copy=True)
    snaps_arr = np.empty((nv + 1, nv, nw), dtype=np.uint64)
    trial_arr = np.empty((nv + 1, nw), dtype=np.uint64)
    mapping_arr = np.full(nv, -1, dtype=np.int32)
    used_arr = np.zeros(nw, dtype=np.uint64)
    sel_arr = np.empty(nv + 1, dtype=np.int32)
    tried_arr = np.empty(nv + 1, dtype=np.int32)

    cdef unsigned long long[:, ::1] cand = cand_arr
    cdef unsigned long long[:, :, ::1] snaps = snaps_arr
    cdef unsigned long long[:, ::1] trial = trial_arr
    cdef int[::1] mapping = mapping_arr
    cdef unsigned long long[::1] used = used_arr
    cdef int[::1] sel = sel_arr
    cdef int[::1] tried = tried_arr

    # pins
    for i in range(pins.shape[0]):
        v = pins[i, 0]
        w = pins[i, 1]
        if mapping[v] == w:
            continue
        if mapping[v] >= 0:
            return []
        if (used[w >> 6] >> (w & 63)) & 1:
            return []
        if not (cand[v, w >> 6] >> (w & 63)) & 1:
            return []
        if not _assign(v, w, nv, nw, nbr, cn, cn_mask, cand, mapping, used):
            return []

    depth0 = 0
    for v in range(nv):
        if mapping[v] >= 0:
            depth0 += 1
    sols = []
    if depth0 == nv:
        sols.append(tuple(int(mapping[i]) for i in range(nv)))
        return sols

    lvl = 0
    sel[0] = _select(nv, nw, cand, mapping, used)
    for k in range(nw):
        trial[0, k] = cand[sel[0], k] & ~used[k]
    snaps_arr[0] = cand_arr
    tried[0] = -1

    while lvl >= 0:
        v = sel[lvl]
        if tried[lvl] >= 0:
            w = tried[lvl]
            mapping[v] = -1
            used[w >> 6] &= ~((<unsigned long long>1) << (w & 63))
            for i in range(nv):
                for k in range(nw):
                    cand[i, k] = snaps[lvl, i, k]
            tried[lvl] = -1
        # next candidate image, lowest bit first
        w = -1
        for k in range(nw):
            t = trial[lvl, k]
            if t:
                w = 64 * k + __builtin_ctzll(t)
                trial[lvl, k] = t & (t - 1)
                break
        if w < 0:
            lvl -= 1
            continue
        tried[lvl] = w
        ok = _assign(v, w, nv, nw, nbr, cn, cn_mask, cand, mapping, used)
        if not ok:
            continue
        if depth0 + lvl + 1 == nv:
            sols.append(tuple(int(mapping[i]) for i in range(nv)))
            if limit >= 0 and len(sols) >= limit:
                break
            continue
        lvl += 1
        sel[lvl] = _select(nv, nw, cand, mapping, used)
        for k in range(nw):
            trial[lvl, k] = cand[sel[lvl], k] & ~used[k]
        snaps_arr[lvl] = cand_arr
        tried[lvl] = -1

    sols.sort()
    return sols
