"""Pure-python backtracking kernel for graph automorphism search.

Bitmask forward checking: every unmapped vertex carries a candidate-image
mask that shrinks under two constraints whenever a vertex is assigned --
adjacency to the new image must match adjacency to the assigned vertex, and
the common-neighbor count against the new image must equal the count against
the assigned vertex.  Both are preserved by every automorphism, so pruning
never loses a solution.

This module is kept in lockstep with the compiled kernel in _search_cy.pyx:
identical inputs must produce identical output.
"""

from __future__ import annotations


def _init_state(nbr, cn, cand0):
    nv = len(nbr)
    cn_mask = []
    for w in range(nv):
        row: dict[int, int] = {}
        cw = cn[w]
        for x in range(nv):
            row[cw[x]] = row.get(cw[x], 0) | (1 << x)
        cn_mask.append(row)
    return list(cand0), [-1] * nv, cn_mask


def _assign(v, w, nbr, cn, cn_mask, cand, mapping, used):
    """Record v -> w and propagate; returns (ok, used). No rollback on failure:
    the caller restores cand from a snapshot."""
    mapping[v] = w
    used |= 1 << w
    nv = len(nbr)
    nbr_v = nbr[v]
    nbr_w = nbr[w]
    not_nbr_w = ~nbr_w
    cn_v = cn[v]
    cn_w = cn_mask[w]
    for u in range(nv):
        if mapping[u] >= 0:
            continue
        m = cand[u]
        m &= nbr_w if (nbr_v >> u) & 1 else not_nbr_w
        m &= cn_w.get(cn_v[u], 0)
        cand[u] = m
        if m & ~used == 0:
            return False, used
    return True, used


def _select(cand, mapping, used):
    """Unmapped vertex with the fewest remaining candidates; lowest index wins ties."""
    best_v = -1
    best_c = -1
    for v in range(len(cand)):
        if mapping[v] >= 0:
            continue
        c = (cand[v] & ~used).bit_count()
        if best_c < 0 or c < best_c:
            best_v, best_c = v, c
            if c == 0:
                break
    return best_v


def _apply_pins(pinned, nbr, cn, cn_mask, cand, mapping):
    used = 0
    for v, w in pinned:
        if mapping[v] == w:
            continue
        if mapping[v] >= 0 or (used >> w) & 1 or not (cand[v] >> w) & 1:
            return None
        ok, used = _assign(v, w, nbr, cn, cn_mask, cand, mapping, used)
        if not ok:
            return None
    return used


def search(nbr, cn, cand0, pinned=(), limit=None):
    """All constraint-preserving complete bijections, as sorted image tuples.

    nbr: per-vertex neighbor bitmask.  cn: dense common-neighbor-count
    matrix.  cand0: initial per-vertex candidate mask.  pinned: (vertex,
    image) pairs fixed before the search.  limit: stop after collecting
    this many solutions.
    """
    nv = len(nbr)
    cand, mapping, cn_mask = _init_state(nbr, cn, cand0)
    used = _apply_pins(pinned, nbr, cn, cn_mask, cand, mapping)
    if used is None:
        return []
    depth = sum(1 for x in mapping if x >= 0)
    if depth == nv:
        return [tuple(mapping)]

    sols: list[tuple[int, ...]] = []
    # one frame per level: [vertex, remaining trial mask, cand snapshot, tried image]
    v0 = _select(cand, mapping, used)
    frames = [[v0, cand[v0] & ~used, cand[:], -1]]
    while frames:
        frame = frames[-1]
        v, rem, snap, w_prev = frame
        if w_prev >= 0:
            mapping[v] = -1
            used &= ~(1 << w_prev)
            cand[:] = snap
            frame[3] = -1
        if rem == 0:
            frames.pop()
            continue
        w = (rem & -rem).bit_length() - 1
        frame[1] = rem & (rem - 1)
        frame[3] = w
        ok, used = _assign(v, w, nbr, cn, cn_mask, cand, mapping, used)
        if not ok:
            continue
        if depth + len(frames) == nv:
            sols.append(tuple(mapping))
            if limit is not None and len(sols) >= limit:
                break
            continue
        nxt = _select(cand, mapping, used)
        frames.append([nxt, cand[nxt] & ~used, cand[:], -1])
    return sorted(sols)


def root_candidates(nbr, cn, cand0, pinned=()):
    """First branching point of the search: (vertex, candidate images).

    Used to split the root of a search across workers; the union of the
    per-candidate subtree searches equals the unsplit search.
    """
    nv = len(nbr)
    cand, mapping, cn_mask = _init_state(nbr, cn, cand0)
    used = _apply_pins(pinned, nbr, cn, cn_mask, cand, mapping)
    if used is None:
        return None, ()
    if all(x >= 0 for x in mapping):
        return None, ()
    v = _select(cand, mapping, used)
    rem = cand[v] & ~used
    ws = []
    while rem:
        ws.append((rem & -rem).bit_length() - 1)
        rem &= rem - 1
    return v, tuple(ws)
