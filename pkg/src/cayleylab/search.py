"""Kernel dispatch for the automorphism search.

Two interchangeable kernels implement the same backtracking search: a
compiled Cython extension (built at install time when a C compiler and
Cython are available) and a pure-python fallback.  The compiled kernel is
preferred; set CAYLEYLAB_PURE_PYTHON=1 or pass backend="python" to force
the fallback.  Both kernels are deterministic and must agree bit-for-bit.
"""

from __future__ import annotations

import os

import numpy as np

from . import _search_py

try:
    from . import _search_cy
except ImportError:
    _search_cy = None

# the compiled kernel preallocates count-indexed mask tables; cap its input
_COMPILED_VERTEX_CAP = 512


def available_backends() -> tuple[str, ...]:
    return ("compiled", "python") if _search_cy is not None else ("python",)


def backend_name(backend: str | None = None) -> str:
    """Resolve a backend request to "compiled" or "python"."""
    if backend in (None, "auto"):
        if os.environ.get("CAYLEYLAB_PURE_PYTHON"):
            return "python"
        return "compiled" if _search_cy is not None else "python"
    if backend == "python":
        return "python"
    if backend == "compiled":
        if _search_cy is None:
            raise RuntimeError("compiled search kernel is not built")
        return "compiled"
    raise ValueError(f"unknown backend {backend!r}")


def _prepare(adj: np.ndarray):
    a = np.asarray(adj)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("adjacency matrix must be square")
    a = (a != 0).astype(np.int32)
    if np.diagonal(a).any():
        raise ValueError("adjacency matrix has loops")
    if not np.array_equal(a, a.T):
        raise ValueError("adjacency matrix must be symmetric")
    nv = a.shape[0]
    cn = a @ a
    deg = a.sum(axis=1)
    nbr = [int.from_bytes(np.packbits(a[v], bitorder="little").tobytes(), "little") for v in range(nv)]

    # initial domains: same degree and same sorted common-neighbor-count row
    sig_mask: dict[tuple, int] = {}
    sigs = []
    for v in range(nv):
        s = (int(deg[v]), tuple(sorted(int(x) for x in cn[v])))
        sigs.append(s)
        sig_mask[s] = sig_mask.get(s, 0) | (1 << v)
    cand0 = [sig_mask[s] for s in sigs]
    return nv, a, cn, nbr, cand0


def _pack_words(masks: list[int], nv: int) -> np.ndarray:
    nw = (nv + 63) // 64
    out = np.zeros((len(masks), nw), dtype=np.uint64)
    for i, m in enumerate(masks):
        for w in range(nw):
            out[i, w] = (m >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return out


def find_automorphisms(
    adj: np.ndarray,
    pinned=(),
    limit: int | None = None,
    backend: str | None = None,
) -> list[tuple[int, ...]]:
    """All vertex bijections preserving the edge set, as sorted image tuples.

    pinned: (vertex, image) pairs fixed before the search; limit: stop after
    that many solutions (the collected prefix is deterministic).
    """
    nv, a, cn, nbr, cand0 = _prepare(adj)
    pins = tuple((int(v), int(w)) for v, w in pinned)
    for v, w in pins:
        if not (0 <= v < nv and 0 <= w < nv):
            raise ValueError(f"pinned pair {(v, w)} out of range")
    name = backend_name(backend)
    if name == "compiled" and nv > _COMPILED_VERTEX_CAP:
        name = "python"
    if name == "python":
        return _search_py.search(nbr, cn.tolist(), cand0, pins, limit)

    nw = (nv + 63) // 64
    nbr_words = _pack_words(nbr, nv)
    cand_words = _pack_words(cand0, nv)
    maxc = int(cn.max(initial=0))
    cn_mask = np.zeros((nv, maxc + 1, nw), dtype=np.uint64)
    cols = np.arange(nv)
    rows = np.repeat(np.arange(nv), nv)
    bits = (np.uint64(1) << (cols & 63).astype(np.uint64))
    np.bitwise_or.at(
        cn_mask,
        (rows, cn.ravel(), np.tile(cols >> 6, nv)),
        np.tile(bits, nv),
    )
    pins_arr = np.asarray(pins, dtype=np.int32).reshape(-1, 2)
    return _search_cy.search(
        np.ascontiguousarray(nbr_words),
        np.ascontiguousarray(cn.astype(np.int32)),
        np.ascontiguousarray(cand_words),
        np.ascontiguousarray(cn_mask.reshape(nv, -1)),
        maxc,
        np.ascontiguousarray(pins_arr),
        -1 if limit is None else int(limit),
    )


def root_candidates(adj: np.ndarray, pinned=()) -> tuple[int | None, tuple[int, ...]]:
    """First branching vertex and its candidate images (for splitting work)."""
    nv, a, cn, nbr, cand0 = _prepare(adj)
    pins = tuple((int(v), int(w)) for v, w in pinned)
    return _search_py.root_candidates(nbr, cn.tolist(), cand0, pins)
