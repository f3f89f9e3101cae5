"""Automorphism groups of Cayley graphs: full group, stabilizers, the little
group, restriction to the generator layer, and the normality decision."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import search as search_mod
from . import tgraph
from .cayley import CayleyGraph
from .errors import CapExceeded
from .groups import NormalityCheck, PermGroup, VertexMap, is_normal_in

SEARCH_DEGREE_CAP = 5


def _reverify(X: CayleyGraph, maps: np.ndarray) -> None:
    """Independent edge-by-edge check of candidate automorphisms.

    Each row must be a bijection sending every edge to an edge; raises on
    any violation rather than filtering, since the search is supposed to be
    exact.
    """
    adj = X.adjacency_matrix()
    edges = np.array(X.edges(), dtype=np.int64)
    m = np.asarray(maps, dtype=np.int64).reshape(-1, X.vertex_count)
    for start in range(0, m.shape[0], 2000):
        block = m[start : start + 2000]
        if not np.all(np.sort(block, axis=1) == np.arange(X.vertex_count)):
            raise RuntimeError("search emitted a non-bijection")
        gu = block[:, edges[:, 0]]
        gv = block[:, edges[:, 1]]
        if not adj[gu, gv].all():
            raise RuntimeError("search emitted a map that breaks an edge")


def _search_X(X: CayleyGraph, pinned=(), limit=None, backend=None) -> list[tuple[int, ...]]:
    return search_mod.find_automorphisms(
        X.adjacency_matrix(), pinned=pinned, limit=limit, backend=backend
    )


def _subtree(args):
    adj, pinned, backend = args
    return search_mod.find_automorphisms(adj, pinned=pinned, backend=backend)


def _stabilizer_search(X: CayleyGraph, jobs: int, backend) -> list[tuple[int, ...]]:
    pins = ((0, 0),)
    if jobs <= 1:
        return _search_X(X, pinned=pins, backend=backend)
    v, ws = search_mod.root_candidates(X.adjacency_matrix(), pinned=pins)
    if v is None:
        return _search_X(X, pinned=pins, backend=backend)
    adj = X.adjacency_matrix()
    tasks = [(adj, pins + ((v, w),), backend) for w in ws]
    sols: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_subtree, tasks):
            sols.extend(part)
    return sorted(sols)


def _closure_order(arrays: list[np.ndarray], dom: int) -> set[bytes]:
    ident = np.arange(dom, dtype=np.uint16)
    elems = {ident.tobytes()}
    frontier = [ident]
    garrs = [a.astype(np.uint16) for a in arrays]
    while frontier:
        nxt = []
        for f in frontier:
            for g in garrs:
                prod = g[f]
                b = prod.tobytes()
                if b not in elems:
                    elems.add(b)
                    nxt.append(prod)
        frontier = nxt
    return elems


def _reduce_generators(arrays: list[np.ndarray], dom: int) -> list[np.ndarray]:
    """Greedy generating subset: keep a map only if it is not already generated."""
    chosen: list[np.ndarray] = []
    have = {np.arange(dom, dtype=np.uint16).tobytes()}
    for arr in arrays:
        if arr.astype(np.uint16).tobytes() in have:
            continue
        chosen.append(arr)
        have = _closure_order(chosen, dom)
    return chosen


def automorphism_group(X: CayleyGraph, *, jobs: int = 1, backend: str | None = None) -> PermGroup:
    """The full automorphism group of X, materialized.

    Strategy: complete search for the stabilizer of the identity vertex,
    then an orbit sweep that finds one automorphism per reachable image of
    the identity; the group is the set of products stabilizer x transversal.
    Every element is re-verified edge-by-edge afterwards.
    """
    if X.n > SEARCH_DEGREE_CAP:
        raise CapExceeded(
            f"automorphism search capped at n <= {SEARCH_DEGREE_CAP} (got n={X.n})"
        )
    nv = X.vertex_count
    stab = np.array(_stabilizer_search(X, jobs, backend), dtype=np.int64)
    _reverify(X, stab)

    # orbit of the identity vertex under the automorphisms found so far,
    # with one representative map per reached vertex
    reps: dict[int, np.ndarray] = {0: np.arange(nv, dtype=np.int64)}
    pool: list[np.ndarray] = list(stab)
    extras: list[np.ndarray] = []
    dead: set[int] = set()
    while True:
        grown = True
        while grown:
            grown = False
            for v in sorted(reps):
                rv = reps[v]
                for g in pool:
                    w = int(g[v])
                    if w not in reps:
                        reps[w] = g[rv]
                        grown = True
        missing = [t for t in range(nv) if t not in reps and t not in dead]
        if not missing:
            break
        t = missing[0]
        sol = _search_X(X, pinned=((0, t),), limit=1, backend=backend)
        if sol:
            arr = np.array(sol[0], dtype=np.int64)
            _reverify(X, arr)
            reps[t] = arr
            pool.append(arr)
            extras.append(arr)
        else:
            dead.add(t)

    targets = sorted(reps)
    blocks = [reps[t][stab] for t in targets]
    all_maps = np.concatenate(blocks, axis=0)
    _reverify(X, all_maps)
    elements = frozenset(row.astype(np.uint16).tobytes() for row in all_maps)
    if len(elements) != len(stab) * len(targets):
        raise RuntimeError("stabilizer/transversal products are not distinct")

    gen_arrays = _reduce_generators([row for row in stab], nv) + extras
    gens = tuple(VertexMap(tuple(int(x) for x in a)) for a in gen_arrays)
    return PermGroup(nv, generators=gens, element_bytes=elements)


def vertex_stabilizer(G: PermGroup, v: int) -> PermGroup:
    """Subgroup of maps fixing vertex v."""
    mat = G.element_matrix()
    sub = mat[mat[:, v] == v]
    return PermGroup.from_maps(G.domain_size, sub)


def little_group(X: CayleyGraph, backend: str | None = None) -> PermGroup:
    """Automorphisms fixing the identity vertex and each of its neighbors,
    found by direct constrained search (not by filtering the full group)."""
    if X.n > SEARCH_DEGREE_CAP:
        raise CapExceeded(
            f"automorphism search capped at n <= {SEARCH_DEGREE_CAP} (got n={X.n})"
        )
    part = X.distance_partition()
    pins = ((0, 0),) + tuple((v, v) for v in sorted(part.layers[1]))
    sols = _search_X(X, pinned=pins, backend=backend)
    arr = np.array(sols, dtype=np.int64)
    _reverify(X, arr)
    return PermGroup.from_maps(X.vertex_count, arr)


@dataclass(frozen=True)
class RestrictionToS:
    """Action of an identity-fixing map on the generator layer, in the vertex
    order of the line graph of the transposition graph."""

    mapping: VertexMap
    valid: bool


def _line_setup(X: CayleyGraph):
    lt = tgraph.line_graph(X.transposition_graph)
    base = tgraph.line_vertex_order(X.transposition_graph)
    edge_index = {e: i for i, e in enumerate(base)}
    gen_vertices = []
    gen_lt = []
    for g in X.generators:
        i, j = sorted(g.support())
        gen_vertices.append(X.index(g))
        gen_lt.append(edge_index[(i - 1, j - 1)])
    vertex_to_lt = dict(zip(gen_vertices, gen_lt))
    return lt, gen_vertices, gen_lt, vertex_to_lt


def restrict_to_S(X: CayleyGraph, g: VertexMap) -> RestrictionToS:
    """Induced map on the generator layer, flagged valid iff it preserves
    adjacency of the line graph of the transposition graph."""
    if g.images[X.identity_index] != X.identity_index:
        raise ValueError("map must fix the identity vertex")
    lt, gen_vertices, gen_lt, vertex_to_lt = _line_setup(X)
    img = [-1] * len(gen_vertices)
    for k, sv in enumerate(gen_vertices):
        iv = g.images[sv]
        if iv not in vertex_to_lt:
            raise ValueError("map does not preserve the neighbors of the identity")
        img[gen_lt[k]] = vertex_to_lt[iv]
    mapping = VertexMap(tuple(img))
    valid = all(lt.has_edge(mapping(u), mapping(v)) for u, v in lt.edges)
    return RestrictionToS(mapping, valid)


@dataclass(frozen=True)
class RestrictionReport:
    kernel_order: int
    image_order: int
    aut_lt_order: int
    surjective: bool
    all_valid: bool


def restriction_analysis(X: CayleyGraph, group: Optional[PermGroup] = None) -> RestrictionReport:
    """Kernel and image of the restriction map from the identity stabilizer
    to the automorphisms of the line graph of the transposition graph."""
    G = group if group is not None else automorphism_group(X)
    ge = vertex_stabilizer(G, X.identity_index)
    lt, gen_vertices, gen_lt, _ = _line_setup(X)
    kernel = 0
    image = set()
    all_valid = True
    for m in ge:
        res = restrict_to_S(X, m)
        all_valid = all_valid and res.valid
        if res.mapping.is_identity:
            kernel += 1
        image.add(res.mapping.images)
    aut_lt = tgraph.small_graph_automorphisms(lt)
    surjective = {VertexMap(i) for i in image} == set(aut_lt.maps())
    if ge.order != kernel * len(image):
        raise RuntimeError("stabilizer does not factor through the restriction map")
    return RestrictionReport(
        kernel_order=kernel,
        image_order=len(image),
        aut_lt_order=aut_lt.order,
        surjective=surjective,
        all_valid=all_valid,
    )


@dataclass(frozen=True)
class CayleyNormalityReport:
    """Two-route normality verdict.

    conjugation: certificate-backed test of whether right translations form
    a normal subgroup of the automorphism group (always computed).
    little_group_order: order of the little group, computed for n >= 5 only,
    where trivial little group is equivalent to normality.
    """

    normal: bool
    conjugation: NormalityCheck
    little_group_order: Optional[int]

    @property
    def little_group_normal(self) -> Optional[bool]:
        if self.little_group_order is None:
            return None
        return self.little_group_order == 1


def right_translation_group(X: CayleyGraph) -> PermGroup:
    """The vertex action of right multiplication, generated by the connection set."""
    gens = [VertexMap(X.right_action_array(t)) for t in X.generators]
    return PermGroup.closure(gens)


def is_normal_cayley(
    X: CayleyGraph, group: Optional[PermGroup] = None, backend: str | None = None
) -> CayleyNormalityReport:
    """Decide normality by conjugation, and for n >= 5 also by the little
    group criterion; a disagreement between the two is an internal error."""
    G = group if group is not None else automorphism_group(X, backend=backend)
    conj = is_normal_in(right_translation_group(X), G)
    lg_order: Optional[int] = None
    if X.n >= 5:
        lg_order = little_group(X, backend=backend).order
        if (lg_order == 1) != conj.normal:
            raise RuntimeError(
                "normality criteria disagree: conjugation says "
                f"{conj.normal}, little group has order {lg_order}"
            )
    return CayleyNormalityReport(normal=conj.normal, conjugation=conj, little_group_order=lg_order)


@dataclass(frozen=True)
class DistinctNeighborResult:
    ok: bool
    witness: Optional[tuple[int, int]] = None


def distinct_neighbor_check(X: CayleyGraph, k: int) -> DistinctNeighborResult:
    """Whether all distinct vertices at distance k have distinct neighbor
    sets one layer down.  Stated for the complete set with n >= 5, k >= 3."""
    if not X.is_complete_set:
        raise ValueError("distinct_neighbor_check needs the complete transposition set")
    if X.n < 5:
        raise ValueError("distinct_neighbor_check needs n >= 5")
    part = X.distance_partition()
    if not 3 <= k <= part.diameter:
        raise ValueError(f"k must be in 3..{part.diameter}, got {k}")
    down = part.layers[k - 1]
    seen: dict[frozenset[int], int] = {}
    for v in sorted(part.layers[k]):
        key = X.neighbors(v) & down
        if key in seen:
            return DistinctNeighborResult(False, (seen[key], v))
        seen[key] = v
    return DistinctNeighborResult(True, None)


def aut_report(X: CayleyGraph, *, jobs: int = 1, backend: str | None = None) -> dict:
    """Everything the CLI prints for one graph, as a JSON-friendly dict."""
    G = automorphism_group(X, jobs=jobs, backend=backend)
    ge = vertex_stabilizer(G, X.identity_index)
    lg = little_group(X, backend=backend)
    normality = is_normal_cayley(X, group=G, backend=backend)
    restriction = restriction_analysis(X, group=G)
    witness = None
    if normality.conjugation.witness is not None:
        g, n_map, conj = normality.conjugation.witness
        witness = {
            "conjugator": list(g.images),
            "translation": list(n_map.images),
            "conjugate": list(conj.images),
        }
    return {
        "graph": X.summary(),
        "order": G.order,
        "generators": [list(g.images) for g in G.generators],
        "stabilizer_order": ge.order,
        "little_group_order": lg.order,
        "normal": {
            "verdict": normality.normal,
            "conjugation_test": normality.conjugation.normal,
            "little_group_test": normality.little_group_normal,
            "witness": witness,
        },
        "restriction": {
            "kernel_order": restriction.kernel_order,
            "image_order": restriction.image_order,
            "aut_line_graph_order": restriction.aut_lt_order,
            "surjective": restriction.surjective,
        },
    }
