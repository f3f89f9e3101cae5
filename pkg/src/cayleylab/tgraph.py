"""Small simple graphs: transposition graphs, line graphs, brute-force automorphisms."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .groups import PermGroup, VertexMap
from .perm import Permutation

# brute-force automorphism search bound; the largest graph the library needs
# is a line graph on 10 vertices
SMALL_AUT_BOUND = 12


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..vertex_count-1, edges as (min, max) pairs."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    labels: Optional[tuple] = None

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge ({u}, {v})")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("label count must match vertex count")

    @classmethod
    def of(cls, vertex_count: int, edges: Iterable[Sequence[int]], labels=None) -> "SimpleGraph":
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(vertex_count, norm, tuple(labels) if labels is not None else None)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbor_sets(self) -> list[frozenset[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return [frozenset(s) for s in nbrs]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def to_dimacs(self) -> str:
        lines = [f"p edge {self.vertex_count} {len(self.edges)}"]
        for u, v in sorted(self.edges):
            lines.append(f"e {u + 1} {v + 1}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.vertex_count,
            "edges": [[u, v] for u, v in sorted(self.edges)],
            "labels": [str(x) for x in self.labels] if self.labels is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def transposition_graph(n: int, gens: Iterable[Permutation]) -> SimpleGraph:
    """Graph on points {1..n} with one edge per transposition in gens."""
    edges = set()
    for g in gens:
        if g.n != n:
            raise ValueError(f"degree mismatch: expected {n}, got {g.n}")
        if not g.is_transposition:
            raise ValueError(f"{g} is not a transposition")
        i, j = sorted(g.support())
        e = (i - 1, j - 1)
        if e in edges:
            raise ValueError(f"duplicate transposition {g}")
        edges.add(e)
    return SimpleGraph.of(n, edges, labels=range(1, n + 1))


def is_connected(g: SimpleGraph) -> bool:
    if g.vertex_count == 0:
        return True
    nbrs = g.neighbor_sets()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in nbrs[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.vertex_count


def line_vertex_order(g: SimpleGraph) -> list[tuple[int, int]]:
    """Edges of g in the order used as line-graph vertices."""
    return sorted(g.edges)


def line_graph(g: SimpleGraph) -> SimpleGraph:
    """Vertices are the edges of g; adjacency is sharing an endpoint.

    Labels carry through: line vertex k is labeled with the (label) pair of
    edge k, so line graphs of transposition graphs are labeled by point pairs.
    """
    base = line_vertex_order(g)
    edges = [
        (a, b)
        for a, b in combinations(range(len(base)), 2)
        if set(base[a]) & set(base[b])
    ]
    if g.labels is not None:
        labels = [(g.labels[u], g.labels[v]) for u, v in base]
    else:
        labels = [(u, v) for u, v in base]
    return SimpleGraph.of(len(base), edges, labels=labels)


def small_graph_automorphisms(g: SimpleGraph, bound: int = SMALL_AUT_BOUND) -> PermGroup:
    """All edge-preserving vertex permutations, by naive degree-pruned backtracking.

    Deliberately independent of the refined search kernel so the two can
    cross-check each other.
    """
    nv = g.vertex_count
    if nv > bound:
        raise ValueError(f"graph has {nv} vertices, brute-force bound is {bound}")
    nbrs = g.neighbor_sets()
    degs = [len(s) for s in nbrs]
    mapping = [-1] * nv
    used = [False] * nv
    found: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v == nv:
            found.append(tuple(mapping))
            return
        for w in range(nv):
            if used[w] or degs[w] != degs[v]:
                continue
            ok = True
            for u in range(v):
                if (u in nbrs[v]) != (mapping[u] in nbrs[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                extend(v + 1)
                mapping[v] = -1
                used[w] = False

    extend(0)
    # post-hoc re-verification: every map must send edges to edges
    for m in found:
        for u, v in g.edges:
            if not g.has_edge(m[u], m[v]):
                raise RuntimeError("search produced a non-automorphism")
    return PermGroup.from_maps(nv, found)


def whitney_check(g: SimpleGraph) -> bool:
    """Whether Aut(g) and Aut(line_graph(g)) correspond bijectively via the
    induced action on edges.  Defined for connected graphs on >= 5 vertices."""
    if g.vertex_count < 5:
        raise ValueError("whitney_check needs at least 5 vertices")
    if not is_connected(g):
        raise ValueError("whitney_check needs a connected graph")
    aut_g = small_graph_automorphisms(g)
    lg = line_graph(g)
    aut_l = small_graph_automorphisms(lg)
    base = line_vertex_order(g)
    index = {e: i for i, e in enumerate(base)}
    induced = set()
    for m in aut_g:
        img = tuple(
            index[(min(m(u), m(v)), max(m(u), m(v)))] for u, v in base
        )
        if not aut_l.contains(VertexMap(img)):
            return False
        induced.add(img)
    return len(induced) == aut_g.order == aut_l.order
