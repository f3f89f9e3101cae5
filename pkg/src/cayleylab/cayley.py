"""Cay(S_n, S) for a transposition set S: construction, BFS layers, local counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from . import tgraph
from .errors import CapExceeded
from .perm import Permutation

DEFAULT_DEGREE_CAP = 5
MAX_DEGREE_CAP = 6

PRESETS = ("complete", "star", "path", "cycle")


def preset_generators(n: int, name: str) -> tuple[Permutation, ...]:
    """Named transposition sets: complete, star {(1,k)}, path {(k,k+1)},
    cycle (path plus (1,n)).  A trailing degree in the name must match n,
    so "cycle4" with n=4 is accepted."""
    base = name.rstrip("0123456789")
    if base != name:
        if int(name[len(base):]) != n:
            raise ValueError(f"preset {name!r} does not match n={n}")
        name = base
    if name == "complete":
        pairs = combinations(range(1, n + 1), 2)
    elif name == "star":
        pairs = ((1, k) for k in range(2, n + 1))
    elif name == "path":
        pairs = ((k, k + 1) for k in range(1, n))
    elif name == "cycle":
        if n < 3:
            raise ValueError("cycle preset needs n >= 3")
        pairs = [(k, k + 1) for k in range(1, n)] + [(1, n)]
    else:
        raise ValueError(f"unknown preset {name!r} (choose from {', '.join(PRESETS)})")
    return tuple(Permutation.transposition(n, i, j) for i, j in pairs)


@dataclass(frozen=True)
class DistancePartition:
    """BFS layers X_0(e), X_1(e), ... from the identity vertex."""

    layers: tuple[frozenset[int], ...]
    layer_of: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.layers) - 1

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)


class CayleyGraph:
    """The Cayley graph of S_n over a generating set of transpositions.

    Vertex i is Permutation.unrank(n, i); alpha and beta are adjacent iff
    beta = tau * alpha for some generator tau.  Immutable after
    construction; adjacency is generator-driven with cached tables.
    """

    def __init__(self, n: int, generators: Iterable[Permutation], cap: int = DEFAULT_DEGREE_CAP):
        if cap > MAX_DEGREE_CAP:
            raise ValueError(f"degree cap cannot exceed {MAX_DEGREE_CAP}")
        if n > cap:
            raise CapExceeded(
                f"whole-graph construction capped at n <= {cap} (got n={n})"
            )
        gens = tuple(sorted(set(generators), key=lambda p: p.rank()))
        if not gens:
            raise ValueError("the generating set is empty")
        # validates degrees and transposition shape
        tgraph_graph = tgraph.transposition_graph(n, gens)
        if not tgraph.is_connected(tgraph_graph):
            raise ValueError("S does not generate S_n: the transposition graph is disconnected")
        self.n = n
        self.generators = gens
        self.transposition_graph = tgraph_graph
        self.vertex_count = math.factorial(n)

        self._vertices = [Permutation.unrank(n, r) for r in range(self.vertex_count)]
        self._images = np.array([p.images for p in self._vertices], dtype=np.uint8)
        self._index = {p.images: r for r, p in enumerate(self._vertices)}
        assert self._vertices[0].is_identity

        table = np.empty((self.vertex_count, len(gens)), dtype=np.int64)
        for k, g in enumerate(gens):
            garr = np.array(g.images, dtype=np.intp)
            composed = self._images[:, garr]  # row v = images of g * vertex(v)
            table[:, k] = [self._index[tuple(int(x) for x in row)] for row in composed]
        self._neighbor_table = table

        self._partition: Optional[DistancePartition] = None
        self._neighbor_sets: Optional[list[frozenset[int]]] = None
        self._edges: Optional[list[tuple[int, int]]] = None
        self._adj: Optional[np.ndarray] = None

    # ------------------------------------------------------------------
    # vertices

    @property
    def identity_index(self) -> int:
        return 0

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def is_complete_set(self) -> bool:
        return self.degree == self.n * (self.n - 1) // 2

    def vertex(self, i: int) -> Permutation:
        return self._vertices[i]

    def index(self, p: Permutation) -> int:
        if p.n != self.n:
            raise ValueError(f"degree mismatch: expected {self.n}, got {p.n}")
        return self._index[p.images]

    def vertices(self) -> list[Permutation]:
        return list(self._vertices)

    def right_action_array(self, sigma: Permutation) -> tuple[int, ...]:
        """Vertex relabeling alpha -> alpha * sigma, as an image tuple."""
        if sigma.n != self.n:
            raise ValueError(f"degree mismatch: expected {self.n}, got {sigma.n}")
        sarr = np.array(sigma.images, dtype=np.uint8)
        composed = sarr[self._images]  # row v = images of vertex(v) * sigma
        return tuple(self._index[tuple(int(x) for x in row)] for row in composed)

    # ------------------------------------------------------------------
    # adjacency

    def neighbor_table(self) -> np.ndarray:
        return self._neighbor_table

    def neighbors(self, v: int) -> frozenset[int]:
        if self._neighbor_sets is None:
            self._neighbor_sets = [
                frozenset(int(x) for x in row) for row in self._neighbor_table
            ]
        return self._neighbor_sets[v]

    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            seen = set()
            for v in range(self.vertex_count):
                for w in self._neighbor_table[v]:
                    seen.add((min(v, int(w)), max(v, int(w))))
            self._edges = sorted(seen)
        return list(self._edges)

    def adjacency_matrix(self) -> np.ndarray:
        if self._adj is None:
            a = np.zeros((self.vertex_count, self.vertex_count), dtype=np.uint8)
            for v in range(self.vertex_count):
                a[v, self._neighbor_table[v]] = 1
            self._adj = a
        return self._adj

    # ------------------------------------------------------------------
    # distance structure

    def distance_partition(self) -> DistancePartition:
        if self._partition is None:
            dist = [-1] * self.vertex_count
            dist[0] = 0
            frontier = [0]
            layers = [frozenset([0])]
            while frontier:
                nxt = []
                d = dist[frontier[0]] + 1
                for v in frontier:
                    for w in self._neighbor_table[v]:
                        w = int(w)
                        if dist[w] < 0:
                            dist[w] = d
                            nxt.append(w)
                if nxt:
                    layers.append(frozenset(nxt))
                frontier = nxt
            if any(d < 0 for d in dist):
                raise RuntimeError("graph is disconnected despite a connected transposition graph")
            self._partition = DistancePartition(tuple(layers), tuple(dist))
        return self._partition

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        if u == v:
            raise ValueError("common_neighbors needs two distinct vertices")
        return self.neighbors(u) & self.neighbors(v)

    def four_cycles_through(self, a: int, b: int, c: int) -> int:
        """Number of distinct 4-cycles (as vertex sets) containing all of a, b, c."""
        if len({a, b, c}) != 3:
            raise ValueError("four_cycles_through needs three distinct vertices")
        candidates = (
            self.common_neighbors(a, b)
            | self.common_neighbors(a, c)
            | self.common_neighbors(b, c)
        ) - {a, b, c}
        count = 0
        for d in candidates:
            if self._has_four_cycle(a, b, c, d):
                count += 1
        return count

    def _has_four_cycle(self, p: int, q: int, r: int, s: int) -> bool:
        nb = self.neighbors
        orders = ((p, q, r, s), (p, q, s, r), (p, r, q, s))
        for w, x, y, z in orders:
            if x in nb(w) and y in nb(x) and z in nb(y) and w in nb(z):
                return True
        return False

    def w_set(self, v: int) -> frozenset[int]:
        """Neighbors of a distance-2 vertex that lie at distance 3 from the identity."""
        part = self.distance_partition()
        if part.layer_of[v] != 2:
            raise ValueError(f"vertex {v} is at distance {part.layer_of[v]}, not 2")
        if part.diameter < 3:
            return frozenset()
        return self.neighbors(v) & part.layers[3]

    # ------------------------------------------------------------------
    # exports

    def summary(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "vertices": self.vertex_count,
            "edges": len(self.edges()),
            "generators": [str(g) for g in self.generators],
            "layer_sizes": list(self.distance_partition().layer_sizes()),
        }

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "generators": [str(g) for g in self.generators],
            "vertices": [str(p) for p in self._vertices],
            "edges": [[u, v] for u, v in self.edges()],
        }

    def to_dimacs(self) -> str:
        edges = self.edges()
        lines = [f"p edge {self.vertex_count} {len(edges)}"]
        for u, v in edges:
            lines.append(f"e {u + 1} {v + 1}")
        return "\n".join(lines) + "\n"


def build_cayley(n: int, generators: Iterable[Permutation], cap: int = DEFAULT_DEGREE_CAP) -> CayleyGraph:
    """Construct Cay(S_n, S).  Rejects sets that do not generate S_n."""
    return CayleyGraph(n, generators, cap=cap)
