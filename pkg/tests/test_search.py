"""Kernel equivalence and correctness against brute force."""

import random
from itertools import combinations, permutations

import numpy as np
import pytest

from cayleylab import search
from cayleylab.cayley import build_cayley, preset_generators


def brute_force(adj):
    nv = adj.shape[0]
    edges = [(u, v) for u, v in combinations(range(nv), 2) if adj[u, v]]
    out = []
    for p in permutations(range(nv)):
        if all(adj[p[u], p[v]] for u, v in edges):
            out.append(p)
    return sorted(out)


def random_graph(nv, p, rng):
    adj = np.zeros((nv, nv), dtype=np.uint8)
    for u, v in combinations(range(nv), 2):
        if rng.random() < p:
            adj[u, v] = adj[v, u] = 1
    return adj


BACKENDS = search.available_backends()


@pytest.mark.parametrize("backend", BACKENDS)
def test_small_random_graphs_match_brute_force(backend):
    rng = random.Random(0)
    for trial in range(25):
        adj = random_graph(6, rng.choice([0.2, 0.5, 0.8]), rng)
        got = search.find_automorphisms(adj, backend=backend)
        assert got == brute_force(adj), f"trial {trial}"


def test_backends_agree_on_cayley_graphs():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    for n, preset in ((3, "complete"), (4, "complete"), (4, "star"), (4, "cycle")):
        adj = build_cayley(n, preset_generators(n, preset)).adjacency_matrix()
        assert search.find_automorphisms(adj, backend="python") == search.find_automorphisms(
            adj, backend="compiled"
        )


@pytest.mark.parametrize("backend", BACKENDS)
def test_pinned_search(backend):
    X = build_cayley(3, preset_generators(3, "complete"))
    adj = X.adjacency_matrix()
    full = search.find_automorphisms(adj, backend=backend)
    stab = search.find_automorphisms(adj, pinned=((0, 0),), backend=backend)
    assert len(full) == 72 and len(stab) == 12
    assert stab == [m for m in full if m[0] == 0]
    # contradictory pins
    assert search.find_automorphisms(adj, pinned=((0, 0), (0, 1)), backend=backend) == []


@pytest.mark.parametrize("backend", BACKENDS)
def test_limit_returns_prefix_of_dfs(backend):
    adj = build_cayley(3, preset_generators(3, "complete")).adjacency_matrix()
    one = search.find_automorphisms(adj, limit=1, backend=backend)
    assert len(one) == 1
    five = search.find_automorphisms(adj, limit=5, backend=backend)
    assert len(five) == 5


def test_deterministic_output():
    adj = build_cayley(4, preset_generators(4, "star")).adjacency_matrix()
    runs = [search.find_automorphisms(adj) for _ in range(2)]
    assert runs[0] == runs[1]


def test_root_candidates_split_partitions_search():
    X = build_cayley(4, preset_generators(4, "complete"))
    adj = X.adjacency_matrix()
    pins = ((0, 0),)
    v, ws = search.root_candidates(adj, pinned=pins)
    assert v is not None and len(ws) >= 1
    merged = []
    for w in ws:
        merged.extend(search.find_automorphisms(adj, pinned=pins + ((v, w),)))
    assert sorted(merged) == search.find_automorphisms(adj, pinned=pins)


def test_rejects_bad_matrices():
    with pytest.raises(ValueError):
        search.find_automorphisms(np.ones((3, 3), dtype=np.uint8))  # loops
    bad = np.zeros((3, 3), dtype=np.uint8)
    bad[0, 1] = 1
    with pytest.raises(ValueError):
        search.find_automorphisms(bad)  # not symmetric


def test_backend_name():
    assert search.backend_name("python") == "python"
    with pytest.raises(ValueError):
        search.backend_name("fortran")
