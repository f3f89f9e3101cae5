from itertools import combinations

import pytest

from cayleylab.perm import Permutation
from cayleylab.tgraph import (
    SimpleGraph,
    is_connected,
    line_graph,
    line_vertex_order,
    small_graph_automorphisms,
    transposition_graph,
    whitney_check,
)


def T(n, pairs):
    return transposition_graph(n, [Permutation.transposition(n, i, j) for i, j in pairs])


def test_transposition_graph_shapes():
    k4 = T(4, combinations(range(1, 5), 2))
    assert len(k4.edges) == 6 and k4.vertex_count == 4
    c4 = T(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert len(c4.edges) == 4
    assert all(c4.degree(v) == 2 for v in range(4))
    star = T(4, [(1, 2), (1, 3), (1, 4)])
    assert star.degree(0) == 3 and all(star.degree(v) == 1 for v in range(1, 4))
    assert star.labels == (1, 2, 3, 4)


def test_transposition_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        transposition_graph(4, [Permutation.parse("(1,2,3)", 4)])
    with pytest.raises(ValueError):
        transposition_graph(4, [Permutation.transposition(5, 1, 2)])
    t = Permutation.transposition(4, 1, 2)
    with pytest.raises(ValueError):
        transposition_graph(4, [t, t])


def test_is_connected():
    assert is_connected(T(5, combinations(range(1, 6), 2)))
    assert not is_connected(T(4, [(1, 2)]))  # isolated vertices
    assert is_connected(T(5, [(1, 2), (2, 3), (3, 4), (4, 5)]))  # path


def test_line_graph_small_cases():
    star = T(4, [(1, 2), (1, 3), (1, 4)])
    l_star = line_graph(star)
    assert l_star.vertex_count == 3 and len(l_star.edges) == 3  # K3
    path3 = SimpleGraph.of(3, [(0, 1), (1, 2)])
    l_path = line_graph(path3)
    assert l_path.vertex_count == 2 and len(l_path.edges) == 1
    k5 = SimpleGraph.of(5, combinations(range(5), 2))
    l_k5 = line_graph(k5)
    assert l_k5.vertex_count == 10
    assert all(l_k5.degree(v) == 6 for v in range(10))


def test_line_graph_degree_identity():
    g = T(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)])
    lg = line_graph(g)
    for k, (u, v) in enumerate(line_vertex_order(g)):
        assert lg.degree(k) == g.degree(u) + g.degree(v) - 2


def test_line_graph_carries_labels():
    star = T(4, [(1, 2), (1, 3), (1, 4)])
    lg = line_graph(star)
    assert lg.labels == ((1, 2), (1, 3), (1, 4))


def test_small_graph_automorphisms_orders():
    k5 = SimpleGraph.of(5, combinations(range(5), 2))
    assert small_graph_automorphisms(k5).order == 120
    c4 = SimpleGraph.of(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert small_graph_automorphisms(c4).order == 8  # dihedral
    star = SimpleGraph.of(4, [(0, 1), (0, 2), (0, 3)])
    assert small_graph_automorphisms(star).order == 6


def test_small_graph_automorphisms_preserve_edges():
    g = T(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    for m in small_graph_automorphisms(g):
        for u, v in g.edges:
            assert g.has_edge(m(u), m(v))


def test_small_graph_automorphisms_bound():
    big = SimpleGraph.of(13, [(i, i + 1) for i in range(12)])
    with pytest.raises(ValueError):
        small_graph_automorphisms(big)


def test_whitney_check():
    k5 = SimpleGraph.of(5, combinations(range(5), 2))
    assert whitney_check(k5)
    assert small_graph_automorphisms(k5).order == small_graph_automorphisms(line_graph(k5)).order == 120
    path5 = SimpleGraph.of(5, [(i, i + 1) for i in range(4)])
    assert whitney_check(path5)
    assert small_graph_automorphisms(path5).order == 2
    # exhaustive correspondence for every connected graph on exactly 5 vertices
    count = 0
    for bits in range(1 << 10):
        edges = [e for k, e in enumerate(combinations(range(5), 2)) if bits >> k & 1]
        g = SimpleGraph.of(5, edges)
        if is_connected(g):
            count += 1
            assert whitney_check(g)
    assert count > 0


def test_whitney_check_preconditions():
    star3 = SimpleGraph.of(4, [(0, 1), (0, 2), (0, 3)])  # the 4-vertex exception
    with pytest.raises(ValueError):
        whitney_check(star3)
    disconnected = SimpleGraph.of(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    with pytest.raises(ValueError):
        whitney_check(disconnected)


def test_exports():
    g = T(3, [(1, 2), (2, 3)])
    dimacs = g.to_dimacs()
    lines = dimacs.strip().split("\n")
    assert lines[0] == "p edge 3 2"
    assert set(lines[1:]) == {"e 1 2", "e 2 3"}
    d = g.to_json_dict()
    assert d["n"] == 3 and d["edges"] == [[0, 1], [1, 2]] and d["labels"] == ["1", "2", "3"]


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset([(1, 1)]))
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset([(2, 1)]))  # not normalized
    with pytest.raises(ValueError):
        SimpleGraph.of(3, [(0, 5)])
