import math
from itertools import combinations

import pytest

from cayleylab.cayley import build_cayley, preset_generators
from cayleylab.errors import CapExceeded
from cayleylab.perm import Permutation


def idx(X, text):
    return X.index(Permutation.parse(text, X.n))


def test_presets():
    assert len(preset_generators(5, "complete")) == 10
    assert len(preset_generators(4, "star")) == 3
    assert len(preset_generators(4, "path")) == 3
    assert len(preset_generators(4, "cycle")) == 4
    assert preset_generators(4, "cycle4") == preset_generators(4, "cycle")
    with pytest.raises(ValueError):
        preset_generators(5, "cycle4")
    with pytest.raises(ValueError):
        preset_generators(4, "wheel")


def test_build_k33(X3):
    # the complete set at n=3 yields the complete bipartite graph K_{3,3}
    assert X3.vertex_count == 6
    assert X3.degree == 3
    assert len(X3.edges()) == 9
    part = X3.distance_partition()
    assert part.layer_sizes() == (1, 3, 2)
    for u, v in X3.edges():
        assert abs(part.layer_of[u] - part.layer_of[v]) == 1  # bipartite layering


def test_build_n4(X4, cycle4):
    assert X4.vertex_count == 24 and X4.degree == 6
    assert len(X4.edges()) == 24 * 6 // 2
    assert cycle4.vertex_count == 24 and cycle4.degree == 4


def test_build_rejects_non_generating_sets():
    with pytest.raises(ValueError, match="does not generate"):
        build_cayley(4, [Permutation.transposition(4, 1, 2), Permutation.transposition(4, 2, 3)])
    with pytest.raises(ValueError):
        build_cayley(4, [])


def test_degree_cap():
    with pytest.raises(CapExceeded):
        build_cayley(6, preset_generators(6, "complete"))
    X6 = build_cayley(6, preset_generators(6, "star"), cap=6)
    assert X6.vertex_count == 720
    with pytest.raises(ValueError):
        build_cayley(7, preset_generators(7, "star"), cap=7)


def test_vertex_indexing(X4):
    assert X4.vertex(0).is_identity
    for i in (0, 5, 17, 23):
        assert X4.index(X4.vertex(i)) == i
    with pytest.raises(ValueError):
        X4.index(Permutation.identity(3))


def test_neighbors(X3, X5):
    e = X3.identity_index
    assert X3.neighbors(e) == {idx(X3, s) for s in ("(1,2)", "(1,3)", "(2,3)")}
    assert X3.neighbors(idx(X3, "(1,2)")) == {e, idx(X3, "(1,2,3)"), idx(X3, "(1,3,2)")}
    # C(5,2)-regular
    assert all(len(X5.neighbors(v)) == 10 for v in range(0, 120, 7))


def test_adjacency_symmetric_exhaustive(X4, star4):
    for X in (X4, star4):
        for v in range(X.vertex_count):
            for w in X.neighbors(v):
                assert v in X.neighbors(w)


def test_layers(X4, X5):
    assert X4.distance_partition().layer_sizes() == (1, 6, 11, 6)
    # 11 = eight 3-cycles + three double transpositions
    assert 11 == 2 * math.comb(4, 3) + 3 * math.comb(4, 4)
    sizes5 = X5.distance_partition().layer_sizes()
    assert sizes5 == (1, 10, 35, 50, 24)
    assert sizes5[2] == 2 * math.comb(5, 3) + 3 * math.comb(5, 4)


def test_distance_formula_complete_sets():
    # distance from the identity = n minus the cycle count (fixed points included)
    for n in (3, 4, 5):
        X = build_cayley(n, preset_generators(n, "complete"))
        part = X.distance_partition()
        for v in range(X.vertex_count):
            assert part.layer_of[v] == n - X.vertex(v).cycle_count()


def test_layer_zero_is_identity(X4):
    assert X4.distance_partition().layer_of[0] == 0


def test_common_neighbors(X3, X4):
    # disjoint supports: exactly e and the product
    cn = X4.common_neighbors(idx(X4, "(1,2)"), idx(X4, "(3,4)"))
    assert cn == {X4.identity_index, idx(X4, "(1,2)(3,4)")}
    # overlapping supports with the third transposition present: e and both 3-cycles
    cn3 = X3.common_neighbors(idx(X3, "(1,2)"), idx(X3, "(2,3)"))
    assert cn3 == {X3.identity_index, idx(X3, "(1,2,3)"), idx(X3, "(1,3,2)")}
    # path set: only e
    Xp = build_cayley(4, preset_generators(4, "path"))
    assert Xp.common_neighbors(idx(Xp, "(1,2)"), idx(Xp, "(2,3)")) == {Xp.identity_index}
    with pytest.raises(ValueError):
        X4.common_neighbors(3, 3)


def test_four_cycles_through(X4):
    e = X4.identity_index
    assert X4.four_cycles_through(e, idx(X4, "(1,2)"), idx(X4, "(3,4)")) == 1
    assert X4.four_cycles_through(e, idx(X4, "(1,2)"), idx(X4, "(2,3)")) == 2
    Xp = build_cayley(4, preset_generators(4, "path"))
    assert Xp.four_cycles_through(Xp.identity_index, idx(Xp, "(1,2)"), idx(Xp, "(2,3)")) == 0
    with pytest.raises(ValueError):
        X4.four_cycles_through(e, e, 3)


def _brute_four_cycles(X, a, b, c):
    # independent oracle: test every 4-subset containing {a,b,c} for a
    # spanning cycle
    count = 0
    for d in range(X.vertex_count):
        if d in {a, b, c}:
            continue
        quad = [a, b, c, d]
        found = False
        for p, q, r, s in ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)):
            w, x, y, z = quad[p], quad[q], quad[r], quad[s]
            if (
                x in X.neighbors(w)
                and y in X.neighbors(x)
                and z in X.neighbors(y)
                and w in X.neighbors(z)
            ):
                found = True
        count += found
    return count


def test_four_cycles_match_brute_force(X3, cycle4):
    import random

    rng = random.Random(1)
    for X in (X3, cycle4):
        for _ in range(25):
            a, b, c = rng.sample(range(X.vertex_count), 3)
            assert X.four_cycles_through(a, b, c) == _brute_four_cycles(X, a, b, c)


def test_unique_four_cycle_criterion_exhaustive(X4, X5):
    # commuting pair <=> exactly one 4-cycle through e and the pair
    for X in (X4, X5):
        e = X.identity_index
        for t, k in combinations(X.generators, 2):
            count = X.four_cycles_through(e, X.index(t), X.index(k))
            assert (t * k == k * t) == (count == 1)
            assert count in (1, 2)


def test_w_sets(X5):
    a = X5.w_set(idx(X5, "(1,2,3)"))
    ai = X5.w_set(idx(X5, "(1,3,2)"))
    b = X5.w_set(idx(X5, "(2,3,4)"))
    bi = X5.w_set(idx(X5, "(2,4,3)"))
    assert len(a) == 7  # ten neighbors, three of them back in layer 1
    assert len(a & b) == 2 and len(ai & bi) == 2
    assert len(a & bi) == 1 and len(ai & b) == 1
    assert a & bi == {idx(X5, "(1,2,4,3)")}
    with pytest.raises(ValueError):
        X5.w_set(X5.identity_index)
    with pytest.raises(ValueError):
        X5.w_set(idx(X5, "(1,2)"))


def test_w_set_general_sets(cycle5):
    # the operation only needs a distance-2 vertex, not a complete set
    part = cycle5.distance_partition()
    some = sorted(part.layers[2])[0]
    w = cycle5.w_set(some)
    assert w <= part.layers[3]
    assert w == cycle5.neighbors(some) & part.layers[3]


def test_vertex_transitive_layer_sizes(X4):
    # layer-size vector from sampled roots matches the canonical one
    table = X4.neighbor_table()
    base = X4.distance_partition().layer_sizes()
    for root in (1, 7, 23):
        dist = {root: 0}
        frontier = [root]
        sizes = [1]
        while frontier:
            nxt = []
            for v in frontier:
                for w in table[v]:
                    w = int(w)
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            if nxt:
                sizes.append(len(nxt))
            frontier = nxt
        assert tuple(sizes) == base


def test_exports(X3):
    d = X3.to_json_dict()
    assert d["n"] == 3
    # generators are listed in vertex-rank order
    assert d["generators"] == ["(2,3)", "(1,2)", "(1,3)"]
    assert len(d["vertices"]) == 6 and d["vertices"][0] == "()"
    assert len(d["edges"]) == 9
    dimacs = X3.to_dimacs().strip().split("\n")
    assert dimacs[0] == "p edge 6 9"
    assert len(dimacs) == 10 and all(line.startswith("e ") for line in dimacs[1:])


def test_summary(X4):
    s = X4.summary()
    assert s["vertices"] == 24 and s["edges"] == 72 and s["degree"] == 6
    assert s["layer_sizes"] == [1, 6, 11, 6]
