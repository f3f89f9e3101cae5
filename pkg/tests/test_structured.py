import math
from itertools import combinations

import pytest

from cayleylab import aut, structured
from cayleylab.groups import PermGroup
from cayleylab.perm import Permutation, all_permutations


def idx(X, text):
    return X.index(Permutation.parse(text, X.n))


def test_right_translation_identity(X3):
    assert structured.right_translation(X3, Permutation.identity(3)).is_identity


def test_right_translation_action_axiom(X3):
    # rho_sigma o rho_tau = rho_{sigma tau}, exhaustively at n=3
    for sigma in all_permutations(3):
        for tau in all_permutations(3):
            lhs = structured.right_translation(X3, sigma) * structured.right_translation(X3, tau)
            rhs = structured.right_translation(X3, sigma * tau)
            assert lhs == rhs


def test_right_translation_degree_check(X3):
    with pytest.raises(ValueError):
        structured.right_translation(X3, Permutation.identity(4))


def test_inner_conjugation_fixes_identity(X4):
    for sigma in (Permutation.transposition(4, 1, 2), Permutation.parse("(1,2,3,4)", 4)):
        cmap = structured.inner_conjugation(X4, sigma)
        assert cmap.fixes(X4.identity_index)


def test_inner_conjugation_closure_is_inner_group(X4):
    gens = [
        structured.inner_conjugation(X4, Permutation.transposition(4, 1, 2)),
        structured.inner_conjugation(X4, Permutation.parse("(1,2,3,4)", 4)),
    ]
    assert PermGroup.closure(gens).order == 24  # trivial center for n >= 3


def test_inner_conjugation_star_acceptance(star4):
    # Aut of the star transposition graph fixes the center point 1
    accepted = structured.inner_conjugation(star4, Permutation.transposition(4, 2, 3))
    assert accepted.fixes(star4.identity_index)
    with pytest.raises(ValueError):
        structured.inner_conjugation(star4, Permutation.transposition(4, 1, 2))


def test_inversion_map_values(X3):
    h = structured.inversion_map(X3)
    a, ai = idx(X3, "(1,2,3)"), idx(X3, "(1,3,2)")
    assert h(a) == ai and h(ai) == a
    fixed = [v for v in range(6) if h.fixes(v)]
    assert len(fixed) == 4
    assert (h * h).is_identity


def test_inversion_fixes_all_transpositions(X4, X5):
    for X in (X4, X5):
        h = structured.inversion_map(X)
        assert h.fixes(X.identity_index)
        for t in X.generators:
            assert h.fixes(X.index(t))


def test_inversion_requires_complete_set(star4):
    with pytest.raises(ValueError):
        structured.inversion_map(star4)


def test_inversion_probe(X4, star4, path4, cycle4, cycle5):
    assert structured.inversion_preserves_edges(X4)
    # not an automorphism for any of these non-complete sets
    assert not structured.inversion_preserves_edges(star4)
    assert not structured.inversion_preserves_edges(path4)
    assert not structured.inversion_preserves_edges(cycle4)
    assert not structured.inversion_preserves_edges(cycle5)


def test_case_table_examples():
    # r = s = 0: the transposition itself
    assert structured.predicted_inverse_edge_transposition(
        Permutation.parse("(1,2)", 4), 1, 2
    ) == Permutation.transposition(4, 1, 2)
    # alpha = (1,3,2), i=1, j=2: cycle through 1 reads (1,3,2) so s=1, r=0,
    # beta_1 = 3, prediction (i, beta_1) = (1,3)
    assert structured.predicted_inverse_edge_transposition(
        Permutation.parse("(1,3,2)", 4), 1, 2
    ) == Permutation.transposition(4, 1, 3)


def test_case_table_matches_oracle_exhaustive():
    for n in (3, 4):
        for alpha in all_permutations(n):
            for i, j in combinations(range(1, n + 1), 2):
                beta = Permutation.transposition(n, i, j) * alpha
                actual = beta.inverse() * alpha
                assert actual.is_transposition
                predicted = structured.predicted_inverse_edge_transposition(alpha, i, j)
                assert predicted == actual, (str(alpha), i, j)


def test_case_table_rejects_bad_points():
    with pytest.raises(ValueError):
        structured.predicted_inverse_edge_transposition(Permutation.identity(4), 2, 2)
    with pytest.raises(ValueError):
        structured.predicted_inverse_edge_transposition(Permutation.identity(4), 0, 2)


def test_structured_group_n3(X3):
    sg = structured.build_structured_group(X3)
    r = sg.report
    assert r.full_order == 72
    assert r.product_order == 36
    assert r.translation_order == r.conjugation_order == 6
    assert r.translations_normal_in_product
    assert r.product_index_two
    assert r.inversion_outside_product
    assert r.inversion_is_involution
    assert r.ok


def test_structured_group_orders(X4, X5):
    assert structured.build_structured_group(X4).report.full_order == 1152
    assert structured.build_structured_group(X5).report.full_order == 28800


def test_structured_group_requires_complete(star4):
    with pytest.raises(ValueError):
        structured.build_structured_group(star4)


def test_structured_generators_are_automorphisms(X4, G4):
    sg = structured.build_structured_group(X4)
    for g in sg.translation_gens + sg.conjugation_gens + (sg.inversion,):
        assert G4.contains(g)


def test_inversion_normalizes_product(X4):
    sg = structured.build_structured_group(X4)
    h = sg.inversion
    for g in sg.translation_gens + sg.conjugation_gens:
        assert sg.product_group.contains(h.inverse() * g * h)


def test_structured_equals_search(X3, G3):
    sg = structured.build_structured_group(X3)
    assert sg.group.element_bytes == G3.element_bytes


def test_verify_main_theorem():
    for n in (3, 4):
        rep = structured.verify_main_theorem(n)
        assert rep.ok
        assert rep.searched_order == rep.structured_order == 2 * math.factorial(n) ** 2


def test_non_normality_witness(X3, X4):
    for X in (X3, X4):
        w = structured.non_normality_witness(X)
        assert w.valid
        assert w.recovered_translation is None
        # the conjugated map is the left translation by sigma^-1
        expected = tuple(
            X.index(w.sigma.inverse() * X.vertex(v)) for v in range(X.vertex_count)
        )
        assert w.conjugated.images == expected


def test_non_normality_witness_any_sigma(X4):
    for sigma in (Permutation.parse("(1,2,3)", 4), Permutation.parse("(1,2,3,4)", 4)):
        assert structured.non_normality_witness(X4, sigma).valid
    with pytest.raises(ValueError):
        structured.non_normality_witness(X4, Permutation.identity(4))


def test_counting_identity(X4, G4):
    # |Aut| = vertices x stabilizer, stabilizer = 2 * n!
    ge = aut.vertex_stabilizer(G4, X4.identity_index)
    assert G4.order == 24 * ge.order
    assert ge.order == 2 * math.factorial(4)
