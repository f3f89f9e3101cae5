"""Explicitly constructed automorphism families of the complete transposition
graph -- right translations, conjugations, and the inversion map -- and the
verification that they assemble into the full group (R x| Inn) x| Z_2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import aut
from .cayley import CayleyGraph, build_cayley, preset_generators
from .groups import PermGroup, VertexMap, effective_cap, is_normal_in, is_right_translation
from .perm import Permutation


def _require_edge_preserving(X: CayleyGraph, images: tuple[int, ...], what: str) -> None:
    adj = X.adjacency_matrix()
    arr = np.array(images, dtype=np.int64)
    edges = np.array(X.edges(), dtype=np.int64)
    if not adj[arr[edges[:, 0]], arr[edges[:, 1]]].all():
        raise RuntimeError(f"{what} is not edge-preserving; the construction is broken")


def _edge_preserving(X: CayleyGraph, images: tuple[int, ...]) -> bool:
    adj = X.adjacency_matrix()
    arr = np.array(images, dtype=np.int64)
    edges = np.array(X.edges(), dtype=np.int64)
    return bool(adj[arr[edges[:, 0]], arr[edges[:, 1]]].all())


def right_translation(X: CayleyGraph, sigma: Permutation) -> VertexMap:
    """The vertex map alpha -> alpha * sigma; an automorphism for any connection set."""
    images = X.right_action_array(sigma)
    _require_edge_preserving(X, images, f"right translation by {sigma}")
    return VertexMap(images)


def inner_conjugation(X: CayleyGraph, sigma: Permutation) -> VertexMap:
    """The vertex map alpha -> sigma^-1 * alpha * sigma.

    Requires conjugation by sigma to fix the connection set setwise, i.e.
    sigma must act as an automorphism of the transposition graph.
    """
    if sigma.n != X.n:
        raise ValueError(f"degree mismatch: expected {X.n}, got {sigma.n}")
    gen_set = set(X.generators)
    for t in X.generators:
        if t.conjugate(sigma) not in gen_set:
            raise ValueError(
                f"conjugation by {sigma} moves {t} outside the connection set "
                "(sigma is not an automorphism of the transposition graph)"
            )
    inv = sigma.inverse()
    images = tuple(X.index(inv * X.vertex(v) * sigma) for v in range(X.vertex_count))
    _require_edge_preserving(X, images, f"conjugation by {sigma}")
    return VertexMap(images)


def inversion_map(X: CayleyGraph) -> VertexMap:
    """The vertex map alpha -> alpha^-1.

    Only defined here for the complete transposition set, where it is an
    automorphism fixing the identity and every generator vertex; for other
    connection sets use inversion_preserves_edges to probe.
    """
    if not X.is_complete_set:
        raise ValueError("inversion_map requires the complete transposition set")
    images = tuple(X.index(X.vertex(v).inverse()) for v in range(X.vertex_count))
    _require_edge_preserving(X, images, "the inversion map")
    return VertexMap(images)


def inversion_preserves_edges(X: CayleyGraph) -> bool:
    """Empirical probe: is alpha -> alpha^-1 an automorphism of this graph?"""
    images = tuple(X.index(X.vertex(v).inverse()) for v in range(X.vertex_count))
    return _edge_preserving(X, images)


def predicted_inverse_edge_transposition(alpha: Permutation, i: int, j: int) -> Permutation:
    """The transposition predicted to connect alpha^-1 and beta^-1, where
    beta = (i,j) * alpha.

    Reading the cycle of alpha through i as (a_1..a_r, i, b_1..b_s, j):
    (a_1, b_1) if r,s >= 1; (i, b_1) if r = 0; (j, a_1) if s = 0; (i, j) if
    both are 0.  When i and j sit in different cycles of alpha they share a
    cycle of beta and the same table applies to beta.
    """
    n = alpha.n
    if i == j:
        raise ValueError("needs two distinct points")
    for p in (i, j):
        if not 1 <= p <= n:
            raise ValueError(f"point {p} out of range 1..{n}")
    cyc = _cycle_through(alpha, i)
    if j in cyc:
        # walk from i: i, b_1..b_s, j, a_1..a_r, back to i
        pos_i = cyc.index(i)
        rotated = cyc[pos_i:] + cyc[:pos_i]
        pos_j = rotated.index(j)
        betas = rotated[1:pos_j]
        alphas = rotated[pos_j + 1 :]
        r, s = len(alphas), len(betas)
        if r >= 1 and s >= 1:
            return Permutation.transposition(n, alphas[0], betas[0])
        if r == 0 and s >= 1:
            return Permutation.transposition(n, i, betas[0])
        if s == 0 and r >= 1:
            return Permutation.transposition(n, j, alphas[0])
        return Permutation.transposition(n, i, j)
    beta = Permutation.transposition(n, i, j) * alpha
    return predicted_inverse_edge_transposition(beta, i, j)


def _cycle_through(p: Permutation, point: int) -> list[int]:
    cyc = [point]
    q = p.apply(point)
    while q != point:
        cyc.append(q)
        q = p.apply(q)
    return cyc


@dataclass(frozen=True)
class StructureReport:
    """Order and containment facts certifying the (R x| Inn) x| Z_2 shape."""

    n: int
    translation_order: int
    conjugation_order: int
    product_order: int
    full_order: int
    translations_normal_in_product: bool
    product_index_two: bool
    inversion_outside_product: bool
    inversion_is_involution: bool

    @property
    def ok(self) -> bool:
        f = math.factorial(self.n)
        return (
            self.translation_order == f
            and self.conjugation_order == f
            and self.product_order == f * f
            and self.full_order == 2 * f * f
            and self.translations_normal_in_product
            and self.product_index_two
            and self.inversion_outside_product
            and self.inversion_is_involution
        )


@dataclass(frozen=True)
class StructuredGroup:
    """The explicitly generated automorphism group and its structure facts."""

    translation_gens: tuple[VertexMap, ...]
    conjugation_gens: tuple[VertexMap, ...]
    inversion: VertexMap
    translation_group: PermGroup
    conjugation_group: PermGroup
    product_group: PermGroup
    group: PermGroup
    report: StructureReport


def build_structured_group(X: CayleyGraph, cap: Optional[int] = None) -> StructuredGroup:
    """Close the three generator families and verify the product structure.

    A failed structure check means the construction (not the mathematics)
    is broken, so it raises rather than reporting softly.
    """
    if not X.is_complete_set:
        raise ValueError("build_structured_group requires the complete transposition set")
    if X.n < 3:
        raise ValueError("the product structure needs n >= 3 (S_2 has trivial inner automorphisms)")
    if cap is None:
        cap = effective_cap()
    n = X.n
    seeds = [
        Permutation.transposition(n, 1, 2),
        Permutation.from_cycles(n, [list(range(1, n + 1))]),
    ]
    rho = tuple(right_translation(X, s) for s in seeds)
    con = tuple(inner_conjugation(X, s) for s in seeds)
    h = inversion_map(X)
    if not all(c.fixes(X.identity_index) for c in con) or not h.fixes(X.identity_index):
        raise RuntimeError("a supposedly identity-fixing generator moves the identity")

    translation_group = PermGroup.closure(rho, cap)
    conjugation_group = PermGroup.closure(con, cap)
    product_group = PermGroup.closure(rho + con, cap)
    full_group = PermGroup.closure(rho + con + (h,), cap)

    report = StructureReport(
        n=n,
        translation_order=translation_group.order,
        conjugation_order=conjugation_group.order,
        product_order=product_group.order,
        full_order=full_group.order,
        translations_normal_in_product=is_normal_in(translation_group, product_group).normal,
        product_index_two=(full_group.order == 2 * product_group.order)
        and product_group.is_subgroup_of(full_group),
        inversion_outside_product=not product_group.contains(h),
        inversion_is_involution=(h * h).is_identity,
    )
    if not report.ok:
        raise RuntimeError(f"structure verification failed: {report}")
    return StructuredGroup(
        translation_gens=rho,
        conjugation_gens=con,
        inversion=h,
        translation_group=translation_group,
        conjugation_group=conjugation_group,
        product_group=product_group,
        group=full_group,
        report=report,
    )


@dataclass(frozen=True)
class MainTheoremReport:
    """Search result versus structured construction for one degree."""

    n: int
    searched_order: int
    structured_order: int
    expected_order: int
    equal: bool

    @property
    def ok(self) -> bool:
        return self.equal and self.searched_order == self.expected_order


def verify_main_theorem(n: int, *, jobs: int = 1, backend: str | None = None) -> MainTheoremReport:
    """Search the full automorphism group and compare it, element for
    element, with the closure of the structured generators."""
    X = build_cayley(n, preset_generators(n, "complete"))
    searched = aut.automorphism_group(X, jobs=jobs, backend=backend)
    structured = build_structured_group(X)
    equal = searched.element_bytes == structured.group.element_bytes
    return MainTheoremReport(
        n=n,
        searched_order=searched.order,
        structured_order=structured.group.order,
        expected_order=2 * math.factorial(n) ** 2,
        equal=equal,
    )


@dataclass(frozen=True)
class NonNormalityWitness:
    """A conjugate of a right translation that is no translation at all."""

    sigma: Permutation
    conjugated: VertexMap
    recovered_translation: Optional[Permutation]

    @property
    def valid(self) -> bool:
        return self.recovered_translation is None


def non_normality_witness(X: CayleyGraph, sigma: Optional[Permutation] = None) -> NonNormalityWitness:
    """Conjugate the right translation by sigma with the inversion map;
    the result fails is_right_translation, so translations are not normal."""
    if sigma is None:
        sigma = Permutation.transposition(X.n, 1, 2)
    if sigma.is_identity:
        raise ValueError("the witness needs a non-identity permutation")
    h = inversion_map(X)
    rho = right_translation(X, sigma)
    conjugated = h * rho * h
    return NonNormalityWitness(
        sigma=sigma,
        conjugated=conjugated,
        recovered_translation=is_right_translation(X, conjugated),
    )
