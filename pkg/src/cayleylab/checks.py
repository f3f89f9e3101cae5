"""Machine verification of the library's structural claims.

Each check exercises one statement of the verification suite against a
concrete graph and reports PASS/FAIL with a short certificate; checks whose
hypotheses do not apply at the requested parameters report SKIP.  Statement
ids are stable strings (also used by the CLI):

    thm-2.1    graph/line-graph automorphism correspondence on small graphs
    thm-2.2    connection-set-preserving group automorphisms = conjugations
               by transposition-graph automorphisms
    lemma-3.1  commuting generator pairs lie on exactly one 4-cycle with e
    prop-3.3   identity-stabilizer elements restrict to line-graph
               automorphisms
    prop-3.4   that restriction map is onto (n >= 5)
    thm-3.5    normality is equivalent to a trivial little group (n >= 5)
    prop-4.1   inversion is an automorphism; its edge-transposition case
               table matches brute force
    thm-4.2    translations, conjugations and inversion close into a group
               of order 2(n!)^2 with the (R x| Inn) x| Z_2 shape
    thm-4.3    right translations are not normal in the full group
    thm-5.1    the little group is exactly {identity, inversion}
    prop-5.2   distance-k vertices have distinct down-neighborhoods (n >= 5)
    cor-5.3    |Aut| <= 2(n!)^2
    main       searched group equals structured group, order 2(n!)^2
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from . import aut, structured, tgraph
from .cayley import CayleyGraph, build_cayley, preset_generators
from .groups import PermGroup
from .perm import Permutation, all_permutations

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass
class CheckContext:
    n: int
    gens_name: str = "complete"
    jobs: int = 1
    backend: Optional[str] = None
    seed: int = 0
    _graph: Optional[CayleyGraph] = None
    _group: Optional[PermGroup] = None

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return preset_generators(self.n, self.gens_name)

    @property
    def is_complete(self) -> bool:
        return len(self.generators) == self.n * (self.n - 1) // 2

    def graph(self) -> CayleyGraph:
        if self._graph is None:
            self._graph = build_cayley(self.n, self.generators)
        return self._graph

    def group(self) -> PermGroup:
        if self._group is None:
            self._group = aut.automorphism_group(
                self.graph(), jobs=self.jobs, backend=self.backend
            )
        return self._group


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    params: dict
    status: str
    detail: str
    seconds: float

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json_dict(self) -> dict:
        return {
            "id": self.check_id,
            "params": self.params,
            "status": self.status,
            "pass": self.status == PASS,
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
        }

    def line(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.status:4s} {self.check_id} ({params}) {self.seconds:.2f}s -- {self.detail}"


def _needs_complete(ctx: CheckContext) -> Optional[str]:
    if not ctx.is_complete:
        return "requires the complete transposition set"
    return None


def _needs_n5(ctx: CheckContext) -> Optional[str]:
    if ctx.n < 5:
        return "hypothesis requires n >= 5"
    return None


# ----------------------------------------------------------------------
# individual checks; each returns (passed, detail)


def _check_whitney(ctx: CheckContext):
    cases = {
        "K5": tgraph.SimpleGraph.of(5, combinations(range(5), 2)),
        "path5": tgraph.SimpleGraph.of(5, [(i, i + 1) for i in range(4)]),
        "cycle5": tgraph.SimpleGraph.of(5, [(i, (i + 1) % 5) for i in range(5)]),
        "star5": tgraph.SimpleGraph.of(5, [(0, i) for i in range(1, 5)]),
        "K5-e": tgraph.SimpleGraph.of(5, list(combinations(range(5), 2))[1:]),
    }
    orders = {}
    for name, g in cases.items():
        if not tgraph.whitney_check(g):
            return False, f"correspondence fails on {name}"
        orders[name] = tgraph.small_graph_automorphisms(g).order
    return True, "bijective on " + ", ".join(f"{k} (order {v})" for k, v in orders.items())


def _check_conjugation_realization(ctx: CheckContext):
    X = ctx.graph()
    t_graph = X.transposition_graph
    aut_t = tgraph.small_graph_automorphisms(t_graph)
    restrictions = set()
    for m in aut_t:
        sigma = Permutation(tuple(m.images))
        cmap = structured.inner_conjugation(X, sigma)
        res = aut.restrict_to_S(X, cmap)
        if not res.valid:
            return False, f"conjugation by {sigma} does not act on the line graph"
        restrictions.add(res.mapping.images)
    if len(restrictions) != aut_t.order:
        return False, (
            f"{len(restrictions)} distinct restrictions from {aut_t.order} "
            "transposition-graph automorphisms"
        )
    return True, (
        f"{aut_t.order} transposition-graph automorphisms induce "
        f"{len(restrictions)} distinct generator-layer actions"
    )


def _check_unique_four_cycle(ctx: CheckContext):
    X = ctx.graph()
    e = X.identity_index
    commuting = noncommuting = 0
    for t, k in combinations(X.generators, 2):
        count = X.four_cycles_through(e, X.index(t), X.index(k))
        if (t * k == k * t) != (count == 1):
            return False, f"pair {t}, {k} has {count} 4-cycles through e"
        if t * k == k * t:
            commuting += 1
        else:
            noncommuting += 1
            if ctx.is_complete and count != 2:
                return False, f"non-commuting pair {t}, {k} has {count} != 2 4-cycles"
    return True, f"{commuting} commuting and {noncommuting} non-commuting pairs verified"


def _check_restriction_valid(ctx: CheckContext):
    X = ctx.graph()
    ge = aut.vertex_stabilizer(ctx.group(), X.identity_index)
    for m in ge:
        if not aut.restrict_to_S(X, m).valid:
            return False, "a stabilizer element breaks line-graph adjacency"
    return True, f"all {ge.order} stabilizer elements restrict to line-graph automorphisms"


def _check_restriction_surjective(ctx: CheckContext):
    X = ctx.graph()
    rep = aut.restriction_analysis(X, group=ctx.group())
    ok = rep.surjective and rep.all_valid
    return ok, (
        f"kernel {rep.kernel_order}, image {rep.image_order}, "
        f"line-graph automorphisms {rep.aut_lt_order}"
    )


def _check_normality_equivalence(ctx: CheckContext):
    X = ctx.graph()
    # is_normal_cayley itself raises if the two criteria disagree
    rep = aut.is_normal_cayley(X, group=ctx.group(), backend=ctx.backend)
    verdict = "normal" if rep.normal else "not normal"
    return True, (
        f"{verdict}; conjugation test and little group (order "
        f"{rep.little_group_order}) agree"
    )


def _check_inversion(ctx: CheckContext):
    X = ctx.graph()
    h = structured.inversion_map(X)
    if not (h * h).is_identity:
        return False, "inversion map squared is not the identity"
    cases = 0
    for alpha in all_permutations(X.n):
        for i, j in combinations(range(1, X.n + 1), 2):
            beta = Permutation.transposition(X.n, i, j) * alpha
            actual = beta.inverse() * alpha
            if not actual.is_transposition:
                return False, f"inverses of {alpha} and {beta} do not differ by a transposition"
            predicted = structured.predicted_inverse_edge_transposition(alpha, i, j)
            if predicted != actual:
                return False, (
                    f"case table predicts {predicted} for ({alpha}, {i}, {j}), "
                    f"actual {actual}"
                )
            cases += 1
    return True, f"inversion is an automorphism; case table exact on {cases} cases"


def _check_structured_subgroup(ctx: CheckContext):
    X = ctx.graph()
    sg = structured.build_structured_group(X)
    r = sg.report
    return r.ok, (
        f"orders {r.translation_order} x| {r.conjugation_order} -> {r.product_order}, "
        f"with inversion {r.full_order} = 2(n!)^2"
    )


def _check_non_normality(ctx: CheckContext):
    X = ctx.graph()
    witness = structured.non_normality_witness(X)
    if not witness.valid:
        return False, "conjugated translation unexpectedly is a translation"
    rep = aut.is_normal_cayley(X, group=ctx.group(), backend=ctx.backend)
    if rep.normal:
        return False, "conjugation test reports normal"
    return True, (
        f"h o rho o h for sigma={witness.sigma} is not a right translation; "
        "conjugation test agrees"
    )


def _check_little_group(ctx: CheckContext):
    X = ctx.graph()
    lg = aut.little_group(X, backend=ctx.backend)
    h = structured.inversion_map(X)
    members = sorted(m.images for m in lg)
    expected = sorted([tuple(range(X.vertex_count)), h.images])
    if members != expected:
        return False, f"little group has order {lg.order}, not {{identity, inversion}}"
    return True, "little group is exactly {identity, inversion}"


def _check_distinct_neighbors(ctx: CheckContext):
    X = ctx.graph()
    part = X.distance_partition()
    checked = []
    for k in range(3, part.diameter + 1):
        res = aut.distinct_neighbor_check(X, k)
        if not res.ok:
            u, v = res.witness
            return False, f"vertices {X.vertex(u)} and {X.vertex(v)} share down-neighbors at k={k}"
        checked.append(f"k={k} ({len(part.layers[k])} vertices)")
    return True, "distinct down-neighborhoods for " + ", ".join(checked)


def _check_order_bound(ctx: CheckContext):
    G = ctx.group()
    bound = 2 * math.factorial(ctx.n) ** 2
    if G.order > bound:
        return False, f"order {G.order} exceeds 2(n!)^2 = {bound}"
    qualifier = "meets" if G.order == bound else "is below"
    return True, f"order {G.order} {qualifier} the bound 2(n!)^2 = {bound}"


def _check_main(ctx: CheckContext):
    rep = structured.verify_main_theorem(ctx.n, jobs=ctx.jobs, backend=ctx.backend)
    if not rep.ok:
        return False, (
            f"searched {rep.searched_order}, structured {rep.structured_order}, "
            f"expected {rep.expected_order}"
        )
    # sampled vertex-transitivity: layer sizes agree from random roots
    X = ctx.graph()
    rng = random.Random(ctx.seed)
    base = X.distance_partition().layer_sizes()
    table = X.neighbor_table()
    for root in rng.sample(range(X.vertex_count), min(5, X.vertex_count)):
        sizes = _bfs_layer_sizes(table, root)
        if sizes != base:
            return False, f"layer sizes from root {root} differ: {sizes} vs {base}"
    return True, f"search and construction agree: order {rep.searched_order} = 2({ctx.n}!)^2"


def _bfs_layer_sizes(table, root: int) -> tuple[int, ...]:
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
    return tuple(sizes)


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    summary: str
    run: Callable
    hypotheses: tuple[Callable[[CheckContext], Optional[str]], ...] = ()


REGISTRY: tuple[CheckSpec, ...] = (
    CheckSpec("thm-2.1", "graph/line-graph automorphism correspondence", _check_whitney),
    CheckSpec("thm-2.2", "set-preserving automorphisms are conjugations", _check_conjugation_realization),
    CheckSpec("lemma-3.1", "commuting pairs lie on a unique 4-cycle with e", _check_unique_four_cycle),
    CheckSpec("prop-3.3", "stabilizer restricts into line-graph automorphisms", _check_restriction_valid),
    CheckSpec("prop-3.4", "the restriction map is surjective", _check_restriction_surjective, (_needs_n5,)),
    CheckSpec("thm-3.5", "normal iff trivial little group", _check_normality_equivalence, (_needs_n5,)),
    CheckSpec("prop-4.1", "inversion map and its case table", _check_inversion, (_needs_complete,)),
    CheckSpec("thm-4.2", "structured subgroup of order 2(n!)^2", _check_structured_subgroup, (_needs_complete,)),
    CheckSpec("thm-4.3", "right translations are not normal", _check_non_normality, (_needs_complete,)),
    CheckSpec("thm-5.1", "little group is {identity, inversion}", _check_little_group, (_needs_complete,)),
    CheckSpec("prop-5.2", "distinct down-neighborhoods per layer", _check_distinct_neighbors, (_needs_complete, _needs_n5)),
    CheckSpec("cor-5.3", "automorphism count is at most 2(n!)^2", _check_order_bound, (_needs_complete,)),
    CheckSpec("main", "full group equals the structured group", _check_main, (_needs_complete,)),
)

CHECK_IDS = tuple(spec.check_id for spec in REGISTRY)


def run_check(check_id: str, ctx: CheckContext) -> CheckResult:
    spec = next((s for s in REGISTRY if s.check_id == check_id), None)
    if spec is None:
        raise KeyError(f"unknown statement id {check_id!r}")
    params = {"n": ctx.n, "gens": ctx.gens_name}
    for hyp in spec.hypotheses:
        reason = hyp(ctx)
        if reason is not None:
            return CheckResult(check_id, params, SKIP, reason, 0.0)
    start = time.perf_counter()
    passed, detail = spec.run(ctx)
    seconds = time.perf_counter() - start
    return CheckResult(check_id, params, PASS if passed else FAIL, detail, seconds)


def run_all(ctx: CheckContext) -> list[CheckResult]:
    return [run_check(spec.check_id, ctx) for spec in REGISTRY]
