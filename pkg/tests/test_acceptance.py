"""Acceptance criteria, each at its stated tolerance.

Every test records one pass/fail line, printed in the terminal summary.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from ortho_greedy.convexity import check_convex
from ortho_greedy.coords import (
    InequalitySystem,
    InvalidOrderingError,
    brute_force_min_total,
    draw_tree,
    draw_with_orderings,
    solve_min,
)
from ortho_greedy.fixtures import all_fixtures, conflict_example, exponential_instance, exponential_labels
from ortho_greedy.ordering import (
    Infeasible,
    SpNode,
    check_good,
    construct_good_sp,
    find_good_ordering,
    good_orderings,
    recognize_series_parallel,
)
from ortho_greedy.pipeline import draw, test_greedy as greedy_verdict
from ortho_greedy.repgraph import Drawing, is_biconnected, is_tree
from ortho_greedy.shapedags import ShapeDag, build_shape_dag, enumerate_conflicts
from ortho_greedy.universal import (
    draw_universal_min_area,
    generate_universal,
    staircase_oracle,
    test_universal as universal_verdict,
)
from ortho_greedy.verify import DILATION_BOUND_SQUARED, dilation, is_greedy

from conftest import ACCEPTANCE, random_dissection, random_tree_drawing
from test_coords import random_system
from test_ordering import random_sp

FIXTURES = all_fixtures()
UNIVERSAL = [f for f in FIXTURES if f.expected == "universal"]


def record(key: str, ok: bool, detail: str) -> None:
    ACCEPTANCE.append((key, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'} criterion {key}: {detail}")
    assert ok, detail


def convex_biconnected(rep) -> bool:
    return not is_tree(rep) and is_biconnected(rep) and check_convex(rep).is_convex


def perturb(rep, order_x, order_y, rng: random.Random, tie: tuple[int, int] | None = None) -> Drawing:
    """Coordinates that keep both node orders, with random positive gaps.
    ``tie`` names two consecutive x-nodes that get the same coordinate."""
    dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
    cx, cy = {}, {}
    acc = 0
    for i, a in enumerate(order_x):
        if not (tie and i and (order_x[i - 1], a) == tie):
            acc += rng.randint(1, 6)
        cx[a] = acc
    acc = 0
    for a in order_y:
        acc += rng.randint(1, 6)
        cy[a] = acc
    return Drawing(rep, [cx[dx.node_of[v]] for v in range(rep.n)], [cy[dy.node_of[v]] for v in range(rep.n)])


# -- 1 ----------------------------------------------------------------------------


def test_criterion_1_oracle_equivalence():
    start = time.perf_counter()
    reps = [generate_universal(seed, seed % 31) for seed in range(1000)]
    reps += [random_dissection(seed, 1 + seed % 10).rep for seed in range(300)]
    reps += [f.rep for f in FIXTURES if convex_biconnected(f.rep)]
    disagree = []
    positives = 0
    for k, rep in enumerate(reps):
        v = universal_verdict(rep).is_universal
        positives += v
        if not v == staircase_oracle(rep) == (not enumerate_conflicts(rep)):
            disagree.append(k)
    elapsed = time.perf_counter() - start
    record("1", not disagree and elapsed < 60,
           f"{len(reps)} instances ({positives} universal), {len(disagree)} disagreements, {elapsed:.1f}s")


# -- 2 and 5 -------------------------------------------------------------------------


@pytest.fixture(scope="module")
def corpus_drawings():
    out = []
    for f in UNIVERSAL:
        out.append(("universal", f.name, draw_universal_min_area(f.rep)))
    for seed in range(150):
        out.append(("universal", f"gen-{seed}", draw_universal_min_area(generate_universal(seed, seed % 31))))
    general = [(f.name, f.rep) for f in FIXTURES if f.expected == "realizable" and not is_tree(f.rep)]
    general += [(f"dissection-{s}", random_dissection(s, 2 + s % 9).rep) for s in range(300)]
    for name, rep in general:
        if universal_verdict(rep).is_universal:
            continue
        ox, oy = find_good_ordering(build_shape_dag(rep, "x")), find_good_ordering(build_shape_dag(rep, "y"))
        if ox.status == oy.status == "good":
            out.append(("general", name, draw_with_orderings(rep, ox.ordering.order, oy.ordering.order).drawing))
    trees = [(f.name, f.rep) for f in FIXTURES if is_tree(f.rep) and f.expected == "realizable"]
    trees += [(f"tree-{s}", random_tree_drawing(s)) for s in range(60)]
    for name, rep in trees:
        out.append(("tree", name, draw_tree(rep)))
    return out


def test_criterion_2_constructions_are_greedy(corpus_drawings):
    failures = []
    kinds = {}
    for kind, name, d in corpus_drawings:
        kinds[kind] = kinds.get(kind, 0) + 1
        r = is_greedy(d)
        if d.problems() or not (r.method_a and r.method_b):
            failures.append(name)
    counts = ", ".join(f"{n} {k}" for k, n in sorted(kinds.items()))
    record("2", not failures, f"{len(corpus_drawings)} drawings ({counts}), {len(failures)} failures")


def test_criterion_5_dilation(corpus_drawings):
    worst, where, over = Fraction(0), None, []
    for _, name, d in corpus_drawings:
        rep = dilation(d)
        if rep.path_length ** 2 > DILATION_BOUND_SQUARED * rep.distance_squared:
            over.append(name)
        if rep.max_ratio_squared > worst:
            worst, where = rep.max_ratio_squared, name
    record("5", not over,
           f"max ratio {float(worst) ** 0.5:.4f} (squared {worst}) on {where}; bound 3*sqrt(2) = {18 ** 0.5:.4f}")


# -- 3 --------------------------------------------------------------------------------


def test_criterion_3_universality_semantics():
    rng = random.Random(2024)
    bad = []
    for f in UNIVERSAL:
        v = universal_verdict(f.rep)
        for _ in range(50):
            d = perturb(f.rep, v.hamiltonian_x, v.hamiltonian_y, rng)
            if d.problems() or not is_greedy(d).is_greedy:
                bad.append(f.name)
    # the conflict example: aligning its two conflicting paths breaks greediness
    rep = conflict_example().rep
    dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
    (c,) = enumerate_conflicts(rep, dx, dy)
    order_x = [0, 1, c.first, c.second, 3, 4]
    assert check_good(dx, order_x).good
    aligned = [perturb(rep, order_x, dy.topo, rng, tie=(c.first, c.second)) for _ in range(50)]
    assert all(d.problems() == [] for d in aligned)
    aligned_fail = sum(not is_greedy(d).is_greedy for d in aligned)
    built = draw(rep)
    ok = len(UNIVERSAL) >= 20 and not bad and aligned_fail >= 1 and is_greedy(built).is_greedy
    record("3", ok, f"{len(UNIVERSAL)} universal fixtures x 50 perturbations, {len(bad)} not greedy; "
                    f"conflict example: {aligned_fail}/50 aligned perturbations not greedy, "
                    f"constructed drawing greedy={is_greedy(built).is_greedy}")


# -- 4 ----------------------------------------------------------------------------------


def test_criterion_4_exponential_area():
    lines, ok = [], True
    for q in (4, 8, 16):
        rep = exponential_instance(q).rep
        dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
        ox, oy = find_good_ordering(dx), find_good_ordering(dy)
        d = draw_with_orderings(rep, ox.ordering.order, oy.ordering.order).drawing
        ids = {name: i for i, name in enumerate(exponential_labels(q))}
        x = d.x
        lhs = x[ids["v1"]] - x[ids["z1"]]
        rhs = 2 ** (q - 1) * (x[ids["v1"]] - x[ids[f"z{q}"]])
        ok &= lhs > rhs and d.width >= 2 ** (q - 1)
        lines.append(f"q={q}: {lhs} > {rhs}, width {d.width}")
    count = len(list(good_orderings(build_shape_dag(exponential_instance(4).rep, "x"))))
    ok &= count == 2
    record("4", ok, "; ".join(lines) + f"; q=4 has {count} good orderings")


# -- 6 ------------------------------------------------------------------------------------


def _axis_assignments(dag: ShapeDag, extent: int):
    """Every map of DAG nodes into ``0..extent`` increasing along all arcs."""
    val = [None] * dag.m

    def rec(k: int):
        if k == dag.m:
            yield tuple(val)
            return
        a = dag.topo[k]
        lo = max((val[p] + 1 for p in dag.pred[a]), default=0)
        for x in range(lo, extent + 1):
            val[a] = x
            yield from rec(k + 1)
        val[a] = None

    yield from rec(0)


def smaller_drawing_exists(rep, area: int) -> bool:
    """Search every grid of width ``w`` and height ``h`` with ``w * h < area``
    for a drawing of ``rep``."""
    dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
    for w in range(0, area + 1):
        for h in range(0, area + 1):
            if w * h >= area:
                continue
            xs_iter = _axis_assignments(dx, w)
            first = next(xs_iter, None)
            if first is None or next(_axis_assignments(dy, h), None) is None:
                continue
            for xs, ys in product([first, *xs_iter], _axis_assignments(dy, h)):
                d = Drawing(rep, [xs[dx.node_of[v]] for v in range(rep.n)], [ys[dy.node_of[v]] for v in range(rep.n)])
                if not d.problems():
                    return True
    return False


def test_criterion_6a_universal_minimum_area():
    checked, bad = 0, []
    for f in UNIVERSAL:
        dx, dy = build_shape_dag(f.rep, "x"), build_shape_dag(f.rep, "y")
        if dx.m > 8 or dy.m > 8:
            continue
        d = draw_universal_min_area(f.rep)
        checked += 1
        if d.problems() or (d.width, d.height) != (dx.m - 1, dy.m - 1) or smaller_drawing_exists(f.rep, d.area):
            bad.append(f.name)
    record("6a", checked > 0 and not bad, f"{checked} universal fixtures searched, {len(bad)} with a smaller drawing")


def test_criterion_6b_general_minimum():
    rng = random.Random(6)
    tried, cyclic, disagree = 0, 0, []
    while tried < 400:
        k = rng.randint(1, 6)
        system = random_system(rng, k)
        try:
            gaps = solve_min(system)
        except InvalidOrderingError:
            cyclic += 1
            continue
        tried += 1
        if max(gaps) > 64 or brute_force_min_total(system, 64) != sum(gaps):
            disagree.append(system)
    record("6b", not disagree, f"{tried} acyclic systems with <= 6 intervals, {len(disagree)} disagreements "
                               f"({cyclic} cyclic systems skipped)")


# -- 7 --------------------------------------------------------------------------------------


def test_criterion_7_sp_soundness():
    rng = random.Random(7)
    dags = [random_sp(rng, rng.randint(1, 4)) for _ in range(2000)]
    for f in FIXTURES:
        if convex_biconnected(f.rep):
            dags += [build_shape_dag(f.rep, "x"), build_shape_dag(f.rep, "y")]
    for s in range(200):
        rep = random_dissection(s, 2 + s % 9).rep
        dags += [build_shape_dag(rep, "x"), build_shape_dag(rep, "y")]
    built = infeasible = confirmed = 0
    bad = []
    for dag in dags:
        tree = recognize_series_parallel(dag)
        if not isinstance(tree, SpNode):
            continue
        res = construct_good_sp(dag, tree)
        if isinstance(res, Infeasible):
            infeasible += 1
            if dag.m <= 9:
                if next(good_orderings(dag), None) is None:
                    confirmed += 1
                else:
                    bad.append(dag)
        else:
            built += 1
            if not check_good(dag, res.order).good:
                bad.append(dag)
    record("7", not bad, f"{built} constructed orderings all good; {infeasible} infeasible, "
                         f"{confirmed} confirmed exhaustively (m <= 9), {len(bad)} failures")


# -- 8 ----------------------------------------------------------------------------------------


def test_criterion_8_necessity():
    by_name = {f.name: f for f in FIXTURES}
    tree = greedy_verdict(by_name["five-leaf-tree"].rep)
    reflex = greedy_verdict(by_name["internal-reflex"].rep)
    u = greedy_verdict(by_name["u-shape"].rep)
    ok = (tree.status == "not-realizable" and tree.stage == "tree" and "5 leaves" in tree.reason
          and reflex.status == "not-realizable" and reflex.stage == "convexity" and "not rectangles" in reflex.reason
          and u.status == "not-realizable" and u.stage == "convexity" and "not orthoconvex" in u.reason)
    record("8", ok, f"tree: {tree.stage} ({tree.reason}); internal reflex: {reflex.stage} ({reflex.reason}); "
                    f"U-shape: {u.stage} ({u.reason})")
