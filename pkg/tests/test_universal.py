from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from ortho_greedy.convexity import check_convex
from ortho_greedy.fixtures import u_shape, wide_tower
from ortho_greedy.repgraph import Drawing, NotBiconnectedError, RectilinearRepresentation, is_biconnected
from ortho_greedy.shapedags import build_shape_dag, enumerate_conflicts
from ortho_greedy.universal import (
    IllegalMoveError,
    Move,
    add_flat_vertex,
    add_k_reflex,
    apply_move,
    draw_universal_min_area,
    generate_universal,
    legal_moves,
    missing_staircases,
    rectangle,
    staircase_oracle,
    test_universal as universal_verdict,
)

from conftest import greedy_oracle, random_dissection

seeds = st.integers(0, 10**6)


def staircase_bfs(rep: RectilinearRepresentation, u: int, v: int) -> bool:
    """Is there a path from ``u`` to ``v`` moving only in two fixed
    perpendicular directions?  Tries all four quadrants."""
    moves = {w: [] for w in range(rep.n)}
    for e in rep.edges:
        fwd = "E" if e.dir == "E" else "N"
        back = "W" if e.dir == "E" else "S"
        moves[e.u].append((e.v, fwd))
        moves[e.v].append((e.u, back))
    for allowed in ({"E", "N"}, {"E", "S"}, {"W", "N"}, {"W", "S"}):
        seen, todo = {u}, [u]
        while todo:
            w = todo.pop()
            for z, d in moves[w]:
                if d in allowed and z not in seen:
                    seen.add(z)
                    todo.append(z)
        if v in seen:
            return True
    return False


def all_staircases(rep: RectilinearRepresentation) -> bool:
    return all(staircase_bfs(rep, u, v) for u in range(rep.n) for v in range(u + 1, rep.n))


def check_consistent(rep: RectilinearRepresentation) -> bool:
    verdict = universal_verdict(rep)
    assert verdict.is_universal == staircase_oracle(rep) == all_staircases(rep)
    assert verdict.is_universal == (not enumerate_conflicts(rep))
    if not verdict.is_universal:
        c = verdict.counterexample
        failing = "x" if verdict.hamiltonian_x is None else "y"
        assert c.axis == failing
    return verdict.is_universal


def test_rectangle_is_universal():
    v = universal_verdict(rectangle())
    assert v.is_universal and v.hamiltonian_x == (0, 1) and v.counterexample is None
    d = draw_universal_min_area(rectangle(), v)
    assert (d.width, d.height) == (1, 1)


def test_tree_is_rejected():
    path = RectilinearRepresentation(3, [(0, 1, "E"), (1, 2, "E")])
    with pytest.raises(NotBiconnectedError):
        universal_verdict(path)


def test_non_convex_input():
    v = universal_verdict(u_shape().rep)
    assert not v.is_universal and v.reason == "not convex"
    with pytest.raises(ValueError):
        draw_universal_min_area(u_shape().rep)


def test_conflict_example_is_not_universal(fixtures):
    rep = fixtures["conflict-example"].rep
    v = universal_verdict(rep)
    assert not v.is_universal and v.reason == "x-conflict"
    assert v.hamiltonian_y is not None
    assert missing_staircases(rep)


def test_fixtures_agree_with_oracles(fixtures):
    for f in fixtures.values():
        if not is_biconnected(f.rep) or not check_convex(f.rep).is_convex:
            continue
        assert check_consistent(f.rep) == (f.expected == "universal"), f.name


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(1, 10))
def test_dissections_agree_with_oracles(seed, splits):
    check_consistent(random_dissection(seed, splits).rep)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 30))
def test_generated_instances_are_universal(seed, steps):
    rep = generate_universal(seed, steps)
    assert check_consistent(rep)
    d = draw_universal_min_area(rep)
    dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
    assert (d.width, d.height) == (dx.m - 1, dy.m - 1)
    assert d.problems() == []
    assert greedy_oracle(d)


def test_generator_is_deterministic():
    assert generate_universal(11, 25) == generate_universal(11, 25)
    assert generate_universal(11, 25).to_json() == generate_universal(11, 25).to_json()


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(0, 12))
def test_every_legal_move_keeps_universality(seed, steps):
    rep = generate_universal(seed, steps)
    for move in legal_moves(rep):
        out = apply_move(rep, move)  # checks universality itself
        assert out.n > rep.n
        assert check_consistent(out)


def test_flat_vertex_ids_and_strip_rule():
    rep = add_flat_vertex(rectangle(), 0, 1)
    assert rep.n == 5 and rep.slots[4][1] == 1 and rep.slots[4][3] == 0
    # the top edge 10-11 spans the bar vertex at x=2, so its strip is not empty
    d = wide_tower()
    top = (10, 11)
    assert (d.point(10), d.point(11)) == ((1, 2), (3, 2))
    flats = {(m.u, m.v) for m in legal_moves(d.rep) if m.kind == "flat"}
    assert top not in flats and (6, 10) in flats
    with pytest.raises(IllegalMoveError):
        add_flat_vertex(d.rep, *top)
    with pytest.raises(IllegalMoveError):
        add_flat_vertex(rectangle(), 0, 2)


def test_reflex_moves():
    with pytest.raises(IllegalMoveError):
        add_k_reflex(rectangle(), 0, 1, 5)
    moves = [m for m in legal_moves(rectangle()) if m.kind == "reflex"]
    assert moves and all(1 <= m.k <= 4 for m in moves)
    for m in moves:
        out = add_k_reflex(rectangle(), m.u, m.v, m.k, m.side)
        assert out.n == 4 + m.k


def test_move_order_is_total():
    assert Move("flat", 0, 1) < Move("reflex", 0, 1, 1)


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(0, 20), st.randoms(use_true_random=False))
def test_universal_drawings_survive_perturbation(seed, steps, rnd):
    rep = generate_universal(seed, steps)
    v = universal_verdict(rep)
    dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
    cx, cy, acc = {}, {}, 0
    for a in v.hamiltonian_x:
        acc += rnd.randint(1, 6)
        cx[a] = acc
    acc = 0
    for a in v.hamiltonian_y:
        acc += rnd.randint(1, 6)
        cy[a] = acc
    d = Drawing(rep, [cx[dx.node_of[w]] for w in range(rep.n)], [cy[dy.node_of[w]] for w in range(rep.n)])
    assert d.problems() == []
    assert greedy_oracle(d)
