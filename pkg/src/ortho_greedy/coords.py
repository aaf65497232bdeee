"""Coordinates from good st-orderings.

Along one axis the unknowns are the gaps ``x[i]`` between the nodes at
positions ``i`` and ``i+1`` of the ordering.  A gap without a minimal
conflict only needs ``x[i] >= 1``.  A gap that separates the two nodes of a
minimal conflict must exceed both the stretch to its left back to ``lo`` and
the stretch to its right up to ``hi``:

    x[i] > x[lo] + ... + x[i-1]        (left)
    x[i] > x[i+1] + ... + x[hi-1]      (right)

where ``lo`` is the position of the node across the edge leaving the second
responsible vertex backwards, and ``hi`` the position of the node across the
edge leaving the first responsible vertex forwards.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx
import numpy as np

from .repgraph import (
    Drawing,
    E,
    N,
    S,
    W,
    RectilinearRepresentation,
    count_leaves,
    is_tree,
    representation_from_coordinates,
)
from .shapedags import Conflict, ShapeDag, build_shape_dag, enumerate_conflicts, positions


class InvalidOrderingError(ValueError):
    """The ordering is not good: the constraint relations form a cycle."""


class InequalityError(RuntimeError):
    """A minimal conflict spans non-consecutive positions."""


class NotRealizableError(ValueError):
    pass


# slot towards the later node and towards the earlier node, per axis
_FORWARD = {"x": E, "y": N}
_BACKWARD = {"x": W, "y": S}


@dataclass(frozen=True)
class InequalitySystem:
    axis: str
    order: tuple[int, ...]
    # per gap: None when trivial, else (lo, hi) as ordering positions
    bounds: tuple[tuple[int, int] | None, ...]
    conflicts: tuple[Conflict, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.bounds)

    def _matrix(self, left: bool, right: bool) -> np.ndarray:
        k = self.size
        M = np.eye(k, dtype=np.int64)
        for i, b in enumerate(self.bounds):
            if b is None:
                continue
            lo, hi = b
            if left:
                M[i, lo:i] = -1
            if right:
                M[i, i + 1:hi] = -1
        return M

    @property
    def A(self) -> np.ndarray:
        """Left inequalities (identity rows for trivial gaps)."""
        return self._matrix(True, False)

    @property
    def B(self) -> np.ndarray:
        return self._matrix(False, True)

    @property
    def C(self) -> np.ndarray:
        return self.A + self.B - np.eye(self.size, dtype=np.int64)

    def relation_graph(self) -> nx.DiGraph:
        """Arc ``i -> j`` when gap ``i`` is bounded below by a sum containing gap ``j``."""
        g = nx.DiGraph()
        g.add_nodes_from(range(self.size))
        rows, cols = np.nonzero(self.C == -1)
        g.add_edges_from(zip(rows.tolist(), cols.tolist()))
        return g

    def satisfied(self, gaps: Sequence[int]) -> bool:
        """Exact check of ``A x > 0`` and ``B x > 0``."""
        x = np.array([int(v) for v in gaps], dtype=object)
        return bool(np.all(self.A.astype(object) @ x > 0) and np.all(self.B.astype(object) @ x > 0))

    def to_dict(self) -> dict:
        return {
            "axis": self.axis,
            "order": list(self.order),
            "gaps": [None if b is None else {"lo": b[0], "hi": b[1]} for b in self.bounds],
        }


def build_system(
    rep: RectilinearRepresentation,
    axis: str,
    order: Sequence[int],
    dx: ShapeDag | None = None,
    dy: ShapeDag | None = None,
) -> InequalitySystem:
    dx = dx or build_shape_dag(rep, "x")
    dy = dy or build_shape_dag(rep, "y")
    dag = dx if axis == "x" else dy
    kw = {"order_x": order} if axis == "x" else {"order_y": order}
    conflicts = [c for c in enumerate_conflicts(rep, dx, dy, **kw) if c.axis == axis and c.is_minimal]
    pos = positions(order)
    bounds: list[tuple[int, int] | None] = [None] * (dag.m - 1)
    for c in conflicts:
        i, j = sorted((pos[c.first], pos[c.second]))
        if j != i + 1:
            raise InequalityError(f"minimal {axis}-conflict {c.nodes} spans positions {i}..{j}")
        # responsible vertex on the node at position i, and on the one at i+1
        ra, rb = c.responsible if pos[c.first] == i else c.responsible[::-1]
        fwd = rep.slots[ra][_FORWARD[axis]]
        back = rep.slots[rb][_BACKWARD[axis]]
        if fwd is None or back is None:
            raise InequalityError(f"responsible vertices {ra}, {rb} are not flat")
        bounds[i] = (pos[dag.node_of[back]], pos[dag.node_of[fwd]])
    return InequalitySystem(axis, tuple(order), tuple(bounds), tuple(conflicts))


def _dependency_order(system: InequalitySystem) -> list[int]:
    g = system.relation_graph()
    try:
        return list(reversed(list(nx.topological_sort(g))))
    except nx.NetworkXUnfeasible as exc:
        cycle = nx.find_cycle(g)
        raise InvalidOrderingError(f"relation graph has a cycle {cycle}; ordering is not good") from exc


def _sums(gaps: list[int], b: tuple[int, int], i: int) -> tuple[int, int]:
    lo, hi = b
    return sum(gaps[lo:i]), sum(gaps[i + 1:hi])


def solve_min(system: InequalitySystem) -> list[int]:
    """Smallest positive integer gaps satisfying every inequality.

    Each gap depends only on gaps it is compared with, so one pass in
    dependency order yields the componentwise least solution.
    """
    gaps = [0] * system.size
    for i in _dependency_order(system):
        b = system.bounds[i]
        gaps[i] = 1 if b is None else max(_sums(gaps, b, i)) + 1
    return gaps


def solve_unit(system: InequalitySystem) -> list[int]:
    """Solution of ``C x = 1`` by substitution in dependency order; valid
    but usually larger than :func:`solve_min`."""
    gaps = [0] * system.size
    for i in _dependency_order(system):
        b = system.bounds[i]
        gaps[i] = 1 if b is None else sum(_sums(gaps, b, i)) + 1
    return gaps


def brute_force_min_total(system: InequalitySystem, bound: int = 64) -> int | None:
    """Smallest total of gaps in ``1..bound`` satisfying the system (test
    oracle for small systems).

    Exhaustive depth-first search over gap values, with the constraints read
    off the rows of ``A`` and ``B``.  Gaps are assigned so that each row is
    checked as soon as it is complete, and a branch is cut once its total
    cannot beat the best found so far.  Rows whose gaps depend on each other
    in a cycle have no solution (each would have to exceed the other).
    """
    k = system.size
    if k == 0:
        return 0
    rows = [[(j, c) for j, c in enumerate(r) if c] for M in (system.A, system.B) for r in M.tolist()]
    deps = {i: set() for i in range(k)}
    for terms in rows:
        (i,) = [j for j, c in terms if c > 0]
        deps[i].update(j for j, c in terms if c < 0)
    try:
        order = list(graphlib.TopologicalSorter(deps).static_order())
    except graphlib.CycleError:
        return None
    step = {v: t for t, v in enumerate(order)}
    due: list[list[list[tuple[int, int]]]] = [[] for _ in range(k)]
    for terms in rows:
        due[max(step[j] for j, _ in terms)].append(terms)
    gaps = [0] * k
    best: list[int | None] = [None]

    def search(t: int, total: int) -> None:
        if t == k:
            best[0] = total
            return
        for val in range(1, bound + 1):
            # every later gap is at least 1
            if best[0] is not None and total + val + (k - t - 1) >= best[0]:
                return
            gaps[order[t]] = val
            if all(sum(c * gaps[j] for j, c in terms) > 0 for terms in due[t]):
                search(t + 1, total + val)

    search(0, 0)
    return best[0]


def node_coordinates(gaps: Sequence[int]) -> list[int]:
    out = [0]
    for g in gaps:
        out.append(out[-1] + g)
    return out


def assemble_drawing(
    rep: RectilinearRepresentation,
    dx: ShapeDag,
    sx: InequalitySystem,
    gx: Sequence[int],
    dy: ShapeDag,
    sy: InequalitySystem,
    gy: Sequence[int],
) -> Drawing:
    cx = node_coordinates(gx)
    cy = node_coordinates(gy)
    px, py = positions(sx.order), positions(sy.order)
    xs = [cx[px[dx.node_of[v]]] for v in range(rep.n)]
    ys = [cy[py[dy.node_of[v]]] for v in range(rep.n)]
    return Drawing(rep, xs, ys)


@dataclass(frozen=True)
class GeneralDrawing:
    drawing: Drawing
    system_x: InequalitySystem
    system_y: InequalitySystem
    gaps_x: tuple[int, ...]
    gaps_y: tuple[int, ...]


def draw_with_orderings(
    rep: RectilinearRepresentation,
    order_x: Sequence[int],
    order_y: Sequence[int],
    minimal: bool = True,
) -> GeneralDrawing:
    """Drawing respecting the given orderings; minimum width and height
    among such drawings when ``minimal`` (else the ``C x = 1`` solution)."""
    from .ordering import check_good

    dx = build_shape_dag(rep, "x")
    dy = build_shape_dag(rep, "y")
    for dag, order in ((dx, order_x), (dy, order_y)):
        res = check_good(dag, order)
        if not res.good:
            raise InvalidOrderingError(f"{dag.axis}-ordering is not good: window {res.violation[:2]}")
    solve = solve_min if minimal else solve_unit
    sx = build_system(rep, "x", order_x, dx, dy)
    sy = build_system(rep, "y", order_y, dx, dy)
    gx, gy = solve(sx), solve(sy)
    return GeneralDrawing(assemble_drawing(rep, dx, sx, gx, dy, sy, gy), sx, sy, tuple(gx), tuple(gy))


# -- trees ---------------------------------------------------------------------


def draw_tree(rep: RectilinearRepresentation) -> Drawing:
    """Greedy drawing of a tree with at most four leaves.

    Only the tree itself is used, not the orientations of ``rep``: the path
    between two leaves that covers every branching vertex is laid out
    horizontally, and the paths to the other leaves (at most two) go straight
    up and straight down.
    """
    if not is_tree(rep):
        raise NotRealizableError("input is not a tree")
    leaves = [v for v in range(rep.n) if rep.degree(v) == 1]
    if count_leaves(rep) > 4:
        raise NotRealizableError(f"tree has {len(leaves)} leaves; at most four can be drawn greedily")
    g = rep.graph()
    branch = {v for v in range(rep.n) if rep.degree(v) >= 3}
    spine = None
    for i, a in enumerate(leaves):
        for b in leaves[i + 1:]:
            path = nx.shortest_path(g, a, b)
            if branch <= set(path):
                spine = path
                break
        if spine:
            break
    assert spine is not None
    xy = {v: (i, 0) for i, v in enumerate(spine)}
    on_spine = set(spine)
    rest = [v for v in leaves if v not in on_spine]
    for leaf, sign in zip(rest, (1, -1)):
        path = nx.shortest_path(g, leaf, spine[0])
        hang = []
        for v in path:
            if v in on_spine:
                root = v
                break
            hang.append(v)
        x0 = xy[root][0]
        for depth, v in enumerate(reversed(hang), start=1):
            xy[v] = (x0, sign * depth)
    coords = [xy[v] for v in range(rep.n)]
    out = representation_from_coordinates(coords, [(e.u, e.v) for e in rep.edges])
    return Drawing(out, [c[0] for c in coords], [c[1] for c in coords])
