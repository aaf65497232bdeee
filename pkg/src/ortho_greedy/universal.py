"""Universal greedy representations: testing, minimum-area drawing, generation.

A representation is universal when every drawing of it is greedy.  For a
convex biconnected input this holds exactly when both shape DAGs are single
directed paths, equivalently when every vertex pair is joined by a staircase.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .convexity import ConvexityReport, check_convex
from .repgraph import (
    SLOT_NAMES,
    Drawing,
    E,
    Edge,
    N,
    S,
    RectilinearRepresentation,
    require_biconnected,
    turn_left,
)
from .shapedags import Conflict, ShapeDag, build_shape_dag, enumerate_conflicts, hamiltonian_path


class IllegalMoveError(ValueError):
    """A generator primitive whose preconditions do not hold."""


@dataclass(frozen=True)
class UniversalityVerdict:
    is_universal: bool
    hamiltonian_x: tuple[int, ...] | None
    hamiltonian_y: tuple[int, ...] | None
    counterexample: Conflict | None
    reason: str | None = None
    convexity: ConvexityReport | None = None

    def to_dict(self) -> dict:
        return {
            "is_universal": self.is_universal,
            "hamiltonian_x": None if self.hamiltonian_x is None else list(self.hamiltonian_x),
            "hamiltonian_y": None if self.hamiltonian_y is None else list(self.hamiltonian_y),
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
            "reason": self.reason,
        }


def rectangle() -> RectilinearRepresentation:
    """Four vertices numbered counterclockwise from the bottom-left corner."""
    return RectilinearRepresentation(4, [(0, 1, "E"), (1, 2, "N"), (3, 2, "E"), (0, 3, "N")])


def test_universal(
    rep: RectilinearRepresentation,
    dx: ShapeDag | None = None,
    dy: ShapeDag | None = None,
) -> UniversalityVerdict:
    """Convexity check followed by a Hamiltonian-path test on both shape DAGs.

    Raises :class:`NotBiconnectedError` for inputs with a cut vertex.
    """
    require_biconnected(rep)
    report = check_convex(rep)
    if not report.is_convex:
        return UniversalityVerdict(False, None, None, None, "not convex", report)
    dx = dx or build_shape_dag(rep, "x")
    dy = dy or build_shape_dag(rep, "y")
    hx, hy = hamiltonian_path(dx), hamiltonian_path(dy)
    hx = None if hx is None else tuple(hx)
    hy = None if hy is None else tuple(hy)
    if hx is not None and hy is not None:
        return UniversalityVerdict(True, hx, hy, None, None, report)
    conflicts = enumerate_conflicts(rep, dx, dy)
    axis = "x" if hx is None else "y"
    witness = next(c for c in conflicts if c.axis == axis)
    return UniversalityVerdict(False, hx, hy, witness, f"{axis}-conflict", report)


# make pytest leave the function above alone when it is imported into a test module
test_universal.__test__ = False


def _reach_sets(n: int, arcs: Sequence[tuple[int, int]]) -> list[int]:
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    reach = [0] * n
    for v in reversed(order):
        r = 1 << v
        for w in succ[v]:
            r |= reach[w]
        reach[v] = r
    return reach


def missing_staircases(rep: RectilinearRepresentation) -> list[tuple[int, int]]:
    """Vertex pairs ``u < v`` joined by no x,y-monotone path."""
    # moves that never decrease x or y, and moves that never decrease x nor increase y
    up = _reach_sets(rep.n, [(e.u, e.v) for e in rep.edges])
    down = _reach_sets(rep.n, [(e.u, e.v) if e.dir == "E" else (e.v, e.u) for e in rep.edges])
    out = []
    for u in range(rep.n):
        joined = up[u] | down[u]
        for v in range(u + 1, rep.n):
            if not (joined >> v & 1 or up[v] >> u & 1 or down[v] >> u & 1):
                out.append((u, v))
    return out


def staircase_oracle(rep: RectilinearRepresentation) -> bool:
    return not missing_staircases(rep)


def draw_universal_min_area(
    rep: RectilinearRepresentation, verdict: UniversalityVerdict | None = None
) -> Drawing:
    """Place every vertex at the Hamiltonian index of its two nodes."""
    verdict = verdict or test_universal(rep)
    if not verdict.is_universal:
        raise ValueError(f"representation is not universal greedy ({verdict.reason})")
    dx = build_shape_dag(rep, "x")
    dy = build_shape_dag(rep, "y")
    px = {a: i for i, a in enumerate(verdict.hamiltonian_x)}
    py = {a: i for i, a in enumerate(verdict.hamiltonian_y)}
    xs = [px[dx.node_of[v]] for v in range(rep.n)]
    ys = [py[dy.node_of[v]] for v in range(rep.n)]
    return Drawing(rep, xs, ys)


# -- generator ----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Move:
    """One primitive: ``flat`` subdivides the external edge ``u``-``v``;
    ``reflex`` attaches ``k`` new corners from ``v`` back to ``u``, where
    ``u`` precedes ``v`` on the clockwise external walk.  ``side`` names the
    endpoint that turns a corner when exactly one of them does."""

    kind: str
    u: int
    v: int
    k: int = 0
    side: str | None = None


_KEEP_EW = str.maketrans("", "", "NS")
_KEEP_NS = str.maketrans("", "", "EW")


def _orthoconvex(dirs: str) -> bool:
    """String form of the run test: after dropping one axis, each remaining
    direction may start only one cyclic run."""
    p = dirs.translate(_KEEP_EW)
    if p:
        p += p[0]
        if p.count("EW") > 1 or p.count("WE") > 1:
            return False
    p = dirs.translate(_KEEP_NS)
    if p:
        p += p[0]
        if p.count("NS") > 1 or p.count("SN") > 1:
            return False
    return True


def _edge_toward(a: int, b: int, d: int) -> Edge:
    """The edge from ``a`` to ``b`` when travelling in direction ``d``."""
    if d == N:
        return Edge(a, b, "N")
    if d == E:
        return Edge(a, b, "E")
    return Edge(b, a, "N" if d == S else "E")


def _reflex_candidates(rep: RectilinearRepresentation) -> list[tuple[Move, tuple[int, ...]]]:
    """Every legal reflex move together with the directions of its new path
    (from ``v`` to ``u``)."""
    corners = rep.external_face.corners
    L = len(corners)
    dirs = "".join(SLOT_NAMES[c.leave] for c in corners)
    out = []
    for p in range(L):
        cu_angle = corners[p].angle
        d_u = corners[p].leave
        rot = dirs[p:] + dirs[:p]
        t = 0
        for off in range(1, L):
            c = corners[(p + off) % L]
            # c is the candidate v; everything strictly between u and v is interior
            for cv in (0, 1):
                if c.angle <= (90 if cv else 180):
                    continue
                d_out = turn_left(c.arrive) if cv else c.arrive
                for cu in (0, 1):
                    if cu_angle <= (90 if cu else 180):
                        continue
                    k = 4 - t - cv - cu
                    if not 1 <= k <= 4:
                        continue
                    a = d_out
                    for _ in range(k):
                        a = turn_left(a)
                    if (turn_left(a) if cu else a) != d_u:
                        continue
                    path = [d_out]
                    for _ in range(k):
                        path.append(turn_left(path[-1]))
                    back = "".join([SLOT_NAMES[(d + 2) % 4] for d in reversed(path)])
                    if not _orthoconvex(rot[off:] + back):
                        continue
                    side = None if cu + cv != 1 else ("u" if cu else "v")
                    out.append((Move("reflex", corners[p].vertex, c.vertex, k, side), tuple(path)))
            if c.angle == 90:
                t += 1
            if c.angle not in (90, 180) or t > 3:
                break
    return out


def _flat_candidates(rep: RectilinearRepresentation) -> list[Move]:
    dx = build_shape_dag(rep, "x")
    dy = build_shape_dag(rep, "y")
    hx, hy = hamiltonian_path(dx), hamiltonian_path(dy)
    if hx is None or hy is None:
        return []
    px = {a: i for i, a in enumerate(hx)}
    py = {a: i for i, a in enumerate(hy)}
    out = []
    for idx in rep.external_edge_indices():
        e = rep.edges[idx]
        if e.dir == "E":
            gap = px[dx.node_of[e.v]] - px[dx.node_of[e.u]]
        else:
            gap = py[dy.node_of[e.v]] - py[dy.node_of[e.u]]
        if gap == 1:
            out.append(Move("flat", e.u, e.v))
    return out


def legal_moves(rep: RectilinearRepresentation) -> list[Move]:
    moves = _flat_candidates(rep) + [m for m, _ in _reflex_candidates(rep)]
    return sorted(moves)


def _apply_flat(rep: RectilinearRepresentation, u: int, v: int) -> RectilinearRepresentation:
    es = list(rep.edges)
    hit = [i for i, e in enumerate(es) if {e.u, e.v} == {u, v}]
    if not hit:
        raise IllegalMoveError(f"{u}-{v} is not an edge")
    e = es.pop(hit[0])
    w = rep.n
    return RectilinearRepresentation(rep.n + 1, es + [Edge(e.u, w, e.dir), Edge(w, e.v, e.dir)])


def _apply_reflex(rep: RectilinearRepresentation, move: Move, path: Sequence[int]) -> RectilinearRepresentation:
    k = move.k
    # w_k is adjacent to v, w_1 to u
    chain = [move.v] + [rep.n + k - 1 - i for i in range(k)] + [move.u]
    new = [_edge_toward(chain[i], chain[i + 1], path[i]) for i in range(k + 1)]
    return RectilinearRepresentation(rep.n + k, list(rep.edges) + new)


def _verify_universal(rep: RectilinearRepresentation) -> RectilinearRepresentation:
    verdict = test_universal(rep)
    if not verdict.is_universal:
        raise IllegalMoveError(f"result is not universal greedy ({verdict.reason})")
    return rep


def add_flat_vertex(rep: RectilinearRepresentation, u: int, v: int, check: bool = True) -> RectilinearRepresentation:
    """Subdivide the external edge ``u``-``v`` with a new vertex ``n``.

    The open strip orthogonal to the edge must be empty in the canonical
    minimum-area drawing.
    """
    e = next((e for e in rep.edges if {e.u, e.v} == {u, v}), None)
    if e is None:
        raise IllegalMoveError(f"{u}-{v} is not an edge")
    if Move("flat", e.u, e.v) not in _flat_candidates(rep):
        raise IllegalMoveError(f"edge {u}-{v} is internal or its strip holds a vertex")
    out = _apply_flat(rep, e.u, e.v)
    return _verify_universal(out) if check else out


def add_k_reflex(
    rep: RectilinearRepresentation,
    u: int,
    v: int,
    k: int,
    side: str | None = None,
    check: bool = True,
) -> RectilinearRepresentation:
    """Attach a path of ``k`` new corners running from ``v`` back to ``u``.

    ``u`` and ``v`` lie on the external face with ``u`` first in clockwise
    order; the new face is bounded by the path and the external walk from
    ``u`` to ``v``.  New vertices get ids ``n .. n+k-1`` (``n`` next to ``u``).
    """
    if not 1 <= k <= 4:
        raise IllegalMoveError(f"k must lie in 1..4, got {k}")
    found = [(m, p) for m, p in _reflex_candidates(rep) if (m.u, m.v, m.k) == (u, v, k)]
    if side is not None:
        found = [(m, p) for m, p in found if m.side == side]
    if not found:
        raise IllegalMoveError(f"no convex {k}-reflex attachment from {v} back to {u}")
    if len(found) > 1:
        raise IllegalMoveError("attachment is ambiguous; pass side='u' or side='v'")
    out = _apply_reflex(rep, *found[0])
    return _verify_universal(out) if check else out


def apply_move(rep: RectilinearRepresentation, move: Move, check: bool = True) -> RectilinearRepresentation:
    if move.kind == "flat":
        return add_flat_vertex(rep, move.u, move.v, check)
    return add_k_reflex(rep, move.u, move.v, move.k, move.side, check)


def generate_universal(seed: int, steps: int) -> RectilinearRepresentation:
    """Start from a rectangle and apply ``steps`` uniformly random legal
    primitives; a step with no legal primitive is skipped."""
    rng = random.Random(seed)
    rep = rectangle()
    for _ in range(steps):
        flats = _flat_candidates(rep)
        reflex = _reflex_candidates(rep)
        options = [(m, None) for m in flats] + reflex
        if not options:
            continue
        options.sort(key=lambda o: o[0])
        move, path = options[rng.randrange(len(options))]
        if move.kind == "flat":
            rep = _apply_flat(rep, move.u, move.v)
        else:
            rep = _apply_reflex(rep, move, path)
    return rep
