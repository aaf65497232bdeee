"""Geometric checks on drawings: greediness, cells, conflicts, dilation.

Every comparison is done on squared integer distances.  A routing step must
bring the message strictly closer to its target.  Cells are taken closed
(bisector points belong to them) so that "some vertex lies in a foreign
cell" and "some vertex has no strictly closer neighbor" coincide exactly,
ties included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .repgraph import Drawing
from .shapedags import Conflict


def _d2(a: tuple[int, int], b: tuple[int, int]) -> int:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def _neighbors(drawing: Drawing) -> list[list[int]]:
    return [drawing.rep.rotation(v) for v in range(drawing.rep.n)]


@dataclass(frozen=True)
class GreedyReport:
    is_greedy: bool
    method_a: bool
    method_b: bool
    stuck_pairs: tuple[tuple[int, int], ...]
    unreachable_pairs: tuple[tuple[int, int], ...]
    cell_violations: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "is_greedy": self.is_greedy,
            "method_a": self.method_a,
            "method_b": self.method_b,
            "stuck_pairs": [list(p) for p in self.stuck_pairs],
            "unreachable_pairs": [list(p) for p in self.unreachable_pairs],
            "cell_violations": [list(p) for p in self.cell_violations],
        }


def routing_reachability(drawing: Drawing) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Route to every target along strictly decreasing distances.

    Returns ``(stuck, unreachable)``: pairs ``(v, t)`` where ``v`` has no
    neighbor strictly closer to ``t``, and pairs with no decreasing path.
    """
    n = drawing.rep.n
    pts = [drawing.point(v) for v in range(n)]
    nbrs = _neighbors(drawing)
    stuck, unreachable = [], []
    for t in range(n):
        dist = [_d2(p, pts[t]) for p in pts]
        ok = [False] * n
        ok[t] = True
        for v in sorted(range(n), key=dist.__getitem__):
            if v == t:
                continue
            closer = [u for u in nbrs[v] if dist[u] < dist[v]]
            if not closer:
                stuck.append((v, t))
            ok[v] = any(ok[u] for u in closer)
            if not ok[v]:
                unreachable.append((v, t))
    return sorted(stuck), sorted(unreachable)


def cell_intruders(drawing: Drawing) -> list[tuple[int, int]]:
    """Pairs ``(v, z)`` with ``z`` at least as close to ``v`` as to every
    neighbor of ``v``."""
    n = drawing.rep.n
    pts = [drawing.point(v) for v in range(n)]
    nbrs = _neighbors(drawing)
    out = []
    for v in range(n):
        for z in range(n):
            if z == v:
                continue
            dv = _d2(pts[z], pts[v])
            if all(dv <= _d2(pts[z], pts[u]) for u in nbrs[v]):
                out.append((v, z))
    return out


def is_greedy(drawing: Drawing) -> GreedyReport:
    stuck, unreachable = routing_reachability(drawing)
    cells = cell_intruders(drawing)
    a = not unreachable
    b = not cells
    return GreedyReport(a and b, a, b, tuple(stuck), tuple(unreachable), tuple(cells))


# -- cells ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cell:
    """Points ``p`` with ``a*x + b*y < c`` (or ``<=`` when closed) for every
    half-plane ``(a, b, c)``: one per neighbor, the side of the bisector
    facing ``v``."""

    vertex: int
    halfplanes: tuple[tuple[int, int, int], ...]

    @property
    def bounded(self) -> bool:
        normals = {(a > 0) - (a < 0) + 2 * ((b > 0) - (b < 0)) for a, b, _ in self.halfplanes}
        # axis-parallel bisectors bound the cell only if all four sides appear
        return len(normals) == 4

    def contains(self, p: Sequence[int | Fraction], closed: bool = False) -> bool:
        x, y = p
        if closed:
            return all(a * x + b * y <= c for a, b, c in self.halfplanes)
        return all(a * x + b * y < c for a, b, c in self.halfplanes)

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "halfplanes": [{"a": a, "b": b, "c": c} for a, b, c in self.halfplanes],
            "bounded": self.bounded,
        }


def cell_geometry(drawing: Drawing, v: int) -> Cell:
    px, py = drawing.point(v)
    planes = []
    for u in drawing.rep.rotation(v):
        ux, uy = drawing.point(u)
        # |p-v|^2 < |p-u|^2  <=>  2(u-v).p < |u|^2 - |v|^2
        planes.append((2 * (ux - px), 2 * (uy - py), ux * ux + uy * uy - px * px - py * py))
    return Cell(v, tuple(planes))


def conflicts_satisfied(drawing: Drawing, conflicts: Iterable[Conflict]) -> list[bool]:
    """A conflict is satisfied when neither responsible vertex lies in the
    other's (closed) cell."""
    out = []
    for c in conflicts:
        a, b = c.responsible
        ca, cb = cell_geometry(drawing, a), cell_geometry(drawing, b)
        out.append(not cb.contains(drawing.point(a), closed=True)
                   and not ca.contains(drawing.point(b), closed=True))
    return out


def corner_box_violations(drawing: Drawing) -> list[tuple[int, int]]:
    """Pairs ``(w, z)``: a vertex ``z`` strictly inside the box spanned by
    the two neighbors around a 90 degree corner at ``w`` of an internal face."""
    rep = drawing.rep
    pts = [drawing.point(v) for v in range(rep.n)]
    out = []
    for f in rep.internal_faces:
        cs = f.corners
        for i, c in enumerate(cs):
            if c.angle != 90:
                continue
            u, w = cs[i - 1].vertex, c.vertex
            v = rep.slots[w][c.leave]
            x0, x1 = sorted((pts[u][0], pts[v][0]))
            y0, y1 = sorted((pts[u][1], pts[v][1]))
            for z, (zx, zy) in enumerate(pts):
                if x0 < zx < x1 and y0 < zy < y1:
                    out.append((w, z))
    return out


# -- dilation ------------------------------------------------------------------


class NotGreedyError(ValueError):
    pass


@dataclass(frozen=True)
class DilationReport:
    """Worst ratio of shortest decreasing path to straight-line distance.

    ``max_ratio_squared`` is exact; ``max_ratio`` is its float square root.
    """

    max_ratio_squared: Fraction
    argmax: tuple[int, int]
    path_length: int
    distance_squared: int
    within_bound: bool

    @property
    def max_ratio(self) -> float:
        return float(self.max_ratio_squared) ** 0.5

    def to_dict(self) -> dict:
        return {
            "max_ratio": self.max_ratio,
            "max_ratio_squared": str(self.max_ratio_squared),
            "argmax": list(self.argmax),
            "path_length": self.path_length,
            "distance_squared": self.distance_squared,
            "within_bound": self.within_bound,
        }


DILATION_BOUND_SQUARED = 18  # (3 * sqrt(2)) ** 2


def shortest_decreasing_paths(drawing: Drawing, t: int) -> list[int | None]:
    """Length of the shortest path to ``t`` whose every step gets strictly
    closer to ``t`` (``None`` where no such path exists)."""
    n = drawing.rep.n
    pts = [drawing.point(v) for v in range(n)]
    dist = [_d2(p, pts[t]) for p in pts]
    best: list[int | None] = [None] * n
    best[t] = 0
    for v in sorted(range(n), key=dist.__getitem__):
        if v == t:
            continue
        for u in drawing.rep.rotation(v):
            if dist[u] < dist[v] and best[u] is not None:
                step = abs(pts[u][0] - pts[v][0]) + abs(pts[u][1] - pts[v][1])
                cand = best[u] + step
                if best[v] is None or cand < best[v]:
                    best[v] = cand
    return best


def dilation(drawing: Drawing) -> DilationReport:
    n = drawing.rep.n
    pts = [drawing.point(v) for v in range(n)]
    worst = None
    for t in range(n):
        best = shortest_decreasing_paths(drawing, t)
        for s in range(n):
            if s == t:
                continue
            if best[s] is None:
                raise NotGreedyError(f"no distance-decreasing path from {s} to {t}")
            d2 = _d2(pts[s], pts[t])
            r = Fraction(best[s] * best[s], d2)
            if worst is None or r > worst[0]:
                worst = (r, (s, t), best[s], d2)
    if worst is None:
        return DilationReport(Fraction(0), (0, 0), 0, 0, True)
    r, pair, length, d2 = worst
    return DilationReport(r, pair, length, d2, length * length <= DILATION_BOUND_SQUARED * d2)
