"""Shape DAGs of a representation, comparability, and conflicts.

For axis ``"x"`` every maximal vertical path becomes one node and every
horizontal edge becomes an arc oriented left to right; axis ``"y"`` swaps the
roles.  Node ids are assigned in order of the smallest vertex they contain.
Reachability is stored as one Python-int bitset per node.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .repgraph import E, N, S, W, RectilinearRepresentation

# per axis: slots that glue vertices into one node (low end first), and the
# slot of the arc leaving a vertex towards a later node
_AXIS = {
    "x": {"glue": (S, N), "out": E, "in": W},
    "y": {"glue": (W, E), "out": N, "in": S},
}


class ShapeDagError(RuntimeError):
    """The contracted DAG is not an st-digraph; the input was not convex."""


class ConflictError(RuntimeError):
    """Two nodes are incomparable in both shape DAGs, which a convex
    biconnected representation never produces."""


class Order(enum.Enum):
    BEFORE = "a<b"
    AFTER = "b<a"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ShapeDag:
    axis: str | None
    nodes: tuple[tuple[int, ...], ...]
    arcs: tuple[tuple[int, int, int], ...]  # (tail node, head node, edge index in H)
    node_of: tuple[int, ...]
    succ: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    pred: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    reach: tuple[int, ...] = field(init=False, repr=False, compare=False)
    topo: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = len(self.nodes)
        succ: list[list[int]] = [[] for _ in range(m)]
        pred: list[list[int]] = [[] for _ in range(m)]
        for a, b, _ in self.arcs:
            succ[a].append(b)
            pred[b].append(a)
        object.__setattr__(self, "succ", tuple(tuple(s) for s in succ))
        object.__setattr__(self, "pred", tuple(tuple(p) for p in pred))
        indeg = [len(p) for p in pred]
        queue = deque(i for i in range(m) if indeg[i] == 0)
        topo = []
        while queue:
            a = queue.popleft()
            topo.append(a)
            for b in succ[a]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    queue.append(b)
        if len(topo) != m:
            raise ShapeDagError("shape DAG has a directed cycle")
        object.__setattr__(self, "topo", tuple(topo))
        reach = [0] * m
        for a in reversed(topo):
            r = 0
            for b in succ[a]:
                r |= reach[b] | (1 << b)
            reach[a] = r
        object.__setattr__(self, "reach", tuple(reach))

    @classmethod
    def from_arcs(cls, num_nodes: int, arcs: Iterable[tuple[int, int]]) -> "ShapeDag":
        """A bare DAG (no representation behind it); handy for orderings."""
        arcs = tuple((a, b, i) for i, (a, b) in enumerate(arcs))
        return cls(None, tuple((i,) for i in range(num_nodes)), arcs, tuple(range(num_nodes)))

    @property
    def m(self) -> int:
        return len(self.nodes)

    @property
    def sources(self) -> list[int]:
        return [a for a in range(self.m) if not self.pred[a]]

    @property
    def sinks(self) -> list[int]:
        return [a for a in range(self.m) if not self.succ[a]]

    @property
    def source(self) -> int:
        (s,) = self.sources
        return s

    @property
    def sink(self) -> int:
        (t,) = self.sinks
        return t

    def precedes(self, a: int, b: int) -> bool:
        return bool(self.reach[a] >> b & 1)

    def neighbors(self, a: int) -> set[int]:
        return set(self.succ[a]) | set(self.pred[a])

    def to_dot(self, name: str | None = None) -> str:
        name = name or f"D{self.axis or ''}"
        lines = [f"digraph {name} {{"]
        for i, vs in enumerate(self.nodes):
            label = ",".join(map(str, vs))
            lines.append(f'  n{i} [label="{i}: {label}"];')
        for a, b, e in self.arcs:
            lines.append(f'  n{a} -> n{b} [label="e{e}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_shape_dag(rep: RectilinearRepresentation, axis: str) -> ShapeDag:
    """Contract maximal paths perpendicular to ``axis`` and orient the rest.

    Raises :class:`ShapeDagError` unless the result has exactly one source
    and one sink.
    """
    cfg = _AXIS[axis]
    low, high = cfg["glue"]
    node_of = [-1] * rep.n
    nodes = []
    for v in range(rep.n):
        if node_of[v] != -1:
            continue
        start = v
        while rep.slots[start][low] is not None:
            start = rep.slots[start][low]
        path = [start]
        while rep.slots[path[-1]][high] is not None:
            path.append(rep.slots[path[-1]][high])
        for w in path:
            node_of[w] = len(nodes)
        nodes.append(tuple(path))
    arcs = []
    for idx, e in enumerate(rep.edges):
        if e.slot_u == cfg["out"]:
            arcs.append((node_of[e.u], node_of[e.v], idx))
    dag = ShapeDag(axis, tuple(nodes), tuple(arcs), tuple(node_of))
    if len(dag.sources) != 1 or len(dag.sinks) != 1:
        raise ShapeDagError(
            f"D_{axis} has {len(dag.sources)} sources and {len(dag.sinks)} sinks")
    return dag


def comparable(dag: ShapeDag, a: int, b: int) -> Order:
    if a == b:
        raise ValueError("comparability needs two distinct nodes")
    if dag.precedes(a, b):
        return Order.BEFORE
    if dag.precedes(b, a):
        return Order.AFTER
    return Order.INCOMPARABLE


def topological_order(dag: ShapeDag) -> list[int]:
    return list(dag.topo)


def hamiltonian_path(dag: ShapeDag) -> list[int] | None:
    """The Hamiltonian path if one exists.  In a DAG such a path is the
    unique topological order, so checking one order suffices."""
    order = dag.topo
    for a, b in zip(order, order[1:]):
        if b not in dag.succ[a]:
            return None
    return list(order)


# -- conflicts ----------------------------------------------------------------


@dataclass(frozen=True)
class Conflict:
    """Two nodes that are incomparable in the DAG of ``axis``.

    ``first`` is the node lying below (x-conflicts) or to the left
    (y-conflicts) of ``second``; ``responsible`` holds the extreme flat
    vertex of each path facing the other one, in the same order.
    """

    axis: str
    first: int
    second: int
    responsible: tuple[int, int]
    flats: tuple[str, str]
    is_minimal: bool | None = None

    @property
    def nodes(self) -> tuple[int, int]:
        return self.first, self.second

    def to_dict(self) -> dict:
        return {
            "axis": self.axis,
            "nodes": [self.first, self.second],
            "responsible": list(self.responsible),
            "flats": list(self.flats),
            "is_minimal": self.is_minimal,
        }


def _responsible(dag: ShapeDag, other: ShapeDag, a: int, b: int) -> tuple[int, int, int, int]:
    """Order the incomparable pair (a, b) by the other DAG and return
    ``(first, second, first's facing end, second's facing end)``."""
    for p, q in ((a, b), (b, a)):
        hi = dag.nodes[p][-1]
        lo = dag.nodes[q][0]
        cp, cq = other.node_of[hi], other.node_of[lo]
        if cp != cq and other.precedes(cp, cq):
            return p, q, hi, lo
    raise ConflictError(
        f"nodes {a} and {b} of D_{dag.axis} are incomparable in both shape DAGs")


def enumerate_conflicts(
    rep: RectilinearRepresentation,
    dx: ShapeDag | None = None,
    dy: ShapeDag | None = None,
    order_x: Sequence[int] | None = None,
    order_y: Sequence[int] | None = None,
) -> list[Conflict]:
    """All x- and y-conflicts, one per incomparable node pair.

    Minimality flags are filled in only for an axis whose ordering is given;
    otherwise they stay ``None``.
    """
    dx = dx or build_shape_dag(rep, "x")
    dy = dy or build_shape_dag(rep, "y")
    out: list[Conflict] = []
    for dag, other, flats, order in ((dx, dy, ("north", "south"), order_x),
                                     (dy, dx, ("east", "west"), order_y)):
        found = []
        full = (1 << dag.m) - 1
        for a in range(dag.m):
            # nodes b > a that a neither reaches nor is reached from
            free = full & ~dag.reach[a] & ~((1 << (a + 1)) - 1)
            b = 0
            while free:
                if free & 1 and not dag.precedes(b, a):
                    p, q, rp, rq = _responsible(dag, other, a, b)
                    found.append(Conflict(dag.axis, p, q, (rp, rq), flats))
                free >>= 1
                b += 1
        if order is not None:
            _require_topological(dag, order)
            found = mark_minimal(found, order)
        out.extend(found)
    return out


def _require_topological(dag: ShapeDag, order: Sequence[int]) -> None:
    if sorted(order) != list(range(dag.m)):
        raise ValueError(f"{dag.axis}-ordering is not a permutation of the {dag.m} DAG nodes")
    pos = positions(order)
    for a, b, _ in dag.arcs:
        if pos[a] >= pos[b]:
            raise ValueError(f"{dag.axis}-ordering is not topological: arc {a}->{b}")


def conflict_span(c: Conflict, pos: Sequence[int]) -> tuple[int, int]:
    i, j = pos[c.first], pos[c.second]
    return (i, j) if i < j else (j, i)


def dominates(c: Conflict, d: Conflict, pos: Sequence[int]) -> bool:
    """``c`` dominates ``d`` when ``c``'s index span nests inside ``d``'s."""
    i, j = conflict_span(c, pos)
    k, l = conflict_span(d, pos)
    return k <= i < j <= l


def positions(order: Sequence[int]) -> list[int]:
    pos = [0] * len(order)
    for i, a in enumerate(order):
        pos[a] = i
    return pos


def mark_minimal(conflicts: Sequence[Conflict], order: Sequence[int]) -> list[Conflict]:
    """Flag the conflicts not dominated by any other conflict of the same axis.

    Runs in O(k log k): a span is minimal iff no other span with a start at
    least as large ends at or before its end.
    """
    pos = positions(order)
    spans = [conflict_span(c, pos) for c in conflicts]
    # best[i] = smallest end among spans starting at >= i (excluding exact self)
    by_start = sorted(range(len(spans)), key=lambda k: (-spans[k][0], spans[k][1]))
    minimal = [True] * len(spans)
    best_end = None
    for k in by_start:
        i, j = spans[k]
        if best_end is not None and best_end <= j:
            minimal[k] = False
        if best_end is None or j < best_end:
            best_end = j
    return [replace(c, is_minimal=m) for c, m in zip(conflicts, minimal)]


def comparability_violations(
    rep: RectilinearRepresentation, dx: ShapeDag, dy: ShapeDag
) -> list[tuple[int, int]]:
    """Vertex pairs related in neither DAG (should be empty for convex input)."""
    bad = []
    for u in range(rep.n):
        for v in range(u + 1, rep.n):
            ax, bx = dx.node_of[u], dx.node_of[v]
            ay, by = dy.node_of[u], dy.node_of[v]
            if ax == bx or ay == by:
                continue
            if dx.precedes(ax, bx) or dx.precedes(bx, ax):
                continue
            if dy.precedes(ay, by) or dy.precedes(by, ay):
                continue
            bad.append((u, v))
    return bad
