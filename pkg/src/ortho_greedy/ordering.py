"""Good st-orderings of shape DAGs.

An st-ordering is good when every window of consecutive positions induces at
most two undirected components, and when there are two, one lies entirely
before the other.  Positions are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .shapedags import ShapeDag


@dataclass(frozen=True)
class StOrdering:
    dag: ShapeDag
    order: tuple[int, ...]
    good: bool
    # (first position, last position, components as node lists) of the first bad window
    violation: tuple[int, int, tuple[tuple[int, ...], ...]] | None = None

    def to_dict(self) -> dict:
        out = {"order": list(self.order), "good": self.good}
        if self.violation is not None:
            i, j, comps = self.violation
            out["violation"] = {"from": i, "to": j, "components": [list(c) for c in comps]}
        return out


def _check_topological(dag: ShapeDag, order: Sequence[int]) -> list[int]:
    if sorted(order) != list(range(dag.m)):
        raise ValueError("ordering is not a permutation of the DAG nodes")
    pos = [0] * dag.m
    for i, a in enumerate(order):
        pos[a] = i
    for a, b, _ in dag.arcs:
        if pos[a] >= pos[b]:
            raise ValueError(f"ordering is not topological: arc {a}->{b}")
    return pos


def window_violation(dag: ShapeDag, order: Sequence[int]) -> tuple[int, int, tuple[tuple[int, ...], ...]] | None:
    """First window ``order[i..j]`` breaking either goodness condition.

    Grows each window one node at a time with a union-find that tracks the
    smallest and largest position in every component.
    """
    pos = _check_topological(dag, order)
    m = dag.m
    nbrs = [dag.neighbors(a) for a in range(m)]
    for i in range(m):
        parent: dict[int, int] = {}
        span: dict[int, list[int]] = {}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for j in range(i, m):
            a = order[j]
            parent[a] = a
            span[a] = [j, j]
            for b in nbrs[a]:
                if b in parent:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[rb] = ra
                        span[ra] = [min(span[ra][0], span[rb][0]), max(span[ra][1], span[rb][1])]
                        del span[rb]
            if j == i:
                continue
            if len(span) > 2 or (
                len(span) == 2 and _interleaved(*span.values())
            ):
                groups: dict[int, list[int]] = {}
                for b in parent:
                    groups.setdefault(find(b), []).append(b)
                comps = tuple(sorted(tuple(sorted(g, key=pos.__getitem__)) for g in groups.values()))
                return i, j, comps
    return None


def _interleaved(s: list[int], t: list[int]) -> bool:
    return not (s[1] < t[0] or t[1] < s[0])


def check_good(dag: ShapeDag, order: Sequence[int]) -> StOrdering:
    """Definition-level check; raises ``ValueError`` for a non-topological order."""
    v = window_violation(dag, order)
    return StOrdering(dag, tuple(order), v is None, v)


def topological_orders(dag: ShapeDag) -> Iterator[list[int]]:
    """Every topological order, in lexicographic order."""
    indeg = [len(p) for p in dag.pred]
    order: list[int] = []

    def rec() -> Iterator[list[int]]:
        if len(order) == dag.m:
            yield list(order)
            return
        for a in range(dag.m):
            if indeg[a] == 0 and a not in placed:
                placed.add(a)
                order.append(a)
                for b in dag.succ[a]:
                    indeg[b] -= 1
                yield from rec()
                for b in dag.succ[a]:
                    indeg[b] += 1
                order.pop()
                placed.discard(a)

    placed: set[int] = set()
    yield from rec()


def good_orderings(dag: ShapeDag) -> Iterator[list[int]]:
    for order in topological_orders(dag):
        if window_violation(dag, order) is None:
            yield order


# -- series-parallel decomposition --------------------------------------------


@dataclass(frozen=True)
class SpNode:
    """A node of the decomposition tree.

    ``edge`` leaves carry the arc index; ``series`` nodes list their children
    from source to sink with ``junctions[i]`` shared by children ``i`` and
    ``i+1``; ``parallel`` children all run from ``source`` to ``sink``.
    """

    kind: str
    source: int
    sink: int
    children: tuple["SpNode", ...] = ()
    arc: int | None = None
    junctions: tuple[int, ...] = ()

    def nodes(self) -> set[int]:
        out = {self.source, self.sink}
        out.update(self.junctions)
        for c in self.children:
            out |= c.nodes()
        return out

    def arcs(self) -> list[int]:
        if self.kind == "edge":
            return [self.arc]
        return [a for c in self.children for a in c.arcs()]

    def inner(self) -> set[int]:
        return self.nodes() - {self.source, self.sink}

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "source": self.source, "sink": self.sink}
        if self.kind == "edge":
            out["arc"] = self.arc
        else:
            out["children"] = [c.to_dict() for c in self.children]
        if self.junctions:
            out["junctions"] = list(self.junctions)
        return out


@dataclass(frozen=True)
class NotSP:
    """Reductions stalled; the remaining arcs as ``(tail, head)`` pairs."""

    remaining: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"series_parallel": False, "remaining": [list(a) for a in self.remaining]}


def _flatten(t: SpNode) -> SpNode:
    if t.kind == "edge":
        return t
    kids = [_flatten(c) for c in t.children]
    if t.kind == "parallel":
        flat = []
        for c in kids:
            flat.extend(c.children if c.kind == "parallel" else [c])
        return SpNode("parallel", t.source, t.sink, tuple(flat))
    flat, junc = [], []
    for c in kids:
        if flat:
            junc.append(c.source)
        if c.kind == "series":
            flat.extend(c.children)
            junc.extend(c.junctions)
        else:
            flat.append(c)
    return SpNode("series", t.source, t.sink, tuple(flat), None, tuple(junc))


def recognize_series_parallel(dag: ShapeDag) -> SpNode | NotSP:
    """Apply series and parallel reductions until nothing changes."""
    s, t = dag.source, dag.sink
    live: dict[int, SpNode] = {}
    for idx, (a, b, _) in enumerate(dag.arcs):
        live[idx] = SpNode("edge", a, b, (), idx)
    next_id = len(dag.arcs)
    changed = True
    while changed and len(live) > 1:
        changed = False
        # parallel: arcs sharing both ends
        groups: dict[tuple[int, int], list[int]] = {}
        for k, tr in live.items():
            groups.setdefault((tr.source, tr.sink), []).append(k)
        for (a, b), ks in groups.items():
            if len(ks) > 1:
                merged = SpNode("parallel", a, b, tuple(live.pop(k) for k in sorted(ks)))
                live[next_id] = merged
                next_id += 1
                changed = True
        # series: an inner node with one arc in and one arc out
        ins: dict[int, list[int]] = {}
        outs: dict[int, list[int]] = {}
        for k, tr in live.items():
            outs.setdefault(tr.source, []).append(k)
            ins.setdefault(tr.sink, []).append(k)
        for v in sorted(ins):
            if v in (s, t) or len(ins.get(v, ())) != 1 or len(outs.get(v, ())) != 1:
                continue
            k1, k2 = ins[v][0], outs[v][0]
            if k1 not in live or k2 not in live:
                continue
            t1, t2 = live.pop(k1), live.pop(k2)
            live[next_id] = SpNode("series", t1.source, t2.sink, (t1, t2), None, (v,))
            next_id += 1
            changed = True
            break
    if len(live) == 1:
        (root,) = live.values()
        if (root.source, root.sink) == (s, t):
            return _flatten(root)
    return NotSP(tuple(sorted((tr.source, tr.sink) for tr in live.values())))


def expand(tree: SpNode) -> tuple[set[int], list[int]]:
    """Node set and sorted arc indices covered by ``tree``."""
    return tree.nodes(), sorted(tree.arcs())


# -- construction ---------------------------------------------------------------


@dataclass(frozen=True)
class Infeasible:
    reason: str
    composition: tuple[int, int]  # source and sink of the offending parallel composition

    def to_dict(self) -> dict:
        return {"infeasible": self.reason, "composition": list(self.composition)}


class _Reject(Exception):
    def __init__(self, info: Infeasible):
        self.info = info


def _ends(dag: ShapeDag, inner: set[int]) -> tuple[int, int]:
    """Number of sources and sinks of the subgraph induced by ``inner``."""
    sources = sum(1 for a in inner if not any(b in inner for b in dag.pred[a]))
    sinks = sum(1 for a in inner if not any(b in inner for b in dag.succ[a]))
    return sources, sinks


def _core_order(dag: ShapeDag, t: SpNode) -> list[int]:
    if t.kind == "edge":
        return []
    if t.kind == "series":
        out = _core_order(dag, t.children[0])
        for j, c in zip(t.junctions, t.children[1:]):
            out.append(j)
            out.extend(_core_order(dag, c))
        return out
    branches = [c for c in t.children if c.kind != "edge"]
    where = (t.source, t.sink)
    if len(branches) > 2:
        raise _Reject(Infeasible(f"parallel composition merges {len(branches)} non-edge components", where))
    if not branches:
        return []
    if len(branches) == 1:
        return _core_order(dag, branches[0])
    d1, d2 = branches
    i1, i2 = d1.inner(), d2.inner()
    src1, snk1 = _ends(dag, i1)
    src2, snk2 = _ends(dag, i2)
    if snk1 == 1 and src2 == 1:
        return _core_order(dag, d1) + _core_order(dag, d2)
    if snk2 == 1 and src1 == 1:
        return _core_order(dag, d2) + _core_order(dag, d1)
    raise _Reject(Infeasible("neither component can precede the other", where))


def construct_good_sp(dag: ShapeDag, tree: SpNode) -> StOrdering | Infeasible:
    try:
        core = _core_order(dag, tree)
    except _Reject as r:
        return r.info
    order = [tree.source] + core + [tree.sink]
    return StOrdering(dag, tuple(order), True)


@dataclass(frozen=True)
class OrderingResult:
    """Outcome of searching one axis: ``good`` (with an ordering),
    ``infeasible`` or ``unknown``; ``method`` says how it was decided."""

    status: str
    ordering: StOrdering | None
    method: str
    detail: dict | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "method": self.method,
            "ordering": None if self.ordering is None else list(self.ordering.order),
            "detail": self.detail,
        }


BRUTE_FORCE_LIMIT = 9


def find_good_ordering(dag: ShapeDag, brute_force_limit: int = BRUTE_FORCE_LIMIT) -> OrderingResult:
    """Series-parallel construction when possible, otherwise exhaustive
    search over topological orders for DAGs with at most
    ``brute_force_limit`` nodes."""
    tree = recognize_series_parallel(dag)
    if isinstance(tree, SpNode):
        res = construct_good_sp(dag, tree)
        if isinstance(res, Infeasible):
            return OrderingResult("infeasible", None, "series-parallel", res.to_dict())
        return OrderingResult("good", res, "series-parallel")
    if dag.m <= brute_force_limit:
        for order in good_orderings(dag):
            return OrderingResult("good", StOrdering(dag, tuple(order), True), "exhaustive")
        return OrderingResult("infeasible", None, "exhaustive", tree.to_dict())
    return OrderingResult("unknown", None, "none", tree.to_dict())
