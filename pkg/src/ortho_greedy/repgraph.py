"""Plane graphs with rectilinear representations, and their drawings.

A representation stores every edge once, as ``(u, v, dir)`` with ``dir`` either
``"E"`` (``v`` lies strictly right of ``u``) or ``"N"`` (``v`` lies strictly
above ``u``).  Everything else -- the rotation system, the faces and the angle
at every corner -- is derived from those compass labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

# compass slots in clockwise order
N, E, S, W = 0, 1, 2, 3
SLOT_NAMES = "NESW"
DELTA = {N: (0, 1), E: (1, 0), S: (0, -1), W: (-1, 0)}


def opposite(d: int) -> int:
    return (d + 2) % 4


def turn_left(d: int) -> int:
    return (d - 1) % 4


def turn_right(d: int) -> int:
    return (d + 1) % 4


class RepresentationError(ValueError):
    """Raised when a document or edge list is not a valid representation.

    ``problems`` lists every violated condition, not just the first one.
    """

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class NotBiconnectedError(ValueError):
    """A pipeline that needs a biconnected graph was given something else."""


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int
    dir: str

    @property
    def slot_u(self) -> int:
        return E if self.dir == "E" else N

    @property
    def slot_v(self) -> int:
        return opposite(self.slot_u)

    @property
    def horizontal(self) -> bool:
        return self.dir == "E"


@dataclass(frozen=True)
class Corner:
    """One corner of a face walk: the walk enters ``vertex`` travelling in
    direction ``arrive`` and leaves travelling in direction ``leave``."""

    vertex: int
    arrive: int
    leave: int
    angle: int


@dataclass(frozen=True)
class Face:
    index: int
    corners: tuple[Corner, ...]
    external: bool

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(c.vertex for c in self.corners)

    @property
    def turn_sum(self) -> int:
        return sum(180 - c.angle for c in self.corners)


@dataclass(frozen=True)
class RectilinearRepresentation:
    """An immutable rectilinear representation.

    Edges are kept sorted by ``(u, v, dir)``; construction validates the
    input and raises :class:`RepresentationError` listing all problems.
    """

    n: int
    edges: tuple[Edge, ...]
    slots: tuple[tuple[int | None, ...], ...] = field(init=False, repr=False, compare=False)
    slot_edges: tuple[tuple[int | None, ...], ...] = field(init=False, repr=False, compare=False)
    faces: tuple[Face, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Edge | tuple[int, int, str]]):
        es = []
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            es.append(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(es)))
        self._validate()

    # -- construction -----------------------------------------------------

    def _validate(self) -> None:
        problems: list[str] = []
        n = self.n
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise RepresentationError([f"vertex count must be a positive integer, got {n!r}"])
        if not self.edges:
            raise RepresentationError(["representation has no edges"])
        degree = [0] * n
        for e in self.edges:
            if e.dir not in ("E", "N"):
                problems.append(f"edge {e.u}-{e.v}: unknown orientation {e.dir!r}")
            for w in (e.u, e.v):
                if not isinstance(w, int) or not 0 <= w < n:
                    problems.append(f"edge {e.u}-{e.v}: vertex {w!r} out of range")
            if e.u == e.v:
                problems.append(f"self-loop at vertex {e.u}")
        if problems:
            raise RepresentationError(problems)

        slots: list[list[int | None]] = [[None] * 4 for _ in range(n)]
        slot_edges: list[list[int | None]] = [[None] * 4 for _ in range(n)]
        for idx, e in enumerate(self.edges):
            degree[e.u] += 1
            degree[e.v] += 1
            for w, other, s in ((e.u, e.v, e.slot_u), (e.v, e.u, e.slot_v)):
                if slots[w][s] is not None:
                    problems.append(f"duplicated compass slot {SLOT_NAMES[s]} at vertex {w}")
                else:
                    slots[w][s] = other
                    slot_edges[w][s] = idx
        for v, d in enumerate(degree):
            if d > 4:
                problems.append(f"degree {d} > 4 at vertex {v}")
            if d == 0:
                problems.append(f"isolated vertex {v}")
        if problems:
            raise RepresentationError(problems)
        object.__setattr__(self, "slots", tuple(tuple(s) for s in slots))
        object.__setattr__(self, "slot_edges", tuple(tuple(s) for s in slot_edges))

        seen = {0}
        stack = [0]
        while stack:
            for w in slots[stack.pop()]:
                if w is not None and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise RepresentationError(["graph is not connected"])

        faces = self._trace_faces()
        external = [f for f in faces if f.turn_sum == -360]
        bad = [f.index for f in faces if f.turn_sum not in (360, -360)]
        if len(external) != 1 or bad or n - len(self.edges) + len(faces) != 2:
            raise RepresentationError(
                ["non-planar rotation system: face turn sums "
                 f"{[f.turn_sum for f in faces]} with {len(faces)} faces"])
        ext = external[0].index
        faces = [Face(f.index, f.corners, f.index == ext) for f in faces]
        object.__setattr__(self, "faces", tuple(faces))

    def _next_slot(self, v: int, s: int) -> int:
        """First occupied slot strictly clockwise after ``s`` (``s`` itself
        when ``v`` has degree one)."""
        for k in range(1, 5):
            t = (s + k) % 4
            if self.slots[v][t] is not None:
                return t
        raise AssertionError("unreachable")

    def _trace_faces(self) -> list[Face]:
        seen: set[tuple[int, int]] = set()
        faces: list[Face] = []
        for v0 in range(self.n):
            for d0 in range(4):
                if self.slots[v0][d0] is None or (v0, d0) in seen:
                    continue
                corners = []
                v, d = v0, d0
                while (v, d) not in seen:
                    seen.add((v, d))
                    w = self.slots[v][d]
                    back = opposite(d)
                    nd = self._next_slot(w, back)
                    angle = 90 * (((nd - back) % 4) or 4)
                    corners.append(Corner(w, d, nd, angle))
                    v, d = w, nd
                # rotate so the walk starts at the smallest vertex id for determinism
                k = min(range(len(corners)), key=lambda i: (corners[i].vertex, corners[i].arrive))
                corners = corners[k:] + corners[:k]
                faces.append(Face(len(faces), tuple(corners), False))
        return faces

    # -- derived structure -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((e.u, e.v) for e in self.edges)
        return g

    def degree(self, v: int) -> int:
        return sum(s is not None for s in self.slots[v])

    def neighbor(self, v: int, slot: int) -> int | None:
        return self.slots[v][slot]

    def rotation(self, v: int) -> list[int]:
        """Neighbors of ``v`` in clockwise order, starting from north."""
        return [w for w in self.slots[v] if w is not None]

    @property
    def external_face(self) -> Face:
        return next(f for f in self.faces if f.external)

    @property
    def internal_faces(self) -> list[Face]:
        return [f for f in self.faces if not f.external]

    def angles_at(self, v: int) -> list[int]:
        return [c.angle for f in self.faces for c in f.corners if c.vertex == v]

    def external_edge_indices(self) -> list[int]:
        out = []
        for c in self.external_face.corners:
            # the dart leaving c.vertex in direction c.leave
            out.append(self.slot_edges[c.vertex][c.leave])
        return sorted(set(out))

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": self.n,
            "edges": [{"u": e.u, "v": e.v, "dir": e.dir} for e in self.edges],
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def rotated(self) -> "RectilinearRepresentation":
        """The same representation turned 90 degrees counterclockwise:
        east becomes north and north becomes west (a reversed east edge)."""
        out = []
        for e in self.edges:
            if e.dir == "E":
                out.append(Edge(e.u, e.v, "N"))
            else:
                out.append(Edge(e.v, e.u, "E"))
        return RectilinearRepresentation(self.n, out)


def dumps(doc: dict) -> str:
    """Deterministic JSON text: one edge per line."""
    lines = ["{", f'  "vertices": {doc["vertices"]},', '  "edges": [']
    edges = doc["edges"]
    for i, e in enumerate(edges):
        sep = "," if i + 1 < len(edges) else ""
        lines.append(f'    {{"u": {e["u"]}, "v": {e["v"]}, "dir": "{e["dir"]}"}}{sep}')
    lines.append("  ]" + ("," if "coordinates" in doc else ""))
    if "coordinates" in doc:
        coords = doc["coordinates"]
        lines.append('  "coordinates": [')
        for i, (x, y) in enumerate(coords):
            sep = "," if i + 1 < len(coords) else ""
            lines.append(f"    [{x}, {y}]{sep}")
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dict(doc: dict) -> RectilinearRepresentation:
    problems = []
    if not isinstance(doc, dict):
        raise RepresentationError(["document must be a JSON object"])
    n = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(n, int) or isinstance(n, bool):
        problems.append("'vertices' must be an integer")
    if not isinstance(edges, list):
        problems.append("'edges' must be a list")
    if problems:
        raise RepresentationError(problems)
    out = []
    for i, e in enumerate(edges):
        if not isinstance(e, dict) or set(e) - {"u", "v", "dir"} or not {"u", "v", "dir"} <= set(e):
            problems.append(f"edge #{i} must have exactly the keys u, v, dir")
            continue
        if not all(isinstance(e[k], int) and not isinstance(e[k], bool) for k in ("u", "v")):
            problems.append(f"edge #{i}: endpoints must be integers")
            continue
        out.append(Edge(e["u"], e["v"], e["dir"]))
    if problems:
        raise RepresentationError(problems)
    return RectilinearRepresentation(n, out)


def parse(text: str) -> RectilinearRepresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationError([f"malformed document: {exc}"]) from exc
    return from_dict(doc)


def serialize(rep: RectilinearRepresentation) -> str:
    return rep.to_json()


def representation_from_coordinates(
    coords: Sequence[tuple[int, int]], pairs: Iterable[tuple[int, int]]
) -> RectilinearRepresentation:
    """Read the orientation of every edge off a drawing."""
    edges = []
    for a, b in pairs:
        (xa, ya), (xb, yb) = coords[a], coords[b]
        if ya == yb and xa != xb:
            edges.append(Edge(a, b, "E") if xa < xb else Edge(b, a, "E"))
        elif xa == xb and ya != yb:
            edges.append(Edge(a, b, "N") if ya < yb else Edge(b, a, "N"))
        else:
            raise RepresentationError([f"edge {a}-{b} is not axis-parallel"])
    return RectilinearRepresentation(len(coords), edges)


# -- flat vertices and connectivity -------------------------------------------

FLAT_NAMES = {N: "north", E: "east", S: "south", W: "west"}


def classify_flat_vertices(rep: RectilinearRepresentation) -> list[tuple[int, str]]:
    """Every 180 degree angle as ``(vertex, side it opens toward)``.

    A degree-2 vertex between two collinear edges carries two flat angles, one
    on each side, and is listed twice.
    """
    out = []
    for v in range(rep.n):
        sl = rep.slots[v]
        for d in (N, E, S, W):
            if sl[d] is None and sl[turn_left(d)] is not None and sl[turn_right(d)] is not None:
                out.append((v, FLAT_NAMES[d]))
    return out


def is_biconnected(rep: RectilinearRepresentation) -> bool:
    return rep.n >= 3 and nx.is_biconnected(rep.graph())


def count_leaves(rep: RectilinearRepresentation) -> int:
    return sum(1 for v in range(rep.n) if rep.degree(v) == 1)


def is_tree(rep: RectilinearRepresentation) -> bool:
    return rep.m == rep.n - 1


def require_biconnected(rep: RectilinearRepresentation) -> None:
    if not is_biconnected(rep):
        raise NotBiconnectedError(
            "representation is not biconnected "
            f"({count_leaves(rep)} degree-1 vertices)")


# -- drawings -----------------------------------------------------------------


class DrawingError(ValueError):
    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class Drawing:
    """Integer coordinates for every vertex of a representation."""

    rep: RectilinearRepresentation
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        object.__setattr__(self, "y", tuple(int(v) for v in self.y))
        if len(self.x) != self.rep.n or len(self.y) != self.rep.n:
            raise DrawingError([f"expected {self.rep.n} coordinates"])

    def point(self, v: int) -> tuple[int, int]:
        return self.x[v], self.y[v]

    @property
    def width(self) -> int:
        return max(self.x) - min(self.x)

    @property
    def height(self) -> int:
        return max(self.y) - min(self.y)

    @property
    def area(self) -> int:
        return self.width * self.height

    def problems(self) -> list[str]:
        """Every way in which the coordinates fail to realize the representation."""
        out = []
        for e in self.rep.edges:
            if e.dir == "E":
                if not (self.y[e.u] == self.y[e.v] and self.x[e.u] < self.x[e.v]):
                    out.append(f"edge {e.u}-{e.v} is not drawn pointing east")
            elif not (self.x[e.u] == self.x[e.v] and self.y[e.u] < self.y[e.v]):
                out.append(f"edge {e.u}-{e.v} is not drawn pointing north")
        pts = {}
        for v in range(self.rep.n):
            p = self.point(v)
            if p in pts:
                out.append(f"vertices {pts[p]} and {v} coincide")
            pts[p] = v
        if out:
            return out
        out.extend(self._crossings())
        return out

    def _crossings(self) -> list[str]:
        out = []
        boxes = []
        for e in self.rep.edges:
            x0, x1 = sorted((self.x[e.u], self.x[e.v]))
            y0, y1 = sorted((self.y[e.u], self.y[e.v]))
            boxes.append((x0, x1, y0, y1))
        es = self.rep.edges
        for i in range(len(es)):
            a = boxes[i]
            for j in range(i + 1, len(es)):
                b = boxes[j]
                lo_x, hi_x = max(a[0], b[0]), min(a[1], b[1])
                if lo_x > hi_x:
                    continue
                lo_y, hi_y = max(a[2], b[2]), min(a[3], b[3])
                if lo_y > hi_y:
                    continue
                shared = {es[i].u, es[i].v} & {es[j].u, es[j].v}
                if shared:
                    (c,) = shared
                    if (lo_x, hi_x, lo_y, hi_y) == (self.x[c], self.x[c], self.y[c], self.y[c]):
                        continue
                out.append(f"edges {es[i].u}-{es[i].v} and {es[j].u}-{es[j].v} intersect")
        return out

    def check(self) -> "Drawing":
        p = self.problems()
        if p:
            raise DrawingError(p)
        return self

    def derived_representation(self) -> RectilinearRepresentation:
        coords = [self.point(v) for v in range(self.rep.n)]
        return representation_from_coordinates(coords, [(e.u, e.v) for e in self.rep.edges])

    def to_dict(self) -> dict:
        doc = self.rep.to_dict()
        doc["coordinates"] = [[self.x[v], self.y[v]] for v in range(self.rep.n)]
        return doc

    def to_json(self) -> str:
        return dumps(self.to_dict())


def drawing_from_dict(doc: dict) -> Drawing:
    rep = from_dict(doc)
    coords = doc.get("coordinates")
    if not isinstance(coords, list) or len(coords) != rep.n:
        raise DrawingError([f"'coordinates' must list {rep.n} [x, y] pairs"])
    for c in coords:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(t, int) for t in c)):
            raise DrawingError(["coordinates must be integer [x, y] pairs"])
    return Drawing(rep, [c[0] for c in coords], [c[1] for c in coords])


def parse_drawing(text: str) -> Drawing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationError([f"malformed document: {exc}"]) from exc
    return drawing_from_dict(doc)
