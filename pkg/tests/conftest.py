"""Shared test helpers: random instances and independent oracles."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from ortho_greedy.fixtures import all_fixtures, drawing_from_segments
from ortho_greedy.repgraph import Drawing, RectilinearRepresentation


def random_dissection(seed: int, splits: int = 4, size: int = 8) -> Drawing:
    """Rectangle cut by random guillotine splits at integer positions.

    Every internal face is a rectangle and the outline is a rectangle, so the
    result is convex; conflicts and non series-parallel shape DAGs occur often.
    """
    rng = random.Random(seed)
    rects = [(0, 0, size, size)]
    for _ in range(splits):
        choices = [r for r in rects if r[2] - r[0] >= 2 or r[3] - r[1] >= 2]
        if not choices:
            break
        r = rng.choice(choices)
        x0, y0, x1, y1 = r
        rects.remove(r)
        vertical = x1 - x0 >= 2 and (y1 - y0 < 2 or rng.random() < 0.5)
        if vertical:
            c = rng.randrange(x0 + 1, x1)
            rects += [(x0, y0, c, y1), (c, y0, x1, y1)]
        else:
            c = rng.randrange(y0 + 1, y1)
            rects += [(x0, y0, x1, c), (x0, c, x1, y1)]
    segments = []
    for x0, y0, x1, y1 in rects:
        segments += [((x0, y0), (x1, y0)), ((x0, y1), (x1, y1)),
                     ((x0, y0), (x0, y1)), ((x1, y0), (x1, y1))]
    return drawing_from_segments(segments)


def random_tree_drawing(seed: int, max_leaves: int = 4) -> RectilinearRepresentation:
    """Random rectilinear tree (a path with up to two hanging paths)."""
    rng = random.Random(seed)
    length = rng.randint(2, 6)
    segs = [((0, 0), (length, 0))]
    for sign in (1, -1)[: max(0, max_leaves - 2)]:
        if rng.random() < 0.7:
            x = rng.randint(1, length - 1)
            segs.append(((x, 0), (x, sign * rng.randint(1, 3))))
    return drawing_from_segments(segs).rep


def nx_shape_dag(rep: RectilinearRepresentation, axis: str) -> tuple[dict[int, int], nx.DiGraph]:
    """Shape DAG built with networkx only: contract the edges orthogonal to
    ``axis`` and orient the rest forwards."""
    contracted = "N" if axis == "x" else "E"
    g = nx.Graph()
    g.add_nodes_from(range(rep.n))
    g.add_edges_from((e.u, e.v) for e in rep.edges if e.dir == contracted)
    comp = {}
    for k, c in enumerate(nx.connected_components(g)):
        for v in c:
            comp[v] = k
    d = nx.DiGraph()
    d.add_nodes_from(set(comp.values()))
    d.add_edges_from((comp[e.u], comp[e.v]) for e in rep.edges if e.dir != contracted)
    return comp, d


def monotone_reachable(drawing: Drawing, s: int, t: int) -> bool:
    """Breadth-first search along strictly distance-decreasing edges."""
    pts = [drawing.point(v) for v in range(drawing.rep.n)]

    def d2(v: int) -> int:
        return (pts[v][0] - pts[t][0]) ** 2 + (pts[v][1] - pts[t][1]) ** 2

    seen, todo = {s}, [s]
    while todo:
        v = todo.pop()
        if v == t:
            return True
        for u in drawing.rep.rotation(v):
            if u not in seen and d2(u) < d2(v):
                seen.add(u)
                todo.append(u)
    return False


def greedy_oracle(drawing: Drawing) -> bool:
    n = drawing.rep.n
    return all(monotone_reachable(drawing, s, t) for s in range(n) for t in range(n) if s != t)


@pytest.fixture(scope="session")
def fixtures():
    return {f.name: f for f in all_fixtures()}


# -- acceptance summary ---------------------------------------------------------

ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {key}: {detail}")
