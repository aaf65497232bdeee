"""Hand-encoded instances with known verdicts.

Most instances are written as a set of axis-parallel segments; every segment
endpoint and every point where segments touch or cross becomes a vertex.
Vertex ids follow row-major order (by y, then x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .repgraph import Drawing, RectilinearRepresentation, representation_from_coordinates
from .universal import apply_move, rectangle

Point = tuple[int, int]


def drawing_from_segments(segments: Iterable[tuple[Point, Point]]) -> Drawing:
    segs = [tuple(sorted(s)) for s in segments]
    points: set[Point] = set()
    for a, b in segs:
        if a[0] != b[0] and a[1] != b[1]:
            raise ValueError(f"segment {a}-{b} is not axis-parallel")
        points.update((a, b))
    # crossings of a horizontal with a vertical segment
    hor = [s for s in segs if s[0][1] == s[1][1]]
    ver = [s for s in segs if s[0][0] == s[1][0]]
    for (h0, h1) in hor:
        for (v0, v1) in ver:
            if h0[0] <= v0[0] <= h1[0] and v0[1] <= h0[1] <= v1[1]:
                points.add((v0[0], h0[1]))
    order = sorted(points, key=lambda p: (p[1], p[0]))
    ids = {p: i for i, p in enumerate(order)}
    pairs = set()
    for a, b in segs:
        on = sorted(p for p in order if a[0] <= p[0] <= b[0] and a[1] <= p[1] <= b[1])
        for p, q in zip(on, on[1:]):
            pairs.add((ids[p], ids[q]))
    rep = representation_from_coordinates(order, sorted(pairs))
    return Drawing(rep, [p[0] for p in order], [p[1] for p in order])


def _box(x0: int, y0: int, x1: int, y1: int) -> list[tuple[Point, Point]]:
    return [((x0, y0), (x1, y0)), ((x0, y1), (x1, y1)), ((x0, y0), (x0, y1)), ((x1, y0), (x1, y1))]


def _hline(y: int, x0: int, x1: int) -> tuple[Point, Point]:
    return (x0, y), (x1, y)


def _vline(x: int, y0: int, y1: int) -> tuple[Point, Point]:
    return (x, y0), (x, y1)


def vertex_at(drawing: Drawing, x: int, y: int) -> int:
    return next(v for v in range(drawing.rep.n) if drawing.point(v) == (x, y))


# -- instances ------------------------------------------------------------------


def rectangle_drawing() -> Drawing:
    return Drawing(rectangle(), [0, 1, 1, 0], [0, 0, 1, 1])


def subdivided_rectangle() -> Drawing:
    """Rectangle whose top side carries one degree-2 vertex at (1, 1)."""
    return drawing_from_segments(_box(0, 0, 2, 1) + [((1, 1), (1, 1))])


def grid2x2() -> Drawing:
    return drawing_from_segments(_box(0, 0, 2, 2) + [_hline(1, 0, 2), _vline(1, 0, 2)])


def conflict_example() -> Drawing:
    """Eleven rectangular faces with one x-conflict between two short
    vertical paths: ``A`` at x=2 in the bottom row and ``B`` at x=4 in the
    top row.  The responsible vertices are (2, 1), opening north, and
    (4, 2), opening south.  The coordinates form a greedy drawing."""
    segs = _box(0, 0, 6, 3)
    segs += [_hline(1, 0, 6), _hline(2, 0, 6), _vline(1, 0, 3), _vline(5, 0, 3)]
    segs += [_vline(2, 0, 1), _vline(4, 2, 3)]
    return drawing_from_segments(segs)


def two_flats(z1: int, z2: int, right: int) -> Drawing:
    """A rectangle with one flat vertex on each horizontal side; whether the
    drawing is greedy depends only on the x-coordinates."""
    segs = _box(0, 0, right, 1) + [((z1, 0), (z1, 0)), ((z2, 1), (z2, 1))]
    return drawing_from_segments(segs)


def not_greedy_two_flats() -> Drawing:
    return two_flats(1, 2, 4)


def greedy_two_flats() -> Drawing:
    return two_flats(1, 3, 4)


def internal_reflex() -> Drawing:
    """A square split into a unit square and an L-shaped face with a
    270 degree corner."""
    return drawing_from_segments(_box(0, 0, 2, 2) + [_vline(1, 1, 2), _hline(1, 1, 2)])


def u_shape() -> Drawing:
    """Three rectangular faces whose outer boundary is a U."""
    segs = [_hline(0, 0, 3), _vline(0, 0, 2), _vline(3, 0, 2), _vline(1, 0, 2), _vline(2, 0, 2),
            _hline(2, 0, 1), _hline(2, 2, 3), _hline(1, 1, 2)]
    return drawing_from_segments(segs)


def plus_shape() -> Drawing:
    """Five unit squares in a plus; orthoconvex and universal."""
    segs = _box(1, 0, 2, 3) + _box(0, 1, 3, 2) + [_vline(1, 0, 3), _vline(2, 0, 3)]
    return drawing_from_segments(segs)


def four_leaf_tree() -> Drawing:
    segs = [_hline(0, 0, 4), _vline(1, 0, 2), _vline(3, -1, 0)]
    return drawing_from_segments(segs)


def five_leaf_tree() -> Drawing:
    segs = [_hline(0, 0, 4), _vline(1, 0, 1), _vline(2, -1, 1)]
    return drawing_from_segments(segs)


def bridge() -> Drawing:
    """Universal, but its x-DAG contains the bridge pattern and so is not
    series-parallel."""
    segs = _box(0, 0, 3, 3) + [_hline(1, 0, 3), _hline(2, 0, 3), _vline(1, 0, 2), _vline(2, 1, 3)]
    return drawing_from_segments(segs)


def three_strips() -> Drawing:
    """Five full-width rows with a short vertical path at a different x in
    rows 0, 2 and 4.  The x-DAG is a parallel composition of three
    non-edge branches, so no good ordering exists."""
    segs = _box(0, 0, 4, 5) + [_hline(y, 0, 4) for y in range(1, 5)]
    segs += [_vline(1, 0, 1), _vline(2, 2, 3), _vline(3, 4, 5)]
    return drawing_from_segments(segs)


def bridge_with_conflict() -> Drawing:
    """Not series-parallel and not universal: the bridge pattern next to an
    x-conflict."""
    segs = _box(0, 0, 5, 3) + [_hline(1, 0, 5), _hline(2, 0, 5), _vline(1, 0, 2), _vline(2, 1, 3)]
    segs += [_vline(3, 0, 3), _vline(4, 0, 1)]
    segs += [_vline(4, 2, 3)]
    return drawing_from_segments(segs)


def wide_tower() -> Drawing:
    """Universal: a box on top of a four-column bar.  The top edge of the
    upper box spans the column of the bar vertex at x=2, so subdividing it
    is illegal."""
    segs = _box(0, 0, 4, 1) + _box(1, 1, 3, 2) + [_vline(1, 0, 1), _vline(2, 0, 1), _vline(3, 0, 1)]
    return drawing_from_segments(segs)


def exponential_labels(q: int) -> list[str]:
    return ([f"v{i}" for i in range(1, q + 1)] + [f"w{i}" for i in range(1, q)]
            + [f"z{i}" for i in range(1, q + 1)] + [f"u{i}" for i in range(2, q + 1)])


def exponential_instance(q: int) -> Drawing:
    """A staircase of ``q`` rows hanging off a vertical spine ``v1..vq``.

    Row ``i`` is the horizontal path ``u_i, w_i, z_i, v_i`` (row 1 has no
    ``u``, row ``q`` has no ``w``) and ``w_i`` sits directly below
    ``u_{i+1}``.  Vertex ids follow :func:`exponential_labels`.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    labels = exponential_labels(q)
    ids = {name: i for i, name in enumerate(labels)}
    xy: dict[str, Point] = {}
    for i in range(1, q + 1):
        xy[f"v{i}"] = (2 * q, i - 1)
    for i in range(1, q):
        xy[f"w{i}"] = (2 * (i - 1), i - 1)
        xy[f"z{i}"] = (2 * (i - 1) + 1, i - 1)
    xy[f"z{q}"] = (2 * (q - 2) + 1, q - 1)
    for i in range(2, q + 1):
        xy[f"u{i}"] = (xy[f"w{i - 1}"][0], i - 1)
    pairs = [(f"v{i}", f"v{i + 1}") for i in range(1, q)]
    pairs += [("w1", "z1"), ("z1", "v1")]
    for i in range(2, q):
        pairs += [(f"u{i}", f"w{i}"), (f"w{i}", f"z{i}"), (f"z{i}", f"v{i}")]
    pairs += [(f"u{q}", f"z{q}"), (f"z{q}", f"v{q}")]
    pairs += [(f"w{i}", f"u{i + 1}") for i in range(1, q)]
    coords = [xy[name] for name in labels]
    rep = representation_from_coordinates(coords, [(ids[a], ids[b]) for a, b in pairs])
    return Drawing(rep, [c[0] for c in coords], [c[1] for c in coords])


# the primitive types applied in turn by the eight-step construction
CONSTRUCTION_STEPS = ("flat", 2, 1, 3, 3, 2, 4)


def construction_sequence() -> list[RectilinearRepresentation]:
    """Rectangle followed by seven primitives of the kinds listed in
    :data:`CONSTRUCTION_STEPS`.  Moves are tried in sorted order with
    backtracking, so the result is the lexicographically first sequence in
    which every step has a legal move of the required kind."""
    from .universal import legal_moves

    def extend(reps: list[RectilinearRepresentation]) -> list[RectilinearRepresentation] | None:
        if len(reps) == len(CONSTRUCTION_STEPS) + 1:
            return reps
        kind = CONSTRUCTION_STEPS[len(reps) - 1]
        for m in legal_moves(reps[-1]):
            if (m.kind == "flat") if kind == "flat" else (m.kind == "reflex" and m.k == kind):
                done = extend(reps + [apply_move(reps[-1], m, check=False)])
                if done is not None:
                    return done
        return None

    out = extend([rectangle()])
    if out is None:
        raise RuntimeError("no sequence of the required kinds exists")
    return out


@dataclass(frozen=True)
class Fixture:
    name: str
    rep: RectilinearRepresentation
    coordinates: Drawing | None
    expected: str  # universal | realizable | not-realizable | unknown
    stage: str | None = None  # where a rejection happens


def all_fixtures() -> list[Fixture]:
    from .universal import generate_universal

    out = [
        Fixture("rectangle", rectangle(), rectangle_drawing(), "universal"),
        Fixture("subdivided-rectangle", subdivided_rectangle().rep, subdivided_rectangle(), "universal"),
        Fixture("grid2x2", grid2x2().rep, grid2x2(), "universal"),
        Fixture("two-flats", greedy_two_flats().rep, greedy_two_flats(), "realizable"),
        Fixture("internal-reflex", internal_reflex().rep, internal_reflex(), "not-realizable", "convexity"),
        Fixture("u-shape", u_shape().rep, u_shape(), "not-realizable", "convexity"),
        Fixture("convex-plus", plus_shape().rep, plus_shape(), "universal"),
        Fixture("universal-generated", generate_universal(7, 12), None, "universal"),
        Fixture("four-leaf-tree", four_leaf_tree().rep, four_leaf_tree(), "realizable"),
        Fixture("five-leaf-tree", five_leaf_tree().rep, five_leaf_tree(), "not-realizable", "tree"),
        Fixture("conflict-example", conflict_example().rep, conflict_example(), "realizable"),
        Fixture("bridge", bridge().rep, bridge(), "universal"),
        Fixture("three-strips", three_strips().rep, three_strips(), "not-realizable", "ordering"),
        Fixture("wide-tower", wide_tower().rep, wide_tower(), "universal"),
    ]
    for seed in range(1, 7):
        out.append(Fixture(f"universal-s{seed}", generate_universal(seed, 4 + 2 * seed), None, "universal"))
    for i, rep in enumerate(construction_sequence()):
        out.append(Fixture(f"construction-{'abcdefgh'[i]}", rep, None, "universal"))
    for q in (2, 3, 4, 8):
        # the construction coordinates are not greedy, so none are attached
        out.append(Fixture(f"exponential-q{q}", exponential_instance(q).rep, None, "realizable"))
    return out



# -- checked-in corpus -------------------------------------------------------------


def corpus_documents() -> dict[str, str]:
    """File name -> text for every fixture plus a manifest of expected verdicts."""
    import json

    docs = {}
    manifest = []
    for f in all_fixtures():
        name = f"{f.name}.json"
        docs[name] = f.coordinates.to_json() if f.coordinates is not None else f.rep.to_json()
        manifest.append({"name": f.name, "file": name, "expected": f.expected, "stage": f.stage,
                         "has_coordinates": f.coordinates is not None})
    docs["manifest.json"] = json.dumps(manifest, indent=2) + "\n"
    return docs


def load_corpus() -> list[dict]:
    """Manifest entries with the parsed representation (and drawing, when
    the file carries coordinates) under ``rep`` / ``drawing``."""
    import json
    from importlib import resources

    from .repgraph import drawing_from_dict, from_dict

    root = resources.files("ortho_greedy") / "data"
    out = []
    for entry in json.loads((root / "manifest.json").read_text()):
        doc = json.loads((root / entry["file"]).read_text())
        item = dict(entry)
        item["rep"] = from_dict({k: doc[k] for k in ("vertices", "edges")})
        item["drawing"] = drawing_from_dict(doc) if "coordinates" in doc else None
        out.append(item)
    return out


def write_corpus(target=None) -> None:
    """Rewrite the checked-in corpus (defaults to the package data folder)."""
    from pathlib import Path

    target = Path(target) if target is not None else Path(__file__).parent / "data"
    for fname, text in corpus_documents().items():
        (target / fname).write_text(text)
