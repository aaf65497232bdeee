"""End-to-end decision and drawing, plus the generator campaign."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .convexity import check_convex
from .coords import draw_tree, draw_with_orderings
from .ordering import OrderingResult, find_good_ordering
from .repgraph import (
    Drawing,
    RectilinearRepresentation,
    count_leaves,
    is_tree,
    require_biconnected,
)
from .shapedags import build_shape_dag, enumerate_conflicts
from .svg import render_svg
from .universal import (
    draw_universal_min_area,
    generate_universal,
    staircase_oracle,
    test_universal,
)
from .verify import dilation, is_greedy


class StageError(RuntimeError):
    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"{stage}: {cause}")


@dataclass(frozen=True)
class GreedyVerdict:
    """``status`` is one of universal, realizable, not-realizable, unknown;
    ``stage`` names the check that rejected the input."""

    status: str
    stage: str | None = None
    reason: str | None = None
    ordering_x: OrderingResult | None = None
    ordering_y: OrderingResult | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "stage": self.stage,
            "reason": self.reason,
            "ordering_x": None if self.ordering_x is None else self.ordering_x.to_dict(),
            "ordering_y": None if self.ordering_y is None else self.ordering_y.to_dict(),
        }


def test_greedy(rep: RectilinearRepresentation) -> GreedyVerdict:
    """Decide greedy realizability as far as the available tests reach."""
    if is_tree(rep):
        k = count_leaves(rep)
        if k > 4:
            return GreedyVerdict("not-realizable", "tree", f"tree with {k} leaves")
        return GreedyVerdict("realizable", "tree")
    require_biconnected(rep)
    report = check_convex(rep)
    if not report.is_convex:
        why = []
        if report.offending_internal_faces:
            why.append(f"internal faces {list(report.offending_internal_faces)} are not rectangles")
        if report.orthoconvexity_witness:
            why.append("external boundary is not orthoconvex")
        return GreedyVerdict("not-realizable", "convexity", "; ".join(why))
    dx = build_shape_dag(rep, "x")
    dy = build_shape_dag(rep, "y")
    if test_universal(rep, dx, dy).is_universal:
        return GreedyVerdict("universal", "universal")
    ox, oy = find_good_ordering(dx), find_good_ordering(dy)
    for axis, res in (("x", ox), ("y", oy)):
        if res.status == "infeasible":
            return GreedyVerdict("not-realizable", "ordering", f"D_{axis} has no good st-ordering", ox, oy)
    if "unknown" in (ox.status, oy.status):
        return GreedyVerdict("unknown", "ordering", "shape DAG is not series-parallel and too large to search", ox, oy)
    return GreedyVerdict("realizable", "ordering", None, ox, oy)


test_greedy.__test__ = False


def draw(rep: RectilinearRepresentation, verdict: GreedyVerdict | None = None) -> Drawing | None:
    """A greedy drawing when one is known to exist, else ``None``."""
    verdict = verdict or test_greedy(rep)
    if verdict.status == "universal":
        return draw_universal_min_area(rep)
    if verdict.status != "realizable":
        return None
    if verdict.stage == "tree":
        return draw_tree(rep)
    return draw_with_orderings(rep, verdict.ordering_x.ordering.order, verdict.ordering_y.ordering.order).drawing


@dataclass
class PipelineResult:
    verdict: str
    drawing: Drawing | None = None
    drawing_path: str | None = None
    svg_path: str | None = None
    reports: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "drawing_path": self.drawing_path,
            "svg_path": self.svg_path,
            "coordinates": None if self.drawing is None else
            [[self.drawing.x[v], self.drawing.y[v]] for v in range(self.drawing.rep.n)],
            "reports": self.reports,
            "timings": self.timings,
        }


def cmd_pipeline(
    rep: RectilinearRepresentation,
    json_out: str | os.PathLike | None = None,
    svg_out: str | os.PathLike | None = None,
) -> PipelineResult:
    res = PipelineResult("unknown")

    def stage(name, fn, *args):
        t = time.perf_counter()
        try:
            return fn(*args)
        except Exception as exc:  # re-raised with the stage attached
            raise StageError(name, exc) from exc
        finally:
            res.timings[name] = round(time.perf_counter() - t, 6)

    verdict = stage("decide", test_greedy, rep)
    res.verdict = verdict.status
    res.reports["decision"] = verdict.to_dict()
    if not is_tree(rep):
        res.reports["convexity"] = check_convex(rep).to_dict()
        if check_convex(rep).is_convex:
            res.reports["conflicts"] = [c.to_dict() for c in stage("conflicts", enumerate_conflicts, rep)]
    drawing = stage("draw", draw, rep, verdict)
    if drawing is None:
        return res
    greedy = stage("verify", is_greedy, drawing)
    res.reports["greedy"] = greedy.to_dict()
    if not greedy.is_greedy:
        raise StageError("verify", AssertionError("constructed drawing is not greedy"))
    res.reports["dilation"] = stage("dilation", dilation, drawing).to_dict()
    res.drawing = drawing
    if json_out is not None:
        Path(json_out).write_text(drawing.to_json())
        res.drawing_path = str(json_out)
    if svg_out is not None:
        Path(svg_out).write_text(render_svg(drawing))
        res.svg_path = str(svg_out)
    return res


# -- campaign ----------------------------------------------------------------


def check_instance(seed: int, steps: int, drawings: bool = True) -> dict:
    """Generate one instance and run every universality check on it."""
    rep = generate_universal(seed, steps)
    verdict = test_universal(rep)
    stair = staircase_oracle(rep)
    conflict_free = not enumerate_conflicts(rep)
    row = {
        "seed": seed,
        "steps": steps,
        "vertices": rep.n,
        "universal": verdict.is_universal,
        "staircase": stair,
        "conflict_free": conflict_free,
    }
    ok = verdict.is_universal and stair and conflict_free
    if drawings and verdict.is_universal:
        d = draw_universal_min_area(rep, verdict)
        g = is_greedy(d)
        dil = dilation(d) if g.is_greedy else None
        row["greedy"] = g.is_greedy and g.method_a == g.method_b
        row["dilation_squared"] = None if dil is None else str(dil.max_ratio_squared)
        ok = ok and row["greedy"] and dil is not None and dil.within_bound
    row["ok"] = ok
    return row


def _check_star(args: tuple[int, int, bool]) -> dict:
    return check_instance(*args)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("ORTHO_GREEDY_THREADS", "1")))
    except ValueError:
        return 1


def cmd_corpus(seeds: range, steps: int, drawings: bool = True, workers: int | None = None) -> dict:
    """Run :func:`check_instance` over ``seeds``; the summary is identical
    for any worker count."""
    jobs = [(s, steps, drawings) for s in seeds]
    workers = workers or worker_count()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_check_star, jobs))
    else:
        rows = [check_instance(*j) for j in jobs]
    passed = sum(r["ok"] for r in rows)
    return {
        "instances": len(rows),
        "passed": passed,
        "failed": [r["seed"] for r in rows if not r["ok"]],
        "rows": rows,
    }
