"""Command-line front end.

Exit codes: 0 success, 1 negative answer to a yes/no check, 2 parse or
validation error, 3 not realizable, 4 unknown, 5 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .convexity import check_convex
from .coords import InequalityError, InvalidOrderingError, NotRealizableError, draw_with_orderings
from .fixtures import exponential_instance
from .pipeline import StageError, cmd_corpus, cmd_pipeline, draw, test_greedy
from .repgraph import (
    DrawingError,
    NotBiconnectedError,
    RepresentationError,
    parse,
    parse_drawing,
)
from .shapedags import ConflictError, ShapeDagError, build_shape_dag, enumerate_conflicts
from .svg import render_svg
from .universal import draw_universal_min_area, generate_universal, test_universal
from .verify import NotGreedyError, dilation, is_greedy

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_NOT_REALIZABLE, EXIT_UNKNOWN, EXIT_INTERNAL = 0, 1, 2, 3, 4, 5

_INPUT_ERRORS = (RepresentationError, DrawingError, NotBiconnectedError, InvalidOrderingError,
                 NotRealizableError, NotGreedyError, json.JSONDecodeError, OSError, ValueError)
_INTERNAL_ERRORS = (ShapeDagError, ConflictError, InequalityError, AssertionError)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _read_rep(path: str):
    return parse(Path(path).read_text())


def _read_order(text: str | None) -> list[int] | None:
    if text is None:
        return None
    p = Path(text)
    raw = p.read_text() if p.exists() else text
    order = json.loads(raw)
    if not isinstance(order, list) or not all(isinstance(a, int) for a in order):
        raise ValueError("an ordering must be a JSON list of node ids")
    return order


def _write_outputs(args, drawing) -> None:
    svg = getattr(args, "output", None) or getattr(args, "svg", None)
    if svg:
        Path(svg).write_text(render_svg(drawing))
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(drawing.to_json())


# -- commands ------------------------------------------------------------------


def cmd_check_convex(args) -> int:
    report = check_convex(_read_rep(args.file))
    _emit(report.to_dict())
    return EXIT_OK if report.is_convex else EXIT_NO


def cmd_conflicts(args) -> int:
    rep = _read_rep(args.file)
    out = enumerate_conflicts(rep, order_x=_read_order(args.order_x), order_y=_read_order(args.order_y))
    _emit([c.to_dict() for c in out])
    return EXIT_OK


def cmd_dag(args) -> int:
    dag = build_shape_dag(_read_rep(args.file), args.axis)
    if args.dot:
        sys.stdout.write(dag.to_dot())
    else:
        _emit({"axis": dag.axis, "nodes": [list(n) for n in dag.nodes],
               "arcs": [list(a) for a in dag.arcs], "source": dag.source, "sink": dag.sink})
    return EXIT_OK


def cmd_test_universal(args) -> int:
    verdict = test_universal(_read_rep(args.file))
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.is_universal else EXIT_NO


def _status_code(status: str) -> int:
    return {"universal": EXIT_OK, "realizable": EXIT_OK,
            "not-realizable": EXIT_NOT_REALIZABLE, "unknown": EXIT_UNKNOWN}[status]


def cmd_test_greedy(args) -> int:
    verdict = test_greedy(_read_rep(args.file))
    _emit(verdict.to_dict())
    return _status_code(verdict.status)


def cmd_draw(args) -> int:
    rep = _read_rep(args.file)
    if args.mode == "universal":
        verdict = test_universal(rep)
        if not verdict.is_universal:
            _emit({"error": "not universal greedy", "verdict": verdict.to_dict()})
            return EXIT_NOT_REALIZABLE
        drawing = draw_universal_min_area(rep, verdict)
    else:
        ox, oy = _read_order(args.order_x), _read_order(args.order_y)
        if ox is None or oy is None:
            v = test_greedy(rep)
            if v.status not in ("universal", "realizable"):
                _emit({"error": f"no greedy drawing available ({v.status})", "verdict": v.to_dict()})
                return _status_code(v.status)
            if ox is None:
                ox = list(v.ordering_x.ordering.order) if v.ordering_x else None
            if oy is None:
                oy = list(v.ordering_y.ordering.order) if v.ordering_y else None
            if ox is None or oy is None:
                drawing = draw(rep, v)
            else:
                drawing = draw_with_orderings(rep, ox, oy).drawing
        else:
            drawing = draw_with_orderings(rep, ox, oy).drawing
    _write_outputs(args, drawing)
    _emit({"coordinates": [[drawing.x[v], drawing.y[v]] for v in range(rep.n)],
           "width": drawing.width, "height": drawing.height})
    return EXIT_OK


def cmd_generate(args) -> int:
    seed = args.seed if args.seed is not None else 0
    text = generate_universal(seed, args.steps).to_json()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fixture_exp(args) -> int:
    text = exponential_instance(args.q).rep.to_json()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    drawing = parse_drawing(Path(args.file).read_text()).check()
    report = is_greedy(drawing)
    _emit(report.to_dict())
    return EXIT_OK if report.is_greedy else EXIT_NO


def cmd_dilation(args) -> int:
    drawing = parse_drawing(Path(args.file).read_text()).check()
    _emit(dilation(drawing).to_dict())
    return EXIT_OK


def cmd_pipeline_cli(args) -> int:
    rep = _read_rep(args.file)
    res = cmd_pipeline(rep, args.json_out, args.output or args.svg)
    _emit(res.to_dict())
    return _status_code(res.verdict)


def _seed_range(text: str) -> range:
    if "-" in text:
        a, b = text.split("-", 1)
        return range(int(a), int(b) + 1)
    return range(int(text), int(text) + 1)


def cmd_corpus_cli(args) -> int:
    seeds = _seed_range(args.seeds) if args.seeds else range(args.seed or 1, (args.seed or 1) + args.count)
    summary = cmd_corpus(seeds, args.steps, drawings=not args.no_drawings)
    if not args.json:
        summary = {k: v for k, v in summary.items() if k != "rows"}
    _emit(summary)
    return EXIT_OK if not summary["failed"] else EXIT_INTERNAL


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the command name
    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--svg", default=argparse.SUPPRESS, help="also write an SVG drawing here")
    base.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    common = argparse.ArgumentParser(add_help=False, parents=[base])
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="full JSON output where a command has a short form")

    p = argparse.ArgumentParser(prog="ortho-greedy", parents=[common],
                                description="Greedy rectilinear drawings: decide, draw, verify.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, parent=common):
        sp = sub.add_parser(name, parents=[parent], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("check-convex", cmd_check_convex, "convexity report (exit 1 if not convex)")
    sp.add_argument("file")
    sp = add("conflicts", cmd_conflicts, "list x- and y-conflicts")
    sp.add_argument("file")
    sp.add_argument("--order-x")
    sp.add_argument("--order-y")
    sp = add("dag", cmd_dag, "shape DAG of one axis")
    sp.add_argument("file")
    sp.add_argument("--axis", choices=("x", "y"), required=True)
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    sp = add("test-universal", cmd_test_universal, "universal greedy test (exit 1 if not)")
    sp.add_argument("file")
    sp = add("test-greedy", cmd_test_greedy, "greedy realizability with good orderings")
    sp.add_argument("file")
    # here --json names the coordinate output file
    sp = add("draw", cmd_draw, "construct a greedy drawing", base)
    sp.add_argument("file")
    sp.add_argument("--mode", choices=("universal", "general"), default="general")
    sp.add_argument("-o", "--output", help="SVG output path")
    sp.add_argument("--json", dest="json_out", help="drawing JSON output path")
    sp.add_argument("--order-x")
    sp.add_argument("--order-y")
    sp = add("generate", cmd_generate, "random universal greedy representation")
    sp.add_argument("--steps", type=int, default=10)
    sp.add_argument("-o", "--output")
    sp = add("fixture-exp", cmd_fixture_exp, "staircase instance needing exponential area")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp = add("verify", cmd_verify, "greedy check of a drawing (exit 1 if not greedy)")
    sp.add_argument("file")
    sp = add("dilation", cmd_dilation, "dilation of a greedy drawing")
    sp.add_argument("file")
    sp = add("pipeline", cmd_pipeline_cli, "decide, draw, verify, measure")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", help="SVG output path")
    sp.add_argument("--json-out", help="drawing JSON output path")
    sp = add("corpus", cmd_corpus_cli, "generator campaign with all checks")
    sp.add_argument("--seeds", help="inclusive range such as 1-100")
    sp.add_argument("--count", type=int, default=100, help="number of seeds when --seeds is absent")
    sp.add_argument("--steps", type=int, default=20)
    sp.add_argument("--no-drawings", action="store_true", help="skip drawing and greedy checks")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("json", "svg", "seed"):
        if not hasattr(args, name):
            setattr(args, name, None if name != "json" else False)
    try:
        return args.func(args)
    except StageError as exc:
        code = EXIT_INTERNAL if isinstance(exc.cause, _INTERNAL_ERRORS) or exc.stage == "verify" else EXIT_INPUT
        _emit({"error": str(exc), "stage": exc.stage})
        return code
    except _INTERNAL_ERRORS as exc:
        _emit({"error": f"internal invariant violated: {exc}"})
        return EXIT_INTERNAL
    except _INPUT_ERRORS as exc:
        _emit({"error": str(exc)})
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
