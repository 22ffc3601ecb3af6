"""Command-line front door wiring every capability to files and stdout.

All output is JSON-lines so the tool composes with pipes; a graph argument
of ``-`` reads the document from stdin.  Domain failures print a one-line
``{"error": ...}`` object and exit 1; usage mistakes exit 2 via argparse.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures
from .coloring import color3
from .core import Graph, classify_surface, curvature_ledger, odd_vertices
from .errors import BadParamsError, EulerizerError
from .eulerize import (
    BallBudgetExhausted,
    BallRefused,
    BallSuccess,
    eulerize_ball,
    eulerize_closed,
)
from .flow import FlowMode, ergodic_components, geodesic_distance, is_ergodic
from .refine import edge_refine

_SEED_ENV = "EULERIZER_SEED"

_FLOW_MODES = {
    "closed": FlowMode.CLOSED_SURFACE,
    "billiard": FlowMode.BILLIARD,
}


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise BadParamsError(f"cannot read {path}: {exc}") from exc
    return Graph.from_json(text)


def _parse_edge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise BadParamsError(f"edge must be 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise BadParamsError(f"edge endpoints must be integers: {text!r}") from exc


def _resolve_seed(value: int | None) -> int:
    """--seed wins, then the EULERIZER_SEED variable, then 0."""
    if value is not None:
        return value
    env = os.environ.get(_SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise BadParamsError(f"{_SEED_ENV} must be an integer, got {env!r}") from exc
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    report = classify_surface(_read_graph(args.graph))
    _emit(report.to_json_dict())
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    g = fixtures.generate(args.fixture, *args.params, seed=seed)
    text = g.to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


def _cmd_refine(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    g2, move = edge_refine(g, _parse_edge(args.edge))
    _emit({"graph": g2.to_json_dict(), "move": move.to_json_dict()})
    return 0


def _cmd_eulerize(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    seed = _resolve_seed(args.seed)
    before = classify_surface(g).surface_type.value
    if args.ball:
        result = eulerize_ball(g, seed=seed)
        if isinstance(result, BallRefused):
            _emit({"error": "RefusedBoundaryNotMod3",
                   "boundaryLength": result.boundary_length, "seed": seed})
            return 1
        if isinstance(result, BallBudgetExhausted):
            _emit({"error": "CutBudgetExceeded",
                   "remainingOddCount": result.remaining_odd_count, "seed": seed})
            return 1
        assert isinstance(result, BallSuccess)
        out, log_doc = result.graph, result.log.to_json_dict()
    else:
        out, log = eulerize_closed(g, seed=seed)
        log_doc = log.to_json_dict()
    after = classify_surface(out)
    # Re-validate before printing: Eulerian and same surface type.
    if odd_vertices(out) or after.surface_type.value != before:
        _emit({"error": "RevalidationFailed", "seed": seed,
               "oddCount": len(odd_vertices(out)),
               "surfaceType": after.surface_type.value})
        return 1
    _emit({"seed": seed,
           "mode": "ball" if args.ball else "closed",
           "surfaceType": after.surface_type.value,
           "oddCount": 0,
           "graph": out.to_json_dict(),
           "log": log_doc})
    return 0


def _cmd_components(args: argparse.Namespace) -> int:
    _emit(ergodic_components(_read_graph(args.graph)).to_json_dict())
    return 0


def _cmd_ergodic(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    _emit({"mode": args.mode, "ergodic": is_ergodic(g, _FLOW_MODES[args.mode])})
    return 0


def _cmd_color3(args: argparse.Namespace) -> int:
    _emit(color3(_read_graph(args.graph)).to_json_dict())
    return 0


def _cmd_distance(args: argparse.Namespace) -> int:
    d = geodesic_distance(_read_graph(args.graph), args.src, args.dst)
    _emit({"from": args.src, "to": args.dst, "distance": d})
    return 0


def _cmd_gauss_bonnet(args: argparse.Namespace) -> int:
    _emit(curvature_ledger(_read_graph(args.graph)).to_json_dict())
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(snapshot_path=args.snapshot)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerizer",
        description="Discrete-surface toolkit: classify, refine, eulerize, "
                    "run flows, color, and serve the puzzle API.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="classify a graph as a surface")
    p.add_argument("graph", help="graph JSON path, or - for stdin")
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("gen", help="emit a named fixture as graph JSON")
    p.add_argument("fixture", help="fixture name, e.g. octahedron, wheel")
    p.add_argument("params", nargs="*", help="fixture parameters")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("refine", help="refine one edge")
    p.add_argument("graph")
    p.add_argument("--edge", required=True, metavar="a,b")
    p.set_defaults(run=_cmd_refine)

    p = sub.add_parser("eulerize", help="remove all odd vertices by refinements")
    p.add_argument("graph")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--ball", action="store_true",
                   help="disc mode: interior cuts only, boundary kept")
    p.set_defaults(run=_cmd_eulerize)

    p = sub.add_parser("components", help="ergodic decomposition of the geodesic flow")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_components)

    p = sub.add_parser("ergodic", help="single-component test for a flow mode")
    p.add_argument("graph")
    p.add_argument("--mode", choices=sorted(_FLOW_MODES), default="closed")
    p.set_defaults(run=_cmd_ergodic)

    p = sub.add_parser("color3", help="propagate a 3-coloring over triangles")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_color3)

    p = sub.add_parser("distance", help="geodesic distance between two vertices")
    p.add_argument("graph")
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)
    p.set_defaults(run=_cmd_distance)

    p = sub.add_parser("gauss-bonnet", help="curvature ledger summing to chi")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_gauss_bonnet)

    p = sub.add_parser("serve", help="start the puzzle HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--snapshot", default=None,
                   help="optional path for JSON session snapshots")
    p.set_defaults(run=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except EulerizerError as exc:
        doc = {"error": exc.code}
        doc.update(exc.payload)
        message = str(exc)
        if message:
            doc["message"] = message
        _emit(doc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
