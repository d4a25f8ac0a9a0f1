# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Command line front end: ``python -m DaisyHamming <command> ...``.

Exit status is 0 on success, 1 when a check reports a failure and 2 on any
error, which is printed as a single ``error:`` line on stderr.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .common import format_vertex, to_jsonable
from .config import get_settings
from .daisy import build_daisy, is_daisy, is_minimal_host
from .document import (
    GraphDocument,
    export,
    parse_coordinates,
    parse_shape,
    read_document,
    serialize,
    vertex_list,
    write_document,
)
from .errors import DocumentError, TheoremViolation
from .expansion import DecompositionStep, contract, daisy_peripheral_expand, decompose_to_k1, replay
from .hamming import Shape, check_vertex
from .metric import is_isometric
from .relations import delta_classes
from .verify import SUITES, render_json, render_text, report_header, run_suite, suite_settings

logger = logging.getLogger(__name__)

SCRIPT_SCHEMA = 1


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _vertex(shape: Shape, text: str, flag: str):
    return check_vertex(shape, parse_coordinates(text, flag))


def _vertex_set(shape: Shape, text: str, flag: str):
    """``"0,0;1,0"`` to a set of vertices; ``"-"`` is the empty set."""
    if text.strip() == "-":
        return set()
    return {_vertex(shape, part, flag) for part in text.split(";")}


def _generic_id(text: str):
    """Vertex id of a generic graph given on the command line."""
    return int(text) if text.lstrip("-").isdigit() else text


def _load_graph(path):
    doc = read_document(path)
    return doc, doc.to_graph()


def cmd_build(args) -> int:
    if args.host is not None:
        host_doc, host = _load_graph(args.host)
        root = host_doc.root if args.root is None else _generic_id(args.root)
        generators = [_generic_id(g) for g in args.gen]
    else:
        host = parse_shape(args.shape)
        root = host.root if args.root is None else _vertex(host, args.root, "root")
        generators = [_vertex(host, g, "gen") for g in args.gen]
    d = build_daisy(host, root, generators)
    doc = GraphDocument.from_daisy(d)
    graph = d.subgraph()
    text = serialize(doc)
    summary = (
        f"vertices: {graph.number_of_nodes()}\n"
        f"edges: {graph.number_of_edges()}\n"
        f"generators: {' '.join(vertex_list(d.generators))}\n"
    )
    if args.out is None:
        sys.stdout.write(text)
        sys.stderr.write(summary)
    else:
        write_document(doc, args.out)
        sys.stdout.write(summary)
    return 0


def _yes_no(verdict, coordinates: bool = True) -> str:
    if verdict:
        return "yes"
    line = "no"
    if verdict.witness is not None:
        line += f" (witness {json.dumps(to_jsonable(verdict.witness, coordinates))}"
        line += f": {verdict.reason})" if verdict.reason else ")"
    return line


def cmd_check(args) -> int:
    doc = read_document(args.input)
    if doc.kind == "labeled":
        g = doc.labeled
        verdicts = [
            ("daisy", is_daisy(g.vertices, g.shape, doc.root)),
            ("isometric", is_isometric(g)),
            ("minimal host", is_minimal_host(g)),
        ]
    else:
        if args.host is None:
            raise DocumentError("checking a generic document needs --host", field="kind")
        _, host = _load_graph(args.host)
        verdicts = [
            ("daisy", is_daisy(doc.vertices, host, doc.root)),
            ("isometric", is_isometric(doc.vertices, host=host)),
        ]
    for name, verdict in verdicts:
        print(f"{name}: {_yes_no(verdict, doc.kind == 'labeled')}")
    return 0 if all(verdict for _, verdict in verdicts) else 1


def cmd_classes(args) -> int:
    doc = read_document(args.input)
    graph = doc.labeled if doc.kind == "labeled" else doc.to_graph()
    classes = delta_classes(graph, root=doc.root)
    print(f"{len(classes)} delta classes")
    for number, cls in enumerate(classes, start=1):
        anchor = "-" if cls.anchor is None else "-".join(format_vertex(v) for v in cls.anchor)
        edges = " ".join(f"{format_vertex(u)}-{format_vertex(v)}" for u, v in cls.sorted_edges)
        print(f"class {number}: anchor {anchor}, {len(cls)} edges: {edges}")
    return 0


def _script_text(doc: GraphDocument, steps) -> str:
    data = {
        "schema": SCRIPT_SCHEMA,
        "shape": str(doc.shape),
        "notes": doc.notes,
        "steps": [
            {
                "coordinate": step.j,
                "shape": str(step.shape),
                "covers": [vertex_list(cover) for cover in step.covers],
            }
            for step in steps
        ],
    }
    return json.dumps(to_jsonable(data), sort_keys=True, indent=2) + "\n"


def _read_script(path: str):
    with open(path, "r") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(exc.msg, line=exc.lineno)
    if not isinstance(data, dict) or data.get("schema") != SCRIPT_SCHEMA:
        raise DocumentError("unsupported script schema", field="schema")
    steps = []
    for item in data.get("steps", []):
        try:
            shape = parse_shape(item["shape"])
            reduced = shape.drop(item["coordinate"])
            covers = tuple(
                frozenset(check_vertex(reduced, parse_coordinates(v, "covers")) for v in cover)
                for cover in item["covers"]
            )
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed step {item!r}: {exc}", field="steps")
        steps.append(DecompositionStep(item["coordinate"], shape, covers))
    return steps, data.get("notes", {})


def cmd_expand(args) -> int:
    if args.script is not None:
        steps, notes = _read_script(args.script)
        rebuilt = replay(steps)
        doc = GraphDocument.from_labeled(rebuilt.to_labeled(), notes)
    else:
        if args.input is None:
            raise DocumentError("expand needs an input document or --script")
        base = read_document(args.input).labeled
        covers = [base.vertices] + [_vertex_set(base.shape, c, "cover") for c in args.cover]
        expanded = daisy_peripheral_expand(base, covers, position=args.position)
        doc = GraphDocument.from_daisy(expanded)
    _emit(serialize(doc), args.out)
    return 0


def cmd_contract(args) -> int:
    g = read_document(args.input).labeled
    result = contract(g, args.coord)
    covers = [vertex_list(cover) for cover in result.covers]
    doc = GraphDocument.from_labeled(result.graph, {"coordinate": args.coord, "covers": covers})
    _emit(serialize(doc), args.out)
    for i, cover in enumerate(covers):
        sys.stderr.write(f"X_{i}: {' '.join(cover) or '-'}\n")
    return 0


def cmd_decompose(args) -> int:
    doc = read_document(args.input)
    steps = decompose_to_k1(doc.labeled)
    for number, step in enumerate(steps, start=1):
        sizes = ", ".join(str(len(c)) for c in step.covers)
        sys.stderr.write(
            f"step {number}: contract coordinate {step.j} of ({step.shape}), cover sizes {sizes}\n"
        )
    _emit(_script_text(doc, steps), args.out)
    return 0


def cmd_verify(args) -> int:
    settings = get_settings().replace(seed=args.seed, jobs=args.jobs)
    settings = suite_settings(args.suite, settings, args.budget)
    reports = run_suite(args.suite, settings)
    header = report_header(args.suite, settings)
    render = render_json if args.format == "json" else render_text
    _emit(render(reports, header, timings=args.timings), args.out)
    return 1 if any(r.failed for r in reports) else 0


def cmd_export(args) -> int:
    doc = read_document(args.input)
    graph = doc.to_graph()
    source = doc.labeled if doc.kind == "labeled" else graph
    classes = []
    if graph.number_of_edges():
        classes = [cls.edges for cls in delta_classes(source, root=doc.root)]
    _emit(export(graph, args.format, classes), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="DaisyHamming",
        description="Daisy graphs of rooted Hamming graphs: build, check, expand, contract, verify.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    parser.add_argument("-q", "--quiet", action="store_true", help="only log errors")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the daisy graph G_r(X)")
    p.add_argument("--shape", default="", help='host shape, e.g. "2,2,2" (default: K1)')
    p.add_argument("--host", help="generic host graph document instead of --shape")
    p.add_argument("--root", help='root vertex, e.g. "0,0,0" (default: 0^n)')
    p.add_argument("--gen", action="append", required=True, help="generator vertex (repeatable)")
    p.add_argument("--out", help="output document (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="daisy, isometry and minimal-host checks of a document")
    p.add_argument("input")
    p.add_argument("--host", help="host document for generic graphs")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classes", help="list the Delta-classes")
    p.add_argument("input")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("expand", help="daisy peripheral expansion, or replay a decomposition script")
    p.add_argument("input", nargs="?")
    p.add_argument("--cover", action="append", default=[], help='W_i as "0,0;1,0" (W_0 is the whole graph)')
    p.add_argument("--position", type=int, default=0, help="0-based position of the new coordinate")
    p.add_argument("--script", help="decomposition script to replay from K1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("contract", help="contract the Delta-class of one coordinate")
    p.add_argument("input")
    p.add_argument("--coord", type=int, required=True, help="1-based coordinate")
    p.add_argument("--out")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("decompose", help="contract down to K1 and write the replay script")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), default="quick")
    p.add_argument("--seed", type=int, help="seed of sampled cover families")
    p.add_argument("--budget", type=int, help="daisy enumeration budget (host vertices)")
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--timings", action="store_true", help="include wall times")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="export a document for rendering")
    p.add_argument("input")
    p.add_argument("--format", choices=["dot", "gml"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def _configure_logging(args):
    if args.quiet:
        level = logging.ERROR
    else:
        level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: List[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
