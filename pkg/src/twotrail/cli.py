"""Command-line front end: edge-list I/O, subcommands, line-oriented documents.

Subcommands: ``check {2k2|tough|mindeg}``, ``trail {build|oracle|verify}``,
``gen {extremal|tightness}``, ``export-dot``.  Exit codes: 0 when the checked
property holds or the object was produced, 1 for a witnessed negative, 2 for
usage, parse, or size-limit errors.  Every result document is deterministic:
identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from fractions import Fraction

from . import __version__
from .cover import tightness_family
from .errors import ParseError, TwoTrailError
from .extremal import build_extremal, extremal_toughness_value
from .graph import INFINITY, Graph
from .recognition import (
    TOUGHNESS_VERTEX_LIMIT,
    ToughnessCut,
    TwoK2Witness,
    find_induced_2k2,
    is_t_tough,
    min_degree,
    toughness_exact,
)
from .trail import (
    ORACLE_EDGE_LIMIT,
    ORACLE_VERTEX_LIMIT,
    AdjacentSuccessorsWitness,
    BuildFailure,
    ConsecutiveNeighborsWitness,
    TwoTrail,
    find_spanning_2trail,
    oracle_exists_2trail,
    verify_2trail,
)
from .cycles import CYCLE_VERTEX_LIMIT

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_ERROR = 2


class NamedGraph:
    """A graph plus the name <-> label table from its edge-list document."""

    def __init__(self, graph: Graph, names: list[str]):
        self.graph = graph
        self.names = names
        self.labels = {name: i for i, name in enumerate(names)}

    def name(self, label: int) -> str:
        return self.names[label]

    def name_sorted(self, labels) -> list[str]:
        return sorted(self.name(v) for v in labels)


def parse_edge_list(text: str) -> NamedGraph:
    """Parse an edge-list document: one "u v" pair per line.

    Vertex names are whitespace-free strings, mapped to dense labels in order
    of first appearance; '#' starts a comment line, blank lines are ignored,
    duplicate and reversed-duplicate edges collapse.
    """
    names: list[str] = []
    labels: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def label_of(token: str) -> int:
        if token not in labels:
            labels[token] = len(names)
            names.append(token)
        return labels[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, raw, f"expected 2 tokens, found {len(tokens)}")
        u, v = label_of(tokens[0]), label_of(tokens[1])
        if u == v:
            raise ParseError(lineno, raw, "self-loop")
        edges.append((u, v))
    return NamedGraph(Graph.from_edges(len(names), edges), names)


def render_edge_list(names: list[str], edges) -> str:
    lines = sorted(
        "{} {}".format(*sorted((names[u], names[v]))) for u, v in edges
    )
    return "".join(line + "\n" for line in lines)


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _fmt_ratio(value) -> str:
    return "inf" if value == INFINITY else str(Fraction(value))


class Doc:
    """Accumulates the line-oriented result document."""

    def __init__(self, command: str, digest: str):
        self.lines = [
            f"command: {command}",
            f"version: {__version__}",
            f"input: {digest}",
        ]

    def add(self, key: str, value) -> "Doc":
        self.lines.append(f"{key}: {value}")
        return self

    def emit(self, out) -> None:
        out.write("".join(line + "\n" for line in self.lines))


def _emit_cut(doc: Doc, ng: NamedGraph, cut: ToughnessCut) -> None:
    doc.add("cut", " ".join(ng.name_sorted(cut.cutset)))
    doc.add("components", cut.component_count)
    doc.add("ratio", _fmt_ratio(cut.ratio))


def _emit_failure_witness(doc: Doc, ng: NamedGraph, failure: BuildFailure) -> None:
    w = failure.witness
    if isinstance(w, ToughnessCut):
        doc.add("witness-kind", "toughness-cut")
        _emit_cut(doc, ng, w)
    elif isinstance(w, TwoK2Witness):
        doc.add("witness-kind", "induced-2k2")
        doc.add("witness", " ".join(ng.name(v) for v in w.vertices()))
    elif isinstance(w, ConsecutiveNeighborsWitness):
        doc.add("witness-kind", "consecutive-neighbors")
        doc.add(
            "witness",
            " ".join(ng.name(v) for v in (w.exterior, w.on_cycle, w.successor)),
        )
    elif isinstance(w, AdjacentSuccessorsWitness):
        doc.add("witness-kind", "adjacent-successors")
        doc.add(
            "witness",
            " ".join(
                ng.name(v)
                for v in (w.exterior, w.first, w.second, w.first_successor, w.second_successor)
            ),
        )


def _emit_trail(doc: Doc, ng: NamedGraph, trail: TwoTrail) -> None:
    doc.add("trail-size", len(trail.edges))
    for line in sorted(
        "{} {}".format(*sorted((ng.name(u), ng.name(v)))) for u, v in trail.edges
    ):
        doc.add("edge", line)
    degrees = trail.degrees(ng.graph)
    for name in sorted(ng.names):
        doc.add("degree", f"{name} {degrees[ng.labels[name]]}")


def _read_input(path: str) -> tuple[NamedGraph, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(0, "<binary>", f"input is not UTF-8 ({exc.reason})") from exc
    return parse_edge_list(text), _digest(data)


def cmd_check(args, out) -> int:
    ng, digest = _read_input(args.input)
    g = ng.graph
    doc = Doc(f"check {args.what}", digest)
    status = EXIT_OK
    if args.what == "2k2":
        witness = find_induced_2k2(g)
        if witness is None:
            doc.add("status", "2k2-free")
        else:
            doc.add("status", "witness-found")
            doc.add("witness", " ".join(ng.name(v) for v in witness.vertices()))
            status = EXIT_WITNESS
    elif args.what == "tough":
        limit = args.limit or TOUGHNESS_VERTEX_LIMIT
        if args.t is None:
            value, cut = toughness_exact(g, limit=limit)
            doc.add("status", "computed")
            doc.add("toughness", _fmt_ratio(value))
            if cut is not None:
                _emit_cut(doc, ng, cut)
        else:
            verdict = is_t_tough(g, Fraction(args.t), limit=limit)
            if verdict is True:
                doc.add("status", "tough")
                doc.add("toughness-bound", _fmt_ratio(Fraction(args.t)))
            else:
                doc.add("status", "violated")
                doc.add("toughness-bound", _fmt_ratio(Fraction(args.t)))
                _emit_cut(doc, ng, verdict)
                status = EXIT_WITNESS
    else:  # mindeg
        value = min_degree(g)
        doc.add("status", "computed")
        doc.add("min-degree", value)
        if args.t is not None:
            bound = int(args.t)
            if value >= bound:
                doc.add("verdict", "holds")
            else:
                doc.add("verdict", "violated")
                worst = min(range(g.n), key=lambda v: (g.degree(v), v))
                doc.add("witness", ng.name(worst))
                status = EXIT_WITNESS
    doc.emit(out)
    return status


def cmd_trail(args, out) -> int:
    ng, digest = _read_input(args.input)
    g = ng.graph
    doc = Doc(f"trail {args.mode}", digest)
    if args.mode == "build":
        limit = args.limit or CYCLE_VERTEX_LIMIT
        result = find_spanning_2trail(g, cycle_limit=limit)
        if isinstance(result, BuildFailure):
            doc.add("status", "no-trail")
            doc.add("failure", result.tag.value)
            doc.add("detail", result.detail)
            _emit_failure_witness(doc, ng, result)
            doc.emit(out)
            return EXIT_WITNESS
        doc.add("status", "trail")
        _emit_trail(doc, ng, result)
        doc.emit(out)
        return EXIT_OK
    if args.mode == "oracle":
        v_limit = args.limit or ORACLE_VERTEX_LIMIT
        e_limit = ORACLE_EDGE_LIMIT if args.limit is None else v_limit * (v_limit - 1) // 2
        exists, trail = oracle_exists_2trail(g, vertex_limit=v_limit, edge_limit=e_limit)
        if exists:
            doc.add("status", "exists")
            _emit_trail(doc, ng, trail)
            doc.emit(out)
            return EXIT_OK
        doc.add("status", "none")
        doc.emit(out)
        return EXIT_WITNESS
    # verify
    if args.trail is None:
        raise TwoTrailError("trail verify needs --trail <edge-list file>")
    with open(args.trail, "rb") as fh:
        trail_data = fh.read()
    trail_edges = []
    for lineno, raw in enumerate(trail_data.decode("utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, raw, f"expected 2 tokens, found {len(tokens)}")
        for tok in tokens:
            if tok not in ng.labels:
                raise ParseError(lineno, raw, f"unknown vertex name {tok!r}")
        trail_edges.append((ng.labels[tokens[0]], ng.labels[tokens[1]]))
    check = verify_2trail(g, trail_edges)
    if check.ok:
        doc.add("status", "accepted")
        doc.emit(out)
        return EXIT_OK
    doc.add("status", "rejected")
    witness = check.witness
    if isinstance(witness, int):
        doc.add("reason", f"{check.reason} at {ng.name(witness)}")
    elif isinstance(witness, tuple):
        doc.add("reason", f"{check.reason}: {ng.name(witness[0])} {ng.name(witness[1])}")
    else:
        doc.add("reason", str(check.reason))
    doc.emit(out)
    return EXIT_WITNESS


def cmd_gen(args, out) -> int:
    if args.family == "extremal":
        inst = build_extremal(args.parameter)
        n = args.parameter
        names = (
            [f"q1_{i}" for i in range(4 * n)]
            + [f"q2_{i}" for i in range(4 * n)]
            + [f"q3_{i}" for i in range(n - 1)]
        )
        payload = render_edge_list(names, inst.graph.edges())
        extra = [("toughness", _fmt_ratio(extremal_toughness_value(n)))]
        vertex_count, edge_count = inst.graph.n, inst.graph.edge_count
    else:  # tightness
        inst = tightness_family(args.parameter)
        k = args.parameter
        names_map = {}
        for i, x in enumerate(inst.x_side):
            names_map[x] = f"x{i}"
        for i, y in enumerate(inst.y_side[: 2 * k]):
            names_map[y] = f"a{i}"
        for i, y in enumerate(inst.y_side[2 * k :]):
            names_map[y] = f"c{i}"
        lines = sorted(
            "{} {}".format(*sorted((names_map[x], names_map[y]))) for x, y in inst.edges
        )
        payload = "".join(line + "\n" for line in lines)
        extra = []
        vertex_count = len(inst.x_side) + len(inst.y_side)
        edge_count = len(inst.edges)
    data = payload.encode("utf-8")
    with open(args.out, "wb") as fh:
        fh.write(data)
    doc = Doc(f"gen {args.family}", _digest(data))
    doc.add("status", "written")
    doc.add("vertices", vertex_count)
    doc.add("edges", edge_count)
    for key, value in extra:
        doc.add(key, value)
    doc.emit(out)
    return EXIT_OK


def cmd_export_dot(args, out) -> int:
    ng, _ = _read_input(args.input)
    lines = ["graph G {"]
    for name in sorted(ng.names):
        lines.append(f'  "{name}";')
    for pair in sorted(
        tuple(sorted((ng.name(u), ng.name(v)))) for u, v in ng.graph.edges()
    ):
        lines.append(f'  "{pair[0]}" -- "{pair[1]}";')
    lines.append("}")
    text = "".join(line + "\n" for line in lines)
    if args.out is None or args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twotrail",
        description="Toughness, 2K2-freeness, and bounded-degree spanning trails.",
    )
    parser.add_argument("--limit", type=int, default=None, help="cap for exponential subroutines (vertex count)")
    parser.add_argument("--jobs", type=int, default=1, help="worker cap (results are deterministic; current build is sequential)")
    parser.add_argument("--seed", type=int, default=None, help="seed for sampling-based utilities")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_check = sub.add_parser("check", help="decide a hypothesis, with witness")
    p_check.add_argument("what", choices=["2k2", "tough", "mindeg"])
    p_check.add_argument("input", help="edge-list file")
    p_check.add_argument("--t", default=None, help="bound for tough/mindeg (e.g. 3/2)")
    p_check.set_defaults(func=cmd_check)

    p_trail = sub.add_parser("trail", help="build, decide, or verify a spanning 2-trail")
    p_trail.add_argument("mode", choices=["build", "oracle", "verify"])
    p_trail.add_argument("input", help="edge-list file")
    p_trail.add_argument("--trail", default=None, help="edge-list file of the trail to verify")
    p_trail.set_defaults(func=cmd_trail)

    p_gen = sub.add_parser("gen", help="write a named family member as an edge list")
    p_gen.add_argument("family", choices=["extremal", "tightness"])
    p_gen.add_argument("parameter", type=int)
    p_gen.add_argument("out", help="output edge-list file")
    p_gen.set_defaults(func=cmd_gen)

    p_dot = sub.add_parser("export-dot", help="emit the graph in DOT format")
    p_dot.add_argument("input", help="edge-list file")
    p_dot.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    p_dot.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except TwoTrailError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
