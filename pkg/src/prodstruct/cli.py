"""Command line entry point: decompose, verify, gen, stats, export-dot."""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from .decomposer import DecompositionError
from .generators import MODELS, GenSpec, generate
from .graph import GraphError
from .pipeline import NonPlanarError, decompose
from .product import PartitionError
from .report import DOT_TARGETS, export_dot, render_figures, stats_csv, stats_row
from .serialize import (
    ParseError,
    dumps_certificate,
    graph_to_graph6,
    graph_to_json,
    loads_certificate,
    parse_graph,
)
from .verifier import verify_certificate

EXIT_OK, EXIT_VERIFY, EXIT_NONPLANAR, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3, 4

log = logging.getLogger("prodstruct")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text)


def _say(args: argparse.Namespace, msg: str) -> None:
    if not args.quiet:
        print(msg, file=sys.stderr)


def cmd_decompose(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    if g.n == 0:
        raise ParseError("graph has no vertices")
    if args.root == "random":
        root = random.Random(args.seed).randrange(g.n)
    else:
        try:
            root = int(args.root)
        except ValueError as exc:
            raise ParseError(f"--root must be an integer or 'random', got {args.root!r}") from exc
        if not 0 <= root < g.n:
            raise ParseError(f"root {root} out of range for n={g.n}")
    cert = decompose(g, root)
    if not args.no_verify:
        rep = verify_certificate(cert)
        if not rep.ok:
            for name, detail in rep.failures():
                print(f"internal check {name} failed: {detail}", file=sys.stderr)
            return EXIT_INTERNAL
    _write(args.output, dumps_certificate(cert, root))
    _say(args, f"n={g.n} m={g.m} parts={cert.quotient.size} width={cert.decomposition.width}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cert = loads_certificate(_read(args.certificate))
    rep = verify_certificate(cert, planarity=not args.skip_planarity)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
    elif not args.quiet:
        for name, ok, detail in rep.checks:
            print(f"{'ok  ' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else ""))
        print(f"width {rep.observed_width}, {'valid' if rep.ok else 'INVALID'}")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate(GenSpec(args.model, args.n, args.seed, args.budget))
    if args.format == "graph6":
        text = graph_to_graph6(g) + "\n"
    else:
        text = json.dumps(graph_to_json(g), separators=(",", ":")) + "\n"
    _write(args.output, text)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    rows, named = [], []
    for path in args.certificates:
        cert = loads_certificate(_read(path))
        rows.append(stats_row(cert))
        named.append({"file": path, **rows[-1]})
    extra = ("file",) if args.with_file else ()
    _write(args.output, stats_csv(named if args.with_file else rows, extra))
    fig_dir = args.figures
    if fig_dir is None and args.output not in (None, "-"):
        fig_dir = str(Path(args.output).parent)
    if fig_dir is not None and rows:
        prefix = Path(args.output).stem if args.output not in (None, "-") else "stats"
        for p in render_figures(rows, fig_dir, prefix):
            _say(args, f"wrote {p}")
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    cert = loads_certificate(_read(args.certificate))
    _write(args.output, export_dot(cert, args.target))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--no-verify", action="store_true", default=argparse.SUPPRESS,
                        help="skip the self-check before writing a certificate")

    p = argparse.ArgumentParser(prog="prodstruct", description=__doc__)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quiet", action="store_true")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", parents=[common], help="graph -> certificate")
    d.add_argument("input", nargs="?", default="-", help="JSON or graph6 file, '-' for stdin")
    d.add_argument("--root", default="0", help="BFS root vertex or 'random'")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", parents=[common], help="check a certificate")
    v.add_argument("certificate")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.add_argument("--skip-planarity", action="store_true", help="do not re-test H for planarity")
    v.set_defaults(func=cmd_verify)

    gn = sub.add_parser("gen", parents=[common], help="random planar graph")
    gn.add_argument("--model", choices=MODELS, default="stacked")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--budget", type=int, default=10, help="rejections before edge-addition stops")
    gn.add_argument("--format", choices=("json", "graph6"), default="json")
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)

    s = sub.add_parser("stats", parents=[common], help="CSV summary plus figures")
    s.add_argument("certificates", nargs="*")
    s.add_argument("-o", "--output", help="CSV path; figures go next to it")
    s.add_argument("--figures", help="directory for PNG figures")
    s.add_argument("--with-file", action="store_true", help="prefix each row with its file name")
    s.set_defaults(func=cmd_stats)

    x = sub.add_parser("export-dot", parents=[common], help="Graphviz rendering")
    x.add_argument("certificate")
    x.add_argument("--target", choices=DOT_TARGETS, default="H")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except NonPlanarError as exc:
        print(f"not planar: {exc.witness.summary()}", file=sys.stderr)
        return EXIT_NONPLANAR
    except (ParseError, GraphError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DecompositionError, PartitionError, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
