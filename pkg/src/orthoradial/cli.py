"""Command line interface.

Exit codes: 0 success or valid, 1 invalid (a certificate is printed),
2 usage or parse error, 3 inconclusive because the cycle cap was hit.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from .cycles import DEFAULT_MAX_CYCLES, enumerate_essential_cycles
from .drawing import draw
from .errors import BoundExceeded, CycleLimitExceeded, NotValid, ParseError
from .fixtures import random_representation
from .io import Provenance, parse_drawing, parse_instance_file, serialize_drawing, serialize_instance
from .oracle import DEFAULT_BOUND, EquivalenceReport, brute_cycles, check_instance, exhaustive_equivalence
from .rectangulation import rectangulate
from .render import VIEWS, render_svg
from .validity import DEFAULT_CERTIFICATES, ValidityReport, validate

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
ENV_MAX_CYCLES = "ORTHORADIAL_MAX_CYCLES"


def format_report(rep, report: ValidityReport) -> str:
    """Validity report as ``key: value`` lines."""
    g = rep.graph
    lines = [f"status: {report.status.value}", f"cycles-checked: {report.cycles_checked}"]
    for v, total in report.cond1_violations:
        lines.append(f"angle-sum: {v} {total}")
    for f, got, want in report.cond2_violations:
        lines.append(f"face-rotation: {g.dart_key(g.faces[f].boundary[0])} {got} expected {want}")
    for cert in report.monotone_cycles:
        darts = " ".join(g.dart_key(d) for d in cert.cycle.darts)
        labels = " ".join(str(x) for x in cert.labeling.values)
        path = " ".join(g.dart_key(d) for d in cert.labeling.path) or "-"
        lines.append(f"monotone-cycle: {cert.kind.value}")
        lines.append(f"  darts: {darts}")
        lines.append(f"  labels: {labels}")
        lines.append(f"  path: {path}")
    if report.message:
        lines.append(f"message: {report.message}")
    return "\n".join(lines) + "\n"


def _max_cycles(args) -> int | None:
    value = args.max_cycles
    if value is None:
        env = os.environ.get(ENV_MAX_CYCLES)
        value = int(env) if env else DEFAULT_MAX_CYCLES
    return None if value == 0 else value


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthoradial", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, view=False):
        p.add_argument("--input", "-i", help="input file (default: stdin)")
        p.add_argument("--output", "-o", help="output file (default: stdout)")
        p.add_argument(
            "--max-cycles",
            type=_non_negative,
            help=f"essential cycle cap, 0 for none (default: ${ENV_MAX_CYCLES} or {DEFAULT_MAX_CYCLES})",
        )
        if view:
            p.add_argument("--view", choices=VIEWS, help="emit SVG in this view")

    p = sub.add_parser("validate", help="check a representation and print a report")
    common(p)
    p.add_argument("--certificates", type=_non_negative, default=DEFAULT_CERTIFICATES)
    p = sub.add_parser("rectangulate", help="add edges until every face is a rectangle")
    common(p)
    p = sub.add_parser("draw", help="compute a drawing (or its SVG with --view)")
    common(p, view=True)
    p = sub.add_parser("render", help="render a drawing file as SVG")
    common(p)
    p.add_argument("--view", choices=VIEWS, default="polar")
    p = sub.add_parser("oracle", help="cross-check the library against brute force")
    common(p)
    p.add_argument("--bound", type=_non_negative, default=DEFAULT_BOUND, help="edge bound of the cycle oracle")
    p.add_argument("--seed", type=int, help="fuzz random drawable instances instead of reading one")
    p.add_argument("--count", type=_non_negative, default=20, help="number of fuzzed instances")
    return parser


def _validate(args) -> int:
    rep = parse_instance_file(_read(args.input)).rep
    report = validate(rep, max_cycles=_max_cycles(args), certificates=args.certificates)
    _write(args.output, format_report(rep, report))
    if report.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if report.valid else EXIT_INVALID


def _refuse(rep, exc: NotValid) -> int:
    if exc.report is None:
        print(f"orthoradial: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stderr.write(format_report(rep, exc.report))
    return EXIT_INCONCLUSIVE if exc.report.inconclusive else EXIT_INVALID


def _rectangulate(args) -> int:
    rep = parse_instance_file(_read(args.input)).rep
    try:
        res = rectangulate(rep, max_cycles=_max_cycles(args))
    except NotValid as exc:
        return _refuse(rep, exc)
    origin = {p: o for p, o in res.edge_origin.items() if o is not None and p != o}
    prov = Provenance(list(res.added_vertices), list(res.added_edges), origin)
    _write(args.output, serialize_instance(res.rect_rep, prov))
    return EXIT_OK


def _draw(args) -> int:
    rep = parse_instance_file(_read(args.input)).rep
    try:
        drawing = draw(rep, max_cycles=_max_cycles(args))
    except NotValid as exc:
        return _refuse(rep, exc)
    text = render_svg(drawing, args.view) if args.view else serialize_drawing(drawing)
    _write(args.output, text)
    return EXIT_OK


def _render(args) -> int:
    drawing = parse_drawing(_read(args.input))
    _write(args.output, render_svg(drawing, args.view))
    return EXIT_OK


def _oracle(args) -> int:
    if args.seed is not None:
        rng = random.Random(args.seed)
        report = EquivalenceReport()
        for k in range(args.count):
            rep = random_representation(rng, columns=rng.randint(2, 4), layers=rng.randint(1, 3))
            check_instance(f"seed-{args.seed}-{k}", rep, report, bound=8)
        lines = []
    else:
        rep = parse_instance_file(_read(args.input)).rep
        main = len(enumerate_essential_cycles(rep.graph, _max_cycles(args)))
        brute = len(brute_cycles(rep.graph, args.bound))
        report = exhaustive_equivalence(rep, all_assignments=False)
        lines = [f"essential-cycles: library {main} oracle {brute}"]
        if main != brute:
            lines.append("cycle-count-mismatch")
    lines += [
        f"instances: {report.instances}",
        f"valid: {report.valid}",
        f"invalid: {report.invalid}",
        f"counterexamples: {len(report.counterexamples)}",
    ]
    lines += [f"counterexample: {c.fixture} {c.reason}" for c in report.counterexamples]
    _write(args.output, "\n".join(lines) + "\n")
    ok = report.ok and "cycle-count-mismatch" not in lines
    return EXIT_OK if ok else EXIT_INVALID


COMMANDS = {
    "validate": _validate,
    "rectangulate": _rectangulate,
    "draw": _draw,
    "render": _render,
    "oracle": _oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"orthoradial: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CycleLimitExceeded, BoundExceeded) as exc:
        print(f"orthoradial: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (OSError, ValueError) as exc:
        print(f"orthoradial: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
