"""Batch entry point: one invocation renders one figure."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .figures import KINDS, PlotSpec, plot
from .formats import (
    SchemaError,
    emit_profile,
    emit_snapshot_table,
    read_profile,
    read_structured_points,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="igplots")
    sub = parser.add_subparsers(dest="command", required=True)
    for kind in KINDS:
        p = sub.add_parser(kind, help=f"render a {kind} figure")
        p.add_argument("inputs", nargs="+", help="input data files")
        p.add_argument("--out", required=True, help="output image path")
        p.add_argument("--labels", default="", help="comma-separated scheme labels")
        p.add_argument("--field", default="rho", help="column or field to draw")
        p.add_argument("--reference", default=None, help="dashed reference profile")
        p.add_argument("--title", default="")
    p = sub.add_parser("dump", help="re-emit a data file as text, no plot")
    p.add_argument("inputs", nargs=1)
    return parser


def _cmd_dump(path: str) -> int:
    data = Path(path).read_bytes()
    if data.startswith(b"# vtk DataFile"):
        sys.stdout.write(emit_snapshot_table(*read_structured_points(data)))
    else:
        sys.stdout.write(emit_profile(read_profile(path)))
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        if args.command == "dump":
            return _cmd_dump(args.inputs[0])
        spec = PlotSpec(
            kind=args.command,
            inputs=tuple(args.inputs),
            output=Path(args.out),
            labels=tuple(s for s in args.labels.split(",") if s),
            field=args.field,
            reference=args.reference,
            title=args.title,
        )
        plot(spec)
    except (SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
