"""``render`` command: CSV fields in, figure files out."""

from __future__ import annotations

import argparse
import sys

from .readers import InputError, SchemaError
from .render import KINDS, FigureSpec, render


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="render",
                     description="Render simulator CSV outputs into "
                                 "trajectory grids and contour figures")
    parser.add_argument("--kind", required=True, choices=KINDS,
                        help="figure kind")
    parser.add_argument("--in", dest="inputs", action="append", default=[],
                        metavar="CSV", help="input CSV (repeatable)")
    parser.add_argument("--out", required=True,
                        help="output image path (.svg default, .png works)")
    parser.add_argument("--levels",
                        help="comma-separated contour levels, e.g. "
                             "0.001,0.01,0.05")
    return parser


def _parse_levels(raw: str | None) -> tuple | None:
    if raw is None:
        return None
    try:
        return tuple(float(v) for v in raw.split(",") if v.strip())
    except ValueError:
        raise InputError(f"--levels must be comma-separated numbers, "
                         f"got {raw!r}") from None


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.inputs:
            raise InputError("at least one --in CSV is required")
        spec = FigureSpec(inputs=tuple(args.inputs), kind=args.kind,
                          out=args.out, levels=_parse_levels(args.levels))
        out = render(spec)
    except SchemaError as e:
        print(f"render: schema error: {e}", file=sys.stderr)
        return 1
    except InputError as e:
        print(f"render: {e}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
