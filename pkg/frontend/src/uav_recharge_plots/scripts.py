"""One command-line entry per figure kind: --in CSV --out IMG.

Exits 2 on schema mismatch, naming the offending column.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .figures import FigureSpec, render
from .schema import SchemaError


def _main(kind: str, argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog=f"plot-{kind}", description=f"Render a {kind} chart from a results CSV"
    )
    parser.add_argument("--in", dest="input_csv", required=True)
    parser.add_argument("--out", dest="output_image", required=True)
    parser.add_argument("--hue-map", default="viridis")
    parser.add_argument("--dpi", type=int, default=120)
    parser.add_argument("--title")
    args = parser.parse_args(argv)
    spec = FigureSpec(
        input_csv=Path(args.input_csv),
        kind=kind,
        output_image=Path(args.output_image),
        hue_map=args.hue_map,
        dpi=args.dpi,
        title=args.title,
    )
    try:
        render(spec)
    except SchemaError as exc:
        print(f"schema mismatch: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(spec.output_image)
    return 0


def main_fig3(argv=None) -> int:
    return _main("fig3", argv)


def main_fig5(argv=None) -> int:
    return _main("fig5", argv)


def main_fig6(argv=None) -> int:
    return _main("fig6", argv)


def main_appc(argv=None) -> int:
    return _main("appc", argv)


if __name__ == "__main__":
    sys.exit(_main(sys.argv[1], sys.argv[2:]))
