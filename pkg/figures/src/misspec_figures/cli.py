"""Command-line figure renderer: mirrors FigureSpec as flags."""

from __future__ import annotations

import argparse
import sys

from .reader import SchemaError
from .render import FIGURE_KINDS, FigureSpec, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="misspec-figures")
    parser.add_argument("--csv", required=True, help="input CSV (trial or diagnostics schema)")
    parser.add_argument("--kind", required=True, choices=FIGURE_KINDS)
    parser.add_argument("--out", required=True, help="output image path (.svg recommended)")
    parser.add_argument("--facet", action="append", default=None,
                        help="facet column (repeatable); defaults: d for error_vs_n, n for error_vs_dim")
    args = parser.parse_args(argv)

    spec = FigureSpec(
        csv_path=args.csv,
        kind=args.kind,
        output_path=args.out,
        facet_keys=tuple(args.facet) if args.facet else (),
    )
    try:
        result = render(spec)
    except (SchemaError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {result.path}")
    for key, slope in result.slopes.items():
        print(f"series {key}: slope {slope:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
