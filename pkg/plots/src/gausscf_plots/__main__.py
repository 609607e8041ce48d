"""Command-line entry: python -m gausscf_plots --figure ... --input ... --out ..."""

import argparse
import sys

from .render import FIGURES, PlotSpec, SchemaError, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="gausscf-plots")
    parser.add_argument("--input", required=True, help="CLI export (JSON or JSONL)")
    parser.add_argument("--figure", required=True, choices=FIGURES)
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--geometry", default=None, help="regions-export JSON overlay")
    args = parser.parse_args(argv)
    try:
        render(PlotSpec(args.input, args.figure, args.out, args.geometry))
    except (SchemaError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
