#!/usr/bin/env python3
"""Sweep the lactose level of the continuous model and tabulate the branches.

Prints the eliminant, the critical lactose values with certified intervals,
the per-region steady-state counts, and a sampled table of branch positions.
Optionally writes the samples as CSV for plotting.

Usage:
    python3 scripts/bifurcation_sweep.py [model.ode] [--range LO:HI]
        [--samples N] [--precision P] [--csv FILE]

With no argument the bundled constants (symbolic L) are used.
"""

import argparse
from fractions import Fraction

from operon import (
    bifurcation_csv,
    bifurcation_curve,
    decimal_str,
    eliminant_text,
    load_ode,
    model_path,
)
from operon.cli import lactose_range, parse_rational


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("model", nargs="?", default=model_path("lac.ode"),
                    help="model constants file (default: bundled constants)")
    ap.add_argument("--range", type=lactose_range, default=(Fraction(1, 10), Fraction(5, 2)),
                    metavar="LO:HI", help="lactose range to sweep (default 0.1:2.5)")
    ap.add_argument("--samples", type=int, default=25)
    ap.add_argument("--precision", type=parse_rational, default=Fraction(1, 10**6))
    ap.add_argument("--csv", metavar="FILE", help="also write samples as CSV")
    args = ap.parse_args(argv)

    params = load_ode(args.model)
    print("steady-state polynomial:")
    print(f"  {eliminant_text(params)}")
    print()

    report = bifurcation_curve(params, args.range, args.samples,
                               precision=args.precision)

    print("critical lactose values:")
    for i, box in enumerate(report.critical, start=1):
        mid = decimal_str(box.representative(), 7)
        print(f"  L{i} = {mid}   certified in ({box.lo}, {box.hi}]")
    print()

    print("steady-state count by region:")
    for region in report.regions:
        left = decimal_str(region.lo, 5)
        right = "inf" if region.hi is None else decimal_str(region.hi, 5)
        print(f"  ({left}, {right}): {region.count}")
    print()

    print(f"{'L':>10}  branches (A values)")
    for pt in report.samples:
        branches = "  ".join(decimal_str(b.representative(), 5) for b in pt.roots)
        flag = "  [at a fold]" if pt.boundary else ""
        print(f"{decimal_str(pt.L, 5):>10}  {branches}{flag}")

    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(bifurcation_csv(report))
        print(f"\nwrote {args.csv}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
