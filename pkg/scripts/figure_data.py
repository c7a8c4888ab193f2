#!/usr/bin/env python3
"""Scatter data (and optional plot) of LS(p) against HP(p).

Left panel: (p, LS(p)) with the curve HP(p). Right panel: (p, LS(p) - HP(p))
against floor(HP(p)) - HP(p); points below the curve have LS(p) < floor(HP(p)).

Usage: python scripts/figure_data.py [--limit 3000] [--csv out.csv] [--plot out.png]
"""

import argparse
import sys

from paley_lp.cli import run_scan, write_scan_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=3000)
    ap.add_argument("--csv", default=None)
    ap.add_argument("--plot", default=None)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    s = run_scan(args.limit, compute_omega=False, jobs=args.jobs)
    if args.csv:
        with open(args.csv, "w") as fh:
            write_scan_csv(s.rows, fh)
    else:
        write_scan_csv(s.rows, sys.stdout)
    print("\n".join(s.lines()), file=sys.stderr)

    if args.plot:
        import math

        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        ps = [r["p"] for r in s.rows]
        hp = [r["hp"] for r in s.rows]
        ls = [r["ls"] for r in s.rows]
        fl = [math.floor(h + 1e-6) - h for h in hp]
        diff = [a - b for a, b in zip(ls, hp)]
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
        ax1.plot(ps, hp, "r-", lw=1)
        ax1.plot(ps, ls, "b.", ms=3)
        ax1.set_xlabel("p")
        ax1.set_ylabel("LS(p)")
        ax2.plot(ps, fl, "r-", lw=0.8)
        below = [i for i in range(len(ps)) if diff[i] < fl[i]]
        ax2.plot(ps, diff, "b.", ms=3)
        ax2.plot([ps[i] for i in below], [diff[i] for i in below], "ko", mfc="none", ms=6)
        ax2.set_xlabel("p")
        ax2.set_ylabel("LS(p) - HP(p)")
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)


if __name__ == "__main__":
    main()
