#!/usr/bin/env python3
"""Transmission-vs-strength scans for both arrangements at two squeeze values.

Writes one CSV per (arrangement, eps) combination, dense enough that the
total-transmission spikes are visible on a log axis.
"""

import argparse
from pathlib import Path

from bwtunnel.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out/scans", help="output directory")
    ap.add_argument("--steps", type=int, default=160001)
    ap.add_argument("--k", type=float, default=1.0)
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for model in ("plus", "minus"):
        for eps in (0.1, 0.2):
            path = outdir / f"scan_{model}_eps{eps}.csv"
            code = cli_main([
                "scan-alpha", "--model", model, "--b", "3", "--sigma", "1",
                "--eps", str(eps), "--k", str(args.k),
                "--alpha-min", "-40", "--alpha-max", "40",
                "--steps", str(args.steps), "--out", str(path)])
            if code != 0:
                return code
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
