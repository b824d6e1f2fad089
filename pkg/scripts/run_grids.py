#!/usr/bin/env python3
"""(strength, wave number) transmission surfaces.

Produces the three contour-plot data sets: both arrangements with unit
wells (alpha-quantized ridges) and the mirror arrangement with the wells
removed (k-quantized double-barrier ridges, "perpendicular" to the
former).
"""

import argparse
from pathlib import Path

from bwtunnel.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out/grids", help="output directory")
    ap.add_argument("--alpha-steps", type=int, default=1601)
    ap.add_argument("--k-steps", type=int, default=401)
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    cases = [
        ("plus", "1"),
        ("minus", "1"),
        ("minus", "0"),
    ]
    for model, sigma in cases:
        path = outdir / f"grid_{model}_sigma{sigma}.csv"
        code = cli_main([
            "grid", "--model", model, "--b", "3", "--sigma", sigma,
            "--eps", "0.2", "--alpha-min", "-40", "--alpha-max", "40",
            "--alpha-steps", str(args.alpha_steps),
            "--k-min", "0.01", "--k-max", "10", "--k-steps", str(args.k_steps),
            "--out", str(path)])
        if code != 0:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
