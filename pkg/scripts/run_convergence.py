#!/usr/bin/env python3
"""Peak convergence toward the limiting strengths, plus the root listing.

Tracks one total-transmission strength and one partial-transmission
strength of the repeated arrangement across a squeeze ladder, and dumps
the quantized sets for both arrangements as JSON.
"""

import argparse
from pathlib import Path

from bwtunnel.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out/convergence", help="output directory")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for model in ("plus", "minus"):
        path = outdir / f"resonances_{model}.json"
        code = cli_main(["resonances", "--model", model, "--b", "3", "--sigma", "1",
                         "--out", str(path)])
        if code != 0:
            return code
        print(f"wrote {path}")

    studies = [
        ("total", "2.282647521704435", "0.2,0.1,0.05,0.02"),
        ("partial", "26.867217553883783", "0.05,0.02,0.01"),
    ]
    for tag, alpha, eps_list in studies:
        path = outdir / f"converge_{tag}.csv"
        code = cli_main([
            "converge", "--model", "plus", "--b", "3", "--sigma", "1",
            "--alpha", alpha, "--k", "1", "--eps-list", eps_list,
            "--out", str(path)])
        if code != 0:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
