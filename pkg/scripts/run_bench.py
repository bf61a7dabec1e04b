#!/usr/bin/env python3
"""Run the timing experiment over the four generator families.

Produces one CSV per family under --out-dir and prints the fitted
log-log exponent of wall time against edge count for each.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from treemodulus.cli import main as cli_main  # noqa: E402

DEFAULT_PLAN = {
    "complete": "4,5,6,7,8,9,10,11,12",
    "multipartite": "2,3,4,5,6",
    "gnp": "10,14,18,22,26,30",
    "geometric": "10,14,18,22,26",
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="bench_results")
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--timeout-s", type=float, default=None)
    parser.add_argument(
        "--families", default=",".join(DEFAULT_PLAN),
        help="comma list drawn from complete, multipartite, gnp, geometric",
    )
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for family in args.families.split(","):
        sizes = DEFAULT_PLAN[family]
        out = out_dir / f"{family}.csv"
        argv = [
            "bench", "--families", family, "--sizes", sizes,
            "--reps", str(args.reps), "--seed", str(args.seed),
            "--out", str(out),
        ]
        if args.timeout_s is not None:
            argv += ["--timeout-s", str(args.timeout_s)]
        code = cli_main(argv)
        if code != 0:
            return code
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
