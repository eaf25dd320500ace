#!/usr/bin/env python3
"""Run the three conjecture scans and write JSONL reports.

Defaults are desk-scale (a few seconds each).  Reports land in the chosen
output directory as wheels.jsonl, tails_*.jsonl, and multi.jsonl; rerunning
with --resume skips rows already present.
"""

import argparse
import pathlib
import subprocess
import sys


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="reports")
    ap.add_argument("--wheel-max", type=int, default=7)
    ap.add_argument("--tail-kmax", type=int, default=10)
    ap.add_argument("--multi-vmax", type=int, default=8)
    ap.add_argument("--resume", action="store_true")
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    resume = ["--resume"] if args.resume else []
    jobs = [
        ["scan", "wheels", "--max", str(args.wheel_max),
         "--out", str(out / "wheels.jsonl")],
        ["scan", "tails", "--base", "gmk:0,0", "--attach", "3",
         "--kmax", str(args.tail_kmax),
         "--out", str(out / "tails_leaf.jsonl")],
        ["scan", "tails", "--base", "gmk:1,2", "--attach", "6",
         "--kmax", str(args.tail_kmax),
         "--out", str(out / "tails_branch.jsonl")],
        ["scan", "multi", "--vmax", str(args.multi_vmax),
         "--out", str(out / "multi.jsonl")],
    ]
    worst = 0
    for job in jobs:
        cmd = [sys.executable, "-m", "graphchomp.cli", *job, *resume]
        print("+", " ".join(cmd[2:]))
        code = subprocess.run(cmd).returncode
        worst = max(worst, code)
    print(f"reports written to {out}/")
    return worst


if __name__ == "__main__":
    sys.exit(main())
