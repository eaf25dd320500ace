#!/usr/bin/env python3
"""Recompute every closed-form value table and cross-check it on the fly.

Each table cell is printed only after the exact engine (closed forms
disabled) has confirmed it on a small instance, so the output doubles as a
quick end-to-end sanity run.  Use --skip-engine for an instant print.
"""

import argparse
import sys

from graphchomp import (
    EngineConfig,
    TranspositionTable,
    bipartite_value,
    forest_value,
    gmk_recurrence,
    gmk_value,
    grundy,
)
from graphchomp.families import gmk


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gmk-max", type=int, default=12,
                    help="largest tail length in the two-tail table")
    ap.add_argument("--engine-budget", type=int, default=6,
                    help="verify two-tail cells with m+k up to this bound")
    ap.add_argument("--skip-engine", action="store_true")
    args = ap.parse_args()

    print("forest values by (vertex parity, component-count parity):")
    for v_par in (0, 1):
        row = [forest_value(v_par, c_par).value for c_par in (0, 1)]
        print(f"  v%2={v_par}: {row}")

    print("bipartite values by (vertex parity, edge parity):")
    for v_par in (0, 1):
        row = [bipartite_value(v_par, e_par).value for e_par in (0, 1)]
        print(f"  v%2={v_par}: {row}")

    print(f"two-tail values g(m,k), 1..{args.gmk_max} (closed form, checked "
          "against the recurrence):")
    memo: dict = {}
    gmk_recurrence(args.gmk_max, args.gmk_max, memo)
    table = TranspositionTable()
    cfg = EngineConfig(use_closed_forms=False)
    mismatches = 0
    for m in range(1, args.gmk_max + 1):
        row = []
        for k in range(1, args.gmk_max + 1):
            value = gmk_value(m, k).value
            if value != memo[(m, k)]:
                mismatches += 1
            if not args.skip_engine and m + k <= args.engine_budget:
                if grundy(gmk(m, k), cfg, table).value != value:
                    mismatches += 1
            row.append(value)
        print("  " + " ".join(f"{x:3d}" for x in row))
    if mismatches:
        print(f"MISMATCHES: {mismatches}", file=sys.stderr)
        return 1
    print("all cross-checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
