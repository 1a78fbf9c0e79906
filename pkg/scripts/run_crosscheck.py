#!/usr/bin/env python3
"""Run the oracle-vs-solver and classifier-vs-oracle sweeps over a corpus.

Examples:
    python scripts/run_crosscheck.py --k 8 --budget 4 --jobs 2
    python scripts/run_crosscheck.py --all --budget 6 --jobs 2   # hours for k=8

Exit code 2 on any disagreement, with a minimized reproduction on stderr.
"""

import argparse
import sys
import time

from triflow.crosscheck import sweep_combined


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, help="outer cycle length (4..8)")
    ap.add_argument("--all", action="store_true", help="sweep every k in 4..8")
    ap.add_argument("--budget", type=int, default=4, help="max internal vertices")
    ap.add_argument(
        "--ext-budget",
        type=int,
        default=None,
        help="smaller budget for the per-coloring extension crosscheck",
    )
    ap.add_argument("--girth", type=int, default=4, choices=(4, 5))
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    ks = range(4, 9) if args.all else [args.k]
    if not args.all and args.k is None:
        ap.error("pass --k or --all")

    failures = 0
    for k in ks:
        t0 = time.time()
        ereport, creport = sweep_combined(
            k, args.budget, ext_budget=args.ext_budget, girth=args.girth,
            jobs=args.jobs,
        )
        dt = time.time() - t0
        print(f"== k={k} ({dt:.1f}s) ==")
        for line in ereport.summary_lines():
            print("  " + line)
        for line in creport.summary_lines()[1:]:
            print("  " + line)
        for m in (ereport.mismatches + creport.mismatches)[:1]:
            failures += 1
            print("MISMATCH: " + m.detail, file=sys.stderr)
            sys.stderr.write(m.graph_text)
            if m.coloring:
                print("coloring " + ",".join(map(str, m.coloring)), file=sys.stderr)
    return 2 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
