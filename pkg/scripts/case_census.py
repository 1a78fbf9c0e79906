#!/usr/bin/env python3
"""Census of critical graphs by outer length: realized face multisets,
case counts for 8-cycles, and the smallest instance of each case.

    python scripts/case_census.py --k 8 --budget 3
"""

import argparse
from collections import Counter

from triflow.criticality import classify_8cycle, is_c_critical, oracle_nonextendable
from triflow.generate import GenSpec, enumerate_fillings
from triflow.plane_graph import face_length_multiset, to_text


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=8)
    ap.add_argument("--budget", type=int, default=3)
    ap.add_argument("--girth", type=int, default=4, choices=(4, 5))
    ap.add_argument("--show-smallest", action="store_true")
    args = ap.parse_args()

    spec = GenSpec(args.k, args.budget, girth_floor=args.girth)
    total = 0
    critical = 0
    multisets: Counter = Counter()
    cases: Counter = Counter()
    smallest: dict[str, object] = {}
    for G in enumerate_fillings(spec):
        total += 1
        nonext = oracle_nonextendable(G)
        verdict = is_c_critical(G, nonextendable=nonext)
        if not verdict.is_critical:
            continue
        critical += 1
        S = face_length_multiset(G)
        multisets[S] += 1
        if args.k == 8:
            case = classify_8cycle(G).case
            cases[case] += 1
            if case not in smallest or G.n < smallest[case].n:  # type: ignore[union-attr]
                smallest[case] = G

    print(f"graphs {total}")
    print(f"critical {critical}")
    for S, n in sorted(multisets.items()):
        print(f"multiset {{{','.join(map(str, S))}}} {n}")
    for case, n in sorted(cases.items()):
        print(f"case {case} {n}")
    if args.show_smallest:
        for case, G in sorted(smallest.items()):
            print(f"--- smallest case {case} ({G.n} vertices)")
            print(to_text(G), end="")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
