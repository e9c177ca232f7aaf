"""Compare the rule-based decision with the exact oracle over the whole census."""

import argparse
import time
from collections import Counter

from octafold.decide import decide
from octafold.enum import census_levels
from octafold.fold import foldable

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=9)
    a = ap.parse_args()
    t = time.perf_counter()
    rules, bad = Counter(), 0
    for F in census_levels(a.max):
        for P in F.shapes:
            d = decide(P)
            rules[d.rule.value] += 1
            bad += d.foldable != foldable(P)
    print(f"rules used: {dict(rules)}")
    print(f"{sum(rules.values())} shapes, {bad} disagreements, {time.perf_counter() - t:.1f}s")
