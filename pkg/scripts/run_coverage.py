"""Build shapes with prescribed covering numbers and check their certificates."""

import argparse
import itertools
import random
import time

from octafold.construct import build_slitfree, build_with_slits
from octafold.grid import holes

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=3, help="entries range over 1..MAX")
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    rng = random.Random(a.seed)
    every = list(itertools.product(range(1, a.max + 1), repeat=8))
    specs = every if len(every) <= a.samples else rng.sample(every, a.samples)
    t = time.perf_counter()
    bad = 0
    for m in specs:
        s = build_slitfree(m)
        c = build_with_slits(m)
        ok = s.coverage() == list(m) and c.coverage() == list(m) and not holes(s.polyiamond)
        bad += not ok
    print(f"{len(specs)} specs, {bad} failures, {time.perf_counter() - t:.1f}s")
