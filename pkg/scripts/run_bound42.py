"""Intersections of three width-9 strips in the three lattice directions."""

import argparse
from collections import Counter

from octafold.enum import STRIP_WIDTH, strip_bound

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--width", type=int, default=STRIP_WIDTH)
    a = ap.parse_args()
    sb = strip_bound(a.width)
    sizes = Counter(P.size for _, P in sb.intersections)
    print(f"{len(sb.intersections)} intersections; size histogram {dict(sorted(sizes.items()))}")
    print(f"{len(sb.shapes)} maximal classes with sizes {[P.size for P in sb.shapes]}")
    print(f"largest: {sb.max_size}")
