"""Count P-free polyiamonds for n = 2..15 and compare with the published table."""

import time

from octafold.enum import TABLE1, pfree_counts

if __name__ == "__main__":
    t = time.perf_counter()
    got = pfree_counts(15)
    print(f"{'n':>3} {'got':>5} {'table':>5}")
    for n, (g, e) in enumerate(zip(got, TABLE1), start=2):
        print(f"{n:>3} {g:>5} {e:>5}{'' if g == e else '  <-- differs'}")
    print(f"{'MATCH' if tuple(got) == TABLE1 else 'DIFF'} in {time.perf_counter() - t:.1f}s")
