"""Convex closure: list the convex shapes avoiding C and the maximal ones."""

from octafold.construct import catalog
from octafold.enum import convex_cfree
from octafold.fold import max_coverage
from octafold.grid import congruent
from octafold.polyfile import dumps

if __name__ == "__main__":
    everything, maximal = convex_cfree()
    print(f"{len(everything)} convex C-free shapes, sizes {sorted(P.size for P in everything)}")
    for P in sorted(maximal, key=lambda P: P.size):
        name = next((n for n in ("Cbar1", "Cbar2", "Cbar3", "Cbar4") if congruent(P, catalog(n).shape)), "?")
        print(f"\nmaximal {name}: {P.size} cells, covers at most {max_coverage(P)} faces")
        print(dumps(P), end="")
