"""Random shape generators and small utilities shared by the tests."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from octafold.grid import InvalidPolyiamond, Polyiamond, TriCell, slit


def random_cells(rng: random.Random, n: int) -> frozenset[TriCell]:
    cells = {TriCell(0, 0, 0)}
    while len(cells) < n:
        c = rng.choice(sorted(cells))
        cells.add(rng.choice(c.neighbors()))
    return frozenset(cells)


def random_polyiamond(rng: random.Random, n: int, slit_rate: float = 0.0) -> Polyiamond:
    cells = random_cells(rng, n)
    P = Polyiamond(cells)
    if slit_rate <= 0:
        return P
    cuts = set()
    for a, b in sorted(P.glue_edges()):
        if rng.random() < slit_rate:
            try:
                Polyiamond(cells, frozenset(cuts | {slit(a, b)}))
            except InvalidPolyiamond:
                continue
            cuts.add(slit(a, b))
    return Polyiamond(cells, frozenset(cuts))


def slit_variants(P: Polyiamond):
    """Every valid way of cutting a subset of the glued edges of ``P``."""
    edges = sorted(P.glue_edges())
    spare = len(edges) - (P.size - 1)
    for r in range(1, spare + 1):
        for cut in itertools.combinations(edges, r):
            try:
                yield Polyiamond(P.cells, frozenset(slit(a, b) for a, b in cut))
            except InvalidPolyiamond:
                pass


@st.composite
def polyiamonds(draw, min_size: int = 1, max_size: int = 12, slits: bool = False):
    n = draw(st.integers(min_size, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    rate = draw(st.sampled_from([0.0, 0.2, 0.5])) if slits else 0.0
    return random_polyiamond(random.Random(seed), n, rate)
