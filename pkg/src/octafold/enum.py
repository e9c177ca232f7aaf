"""Enumeration engines: census, filtered growth, convex closure, strip bound."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .grid import (
    Isometry,
    Polyiamond,
    TriCell,
    UP,
    _band_index,
    axis_widths,
    canonical_cells_key,
    canonical_form,
    hull,
    tri_contains,
)

Key = tuple[TriCell, ...]


@dataclass(frozen=True)
class Frontier:
    level: int
    shapes: frozenset[Polyiamond]

    @classmethod
    def single(cls) -> "Frontier":
        return cls(1, frozenset([Polyiamond(frozenset([TriCell(0, 0, UP)]))]))

    def __len__(self) -> int:
        return len(self.shapes)

    def sorted(self) -> list[Polyiamond]:
        return sorted(self.shapes)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("OCTAFOLD_THREADS", "1")))
    except ValueError:
        return 1


def _extensions(key: Key) -> set[Key]:
    cells = set(key)
    out = set()
    for c in key:
        for n in c.neighbors():
            if n not in cells:
                out.add(canonical_cells_key(cells | {n}))
    return out


def _extend_chunk(keys: list[Key]) -> set[Key]:
    out: set[Key] = set()
    for k in keys:
        out |= _extensions(k)
    return out


def _grow_keys(keys: Iterable[Key], workers: int | None = None) -> set[Key]:
    keys = sorted(keys)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(keys) < 64:
        return _extend_chunk(keys)
    chunks = [keys[i::workers] for i in range(workers)]
    out: set[Key] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_extend_chunk, chunks):
            out |= part
    return out


def _to_shape(key: Key) -> Polyiamond:
    return Polyiamond(frozenset(key))


def grow(F: Frontier, keep: Callable[[Polyiamond], bool] | None = None,
         workers: int | None = None) -> Frontier:
    """All shapes with one more edge-adjacent cell, canonical and deduplicated."""
    keys = _grow_keys((tuple(sorted(s.cells)) for s in F.shapes), workers)
    shapes = [_to_shape(k) for k in sorted(keys)]
    if keep is not None:
        shapes = [s for s in shapes if keep(s)]
    return Frontier(F.level + 1, frozenset(shapes))


def census_levels(max_n: int, workers: int | None = None) -> list[Frontier]:
    levels = [Frontier.single()]
    while levels[-1].level < max_n:
        levels.append(grow(levels[-1], workers=workers))
    return levels


def census(n: int, workers: int | None = None) -> list[Polyiamond]:
    """All free slit-free polyiamonds with ``n`` cells, sorted."""
    return census_levels(n, workers)[-1].sorted()


def census_counts(max_n: int, workers: int | None = None) -> list[int]:
    return [len(F) for F in census_levels(max_n, workers)]


# ---------------------------------------------------------------------------
# P-free growth

def _widths_fit(small: tuple[int, int, int], big: tuple[int, int, int]) -> bool:
    return all(a <= b for a, b in zip(sorted(small), sorted(big)))


class _Filter:
    def __init__(self, filters: Sequence[Polyiamond]):
        self.filters = [(f, axis_widths(f)) for f in filters]

    def hit(self, P: Polyiamond) -> bool:
        w = axis_widths(P)
        for f, fw in self.filters:
            if f.size <= P.size and _widths_fit(fw, w) and tri_contains(P, f):
                return True
        return False


def filter_shapes() -> list[Polyiamond]:
    from .construct import catalog

    return [catalog(name).shape for name in ("P_minus", "P_X", "P_U", "P_Z", "P_L")]


def pfree_levels(max_n: int, filters: Sequence[Polyiamond] | None = None,
                 workers: int | None = None) -> list[Frontier]:
    flt = _Filter(filter_shapes() if filters is None else filters)
    levels = [Frontier.single()]
    while levels[-1].level < max_n:
        levels.append(grow(levels[-1], keep=lambda s: not flt.hit(s), workers=workers))
    return levels


def pfree_counts(max_n: int, filters: Sequence[Polyiamond] | None = None,
                 workers: int | None = None) -> list[int]:
    """Number of P-free shapes for n = 2..max_n."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    return [len(F) for F in pfree_levels(max_n, filters, workers)[1:]]


TABLE1 = (1, 1, 3, 4, 10, 16, 22, 22, 16, 9, 3, 1, 0, 0)


def counts_csv(counts: Sequence[int], start: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "count"])
    for i, k in enumerate(counts):
        w.writerow([start + i, k])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Convex C-free closure

def convex_cfree(C: Sequence[Polyiamond] | None = None) -> tuple[frozenset[Polyiamond], frozenset[Polyiamond]]:
    """Grow convex hulls one cell at a time, stopping at shapes that contain C.

    Returns all convex C-free shapes and the inclusion-wise maximal ones.
    """
    if C is None:
        from .construct import convex_foldable_set

        C = convex_foldable_set()

    def free(P: Polyiamond) -> bool:
        return not any(c.size <= P.size and tri_contains(P, c) for c in C)

    start = canonical_form(Polyiamond(frozenset([TriCell(0, 0, UP)])))
    seen = {start}
    maximal = set()
    todo = [start]
    while todo:
        P = todo.pop()
        extended = False
        for c in sorted(P.cells):
            for t in c.neighbors():
                if t in P.cells:
                    continue
                H = canonical_form(hull(Polyiamond(P.cells | {t})))
                if not free(H):
                    continue
                extended = True
                if H not in seen:
                    seen.add(H)
                    todo.append(H)
        if not extended:
            maximal.add(P)
    return frozenset(seen), frozenset(maximal)


# ---------------------------------------------------------------------------
# Intersections of three strips

STRIP_WIDTH = 9


@dataclass(frozen=True)
class StripBound:
    shapes: tuple[Polyiamond, ...]  # inclusion-maximal, pairwise non-congruent
    max_size: int
    intersections: tuple[tuple[tuple[int, int, int], Polyiamond], ...]  # offsets -> shape


def band_indices(c: TriCell) -> tuple[int, int, int]:
    return tuple(_band_index(Isometry(rot=-a % 6).cell(c)) for a in range(3))


def strip_intersection(offsets: tuple[int, int, int], width: int = STRIP_WIDTH) -> frozenset[TriCell]:
    r = 2 * width + 4
    out = []
    for x in range(-r, r + 1):
        for y in range(-r, r + 1):
            for o in (0, 1):
                c = TriCell(x, y, o)
                if all(t <= i < t + width for t, i in zip(offsets, band_indices(c))):
                    out.append(c)
    return frozenset(out)


def strip_bound(width: int = STRIP_WIDTH) -> StripBound:
    """Intersections of three width-``width`` strips in the three directions.

    The first strip is fixed.  Lattice translations preserving it shift the
    other two offsets by multiples of ``(3, 3)``, and a reflection swaps the
    second offset classes 0 and 1, so the second offset is 0 or 2 and the
    third sweeps every value with a nonempty intersection.
    """
    found = []
    for t1 in (0, 2):
        for t2 in range(-3 * width, 3 * width + 1):
            cells = strip_intersection((0, t1, t2), width)
            if cells:
                found.append(((0, t1, t2), Polyiamond(cells)))
    classes: dict = {}
    for _, P in found:
        classes.setdefault(canonical_form(P), P)
    distinct = sorted(classes, key=lambda P: (-P.size, P.key()))
    maximal = [P for P in distinct
               if not any(Q.size > P.size and tri_contains(Q, P) for Q in distinct)]
    maximal.sort(key=lambda P: (P.size, P.key()))
    return StripBound(tuple(maximal), max(P.size for P in maximal), tuple(found))
