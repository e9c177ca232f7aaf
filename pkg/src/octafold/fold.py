"""The octahedron model and the exact folding oracle.

A folding is represented at the level of vertices: every vertex occurrence of
a polyiamond is sent to a corner of the octahedron.  Corners are signed axes
and the axis of an occurrence is fixed by the lattice color of its vertex
(color ``c`` goes to axis ``c``); only the signs are searched.  A cell lands on
the face whose sign triple is read off its three occurrences.

Faces are indexed ``4*sx + 2*sy + sz`` with bit ``1`` meaning a negative sign,
which yields the order ``+++, ++-, +-+, +--, -++, -+-, --+, ---``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .grid import Polyiamond, TriCell, Vertex, color, shared_edge, symmetries

AXES = "XYZ"
MINUS = "\u2212"  # labels use the minus sign; ASCII "-" is accepted on input
ALL_FACES = 0xFF

FACE_LABELS = tuple(
    "".join(MINUS if (f >> (2 - a)) & 1 else "+" for a in range(3)) for f in range(8)
)


def face_index(signs: Sequence[int]) -> int:
    """Face from a sign triple of +1/-1 values ordered X, Y, Z."""
    return sum((1 << (2 - a)) for a, s in enumerate(signs) if s < 0)


def face_signs(f: int) -> tuple[int, int, int]:
    return tuple(-1 if (f >> (2 - a)) & 1 else 1 for a in range(3))


def faces_adjacent(f: int, g: int) -> bool:
    return bin(f ^ g).count("1") == 1


@dataclass(frozen=True, order=True)
class Corner:
    axis: int  # 0, 1, 2 for X, Y, Z
    sign: int  # +1 or -1

    def antipodal(self) -> "Corner":
        return Corner(self.axis, -self.sign)

    @property
    def label(self) -> str:
        return ("+" if self.sign > 0 else MINUS) + AXES[self.axis]

    @classmethod
    def parse(cls, text: str) -> "Corner":
        text = text.strip().replace(MINUS, "-")
        if len(text) != 2 or text[0] not in "+-" or text[1] not in AXES:
            raise ValueError(f"bad corner label {text!r}")
        return cls(AXES.index(text[1]), 1 if text[0] == "+" else -1)


def face_corners(f: int) -> tuple[Corner, Corner, Corner]:
    return tuple(Corner(a, s) for a, s in enumerate(face_signs(f)))


class InvalidMap(ValueError):
    pass


class Disagreement(AssertionError):
    pass


# ---------------------------------------------------------------------------
# Vertex occurrences

@dataclass(frozen=True)
class Occurrence:
    id: int
    vertex: Vertex
    cells: tuple[TriCell, ...]

    @property
    def color(self) -> int:
        return color(self.vertex)


@dataclass(frozen=True)
class Structure:
    """Occurrence partition of a polyiamond plus per-cell lookup tables."""

    polyiamond: Polyiamond
    cells: tuple[TriCell, ...]
    occurrences: tuple[Occurrence, ...]
    cell_occ: tuple[tuple[int, int, int], ...]  # per cell, occurrence id by color

    def occurrence_of(self, cell: TriCell, v: Vertex) -> int:
        i = self.cells.index(cell)
        return self.cell_occ[i][color(v)]


def occurrences(P: Polyiamond) -> list[Occurrence]:
    return list(structure(P).occurrences)


def structure(P: Polyiamond) -> Structure:
    cells = tuple(sorted(P.cells))
    index = {c: i for i, c in enumerate(cells)}
    parent = {}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for c in cells:
        for v in c.vertices():
            parent[(c, v)] = (c, v)
    for a, b in P.glue_edges():
        for v in shared_edge(a, b):
            ra, rb = find((a, v)), find((b, v))
            if ra != rb:
                parent[ra] = rb

    ids: dict = {}
    members: dict = {}
    for c in cells:
        for v in c.vertices():
            r = find((c, v))
            if r not in ids:
                ids[r] = len(ids)
                members[ids[r]] = (v, [])
            members[ids[r]][1].append(c)
    occs = tuple(Occurrence(i, members[i][0], tuple(members[i][1])) for i in range(len(ids)))
    cell_occ = []
    for c in cells:
        row = [0, 0, 0]
        for v in c.vertices():
            row[color(v)] = ids[find((c, v))]
        cell_occ.append(tuple(row))
    return Structure(P, cells, occs, tuple(cell_occ))


# ---------------------------------------------------------------------------
# Fold maps

@dataclass(frozen=True)
class FoldMap:
    """Corner per occurrence id."""

    corners: tuple[Corner, ...]

    def to_json(self) -> dict[str, str]:
        return {str(i): c.label for i, c in enumerate(self.corners)}

    @classmethod
    def from_json(cls, data: dict) -> "FoldMap":
        n = len(data)
        try:
            return cls(tuple(Corner.parse(data[str(i)]) for i in range(n)))
        except KeyError as exc:
            raise InvalidMap(f"occurrence ids must be 0..{n - 1}") from exc

    @classmethod
    def from_signs(cls, S: Structure, signs: Sequence[int], axis_of_color=(0, 1, 2)) -> "FoldMap":
        return cls(tuple(Corner(axis_of_color[o.color], signs[o.id]) for o in S.occurrences))


def cell_faces(S: Structure, M: FoldMap) -> list[int]:
    return [face_index(_cell_signs(S, M, i)) for i in range(len(S.cells))]


def _cell_signs(S: Structure, M: FoldMap, i: int) -> tuple[int, int, int]:
    signs = [0, 0, 0]
    for occ in S.cell_occ[i]:
        k = M.corners[occ]
        if signs[k.axis]:
            raise InvalidMap(f"cell {S.cells[i]} has two vertices on axis {AXES[k.axis]}")
        signs[k.axis] = k.sign
    return tuple(signs)


def validate(P: Polyiamond, M: FoldMap, S: Structure | None = None) -> list[int]:
    """Check the map and return its coverage vector (8 counts in face order)."""
    S = S or structure(P)
    if len(M.corners) != len(S.occurrences):
        raise InvalidMap(f"map has {len(M.corners)} corners for {len(S.occurrences)} occurrences")
    axis_of = {}
    for o in S.occurrences:
        a = M.corners[o.id].axis
        if axis_of.setdefault(o.color, a) != a:
            raise InvalidMap(f"occurrence {o.id} at {o.vertex} breaks the axis of color {o.color}")
    if len(set(axis_of.values())) != len(axis_of):
        raise InvalidMap("two color classes share an axis")
    counts = [0] * 8
    for f in cell_faces(S, M):
        counts[f] += 1
    return counts


def coverage_mask(counts: Sequence[int]) -> int:
    return sum(1 << f for f, k in enumerate(counts) if k)


def distinct_faces(counts: Sequence[int]) -> int:
    return sum(1 for k in counts if k)


# ---------------------------------------------------------------------------
# Sign search

# _SIGN_MASK[axis][bit] = faces whose sign on ``axis`` is encoded by ``bit``
_SIGN_MASK = [[sum(1 << f for f in range(8) if ((f >> (2 - a)) & 1) == b) for b in (0, 1)] for a in range(3)]
_POPCOUNT = [bin(i).count("1") for i in range(256)]


def _search_order(S: Structure) -> list[int]:
    degree = [len(o.cells) for o in S.occurrences]
    return sorted(range(len(S.occurrences)), key=lambda i: (-degree[i], i))


def _sign_search(S: Structure, maximize: bool):
    """Return (best face count, sign tuple) over all sign assignments."""
    n_occ = len(S.occurrences)
    n_cells = len(S.cells)
    order = _search_order(S)
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n_occ)]
    for ci, row in enumerate(S.cell_occ):
        for axis, occ in enumerate(row):
            incident[occ].append((ci, axis))

    masks = [ALL_FACES] * n_cells
    signs = [1] * n_occ
    best = [0, None]
    cap = 8 if n_cells >= 8 else n_cells

    def bound() -> int:
        m = 0
        for x in masks:
            m |= x
        return m

    def rec(depth: int) -> bool:
        if depth == n_occ:
            got = _POPCOUNT[bound()]
            if got > best[0]:
                best[0] = got
                best[1] = tuple(signs)
            return got == cap or (not maximize and got == 8)
        occ = order[depth]
        # fixing the first sign quotients the reflection through that axis
        choices = (0,) if depth == 0 else (0, 1)
        for bit in choices:
            saved = [masks[ci] for ci, _ in incident[occ]]
            for ci, axis in incident[occ]:
                masks[ci] &= _SIGN_MASK[axis][bit]
            signs[occ] = -1 if bit else 1
            b = _POPCOUNT[bound()]
            if (b == 8 if not maximize else b > best[0]) and rec(depth + 1):
                return True
            for (ci, _), m in zip(incident[occ], saved):
                masks[ci] = m
        signs[occ] = 1
        return False

    rec(0)
    return best[0], best[1]


ALL = "ALL_FACES"
MAXIMIZE = "MAXIMIZE"


def solve(P: Polyiamond, require: str = ALL) -> tuple[int, FoldMap | None]:
    """Exact search over sign assignments.

    With ``ALL_FACES`` returns ``(8, witness)`` or ``(best_seen, None)``; with
    ``MAXIMIZE`` returns the maximum number of distinct covered faces and a
    witness attaining it.
    """
    S = structure(P)
    if require == ALL:
        if len(S.cells) < 8:
            return 0, None
        got, signs = _sign_search(S, maximize=False)
        if got == 8:
            return 8, FoldMap.from_signs(S, signs)
        return got, None
    if require != MAXIMIZE:
        raise ValueError(f"unknown requirement {require!r}")
    got, signs = _sign_search(S, maximize=True)
    return got, FoldMap.from_signs(S, signs)


def foldable(P: Polyiamond) -> bool:
    return solve(P, ALL)[1] is not None


def max_coverage(P: Polyiamond) -> int:
    return solve(P, MAXIMIZE)[0]


# ---------------------------------------------------------------------------
# Symmetry-quotiented enumeration

def octahedron_group() -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """The 48 signed axis permutations ``(perm, flip)``: corner (a, s) -> (perm[a], s*flip[a])."""
    return [(p, f) for p in itertools.permutations(range(3)) for f in itertools.product((1, -1), repeat=3)]


def _apply_oct(M: FoldMap, g) -> FoldMap:
    perm, flip = g
    return FoldMap(tuple(Corner(perm[c.axis], c.sign * flip[c.axis]) for c in M.corners))


def _occurrence_permutations(S: Structure) -> list[list[int]]:
    """Permutations of occurrence ids induced by the symmetries of the polyiamond."""
    P = S.polyiamond
    by_key = {}
    for o in S.occurrences:
        for c in o.cells:
            by_key[(c, o.vertex)] = o.id
    out = []
    for g in symmetries(P):
        perm = [0] * len(S.occurrences)
        for o in S.occurrences:
            c = o.cells[0]
            perm[o.id] = by_key[(g.cell(c), g.vertex(o.vertex))]
        out.append(perm)
    return out


def enumerate_maps(P: Polyiamond, faces_covered: int) -> list[FoldMap]:
    """One representative per symmetry orbit of maps covering exactly ``faces_covered`` faces.

    Maps range over all six color-to-axis bijections; orbits are taken under
    the octahedron group combined with the congruence symmetries of ``P``.
    """
    S = structure(P)
    n = len(S.occurrences)
    group = octahedron_group()
    occ_perms = _occurrence_permutations(S)
    seen = set()
    reps = []
    for axis_of_color in itertools.permutations(range(3)):
        for bits in itertools.product((1, -1), repeat=n):
            M = FoldMap.from_signs(S, bits, axis_of_color)
            counts = validate(P, M, S)
            if distinct_faces(counts) != faces_covered:
                continue
            key = M.corners
            if key in seen:
                continue
            reps.append(M)
            for perm in occ_perms:
                moved = FoldMap(tuple(M.corners[perm.index(i)] for i in range(n)))
                for g in group:
                    seen.add(_apply_oct(moved, g).corners)
    return reps


# ---------------------------------------------------------------------------
# Independent placement-propagation solver

def _third(face: frozenset, u: Corner, v: Corner) -> Corner:
    (w,) = face - {u, v}
    return w


def propagate_solutions(P: Polyiamond):
    """Yield the corner placement of every cell for each consistent folding.

    One cell is seeded on a fixed face with a fixed vertex placement; every
    glued edge of a spanning tree of the glue graph is then either rolled onto
    the adjacent face or folded flat onto the same face, and cycle edges and
    shared vertices are checked for consistency.  The seed choice is free
    because the octahedron group acts transitively on such placements.
    """
    cells = sorted(P.cells)
    glue = {c: [] for c in cells}
    for a, b in P.glue_edges():
        glue[a].append(b)
        glue[b].append(a)
    order = [cells[0]]
    parent = {cells[0]: None}
    for c in order:
        for n in sorted(glue[c]):
            if n not in parent:
                parent[n] = c
                order.append(n)
    # glued edges incident to a vertex fuse the vertex copies in both cells
    links = {(a, v): [] for a in cells for v in a.vertices()}
    for a, b in P.glue_edges():
        for v in shared_edge(a, b):
            links[(a, v)].append((b, v))
            links[(b, v)].append((a, v))

    seed = cells[0]
    sv = seed.vertices()
    start = {sv[0]: Corner(0, 1), sv[1]: Corner(1, 1), sv[2]: Corner(2, 1)}
    placed: dict = {}

    def consistent(c: TriCell) -> bool:
        for v, k in placed[c].items():
            for (d, w) in links[(c, v)]:
                if d in placed and placed[d][w] != k:
                    return False
        return True

    def rec(i: int):
        if i == len(order):
            yield dict(placed)
            return
        c = order[i]
        p = parent[c]
        u, v = shared_edge(p, c)
        (priv_p,) = set(p.vertices()) - {u, v}
        (priv_c,) = set(c.vertices()) - {u, v}
        cu, cv, cw = placed[p][u], placed[p][v], placed[p][priv_p]
        for k in (cw, cw.antipodal()):  # flat, roll
            placed[c] = {u: cu, v: cv, priv_c: k}
            if consistent(c):
                yield from rec(i + 1)
            del placed[c]

    placed[seed] = start
    yield from rec(1)


def _placement_face(pl: dict) -> int:
    signs = [0, 0, 0]
    for k in pl.values():
        signs[k.axis] = k.sign
    return face_index(signs)


def propagate_max(P: Polyiamond) -> int:
    best = 0
    for sol in propagate_solutions(P):
        got = len({_placement_face(pl) for pl in sol.values()})
        best = max(best, got)
        if best == min(8, P.size):
            break
    return best


def cross_check(P: Polyiamond) -> bool:
    """Compare the sign search with the propagation solver; raise on mismatch."""
    best = propagate_max(P)
    got_max, _ = solve(P, MAXIMIZE)
    _, witness = solve(P, ALL)
    if got_max != best or (witness is not None) != (best == 8):
        raise Disagreement(f"sign search {got_max}/{witness is not None} vs propagation {best}")
    return True
