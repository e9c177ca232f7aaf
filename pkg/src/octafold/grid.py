"""Triangular-lattice geometry and planar polyiamond operations.

Cells are addressed in axial coordinates with basis vectors at 60 degrees.
An UP cell ``(x, y)`` has vertices ``(x, y), (x+1, y), (x, y+1)``; a DOWN
cell ``(x, y)`` has vertices ``(x+1, y), (x, y+1), (x+1, y+1)``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

UP = 0
DOWN = 1


class TriCell(NamedTuple):
    x: int
    y: int
    orient: int  # UP or DOWN

    def vertices(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        x, y = self.x, self.y
        if self.orient == UP:
            return (x, y), (x + 1, y), (x, y + 1)
        return (x + 1, y), (x, y + 1), (x + 1, y + 1)

    def neighbors(self) -> tuple["TriCell", "TriCell", "TriCell"]:
        x, y = self.x, self.y
        if self.orient == UP:
            return TriCell(x, y, DOWN), TriCell(x - 1, y, DOWN), TriCell(x, y - 1, DOWN)
        return TriCell(x, y, UP), TriCell(x + 1, y, UP), TriCell(x, y + 1, UP)

    def __str__(self) -> str:
        return f"{self.x} {self.y} {'U' if self.orient == UP else 'D'}"


Vertex = tuple[int, int]
Slit = frozenset  # frozenset of two TriCells


def color(v: Vertex) -> int:
    """Proper 3-coloring of the lattice vertices."""
    return (v[0] - v[1]) % 3


def cell_from_vertices(vs: Iterable[Vertex]) -> TriCell:
    vs = list(vs)
    x = min(p for p, _ in vs)
    y = min(q for _, q in vs)
    return TriCell(x, y, UP if (x, y) in vs else DOWN)


def shared_edge(a: TriCell, b: TriCell) -> tuple[Vertex, Vertex] | None:
    common = set(a.vertices()) & set(b.vertices())
    if len(common) != 2:
        return None
    u, v = sorted(common)
    return u, v


def adjacent(a: TriCell, b: TriCell) -> bool:
    return b in a.neighbors()


def slit(a: TriCell, b: TriCell) -> Slit:
    return frozenset((a, b))


# ---------------------------------------------------------------------------
# Lattice point group

def _rot_vertex(v: Vertex) -> Vertex:
    # rotation by 60 degrees: e1 -> e2, e2 -> e2 - e1
    p, q = v
    return -q, p + q


def _ref_vertex(v: Vertex) -> Vertex:
    p, q = v
    return q, p


@dataclass(frozen=True)
class Isometry:
    """Lattice isometry ``v -> R^rot (S^mirror v) + shift`` on vertices."""

    rot: int = 0
    mirror: bool = False
    shift: Vertex = (0, 0)

    def vertex(self, v: Vertex) -> Vertex:
        if self.mirror:
            v = _ref_vertex(v)
        for _ in range(self.rot % 6):
            v = _rot_vertex(v)
        return v[0] + self.shift[0], v[1] + self.shift[1]

    def cell(self, c: TriCell) -> TriCell:
        return cell_from_vertices(self.vertex(v) for v in c.vertices())

    def __call__(self, P: "Polyiamond") -> "Polyiamond":
        return P.map_cells(self.cell)

    def compose(self, other: "Isometry") -> "Isometry":
        """Return ``self o other`` (apply ``other`` first)."""
        # the linear parts form a dihedral group; resolve by probing
        probes = [(0, 0), (1, 0), (0, 1)]
        images = [self.vertex(other.vertex(v)) for v in probes]
        for g in point_group():
            lin = Isometry(g.rot, g.mirror)
            o = lin.vertex((0, 0))
            shift = (images[0][0] - o[0], images[0][1] - o[1])
            cand = Isometry(g.rot, g.mirror, shift)
            if all(cand.vertex(v) == w for v, w in zip(probes, images)):
                return cand
        raise AssertionError("composition left the group")

    def inverse(self) -> "Isometry":
        for g in point_group():
            lin = Isometry(g.rot, g.mirror)
            # solve lin(shift(v)) ... by probing the image of the origin
            o = lin.vertex(self.vertex((0, 0)))
            cand = Isometry(g.rot, g.mirror, (-o[0], -o[1]))
            if all(cand.vertex(self.vertex(v)) == v for v in [(0, 0), (1, 0), (0, 1)]):
                return cand
        raise AssertionError("no inverse")


def point_group() -> list[Isometry]:
    return [Isometry(r, m) for m in (False, True) for r in range(6)]


_POINT_GROUP = point_group()


# ---------------------------------------------------------------------------
# Polyiamond

class InvalidPolyiamond(ValueError):
    pass


@dataclass(frozen=True)
class Polyiamond:
    cells: frozenset[TriCell]
    slits: frozenset[Slit] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.cells:
            raise InvalidPolyiamond("empty polyiamond")
        for s in self.slits:
            a, b = tuple(s)
            if a not in self.cells or b not in self.cells:
                raise InvalidPolyiamond(f"slit {a} | {b} touches a missing cell")
            if not adjacent(a, b):
                raise InvalidPolyiamond(f"slit {a} | {b} joins non-adjacent cells")
        if not _glue_connected(self.cells, self.slits):
            raise InvalidPolyiamond("glue graph is disconnected")

    @classmethod
    def of(cls, cells: Iterable, slits: Iterable = ()) -> "Polyiamond":
        cs = frozenset(TriCell(*c) for c in cells)
        ss = frozenset(frozenset(TriCell(*c) for c in pair) for pair in slits)
        return cls(cs, ss)

    @property
    def size(self) -> int:
        return len(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def glued(self, a: TriCell, b: TriCell) -> bool:
        return a in self.cells and b in self.cells and adjacent(a, b) and slit(a, b) not in self.slits

    def glue_edges(self) -> Iterator[tuple[TriCell, TriCell]]:
        for c in sorted(self.cells):
            if c.orient == UP:
                for n in c.neighbors():
                    if n in self.cells and slit(c, n) not in self.slits:
                        yield c, n

    def vertices(self) -> set[Vertex]:
        return {v for c in self.cells for v in c.vertices()}

    def sealed(self) -> "Polyiamond":
        return Polyiamond(self.cells) if self.slits else self

    def map_cells(self, f) -> "Polyiamond":
        cells = frozenset(f(c) for c in self.cells)
        slits = frozenset(frozenset(f(c) for c in s) for s in self.slits)
        return Polyiamond(cells, slits)

    def translate(self, dx: int, dy: int) -> "Polyiamond":
        return self.map_cells(lambda c: TriCell(c.x + dx, c.y + dy, c.orient))

    def key(self) -> tuple:
        """Hashable, order-stable description in the current position."""
        cells = tuple(sorted(self.cells))
        slits = tuple(sorted(tuple(sorted(s)) for s in self.slits))
        return cells, slits

    def __lt__(self, other: "Polyiamond") -> bool:
        return self.key() < other.key()


def _glue_connected(cells: frozenset, slits: frozenset) -> bool:
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for n in c.neighbors():
            if n in cells and n not in seen and (not slits or slit(c, n) not in slits):
                seen.add(n)
                todo.append(n)
    return len(seen) == len(cells)


def is_connected(cells: Iterable[TriCell]) -> bool:
    cells = frozenset(cells)
    return bool(cells) and _glue_connected(cells, frozenset())


# ---------------------------------------------------------------------------
# Canonical form

def _normalized_key(cells: Iterable[TriCell], slits: Iterable[Slit] = ()) -> tuple:
    cells = list(cells)
    mx = min(c.x for c in cells)
    my = min(c.y for c in cells)
    moved = tuple(sorted(TriCell(c.x - mx, c.y - my, c.orient) for c in cells))
    if not slits:
        return moved, ()
    ms = tuple(sorted(
        tuple(sorted(TriCell(c.x - mx, c.y - my, c.orient) for c in s)) for s in slits))
    return moved, ms


def images(P: Polyiamond) -> Iterator[Polyiamond]:
    for g in _POINT_GROUP:
        yield g(P)


def canonical_key(P: Polyiamond) -> tuple:
    best = None
    for g in _POINT_GROUP:
        cells = [g.cell(c) for c in P.cells]
        slits = [frozenset(g.cell(c) for c in s) for s in P.slits]
        k = _normalized_key(cells, slits)
        if best is None or k < best:
            best = k
    return best


def canonical_cells_key(cells: Iterable[TriCell]) -> tuple[TriCell, ...]:
    cells = list(cells)
    return min(_normalized_key([g.cell(c) for c in cells])[0] for g in _POINT_GROUP)


def canonical_form(P: Polyiamond) -> Polyiamond:
    cells, slits = canonical_key(P)
    return Polyiamond(frozenset(cells), frozenset(frozenset(s) for s in slits))


def congruent(P: Polyiamond, Q: Polyiamond) -> bool:
    return P.size == Q.size and canonical_key(P) == canonical_key(Q)


def symmetries(P: Polyiamond) -> list[Isometry]:
    """Isometries mapping ``P`` onto itself (cells and slits)."""
    target = _normalized_key(P.cells, P.slits)
    mx = min(c.x for c in P.cells)
    my = min(c.y for c in P.cells)
    out = []
    for g in _POINT_GROUP:
        img = g(P)
        if _normalized_key(img.cells, img.slits) == target:
            ix = min(c.x for c in img.cells)
            iy = min(c.y for c in img.cells)
            out.append(Isometry(g.rot, g.mirror, (mx - ix, my - iy)))
    return out


# ---------------------------------------------------------------------------
# Holes

class HoleKind(enum.Enum):
    POSITIVE_AREA = "positive_area"
    SLIT = "slit"


@dataclass(frozen=True)
class Hole:
    kind: HoleKind
    cells: frozenset[TriCell]
    edges: frozenset[tuple[Vertex, Vertex]]


def holes(P: Polyiamond) -> list[Hole]:
    """Bounded components of the complement of ``P``, single vertices excluded.

    The complement consists of the missing open triangles, every unit edge that
    is not a glued shared edge, and every lattice vertex.
    """
    cells = P.cells
    xs = [c.x for c in cells]
    ys = [c.y for c in cells]
    x0, x1 = min(xs) - 2, max(xs) + 2
    y0, y1 = min(ys) - 2, max(ys) + 2

    glued = set()
    for a, b in P.glue_edges():
        glued.add(shared_edge(a, b))

    # union-find over complement elements in the window
    parent: dict = {}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    window = [TriCell(x, y, o) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1) for o in (UP, DOWN)]
    for c in window:
        vs = c.vertices()
        edges = [tuple(sorted((vs[i], vs[j]))) for i, j in ((0, 1), (0, 2), (1, 2))]
        for v in vs:
            parent.setdefault(("v", v), ("v", v))
        for e in edges:
            if e in glued:
                continue
            parent.setdefault(("e", e), ("e", e))
            union(("e", e), ("v", e[0]))
            union(("e", e), ("v", e[1]))
        if c not in cells:
            parent.setdefault(("c", c), ("c", c))
            for e in edges:
                # a missing cell's sides are never glued
                union(("c", c), ("e", e))

    def on_border(c: TriCell) -> bool:
        return c.x in (x0, x1) or c.y in (y0, y1)

    outer = None
    for c in window:
        if on_border(c):
            outer = find(("c", c))
            break

    comps: dict = {}
    for e in parent:
        r = find(e)
        if r == outer:
            continue
        comps.setdefault(r, []).append(e)

    out = []
    for members in comps.values():
        if len(members) == 1 and members[0][0] == "v":
            continue
        hcells = frozenset(m[1] for m in members if m[0] == "c")
        hedges = frozenset(m[1] for m in members if m[0] == "e")
        kind = HoleKind.POSITIVE_AREA if hcells else HoleKind.SLIT
        out.append(Hole(kind, hcells, hedges))
    out.sort(key=lambda h: (h.kind.value, sorted(h.cells), sorted(h.edges)))
    return out


def has_positive_hole(P: Polyiamond) -> bool:
    return any(h.kind is HoleKind.POSITIVE_AREA for h in holes(P))


# ---------------------------------------------------------------------------
# Convexity

def hull_bounds(vertices: Iterable[Vertex]) -> tuple[int, int, int, int, int, int]:
    vs = list(vertices)
    ps = [p for p, _ in vs]
    qs = [q for _, q in vs]
    ss = [p + q for p, q in vs]
    return min(ps), max(ps), min(qs), max(qs), min(ss), max(ss)


def region_cells(a: int, b: int, c: int, d: int, e: int, f: int) -> frozenset[TriCell]:
    """Cells whose vertices satisfy a<=p<=b, c<=q<=d, e<=p+q<=f."""
    out = []
    for x in range(a, b + 1):
        for y in range(c, d + 1):
            for o in (UP, DOWN):
                cell = TriCell(x, y, o)
                if all(a <= p <= b and c <= q <= d and e <= p + q <= f for p, q in cell.vertices()):
                    out.append(cell)
    return frozenset(out)


def hull(P: Polyiamond) -> Polyiamond:
    return Polyiamond(region_cells(*hull_bounds(P.vertices())))


def is_convex(P: Polyiamond) -> bool:
    if P.slits:
        return False
    return region_cells(*hull_bounds(P.vertices())) == P.cells


# ---------------------------------------------------------------------------
# Zig-zag reduction and width

def _band_index(c: TriCell) -> int:
    # horizontal position of the centroid (doubled, shifted); constant under
    # reflections in horizontal grid lines
    return 2 * c.x + c.y + c.orient


def _band_cell(k: int, y: int) -> TriCell:
    r = k - y
    if r % 2 == 0:
        return TriCell(r // 2, y, UP)
    return TriCell((r - 1) // 2, y, DOWN)


def zigzag_reduce(P: Polyiamond, axis: int) -> Polyiamond:
    """Collapse every grid line parallel to ``axis`` by alternating flat folds.

    Axis 0 folds along horizontal lines (``q`` constant); axes 1 and 2 are its
    images under rotations by 60 and 120 degrees.  The result is the single-row
    strip lying in the lowest band of ``P`` with respect to the axis.
    """
    g = Isometry(rot=-axis % 6)
    back = Isometry(rot=axis % 6)
    cells = [g.cell(c) for c in P.cells]
    y0 = min(c.y for c in cells)
    ks = {_band_index(c) for c in cells}
    strip = frozenset(back.cell(_band_cell(k, y0)) for k in ks)
    return Polyiamond(strip)


def axis_widths(P: Polyiamond) -> tuple[int, int, int]:
    out = []
    for axis in range(3):
        g = Isometry(rot=-axis % 6)
        ks = [_band_index(g.cell(c)) for c in P.cells]
        out.append(max(ks) - min(ks) + 1)
    return tuple(out)


def width(P: Polyiamond) -> int:
    return max(axis_widths(P))


# ---------------------------------------------------------------------------
# Containment

class Mode(enum.Enum):
    FULL = "full"
    TRIANGLES_ONLY = "triangles_only"


def placements(P: Polyiamond, Q: Polyiamond) -> Iterator[Polyiamond]:
    """All images of ``Q`` under isometries whose cells lie inside ``P``."""
    if Q.size > P.size:
        return
    target = P.cells
    by_orient = {UP: [c for c in target if c.orient == UP], DOWN: [c for c in target if c.orient == DOWN]}
    seen = set()
    for g in _POINT_GROUP:
        img = g(Q)
        anchor = min(img.cells)
        for t in by_orient[anchor.orient]:
            dx, dy = t.x - anchor.x, t.y - anchor.y
            if all(TriCell(c.x + dx, c.y + dy, c.orient) in target for c in img.cells):
                moved = img.translate(dx, dy)
                k = moved.key()
                if k not in seen:
                    seen.add(k)
                    yield moved


def contains(P: Polyiamond, Q: Polyiamond, mode: Mode = Mode.FULL) -> bool:
    for img in placements(P, Q):
        if mode is Mode.TRIANGLES_ONLY:
            return True
        if all(P.glued(a, b) for a, b in img.glue_edges()):
            return True
    return False


def tri_contains(P: Polyiamond, Q: Polyiamond) -> bool:
    return contains(P, Q, Mode.TRIANGLES_ONLY)


# ---------------------------------------------------------------------------
# Simple constructors

def strip(n: int, y: int = 0) -> Polyiamond:
    """Single-row strip of ``n`` cells starting with an UP cell."""
    return Polyiamond(frozenset(_band_cell(k, y) for k in range(y, y + n)))


def hexagon(center: Vertex = (0, 0)) -> frozenset[TriCell]:
    """The six cells around a lattice vertex."""
    cx, cy = center
    out = []
    for x in range(cx - 1, cx + 1):
        for y in range(cy - 1, cy + 1):
            for o in (UP, DOWN):
                c = TriCell(x, y, o)
                if center in c.vertices():
                    out.append(c)
    return frozenset(out)


def cell_neighborhood(cells: frozenset[TriCell]) -> set[TriCell]:
    return {n for c in cells for n in c.neighbors() if n not in cells}


def bfs_order(P: Polyiamond) -> list[TriCell]:
    start = min(P.cells)
    order = [start]
    seen = {start}
    q = deque([start])
    while q:
        c = q.popleft()
        for n in sorted(c.neighbors()):
            if n not in seen and P.glued(c, n):
                seen.add(n)
                order.append(n)
                q.append(n)
    return order


def ray(cell: TriCell, axis: int, direction: int, n: int) -> list[TriCell]:
    """The ``n`` cells following ``cell`` along its band for ``axis``."""
    g = Isometry(rot=-axis % 6)
    back = Isometry(rot=axis % 6)
    c = g.cell(cell)
    k = _band_index(c)
    return [back.cell(_band_cell(k + direction * i, c.y)) for i in range(1, n + 1)]
