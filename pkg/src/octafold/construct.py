"""Shape catalog and constructions with prescribed face coverage.

Coverage specs are indexed by face in the fixed order ``+++, ++-, ..., ---``;
``m[i]`` is the number of cells that must land on face ``i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .fold import FoldMap, face_signs, structure, validate
from .grid import Polyiamond, TriCell, adjacent, ray, slit
from .polyfile import loads


# ---------------------------------------------------------------------------
# Catalog

class UnknownName(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    shape: Polyiamond
    figure: str
    expected: dict = field(hash=False, compare=False)
    aliases: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return self.shape.size


@lru_cache(maxsize=None)
def _entries() -> dict[str, CatalogEntry]:
    root = resources.files("octafold") / "catalog"
    manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
    out = {}
    for name, meta in manifest.items():
        shape = loads((root / meta["file"]).read_text(encoding="utf-8"))
        out[name] = CatalogEntry(name, shape, meta["figure"], meta["expected"], tuple(meta["aliases"]))
    return out


@lru_cache(maxsize=None)
def _alias_table() -> dict[str, str]:
    table = {}
    for name, e in _entries().items():
        table[name] = name
        for a in e.aliases:
            table[a] = name
    return table


def names() -> list[str]:
    return list(_entries())


def catalog(name: str) -> CatalogEntry:
    try:
        return _entries()[_alias_table()[name]]
    except KeyError:
        raise UnknownName(name) from None


def nets() -> list[Polyiamond]:
    return [catalog(f"net{i}").shape for i in range(1, 12)]


def convex_foldable_set() -> list[Polyiamond]:
    """The five minimal foldable convex shapes."""
    return [catalog(f"C{i}").shape for i in range(1, 6)]


def convex_unfoldable_set() -> list[Polyiamond]:
    """The four maximal convex shapes avoiding every member of C."""
    return [catalog(f"Cbar{i}").shape for i in range(1, 5)]


# ---------------------------------------------------------------------------
# Coverage constructions

@dataclass(frozen=True)
class CoverageSpec:
    m: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.m)
        object.__setattr__(self, "m", m)
        if len(m) != 8:
            raise ValueError(f"need 8 covering numbers, got {len(m)}")
        if any(not isinstance(k, int) or k < 1 for k in m):
            raise ValueError(f"covering numbers must be positive integers: {m}")

    @property
    def total(self) -> int:
        return sum(self.m)


@dataclass(frozen=True)
class Arm:
    """Cells attached to ``root``: ``first`` across a free edge, then a ray."""

    root: TriCell
    first: TriCell
    axis: int
    direction: int

    def cells(self, n: int) -> list[TriCell]:
        if n <= 0:
            return []
        return [self.first] + ray(self.first, self.axis, self.direction, n - 1)


@dataclass(frozen=True)
class Template:
    faces: dict  # net cell -> face
    arms: tuple[Arm, ...]  # arm for face i at index i


def _template(net, arms) -> Template:
    faces = {TriCell(*c): f for c, f in net}
    return Template(faces, tuple(Arm(TriCell(*r), TriCell(*a), ax, d) for r, a, ax, d in arms))


# Found by scripts/derive_coverage_templates.py.  In the slit-free template
# every arm cell has a private vertex not used by any other cell, so the
# shape stays a tree of cells without holes for every choice of lengths.
SLITFREE = _template(
    [((0, 0, 1), 1), ((0, 1, 0), 3), ((0, 1, 1), 2), ((1, 1, 0), 0),
     ((1, 1, 1), 4), ((2, 1, 0), 5), ((2, 1, 1), 7), ((2, 2, 0), 6)],
    [((0, 0, 1), (1, 0, 0), 2, -1), ((2, 1, 0), (2, 0, 1), 2, -1),
     ((0, 1, 1), (0, 2, 0), 2, 1), ((0, 1, 0), (-1, 1, 1), 0, -1),
     ((2, 2, 0), (1, 2, 1), 2, 1), ((0, 0, 1), (0, 0, 0), 1, -1),
     ((2, 2, 0), (2, 2, 1), 1, 1), ((2, 1, 1), (3, 1, 0), 0, 1)],
)

# Every arm leaves the net cell of its own face and stays on that face.
WITH_SLITS = _template(
    [((0, 0, 0), 5), ((0, 0, 1), 1), ((0, 1, 0), 3), ((0, 1, 1), 2),
     ((1, 1, 0), 0), ((1, 1, 1), 4), ((1, 2, 0), 6), ((1, 2, 1), 7)],
    [((1, 1, 0), (1, 0, 1), 0, 1), ((0, 0, 1), (1, 0, 0), 1, -1),
     ((0, 1, 1), (0, 2, 0), 0, -1), ((0, 1, 0), (-1, 1, 1), 0, -1),
     ((1, 1, 1), (2, 1, 0), 0, 1), ((0, 0, 0), (-1, 0, 1), 0, -1),
     ((1, 2, 0), (0, 2, 1), 1, 1), ((1, 2, 1), (2, 2, 0), 0, 1)],
)


class ConstructionError(AssertionError):
    pass


@dataclass(frozen=True)
class Construction:
    polyiamond: Polyiamond
    certificate: FoldMap
    spec: CoverageSpec
    # permutation[i] is the face that receives m[i] cells
    permutation: tuple[int, ...] = tuple(range(8))

    def coverage(self) -> list[int]:
        return validate(self.polyiamond, self.certificate)


def certificate(P: Polyiamond, faces: dict) -> FoldMap:
    """Fold map sending every cell to ``faces[cell]``, if one exists."""
    S = structure(P)
    signs = [0] * len(S.occurrences)
    for occ in S.occurrences:
        want = {face_signs(faces[c])[occ.color] for c in occ.cells}
        if len(want) != 1:
            raise ConstructionError(f"cells around {occ.vertex} need different corners")
        signs[occ.id] = want.pop()
    return FoldMap.from_signs(S, signs)


def _layout(template: Template, spec: CoverageSpec):
    faces = dict(template.faces)
    tree = [(a, b) for a in faces for b in faces if a < b and adjacent(a, b)]
    for f, arm in enumerate(template.arms):
        prev = arm.root
        for c in arm.cells(spec.m[f] - 1):
            if c in faces:
                raise ConstructionError(f"arm for face {f} runs into {c}")
            faces[c] = f
            tree.append((prev, c))
            prev = c
    return faces, tree


def build_slitfree(spec: CoverageSpec | Sequence[int]) -> Construction:
    spec = spec if isinstance(spec, CoverageSpec) else CoverageSpec(tuple(spec))
    faces, _ = _layout(SLITFREE, spec)
    P = Polyiamond(frozenset(faces))
    return Construction(P, certificate(P, faces), spec)


def build_with_slits(spec: CoverageSpec | Sequence[int]) -> Construction:
    """Net plus flat arms; every contact off the arm chains is cut."""
    spec = spec if isinstance(spec, CoverageSpec) else CoverageSpec(tuple(spec))
    faces, tree = _layout(WITH_SLITS, spec)
    cells = frozenset(faces)
    keep = {slit(a, b) for a, b in tree}
    cuts = {slit(c, n) for c in cells for n in c.neighbors() if n in cells} - keep
    P = Polyiamond(cells, frozenset(cuts))
    return Construction(P, certificate(P, faces), spec)


def specs_up_to(k: int) -> Iterable[CoverageSpec]:
    """Every spec with entries in ``1..k``."""
    from itertools import product

    for m in product(range(1, k + 1), repeat=8):
        yield CoverageSpec(m)
