"""Search for the arm templates used by the coverage constructions.

Prints, for one octahedron net, the face of every net cell and one arm per
face.  An arm starts with a cell attached to a free edge of a net cell and
continues as a straight ray of cells.

* slit-free template: every arm cell has a private vertex that no other
  cell of the shape uses, so any truncation of the arms is a tree-like
  polyiamond without holes, and the fold map is consistent for free;
* slit template: every arm leaves its own face's net cell and only needs to
  be cell-disjoint from the rest; all other contacts are cut.

Run:  python scripts/derive_coverage_templates.py
"""

from __future__ import annotations

import sys

from octafold.enum import census
from octafold.fold import cell_faces, solve, structure
from octafold.grid import Polyiamond, TriCell, Vertex, color, ray

HORIZON = 60


def _private(cell: TriCell, parent: TriCell) -> Vertex:
    (v,) = set(cell.vertices()) - set(parent.vertices())
    return v


def arm_options(net: frozenset, faces: dict, strict: bool) -> dict[int, list]:
    net_vertices = {v for c in net for v in c.vertices()}
    out: dict[int, list] = {f: [] for f in range(8)}
    for root in sorted(net):
        for first in root.neighbors():
            if first in net:
                continue
            p = _private(first, root)
            if strict and p in net_vertices:
                continue
            for roll in ((0, 1) if strict else (0,)):
                face = faces[root] ^ ((1 << (2 - color(p))) if roll else 0)
                for axis in range(3):
                    for d in (1, -1):
                        cells = [first] + ray(first, axis, d, HORIZON)
                        if cells[1] == root or any(c in net for c in cells):
                            continue
                        privates = set()
                        ok = True
                        prev = root
                        for c in cells:
                            v = _private(c, prev)
                            if strict and (v in net_vertices or v in privates):
                                ok = False
                                break
                            privates.add(v)
                            prev = c
                        if not ok:
                            continue
                        allv = {v for c in cells for v in c.vertices()}
                        out[face].append(((root, first, axis, d), frozenset(cells), frozenset(privates), frozenset(allv)))
    return out


def compatible(a, b, strict: bool) -> bool:
    if a[1] & b[1]:
        return False
    if strict:
        return not (a[2] & b[3]) and not (b[2] & a[3])
    return True


def search(net: frozenset, strict: bool):
    P = Polyiamond(net)
    _, M = solve(P)
    S = structure(P)
    faces = dict(zip(S.cells, cell_faces(S, M)))
    if not strict and len(set(faces.values())) != 8:
        return None
    opts = arm_options(net, faces, strict)
    if not strict:
        by_face = {faces[t]: t for t in net}
        opts = {f: [o for o in opts[f] if o[0][0] == by_face[f]] for f in range(8)}
    order = sorted(range(8), key=lambda f: len(opts[f]))
    chosen: list = []

    def bt(i: int) -> bool:
        if i == 8:
            return True
        for o in opts[order[i]]:
            if all(compatible(o, c, strict) for c in chosen):
                chosen.append(o)
                if bt(i + 1):
                    return True
                chosen.pop()
        return False

    if bt(0):
        return faces, {order[i]: chosen[i][0] for i in range(8)}
    return None


def main() -> int:
    nets = [frozenset(s.cells) for s in census(8) if solve(s)[1] is not None]
    for strict in (True, False):
        for i, net in enumerate(nets):
            found = search(net, strict)
            if found is None:
                continue
            faces, arms = found
            print("slit-free" if strict else "slits", "net", i)
            print("  cells/faces:", [(tuple(c), faces[c]) for c in sorted(net)])
            for f in range(8):
                root, first, axis, d = arms[f]
                print(f"  face {f}: root {tuple(root)} first {tuple(first)} axis {axis} dir {d}")
            break
    return 0


if __name__ == "__main__":
    sys.exit(main())
