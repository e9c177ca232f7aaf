"""Regenerate the shape catalog shipped in ``src/octafold/catalog``.

The figures give no coordinates, so every shape is written down from its
defining description (hull bounds, unions of hexagons, search results) and
its expected properties are recomputed here and again by the test suite.

Run:  python scripts/transcribe_catalog.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from octafold.enum import census
from octafold.fold import foldable, max_coverage
from octafold.grid import (
    HoleKind,
    Polyiamond,
    TriCell,
    canonical_form,
    hexagon,
    holes,
    is_convex,
    region_cells,
    slit,
    strip,
)
from octafold.polyfile import dumps

OUT = Path(__file__).resolve().parents[1] / "src" / "octafold" / "catalog"


def cells(*triples) -> frozenset[TriCell]:
    return frozenset(TriCell(*t) for t in triples)


def around(core: frozenset[TriCell]) -> frozenset[TriCell]:
    """All cells sharing a vertex with ``core``."""
    out = set()
    for c in core:
        for v in c.vertices():
            out |= hexagon(v)
    return frozenset(out)


def shapes() -> list[tuple[str, Polyiamond, str, list[str]]]:
    centre = TriCell(0, 0, 0)
    p_cells = around(frozenset([centre]))
    rhombus = cells((0, 0, 0), (0, 0, 1))
    out = [
        ("C6", Polyiamond(hexagon((0, 0))), "Fig 5a", []),
        ("C10", Polyiamond(hexagon((0, 0)) | hexagon((1, 0))), "Fig 5c", []),
        ("C1", Polyiamond(region_cells(0, 1, 0, 5, 0, 6)), "Fig 6", ["z", "P_minus", "P_−"]),
        ("C2", Polyiamond(region_cells(0, 2, 0, 4, 0, 4)), "Fig 6", []),
        ("C3", Polyiamond(region_cells(0, 2, 0, 3, 0, 5)), "Fig 6", []),
        ("C4", Polyiamond(region_cells(0, 3, 0, 3, 0, 4)), "Fig 6", []),
        ("C5", Polyiamond(region_cells(0, 3, 0, 3, 1, 5)), "Fig 6", []),
        ("Cbar1", Polyiamond(region_cells(0, 3, 0, 3, 0, 3)), "Fig 8", ["o", "C̄1"]),
        ("Cbar2", Polyiamond(region_cells(0, 1, 0, 5, 0, 5)), "Fig 8", ["w", "C̄2"]),
        ("Cbar3", Polyiamond(region_cells(0, 2, 0, 4, 1, 5)), "Fig 8", ["s", "C̄3"]),
        ("Cbar4", Polyiamond(p_cells), "Fig 8", ["p", "C̄4", "fig2a"]),
        ("O", Polyiamond(p_cells - {centre}), "Fig 4d", []),
        ("P_a", Polyiamond(p_cells - {centre} | cells((0, 1, 1))), "Fig 4a", []),
        ("P_b", Polyiamond(p_cells - {centre} | cells((-1, 2, 0))), "Fig 4b", []),
        ("P_c", Polyiamond(around(rhombus) - rhombus), "Fig 4c", []),
        ("P_X", Polyiamond(cells((0, 1, 0), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1))), "Fig 12", []),
        ("P_Z", Polyiamond(cells((0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1), (1, 2, 0))), "Fig 12", []),
        ("P_U", Polyiamond(cells((0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 2, 0), (0, 2, 1), (1, 0, 0), (1, 2, 0))), "Fig 12", []),
        ("P_L", Polyiamond(cells((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 2, 0), (0, 2, 1), (1, 2, 0))), "Fig 12", []),
        ("fig2_slit", Polyiamond(p_cells, frozenset([
            slit(TriCell(-1, 0, 0), TriCell(-1, -1, 1)),
            slit(TriCell(0, 0, 0), TriCell(-1, 0, 1)),
        ])), "Fig 2b", []),
    ]
    nets = [s for s in census(8) if foldable(s)]
    for i, net in enumerate(nets, start=1):
        out.append((f"net{i}", net, "Fig 4", []))
    return out


def properties(P: Polyiamond) -> dict:
    hs = holes(P)
    props = {
        "size": P.size,
        "foldable": foldable(P),
        "convex": is_convex(P),
        "slits": len(P.slits),
        "positive_holes": sum(h.kind is HoleKind.POSITIVE_AREA for h in hs),
        "slit_holes": sum(h.kind is HoleKind.SLIT for h in hs),
    }
    if P.size <= 14:
        props["max_coverage"] = max_coverage(P)
    return props


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for name, P, figure, aliases in shapes():
        P = canonical_form(P)
        fname = f"{name}.poly"
        (OUT / fname).write_text(dumps(P, f"{name} ({figure})"), encoding="utf-8")
        manifest[name] = {"file": fname, "figure": figure, "aliases": aliases, "expected": properties(P)}
        print(name, manifest[name]["expected"])
    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
