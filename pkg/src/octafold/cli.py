"""Command-line interface: ``octafold <command> ...``.

Shape arguments are ``.poly`` paths, ``-`` for stdin, or ``catalog:NAME``.
Exit status is 0 on success, 1 on domain errors and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from . import enum as enumeration
from .construct import CoverageSpec, UnknownName, build_slitfree, build_with_slits, catalog, names
from .decide import decide, explain
from .fold import FACE_LABELS, FoldMap, InvalidMap, cell_faces, solve, structure, validate
from .grid import Polyiamond, canonical_form, shared_edge
from .polyfile import PolyParseError, dumps, loads


class DomainError(Exception):
    pass


def read_shape(ref: str) -> Polyiamond:
    if ref.startswith("catalog:"):
        try:
            return catalog(ref[len("catalog:"):]).shape
        except UnknownName as exc:
            raise DomainError(f"unknown catalog name {exc.args[0]!r}") from None
    try:
        text = sys.stdin.read() if ref == "-" else Path(ref).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {ref}: {exc.strerror}") from None
    try:
        return loads(text)
    except PolyParseError as exc:
        raise DomainError(f"{ref}: {exc}") from None


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)


# ---------------------------------------------------------------------------
# SVG

_SCALE = 40.0
_H = math.sqrt(3) / 2
_FACE_FILL = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffd92f", "#a65628", "#f781bf")


def _xy(v) -> tuple[float, float]:
    p, q = v
    return (p + q / 2) * _SCALE, -q * _H * _SCALE


def _glyph(axis: int, sign: int, x: float, y: float) -> str:
    fill = "black" if sign > 0 else "white"
    r = 5.0
    common = f'class="glyph" fill="{fill}" stroke="black" stroke-width="1.2"'
    if axis == 0:
        return f'<circle {common} cx="{x:.2f}" cy="{y:.2f}" r="{r}"/>'
    if axis == 1:
        return f'<rect {common} x="{x - r:.2f}" y="{y - r:.2f}" width="{2 * r}" height="{2 * r}"/>'
    d = f"M{x:.2f},{y - r - 1:.2f} L{x + r + 1:.2f},{y + r:.2f} L{x - r - 1:.2f},{y + r:.2f} Z"
    return f'<path {common} d="{d}"/>'


def render_svg(P: Polyiamond, M: FoldMap | None = None) -> str:
    pts = [_xy(v) for v in P.vertices()]
    pad = 20.0
    x0 = min(x for x, _ in pts) - pad
    y0 = min(y for _, y in pts) - pad
    w = max(x for x, _ in pts) + pad - x0
    h = max(y for _, y in pts) + pad - y0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0:.2f} {y0:.2f} {w:.2f} {h:.2f}">',
    ]
    S = structure(P)
    faces = cell_faces(S, M) if M is not None else None
    for i, c in enumerate(S.cells):
        poly = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(_xy, c.vertices()))
        fill = _FACE_FILL[faces[i]] if faces else "#dddddd"
        title = f"<title>{c}{' ' + FACE_LABELS[faces[i]] if faces else ''}</title>"
        out.append(f'<polygon class="cell" points="{poly}" fill="{fill}" stroke="#555" stroke-width="1">{title}</polygon>')
    for s in sorted(tuple(sorted(s)) for s in P.slits):
        (ax, ay), (bx, by) = map(_xy, shared_edge(*s))
        out.append(f'<line class="slit" x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="black" stroke-width="4"/>')
    if M is not None:
        for occ in S.occurrences:
            vx, vy = _xy(occ.vertex)
            # nudge split occurrences toward their own cells
            cx = sum(sum(_xy(v)[0] for v in c.vertices()) / 3 for c in occ.cells) / len(occ.cells)
            cy = sum(sum(_xy(v)[1] for v in c.vertices()) / 3 for c in occ.cells) / len(occ.cells)
            k = 0.25 if len(occ.cells) < 6 else 0.0
            corner = M.corners[occ.id]
            out.append(_glyph(corner.axis, corner.sign, vx + k * (cx - vx), vy + k * (cy - vy)))
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Commands

def cmd_decide(a) -> str:
    P = read_shape(a.file)
    d = explain(P) if a.explain else decide(P)
    return _json(d.to_json(with_trace=a.explain))


def cmd_oracle(a) -> str:
    _, M = solve(read_shape(a.file))
    return _json(M.to_json()) if M is not None else "unfoldable"


def cmd_maxcover(a) -> str:
    best, _ = solve(read_shape(a.file), "MAXIMIZE")
    return str(best)


def cmd_enumerate(a) -> str:
    if a.max < 1 or (a.pfree and a.max < 2):
        raise DomainError("--max is too small")
    if a.pfree:
        levels = enumeration.pfree_levels(a.max)[1:]
    else:
        levels = enumeration.census_levels(a.max)
    if a.dump:
        root = Path(a.dump)
        root.mkdir(parents=True, exist_ok=True)
        for F in levels:
            text = "".join(dumps(P, f"n={F.level} #{i}") + "\n" for i, P in enumerate(F.sorted()))
            (root / f"level{F.level:02d}.poly").write_text(text, encoding="utf-8")
    return enumeration.counts_csv([len(F) for F in levels], levels[0].level).rstrip("\n")


def cmd_table1(a) -> str:
    got = enumeration.pfree_counts(15)
    row = " ".join(f"{n},{k}" for n, k in enumerate(got, start=2))
    if tuple(got) == enumeration.TABLE1:
        return row + "\nMATCH"
    diff = [f"n={n}: got {g}, expected {e}" for n, (g, e) in enumerate(zip(got, enumeration.TABLE1), start=2) if g != e]
    return row + "\nDIFF\n" + "\n".join(diff)


def _catalog_name(P: Polyiamond) -> str | None:
    key = canonical_form(P)
    for n in names():
        if canonical_form(catalog(n).shape) == key:
            return n
    return None


def cmd_convex(a) -> str:
    everything, maximal = enumeration.convex_cfree()
    rep = {
        "cfree_shapes": len(everything),
        "sizes": sorted(P.size for P in everything),
        "maximal": [
            {"name": _catalog_name(P), "size": P.size, "foldable": solve(P)[1] is not None}
            for P in sorted(maximal, key=lambda P: (P.size, P.key()))
        ],
    }
    return _json(rep)


def cmd_bound42(a) -> str:
    sb = enumeration.strip_bound()
    rep = {
        "max_size": sb.max_size,
        "intersections": len(sb.intersections),
        "shapes": [{"size": P.size, "poly": dumps(P)} for P in sb.shapes],
    }
    return _json(rep)


def cmd_coverage(a) -> str:
    try:
        spec = CoverageSpec(tuple(a.m))
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    built = build_with_slits(spec) if a.slits else build_slitfree(spec)
    rep = {
        "spec": list(spec.m),
        "permutation": list(built.permutation),
        "coverage": built.coverage(),
        "poly": dumps(built.polyiamond),
        "certificate": built.certificate.to_json(),
    }
    return _json(rep)


def cmd_catalog(a) -> str:
    if a.action == "list":
        return "\n".join(f"{n}\t{catalog(n).size}\t{catalog(n).figure}" for n in names())
    if not a.name:
        raise DomainError("catalog show needs a NAME")
    try:
        e = catalog(a.name)
    except UnknownName:
        raise DomainError(f"unknown catalog name {a.name!r}") from None
    return dumps(e.shape, f"{e.name} ({e.figure}) {json.dumps(e.expected, sort_keys=True)}").rstrip("\n")


def cmd_render(a) -> str:
    P = read_shape(a.file)
    M = None
    if a.map:
        try:
            M = FoldMap.from_json(json.loads(Path(a.map).read_text(encoding="utf-8")))
            validate(P, M)
        except (OSError, ValueError, InvalidMap) as exc:
            raise DomainError(f"bad map {a.map}: {exc}") from None
    return render_svg(P, M).rstrip("\n")


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="octafold", description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="write output to this file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decide", help="decide foldability")
    s.add_argument("file")
    s.add_argument("--explain", action="store_true")
    s.set_defaults(run=cmd_decide)

    s = sub.add_parser("oracle", help="exact search for a fold map")
    s.add_argument("file")
    s.set_defaults(run=cmd_oracle)

    s = sub.add_parser("maxcover", help="maximum number of covered faces")
    s.add_argument("file")
    s.set_defaults(run=cmd_maxcover)

    s = sub.add_parser("enumerate", help="census as CSV")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--pfree", action="store_true")
    g.add_argument("--all", action="store_true")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--dump", help="directory for per-level .poly files")
    s.set_defaults(run=cmd_enumerate)

    sub.add_parser("table1", help="P-free counts against the reference table").set_defaults(run=cmd_table1)
    sub.add_parser("convex", help="convex C-free closure").set_defaults(run=cmd_convex)
    sub.add_parser("bound42", help="three-strip intersections").set_defaults(run=cmd_bound42)

    s = sub.add_parser("coverage", help="shape with prescribed covering numbers")
    s.add_argument("m", type=int, nargs=8)
    s.add_argument("--slits", action="store_true")
    s.set_defaults(run=cmd_coverage)

    s = sub.add_parser("catalog", help="built-in shapes")
    s.add_argument("action", choices=["list", "show"])
    s.add_argument("name", nargs="?")
    s.set_defaults(run=cmd_catalog)

    s = sub.add_parser("render", help="SVG drawing")
    s.add_argument("file")
    s.add_argument("--map")
    s.set_defaults(run=cmd_render)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        text = args.run(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
