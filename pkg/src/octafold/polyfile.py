"""Line-oriented ``.poly`` text format.

::

    # comment
    T x y U          one cell per line, U or D
    S x1 y1 o1 x2 y2 o2   a slit between two adjacent cells
"""

from __future__ import annotations

from pathlib import Path

from .grid import DOWN, UP, InvalidPolyiamond, Polyiamond, TriCell, adjacent, slit


class PolyParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


_ORIENT = {"U": UP, "D": DOWN}


def _cell(tokens: list[str], lineno: int) -> TriCell:
    try:
        x, y = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise PolyParseError(lineno, f"non-integer coordinate in {' '.join(tokens)!r}") from None
    if tokens[2] not in _ORIENT:
        raise PolyParseError(lineno, f"orientation must be U or D, got {tokens[2]!r}")
    return TriCell(x, y, _ORIENT[tokens[2]])


def loads(text: str) -> Polyiamond:
    cells: dict[TriCell, int] = {}
    slits: dict = {}
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last = lineno
        tokens = line.split()
        tag, rest = tokens[0], tokens[1:]
        if tag == "T":
            if len(rest) != 3:
                raise PolyParseError(lineno, "cell line needs 'T x y U|D'")
            c = _cell(rest, lineno)
            if c in cells:
                raise PolyParseError(lineno, f"duplicate cell {c} (first on line {cells[c]})")
            cells[c] = lineno
        elif tag == "S":
            if len(rest) != 6:
                raise PolyParseError(lineno, "slit line needs 'S x1 y1 o1 x2 y2 o2'")
            a, b = _cell(rest[:3], lineno), _cell(rest[3:], lineno)
            if not adjacent(a, b):
                raise PolyParseError(lineno, f"slit between non-adjacent cells {a} and {b}")
            slits[slit(a, b)] = lineno
        else:
            raise PolyParseError(lineno, f"unknown record {tag!r}")
    if not cells:
        raise PolyParseError(last or 1, "no cells")
    for s, lineno in slits.items():
        missing = [c for c in s if c not in cells]
        if missing:
            raise PolyParseError(lineno, f"slit touches absent cell {missing[0]}")
    try:
        return Polyiamond(frozenset(cells), frozenset(slits))
    except InvalidPolyiamond as exc:
        raise PolyParseError(last, str(exc)) from None


def dumps(P: Polyiamond, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    cells, slits = P.key()
    lines.extend(f"T {c}" for c in cells)
    lines.extend(f"S {a} {b}" for a, b in slits)
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> Polyiamond:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(P: Polyiamond, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(P, comment), encoding="utf-8")
