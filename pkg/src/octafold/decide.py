"""Theorem-driven foldability decisions with an explanation trace.

Gates run in a fixed order and the first one that answers wins.  Gates that
can only say "foldable" are sound with slits too, because cutting glued edges
never hurts a folding.  Gates that can answer "not foldable" are skipped for
shapes with slits and the oracle decides instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .construct import catalog, convex_foldable_set, nets
from .fold import FoldMap, solve
from .grid import (
    HoleKind,
    Polyiamond,
    axis_widths,
    canonical_key,
    holes,
    is_convex,
    tri_contains,
)


class Rule(str, enum.Enum):
    SIZE15 = "SIZE15"
    HOLE_THM = "HOLE_THM"
    CONVEX_THM = "CONVEX_THM"
    WIDTH10 = "WIDTH10"
    NET = "NET"
    CONVEX_SUBSHAPE = "CONVEX_SUBSHAPE"
    ORACLE = "ORACLE"


@dataclass(frozen=True)
class Step:
    rule: Rule
    result: str  # "foldable", "unfoldable", "pass" or "skipped"
    detail: dict = field(default_factory=dict, hash=False, compare=False)


@dataclass(frozen=True)
class Decision:
    foldable: bool
    rule: Rule
    witness: FoldMap | None = None
    note: str = ""
    trace: tuple[Step, ...] = ()

    def to_json(self, with_trace: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {"foldable": self.foldable, "rule": self.rule.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.note:
            out["note"] = self.note
        if with_trace:
            out["trace"] = [{"rule": s.rule.value, "result": s.result, **s.detail} for s in self.trace]
        return out


def _catalog_match(P: Polyiamond, shapes: list[tuple[str, Polyiamond]]) -> str | None:
    for name, Q in shapes:
        if Q.size <= P.size and tri_contains(P, Q):
            return name
    return None


def explain(P: Polyiamond) -> Decision:
    trace: list[Step] = []
    slitted = bool(P.slits)

    def done(ok: bool, rule: Rule, note: str = "", witness: FoldMap | None = None, **detail) -> Decision:
        trace.append(Step(rule, "foldable" if ok else "unfoldable", detail))
        return Decision(ok, rule, witness, note, tuple(trace))

    if P.size >= 15:
        return done(True, Rule.SIZE15, "every shape with at least 15 cells folds", size=P.size)
    trace.append(Step(Rule.SIZE15, "pass", {"size": P.size}))

    hs = holes(P)
    positive = [h for h in hs if h.kind is HoleKind.POSITIVE_AREA]
    hole_info = {"positive_holes": [len(h.cells) for h in positive],
                 "slit_holes": sum(h.kind is HoleKind.SLIT for h in hs)}
    if positive:
        is_O = canonical_key(P.sealed()) == canonical_key(catalog("O").shape)
        if not is_O:
            return done(True, Rule.HOLE_THM, "has a positive-area hole and is not O", **hole_info)
        if not slitted:
            return done(False, Rule.HOLE_THM, "this is O", **hole_info)
        trace.append(Step(Rule.HOLE_THM, "skipped", {**hole_info, "reason": "slits"}))
    else:
        trace.append(Step(Rule.HOLE_THM, "pass", hole_info))

    convex_set = [(f"C{i}", Q) for i, Q in enumerate(convex_foldable_set(), start=1)]
    if is_convex(P):
        hit = _catalog_match(P, convex_set)
        return done(hit is not None, Rule.CONVEX_THM, f"contains {hit}" if hit else "convex and avoids C",
                    match=hit)
    if slitted:
        trace.append(Step(Rule.CONVEX_THM, "skipped", {"reason": "slits"}))
    else:
        trace.append(Step(Rule.CONVEX_THM, "pass", {"convex": False}))

    widths = axis_widths(P)
    if max(widths) >= 10:
        return done(True, Rule.WIDTH10, "collapses onto a 10-strip", widths=list(widths))
    trace.append(Step(Rule.WIDTH10, "pass", {"widths": list(widths)}))

    hit = _catalog_match(P, [(f"net{i}", Q) for i, Q in enumerate(nets(), start=1)])
    if hit:
        return done(True, Rule.NET, f"contains {hit}", match=hit)
    trace.append(Step(Rule.NET, "pass", {"match": None}))

    hit = _catalog_match(P, convex_set)
    if hit:
        return done(True, Rule.CONVEX_SUBSHAPE, f"contains {hit}", match=hit)
    trace.append(Step(Rule.CONVEX_SUBSHAPE, "pass", {"match": None}))

    best, witness = solve(P)
    if witness is not None:
        return done(True, Rule.ORACLE, "fold map found", witness, covered=8)
    best, _ = solve(P, "MAXIMIZE")
    return done(False, Rule.ORACLE, f"at most {best} faces", covered=best)


def decide(P: Polyiamond) -> Decision:
    d = explain(P)
    return Decision(d.foldable, d.rule, d.witness, d.note)
