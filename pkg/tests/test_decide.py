import random

import pytest
from hypothesis import given

from helpers import polyiamonds, random_polyiamond
from octafold.construct import catalog, names
from octafold.decide import Rule, decide, explain
from octafold.fold import foldable, validate
from octafold.grid import Polyiamond, has_positive_hole, slit, strip


@pytest.mark.parametrize("name", names())
def test_catalog_expectations(name):
    e = catalog(name)
    if "foldable" in e.expected:
        assert decide(e.shape).foldable == e.expected["foldable"]


@pytest.mark.parametrize(
    "name, rule",
    [("O", Rule.HOLE_THM), ("P_a", Rule.HOLE_THM), ("C6", Rule.CONVEX_THM), ("C1", Rule.CONVEX_THM),
     ("Cbar3", Rule.CONVEX_THM), ("net3", Rule.NET)],
)
def test_rules_fire_where_expected(name, rule):
    assert decide(catalog(name).shape).rule is rule


def test_size_and_width_gates():
    assert decide(strip(15)).rule is Rule.SIZE15
    d = decide(strip(12))
    assert d.foldable and d.rule in (Rule.CONVEX_THM, Rule.WIDTH10)
    # a non-convex shape of width 10
    P = Polyiamond(strip(10).cells | {next(c for c in strip(10, 1).cells if c.orient == 0)})
    e = explain(P)
    assert e.foldable and e.rule in (Rule.WIDTH10, Rule.NET, Rule.CONVEX_THM, Rule.HOLE_THM)


def test_oracle_witness_validates():
    rng = random.Random(5)
    seen = 0
    while seen < 20:
        P = random_polyiamond(rng, rng.randint(9, 12))
        d = decide(P)
        if d.rule is Rule.ORACLE and d.foldable:
            assert validate(P, d.witness).count(0) == 0
            seen += 1


def test_unfoldable_oracle_note_gives_max_coverage():
    d = decide(catalog("P_L").shape)
    assert not d.foldable and d.rule is Rule.ORACLE
    assert "7" in d.note


def test_trace_records_every_gate_until_the_answer():
    e = explain(catalog("P_L").shape)
    rules = [s.rule for s in e.trace]
    assert rules == list(Rule)
    assert all(s.result == "pass" for s in e.trace[:-1])
    assert e.trace[-1].result == "unfoldable"
    js = e.to_json(with_trace=True)
    assert js["rule"] == "ORACLE" and len(js["trace"]) == 7
    assert "trace" not in decide(catalog("P_L").shape).to_json()


def test_gates_skip_on_slits():
    e = explain(catalog("fig2_slit").shape)
    assert e.foldable
    conv = [s for s in e.trace if s.rule is Rule.CONVEX_THM]
    assert conv and conv[0].result == "skipped"


def test_cutting_O_opens_its_hole():
    # every glued edge of the ring runs from the hole to the outside
    O = catalog("O").shape
    for a, b in O.glue_edges():
        cut = Polyiamond(O.cells, frozenset({slit(a, b)}))
        assert not has_positive_hole(cut)
        e = explain(cut)
        hole = [s for s in e.trace if s.rule is Rule.HOLE_THM][0]
        assert hole.result == "pass"
        assert e.foldable == foldable(cut)


@given(polyiamonds(1, 14, slits=True))
def test_decide_matches_oracle_property(P):
    assert decide(P).foldable == foldable(P)


@pytest.mark.slow
def test_decide_matches_oracle_on_ten_thousand_random_shapes():
    rng = random.Random(2024)
    for i in range(10_000):
        P = random_polyiamond(rng, rng.randint(10, 14), 0.15 if i % 4 == 0 else 0.0)
        assert decide(P).foldable == foldable(P), P


@pytest.mark.slow
def test_size_gate_against_oracle_with_slits():
    rng = random.Random(77)
    for _ in range(300):
        P = random_polyiamond(rng, rng.randint(15, 18), 0.4)
        assert foldable(P)
