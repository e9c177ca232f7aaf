import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octafold.construct import (
    SLITFREE,
    WITH_SLITS,
    ConstructionError,
    CoverageSpec,
    UnknownName,
    build_slitfree,
    build_with_slits,
    catalog,
    certificate,
    names,
    nets,
    specs_up_to,
)
from octafold.fold import foldable, solve, structure, cell_faces
from octafold.grid import canonical_form, holes, is_convex, strip

specs = st.lists(st.integers(1, 12), min_size=8, max_size=8).map(tuple)


def test_catalog_names_and_aliases():
    assert "C6" in names() and "net11" in names()
    assert catalog("o").name == "Cbar1"
    assert catalog("p").name == catalog("fig2a").name == "Cbar4"
    assert catalog("P_minus").name == "C1"
    with pytest.raises(UnknownName):
        catalog("nope")


@pytest.mark.parametrize("name", names())
def test_catalog_shapes_are_canonical_and_sized(name):
    e = catalog(name)
    assert canonical_form(e.shape) == e.shape
    if "size" in e.expected:
        assert e.size == e.expected["size"]


def test_nets_are_eight_cells_and_fold():
    for net in nets():
        assert net.size == 8 and foldable(net)


def test_convex_entries():
    for n in ("C1", "C2", "C3", "C4", "C5", "Cbar1", "Cbar2", "Cbar3", "Cbar4", "C6"):
        assert is_convex(catalog(n).shape), n


def test_templates_cover_every_face_once():
    for t in (SLITFREE, WITH_SLITS):
        assert sorted(t.faces.values()) == list(range(8))
        assert len(t.arms) == 8


def test_spec_validation():
    with pytest.raises(ValueError):
        CoverageSpec((1,) * 7)
    with pytest.raises(ValueError):
        CoverageSpec((1, 1, 1, 1, 1, 1, 1, 0))
    assert CoverageSpec([2] * 8).total == 16


def test_certificate_rejects_inconsistent_faces():
    S = strip(2)
    a, b = sorted(S.cells)
    with pytest.raises(ConstructionError):
        certificate(S, {a: 0, b: 7})


def test_all_small_specs_both_builders():
    for spec in specs_up_to(2):
        for build in (build_slitfree, build_with_slits):
            c = build(spec)
            assert c.coverage() == list(spec.m)


@given(specs)
def test_slitfree_builder_property(m):
    c = build_slitfree(m)
    P = c.polyiamond
    assert P.size == sum(m)
    assert c.coverage() == list(m)
    assert not P.slits and holes(P) == []


@given(specs)
def test_slit_builder_property(m):
    c = build_with_slits(m)
    assert c.coverage() == list(m)
    assert holes(c.polyiamond) == []


def test_certificate_faces_match_the_layout():
    c = build_slitfree((3, 1, 4, 1, 5, 9, 2, 6))
    S = structure(c.polyiamond)
    faces = cell_faces(S, c.certificate)
    assert sorted(faces) == sorted(f for f, k in enumerate(c.spec.m) for _ in range(k))


def test_long_arms_do_not_collide():
    rng = random.Random(11)
    for _ in range(5):
        m = tuple(rng.randint(1, 300) for _ in range(8))
        for build in (build_slitfree, build_with_slits):
            assert build(m).coverage() == list(m)
    for f in range(8):
        m = [1] * 8
        m[f] = 500
        assert build_slitfree(m).coverage() == m


def test_constructions_fold_per_oracle():
    for m in itertools.islice(specs_up_to(2), 0, 256, 37):
        P = build_slitfree(m).polyiamond
        assert solve(P)[1] is not None
