import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import polyiamonds, random_polyiamond
from octafold.grid import (
    DOWN,
    UP,
    HoleKind,
    InvalidPolyiamond,
    Isometry,
    Polyiamond,
    TriCell,
    adjacent,
    axis_widths,
    canonical_form,
    canonical_key,
    color,
    congruent,
    contains,
    has_positive_hole,
    hexagon,
    holes,
    hull,
    is_convex,
    placements,
    point_group,
    ray,
    region_cells,
    shared_edge,
    slit,
    strip,
    symmetries,
    tri_contains,
    width,
    zigzag_reduce,
)

isometries = st.builds(
    Isometry, st.integers(0, 5), st.booleans(), st.tuples(st.integers(-5, 5), st.integers(-5, 5))
)


def test_cell_geometry():
    c = TriCell(0, 0, UP)
    assert set(c.vertices()) == {(0, 0), (1, 0), (0, 1)}
    for n in c.neighbors():
        assert n.orient == DOWN
        assert adjacent(c, n)
        assert c in n.neighbors()
    assert shared_edge(c, TriCell(5, 5, DOWN)) is None


def test_coloring_is_proper():
    for x in range(-3, 4):
        for y in range(-3, 4):
            for o in (UP, DOWN):
                assert sorted(color(v) for v in TriCell(x, y, o).vertices()) == [0, 1, 2]


@given(isometries)
def test_isometries_preserve_adjacency_and_color_classes(g):
    c = TriCell(1, -2, UP)
    for n in c.neighbors():
        assert adjacent(g.cell(c), g.cell(n))
    # vertices of equal color stay equal-colored
    vs = [(p, q) for p in range(-3, 4) for q in range(-3, 4)]
    by = {}
    for v in vs:
        by.setdefault(color(v), set()).add(color(g.vertex(v)))
    assert all(len(s) == 1 for s in by.values())


@given(isometries, isometries)
def test_compose_and_inverse(g, h):
    gh = g.compose(h)
    inv = g.inverse()
    for v in [(0, 0), (2, -1), (-3, 4)]:
        assert gh.vertex(v) == g.vertex(h.vertex(v))
        assert inv.vertex(g.vertex(v)) == v


def test_point_group_has_twelve_distinct_elements():
    c = TriCell(2, 1, UP)
    imgs = {tuple(g.vertex(v) for v in [(1, 0), (0, 1)]) for g in point_group()}
    assert len(point_group()) == 12 and len(imgs) == 12
    assert len({g.cell(c) for g in point_group()}) == 12


def test_slit_validation():
    a, b = TriCell(0, 0, UP), TriCell(0, 0, DOWN)
    with pytest.raises(InvalidPolyiamond):
        Polyiamond(frozenset({a, b}), frozenset({slit(a, b)}))
    with pytest.raises(InvalidPolyiamond):
        Polyiamond(frozenset({a}), frozenset({slit(a, b)}))
    with pytest.raises(InvalidPolyiamond):
        Polyiamond(frozenset())
    with pytest.raises(InvalidPolyiamond):
        Polyiamond(frozenset({a, TriCell(3, 3, UP)}))


@given(polyiamonds(1, 12, slits=True), isometries)
def test_canonical_form_is_invariant(P, g):
    assert canonical_key(g(P)) == canonical_key(P)
    assert congruent(canonical_form(P), P)
    assert canonical_form(canonical_form(P)) == canonical_form(P)


def test_canonical_form_separates_mirror_images_only_up_to_isometry():
    # a chiral pentiamond and its mirror are congruent (reflections allowed)
    P = Polyiamond.of([(0, 0, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0)])
    assert congruent(P, Isometry(0, True)(P))
    assert not congruent(P, strip(5))


def test_symmetries_of_hexagon_and_strip():
    assert len(symmetries(Polyiamond(hexagon()))) == 12
    assert len(symmetries(strip(3))) == 2
    assert len(symmetries(Polyiamond.of([(0, 0, 0)]))) == 6


def test_hexagon_has_no_hole_but_a_ring_does():
    H = Polyiamond(hexagon())
    assert holes(H) == [] and not has_positive_hole(H)
    ring = (hexagon((0, 0)) | hexagon((2, 0)) | hexagon((0, 2)) | hexagon((2, -1)) | hexagon((-1, 2))
            | hexagon((1, 1)))
    ring = ring - {TriCell(0, 0, DOWN)}
    P = Polyiamond(frozenset(ring))
    hs = holes(P)
    assert [h.kind for h in hs] == [HoleKind.POSITIVE_AREA]
    assert hs[0].cells == {TriCell(0, 0, DOWN)}


def test_slit_hole_versus_boundary_cut():
    H = hexagon()
    big = set()
    for c in H:
        big |= {TriCell(c.x + dx, c.y + dy, o) for dx in (-1, 0, 1) for dy in (-1, 0, 1) for o in (UP, DOWN)}
    P = Polyiamond(frozenset(big)).sealed()
    # cut one interior edge away from the boundary
    a = TriCell(0, 0, UP)
    b = TriCell(0, 0, DOWN)
    cut = Polyiamond(P.cells, frozenset({slit(a, b)}))
    hs = holes(cut)
    assert [h.kind for h in hs] == [HoleKind.SLIT]
    assert hs[0].cells == frozenset()


def test_region_and_hull():
    tri = region_cells(0, 2, 0, 2, 0, 2)
    assert len(tri) == 4 and is_convex(Polyiamond(tri))
    L = Polyiamond.of([(0, 0, 0), (0, 0, 1), (1, 0, 0)])
    assert is_convex(L)
    V = Polyiamond.of([(0, 0, 0), (0, 0, 1), (0, 1, 0), (-1, 1, 1)])
    assert not is_convex(V) and is_convex(hull(V))
    assert V.cells < hull(V).cells


@given(polyiamonds(1, 12))
def test_hull_is_convex_superset(P):
    H = hull(P)
    assert P.cells <= H.cells and is_convex(H)


def test_strip_width_and_zigzag():
    S = strip(7)
    assert S.size == 7
    assert axis_widths(S)[0] == 7 and width(S) == 7
    H = Polyiamond(hexagon())
    assert width(H) == 3
    for axis in range(3):
        Z = zigzag_reduce(H, axis)
        assert Z.size == axis_widths(H)[axis]


@given(polyiamonds(1, 14), st.integers(0, 2))
def test_zigzag_reduce_is_a_strip_of_the_axis_width(P, axis):
    Z = zigzag_reduce(P, axis)
    assert Z.size == axis_widths(P)[axis]
    assert axis_widths(Z)[axis] == Z.size


def test_containment_modes():
    H = Polyiamond(hexagon())
    cut = Polyiamond(H.cells, frozenset({slit(TriCell(0, 0, UP), TriCell(-1, 0, DOWN))}))
    S3, S4 = strip(3), strip(4)
    assert contains(H, S3)
    assert tri_contains(cut, H) and not contains(cut, H)
    assert not contains(H, S4)
    assert sum(1 for _ in placements(H, Polyiamond.of([(0, 0, 0)]))) == 6


def test_ray_follows_the_band():
    c = TriCell(0, 0, UP)
    for axis in range(3):
        for d in (1, -1):
            cells = ray(c, axis, d, 6)
            assert len(set(cells)) == 6 and c not in cells
            chain = [c] + cells
            assert all(adjacent(a, b) for a, b in zip(chain, chain[1:]))
            assert width(Polyiamond(frozenset(chain))) == 7


def test_random_generator_is_connected_and_sized():
    rng = random.Random(0)
    for n in (1, 5, 15, 30):
        P = random_polyiamond(rng, n, 0.3)
        assert P.size == n
