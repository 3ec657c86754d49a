import time

import pytest
from hypothesis import given, strategies as st

from shiftspace.lang import is_locally_admissible
from shiftspace.robinson import (N_TILES, QUADRANTS, TILES, RobinsonPatch,
                                 arrow_tile, check_local_rules, corner, h_compatible,
                                 locate_structure, render, render_ascii, robinson_spec, rule4_ok,
                                 side_length, supertile, tile_set, v_compatible)

from conftest import DATA

MACRO_ARROWS = {"one": 3, "two": 5, "three": 4, "six": 6, "seven": 6}


def _golden_lines(name):
    return [ln.split() for ln in (DATA / name).read_text().splitlines() if ln and not ln.startswith("#")]


def test_tile_table():
    ts = tile_set()
    assert len(ts) == N_TILES == 108
    assert [t.id for t in ts] == list(range(108))
    corners = [t for t in ts if t.is_corner]
    assert len(corners) == 12
    assert sum(t.is_blue for t in corners) == 4
    assert all(t.i == t.j for t in corners)
    assert {t.arrows for t in ts if not t.is_corner} == {3, 4, 5, 6}


def test_rule_one_examples():
    b = arrow_tile("B", 0, 0, 1)
    assert not v_compatible(arrow_tile("C", 0, 0, 1), b)
    assert v_compatible(arrow_tile("A", 0, 0, 1), b)


def test_rule_three_and_four():
    for a in TILES:
        for b in TILES:
            if h_compatible(a, b):
                assert a.i == b.i
            if v_compatible(a, b):
                assert a.j == b.j
    six = next(t for t in TILES if t.arrows == 6)
    assert rule4_ok(six) == (six.i != six.j)


@pytest.mark.parametrize("n,side", [(0, 1), (1, 3), (2, 7), (3, 15)])
def test_side_lengths(n, side):
    assert side_length(n) == side
    p = supertile("sw", n)
    assert (p.width, p.height) == (side, side)


def test_supertiles_audit_clean_and_fast():
    t0 = time.perf_counter()
    for q in QUADRANTS:
        for n in range(4):
            assert check_local_rules(supertile(q, n)) == []
    assert time.perf_counter() - t0 < 5


def test_rule_two_density():
    for q in QUADRANTS:
        for n in range(4):
            p = supertile(q, n)
            for y in range(p.height - 1):
                for x in range(p.width - 1):
                    assert any(p.tile(x + dx, y + dy).is_blue for dx in (0, 1) for dy in (0, 1))


def test_order_two_corners_match_golden():
    p = supertile("sw", 2)
    expected = {(int(x), int(y)): (o, c) for x, y, o, c in _golden_lines("order2_sw_corners.txt")}
    got = {}
    for y in range(7):
        for x in range(7):
            t = p.tile(x, y)
            if t.is_corner:
                got[(x, y)] = (t.orientation, "blue" if t.is_blue else "red")
    assert got == expected


def test_order_two_arrow_classes_match_golden():
    p = supertile("sw", 2)
    classes = {}
    for name, direction, x, y in _golden_lines("order2_sw_arrows.txt"):
        t = p.tile(int(x), int(y))
        assert not t.is_corner
        assert t.arrows == MACRO_ARROWS[name]
        classes.setdefault((name, direction), set()).add((t.shape, t.rotation))
    assert all(len(v) == 1 for v in classes.values())
    # distinct drawing macros never share a tile class
    flat = [next(iter(v)) for v in classes.values()]
    assert len(flat) == len(set(flat))


def test_order_one_ascii_golden():
    assert render_ascii(supertile("sw", 1)) == (DATA / "order1_sw_ascii.txt").read_text()


def test_order_two_structure():
    rep = locate_structure(supertile("sw", 2))
    assert len(rep.blue_corners) == 16
    assert sorted(rep.sites_of_order(1)) == [(1, 1), (1, 5), (5, 1), (5, 5)]
    assert rep.red_center == (3, 3)
    assert rep.taxonomy.startswith("(iii)")


def test_order_cap():
    with pytest.raises(ValueError):
        supertile("sw", 7)


def test_patch_text_round_trip_and_holes():
    p = supertile("ne", 2)
    assert RobinsonPatch.from_text(p.to_text()) == p
    holey = RobinsonPatch.from_text("robipatch v1 2 1\n96 .\n")
    assert holey.holes == 1
    with pytest.raises(ValueError):
        RobinsonPatch.from_text("robipatch v1 2 1\n96\n")
    with pytest.raises(ValueError):
        RobinsonPatch.from_text("robipatch v1 1 1\n500\n")


def test_audit_detects_corruption():
    p = supertile("sw", 2)
    rows = [list(r) for r in p.cells]
    rows[3][3] = corner("sw", "blue").id
    bad = RobinsonPatch.from_grid(rows)
    assert check_local_rules(bad)


def test_renderers_deterministic():
    p = supertile("sw", 2)
    pgm = render(p, "pgm")
    assert pgm.startswith(b"P5\n") and pgm == render(p, "pgm")
    svg = render(p, "svg")
    assert svg.count("<g") >= 49 and "</svg>" in svg
    with pytest.raises(ValueError):
        render(p, "png")


def test_spec_accepts_supertile_patch():
    spec = robinson_spec()
    assert len(spec.alphabet) == 108
    assert is_locally_admissible(spec, supertile("sw", 2).to_pattern())


@given(st.sampled_from(QUADRANTS), st.integers(0, 3), st.integers(0, 14), st.integers(0, 14),
       st.integers(1, 4), st.integers(1, 4))
def test_prop_sub_patches_stay_clean(q, n, x, y, w, h):
    p = supertile(q, n)
    x, y = x % p.width, y % p.height
    w, h = min(w, p.width - x), min(h, p.height - y)
    assert check_local_rules(p.sub(x, y, w, h)) == []
