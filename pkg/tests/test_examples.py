import pytest
from hypothesis import given, strategies as st

from shiftspace.core import Pattern, Window
from shiftspace.examples import (ARROW_GLYPHS, BOX, CC_GLYPHS, UP, X, allowed_squares, arrow_sample,
                                 arrow_shift_spec, corner_cross_spec, get_example, named_examples,
                                 render_svg, render_text, sample_plus, sample_xn,
                                 sunny_side_up_approximants, two_by_two_blocks, without_box, xn_symbol)
from shiftspace.lang import is_locally_admissible, window_language
from shiftspace.one_dim import NotIsolated, isolated_verdict_1d

from conftest import DATA


def test_allowed_table_closed_under_rotation():
    sq = allowed_squares()
    assert len(sq) == 20
    from shiftspace.examples import _rotate_square
    assert all(_rotate_square(s) in sq for s in sq)


def test_corner_cross_spec_size():
    assert len(corner_cross_spec().forbidden) == 8 ** 4 - 20
    assert len(corner_cross_spec(mirrors=True).forbidden) == 8 ** 4 - 24


def test_x1_blocks_admissible():
    spec = corner_cross_spec()
    for b in two_by_two_blocks(sample_xn(1, Window.centered(5, 2))):
        assert is_locally_admissible(spec, b)


def test_x1_matches_golden():
    text = render_text(sample_xn(1, Window.centered(3, 2)), CC_GLYPHS)
    assert text + "\n" == (DATA / "x1_on_B3.txt").read_text()


def test_literal_table_rejects_x2_mirrors_accept():
    blocks = two_by_two_blocks(sample_xn(2, Window.centered(5, 2)))
    assert not all(is_locally_admissible(corner_cross_spec(), b) for b in blocks)
    mirrored = corner_cross_spec(mirrors=True)
    assert all(is_locally_admissible(mirrored, b) for b in blocks)


def test_x_plus_all_crosses():
    p = sample_plus(Window.centered(3, 2))
    assert set(p.symbols) == {X}


def test_xn_rings():
    # x_3 around the origin block: three nested squares between crosses at 0 and 7
    row = "".join(CC_GLYPHS[xn_symbol(3, x, 4)] for x in range(8))
    assert row == "│││┌┐│││"
    assert xn_symbol(3, 0, 0) == X and xn_symbol(3, 7, 7) == X
    with pytest.raises(ValueError):
        xn_symbol(0, 0, 0)


def test_arrow_sample_rows():
    p = arrow_sample(Window.centered(2, 2))
    assert render_text(p, ARROW_GLYPHS).splitlines()[2] == "←←□→→"


def test_arrow_claims():
    spec = arrow_shift_spec()
    assert is_locally_admissible(spec, arrow_sample(Window.centered(2, 2)), margin=1)
    up = Pattern(2, tuple((c, UP) for c in Window.centered(2, 2).coords))
    assert is_locally_admissible(spec, up, margin=1)
    assert not is_locally_admissible(spec, Pattern(2, (((0, 0), BOX), ((2, 0), BOX))), margin=1)


def test_arrow_two_by_two_language_size():
    # row types above/below each other: 6 box-free stacks; plus 4 windows showing the box
    spec = arrow_shift_spec()
    w = Window.corner(2, 2)
    assert len(window_language(spec, w, 1)) == 10
    assert len(window_language(without_box(spec), w, 1)) == 6


def _orbit_windows(order, w, h):
    """Windows of translates of the defining configuration and of its limit points."""
    from shiftspace.examples import DOWN, LEFT, RIGHT, arrow_symbol
    seen = set()
    for sx in range(-w - 1, w + 2):
        for sy in range(-h - 1, h + 2):
            seen.add(tuple(arrow_symbol(x + sx, y + sy) for x, y in order))
    # far translates: a full row of one arrow between up and down half planes, or constant
    for row_sym in (RIGHT, LEFT):
        for r in range(-1, h + 1):
            seen.add(tuple(UP if y > r else DOWN if y < r else row_sym for _, y in order))
    return seen


@pytest.mark.parametrize("shape", [(2, 2), (3, 2), (2, 3), (3, 3), (7, 7)])
def test_arrow_language_matches_orbit_closure(shape):
    w, h = shape
    win = Window.box((0, 0), (w - 1, h - 1))
    got = set(window_language(arrow_shift_spec(), win, 1).words)
    assert got == _orbit_windows(list(win.coords), w, h)


def test_sunny_first_member_not_isolated():
    assert isinstance(isolated_verdict_1d(sunny_side_up_approximants(1)[0], 3), NotIsolated)


def test_sunny_ladder_decreasing():
    ladder = sunny_side_up_approximants(4)
    for r in range(4):
        w = Window.centered(r, 1)
        langs = [set(window_language(s, w).words) for s in ladder]
        assert all(b <= a for a, b in zip(langs, langs[1:]))


def test_sunny_2d():
    ladder = sunny_side_up_approximants(2, dim=2)
    assert len(ladder[0].forbidden) == 4 and len(ladder[1].forbidden) == 12
    with pytest.raises(ValueError):
        sunny_side_up_approximants(0)


@pytest.mark.parametrize("name", sorted(named_examples()))
def test_claim_bundles_pass(name):
    results = get_example(name).check()
    assert all(ok for _, ok, _ in results), [(c.name, msg) for c, ok, msg in results if not ok]


def test_unknown_example():
    with pytest.raises(KeyError):
        get_example("nope")


def test_svg_render():
    svg = render_svg(sample_plus(Window.centered(1, 2)), CC_GLYPHS)
    assert svg.count("<rect") == 9 and svg.rstrip().endswith("</svg>")


@given(st.integers(1, 4), st.integers(-20, 20), st.integers(-20, 20))
def test_prop_xn_blocks_in_mirrored_table(n, x, y):
    sq = allowed_squares(mirrors=True)
    block = (xn_symbol(n, x, y), xn_symbol(n, x + 1, y), xn_symbol(n, x, y + 1), xn_symbol(n, x + 1, y + 1))
    assert block in sq
