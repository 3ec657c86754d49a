import pytest
from hypothesis import given, strategies as st

from shiftspace.core import (AlphabetError, DimensionError, Pattern, ShiftSpec, SpecError, Window,
                             appears_in, constant_layer, disjoint_union, extend_dims, forbid_words,
                             full_shift, g_layer, golden_mean, pair_code, parse_spec, product,
                             serialize_spec, translate)
from shiftspace.lang import window_language

from conftest import patterns, specs_any


def test_pattern_cells_sorted_and_deduped():
    p = Pattern(1, (((2,), 1), ((0,), 0), ((2,), 1)))
    assert p.cells == (((0,), 0), ((2,), 1))


def test_pattern_conflicting_symbols_rejected():
    with pytest.raises(SpecError):
        Pattern(1, (((0,), 0), ((0,), 1)))


def test_pattern_dimension_checked():
    with pytest.raises(DimensionError):
        Pattern(2, (((0,), 0),))


def test_canonical_moves_min_coordinate_to_origin():
    p = Pattern(2, (((3, 5), 1), ((4, 4), 0)))
    assert p.canonical().support[0] == (0, 0)
    assert p.canonical() == translate(p, (3, 5))


def test_word_and_restrict():
    p = Pattern.word([1, 0, 1], start=2)
    assert p.support == ((2,), (3,), (4,))
    assert p.restrict([(3,)]).symbols == (0,)


def test_appears_in():
    q = Pattern.word([0, 1, 1, 0])
    assert appears_in(Pattern.word([1, 1]), q)
    assert not appears_in(Pattern.word([0, 0]), q)


def test_windows():
    assert len(Window.centered(2, 2)) == 25
    assert Window.corner(3, 1).coords == ((0,), (1,), (2,))
    assert len(Window.interval(-1, 1).inflate(2)) == 7
    assert Window.box((0, 0), (1, 2)).shifted((1, 1)).coords[0] == (1, 1)


def test_spec_canonicalizes_and_dedupes():
    a = forbid_words((0, 1), [(1, 1)])
    b = ShiftSpec(1, (1, 0), (Pattern.word([1, 1], start=7), Pattern.word([1, 1])))
    assert a == b
    assert len(b.forbidden) == 1


def test_spec_errors_name_the_pattern():
    with pytest.raises(AlphabetError, match="pattern 1"):
        ShiftSpec(1, (0, 1), (Pattern.word([0]), Pattern.word([2])))
    with pytest.raises(DimensionError, match="pattern 0"):
        ShiftSpec(2, (0, 1), (Pattern.word([0]),))
    with pytest.raises(AlphabetError):
        ShiftSpec(1, ())


def test_meta_not_part_of_equality():
    assert golden_mean().with_meta(name="gm") == golden_mean()


def test_pair_code_injective():
    code = pair_code((3, 5, 7), (0, 1))
    assert sorted(code.values()) == list(range(6))


def test_product_language_is_product():
    gm = golden_mean()
    w = Window.interval(0, 2)
    n_gm = len(window_language(gm, w))
    n_full = len(window_language(full_shift((0, 1)), w))
    assert len(window_language(product(gm, full_shift((0, 1))), w)) == n_gm * n_full


def test_disjoint_union_does_not_mix():
    u = disjoint_union(full_shift((0, 1)), full_shift((0, 1)))
    assert u.alphabet == (0, 1, 2, 3)
    # 4 words inside each copy, none across
    assert len(window_language(u, Window.interval(0, 1))) == 8
    assert u.meta_dict()["union_offset"] == "2"


def test_extend_dims_zero_is_identity_and_constant_along_new_axes():
    gm = golden_mean()
    assert extend_dims(gm, 0) is gm
    e = extend_dims(gm, 1)
    lang = window_language(e, Window.corner(2, 2))
    for w in lang.patterns:
        d = w.as_dict()
        assert d[(0, 0)] == d[(0, 1)] and d[(1, 0)] == d[(1, 1)]
    assert len(lang) == 3


def test_constant_layer_and_g_layer():
    c = constant_layer(3)
    assert c.alphabet == (1, 2, 3)
    assert len(window_language(c, Window.interval(0, 3))) == 3
    assert len(window_language(g_layer(golden_mean(), 3), Window.interval(0, 3))) == 24


def test_serialize_format():
    text = serialize_spec(golden_mean())
    assert text.splitlines()[:3] == ["shift v1", "dim 1", "alphabet 0 1"]
    assert "forbid\n0 1\n1 1\nend" in text


@pytest.mark.parametrize("text,line", [
    ("nope\n", 1),
    ("shift v1\ndim x\nalphabet 0\n", 2),
    ("shift v1\ndim 1\nalphabet 0 1\nforbid\n0 2\nend\n", 5),
    ("shift v1\ndim 1\nalphabet 0 1\nforbid\n0 1\n", 4),
    ("shift v1\ndim 2\nalphabet 0 1\nforbid\n0 1\nend\n", 5),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(SpecError) as info:
        parse_spec(text)
    assert info.value.line == line


def test_bundled_fixtures_match_fresh_serialization():
    from importlib.resources import files
    from shiftspace.robinson import robinson_spec
    from shiftspace.times23 import x0_spec
    data = files("shiftspace") / "data"
    for name, make in (("goldenmean.shift", golden_mean), ("x0.shift", x0_spec),
                       ("robinson.shift", robinson_spec)):
        assert (data / name).read_text(encoding="utf-8") == serialize_spec(make())


# --- properties ---

@given(patterns(), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_prop_translation_round_trip(p, u):
    u = u[:p.dim]
    assert translate(translate(p, u), tuple(-x for x in u)) == p
    assert translate(p, u).canonical() == p.canonical()


@given(specs_any())
def test_prop_serialize_parse_idempotent(spec):
    text = serialize_spec(spec)
    back = parse_spec(text)
    assert back == spec
    assert serialize_spec(parse_spec(serialize_spec(back))) == serialize_spec(back)
