import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shiftspace.core import (AlphabetError, DimensionError, Pattern, Window, forbid_words, full_shift,
                             golden_mean)
from shiftspace.lang import (BudgetExhausted, check_convergence,
                             is_locally_admissible, language_size, resolution_distance,
                             stabilization_margin, window_language)

from conftest import specs_1d


def _avoids(word, spec):
    forb = [tuple(p.symbols) for p in spec.forbidden]  # 1D canonical words start at 0
    s = tuple(word)
    for f in forb:
        for i in range(len(s) - len(f) + 1):
            if s[i:i + len(f)] == f:
                return False
    return True


def oracle_words(spec, length, margin):
    """Words of the given length sitting inside some forbidden-free word with margin on both sides."""
    out = set()
    for big in itertools.product(spec.alphabet, repeat=length + 2 * margin):
        if _avoids(big, spec):
            out.add(big[margin:margin + length])
    return sorted(out)


def test_golden_mean_counts():
    gm = golden_mean()
    assert language_size(gm, Window.interval(0, 2)) == 5
    assert language_size(gm, Window.centered(2, 1)) == 13


def test_window_language_membership():
    lang = window_language(golden_mean(), Window.interval(0, 1))
    assert Pattern.word([0, 1]) in lang
    assert Pattern.word([1, 1]) not in lang
    assert Pattern.word([0]) not in lang
    assert "local admissibility" in lang.label


def test_2d_label_says_over_approximation():
    from shiftspace.core import extend_dims
    lang = window_language(extend_dims(golden_mean(), 1), Window.corner(1, 2))
    assert "over-approximation" in lang.label


def test_margin_matters_when_dead_ends_exist():
    # 0 may only be followed by 0 and 1 only by... nothing but 1, then 1 0 dead-ends in 0 1 forbidden
    spec = forbid_words((0, 1), [(0, 1), (1, 0, 0)])
    w = Window.interval(0, 1)
    assert (1, 0) in window_language(spec, w, 0).words
    assert (1, 0) not in window_language(spec, w, 1).words
    assert stabilization_margin(spec, w) == 1


def test_is_locally_admissible_errors():
    with pytest.raises(DimensionError):
        is_locally_admissible(golden_mean(), Pattern(2, (((0, 0), 0),)))
    with pytest.raises(AlphabetError):
        is_locally_admissible(golden_mean(), Pattern.word([3]))
    assert is_locally_admissible(golden_mean(), Pattern.empty(1))


def test_budget_exhaustion():
    with pytest.raises(BudgetExhausted):
        window_language(full_shift((0, 1, 2)), Window.interval(0, 5), budget=10)


def test_distances_against_word_oracle():
    full = full_shift((0, 1))
    d2 = resolution_distance(full, forbid_words((0, 1), [(1, 1)]), 4)
    d4 = resolution_distance(full, forbid_words((0, 1), [(1, 1, 1, 1)]), 4)
    assert (d2.radius, d2.value) == (1, Fraction(1, 2))
    assert (d4.radius, d4.value) == (2, Fraction(1, 4))
    assert str(d4) == "2^-2"
    same = resolution_distance(full, full, 3)
    assert same.beyond and str(same) == "beyond 3" and same.value == 0


def test_alphabet_mismatch_is_distance_one():
    d = resolution_distance(full_shift((0, 1)), full_shift((0, 1, 2)), 3)
    assert d.radius == 0 and d.value == 1


def test_distance_dimension_mismatch():
    from shiftspace.core import ShiftSpec
    with pytest.raises(DimensionError):
        resolution_distance(full_shift((0,)), ShiftSpec(2, (0,)), 1)


def _ladder_oracle(ks, N):
    # forbid 1^k differs from the full shift on the radius-s box iff k <= 2s+1
    out = []
    for s in range(N + 1):
        ok = [k > 2 * s + 1 for k in ks]
        m = len(ok)
        while m > 0 and ok[m - 1]:
            m -= 1
        out.append(m if m < len(ok) else None)
    return tuple(out)


def test_unary_ladder_convergence_matches_arithmetic():
    ks = list(range(2, 10))
    seq = [forbid_words((0, 1), [(1,) * k]) for k in ks]
    rep = check_convergence(seq, full_shift((0, 1)), 4)
    assert rep.agree_from == _ladder_oracle(ks, 4) == (0, 2, 4, 6, None)
    assert rep.lines()[1] == "radius 1 agree_from 2"
    assert rep.lines()[4] == "radius 4 agree_from never"
    assert not rep.consistent
    assert "verdict" in rep.table()


def test_convergence_empty_sequence():
    with pytest.raises(ValueError):
        check_convergence([], golden_mean(), 2)


# --- properties ---

@given(specs_1d(), st.integers(1, 4), st.integers(0, 2))
def test_prop_matches_word_oracle(spec, length, margin):
    got = window_language(spec, Window.interval(0, length - 1), margin).words
    assert list(got) == oracle_words(spec, length, margin)


@given(specs_1d(), st.integers(1, 3), st.integers(0, 3))
def test_prop_margin_monotone(spec, length, margin):
    w = Window.interval(0, length - 1)
    assert set(window_language(spec, w, margin + 1).words) <= set(window_language(spec, w, margin).words)


@given(specs_1d(), st.lists(st.sampled_from((0, 1)), min_size=1, max_size=5), st.integers(0, 2),
       st.data())
def test_prop_subpattern_closure(spec, word, margin, data):
    p = Pattern.word(word)
    if is_locally_admissible(spec, p, margin):
        keep = data.draw(st.lists(st.sampled_from(p.support), unique=True))
        assert is_locally_admissible(spec, p.restrict(keep), margin)


@given(specs_1d(), specs_1d(), specs_1d())
def test_prop_ultrametric(a, b, c):
    N = 3
    dab, dbc, dac = (resolution_distance(x, y, N) for x, y in ((a, b), (b, c), (a, c)))
    assert dac.value <= max(dab.value, dbc.value)
    assert resolution_distance(b, a, N).value == dab.value
