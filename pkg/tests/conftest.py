import itertools

from hypothesis import settings, strategies as st

from shiftspace.core import Pattern, ShiftSpec

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

DATA = __import__("pathlib").Path(__file__).parent / "data"


@st.composite
def patterns(draw, dim=None, max_cells=5, alphabet=(0, 1, 2)):
    d = dim or draw(st.integers(1, 2))
    coords = draw(st.lists(st.tuples(*[st.integers(-4, 4)] * d), min_size=0, max_size=max_cells, unique=True))
    syms = draw(st.lists(st.sampled_from(alphabet), min_size=len(coords), max_size=len(coords)))
    return Pattern(d, tuple(zip(coords, syms)))


@st.composite
def specs_1d(draw, alphabet=(0, 1), max_len=3, max_words=4):
    words = draw(st.lists(
        st.lists(st.sampled_from(alphabet), min_size=1, max_size=max_len).map(tuple),
        max_size=max_words))
    return ShiftSpec(1, alphabet, tuple(Pattern.word(w) for w in words))


@st.composite
def specs_any(draw):
    d = draw(st.integers(1, 2))
    alphabet = tuple(range(draw(st.integers(1, 3))))
    pats = draw(st.lists(patterns(dim=d, max_cells=3, alphabet=alphabet).filter(lambda p: len(p) > 0),
                         max_size=4))
    meta = draw(st.lists(st.tuples(st.sampled_from(["name", "note"]), st.text("abc", max_size=3)),
                         max_size=2, unique_by=lambda t: t[0]))
    return ShiftSpec(d, alphabet, tuple(pats), tuple(meta))


def all_words(alphabet, n):
    return list(itertools.product(alphabet, repeat=n))


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n, (ok, detail) in sorted(test_acceptance.RESULTS.items()):
            terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
