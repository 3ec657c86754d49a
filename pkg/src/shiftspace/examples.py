"""Named example shifts with small checkable claim bundles.

Three families live here: the corner/cross shift on eight symbols, the arrow
shift (orbit closure of a half-plane configuration), and the sunny-side-up
approximants forbidding two 1s at distance at most k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Sequence

from .core import Pattern, ShiftSpec, Window
from .lang import is_locally_admissible, window_language

# --- corner / cross ---------------------------------------------------------

# Corners are named after the two cell sides their line touches.
BLANK, V, H, X, BL, BR, RT, LT = range(8)
CC_NAMES = ("blank", "V", "H", "X", "BL", "BR", "RT", "LT")
CC_GLYPHS = (" ", "│", "─", "┼", "┐", "┌", "└", "┘")

# Quarter turn counterclockwise: top->left, left->bottom, bottom->right, right->top.
_CC_ROT = {BLANK: BLANK, V: H, H: V, X: X, BL: BR, BR: RT, RT: LT, LT: BL}

# The seven 2x2 generators as (sw, se, nw, ne).
_P_BASE = (
    (V, V, V, V),
    (V, RT, V, V),
    (V, RT, V, BR),
    (V, BR, BR, H),
    (V, BR, X, H),
    (RT, LT, BR, BL),
    (X, X, X, X),
)
_CELLS = ((0, 0), (1, 0), (0, 1), (1, 1))


def _rotate_square(sq: tuple) -> tuple:
    d = dict(zip(_CELLS, sq))
    # (x, y) -> (1 - y, x) under a quarter turn
    out = {(1 - y, x): _CC_ROT[s] for (x, y), s in d.items()}
    return tuple(out[c] for c in _CELLS)


_CC_MIRROR = {BLANK: BLANK, V: V, H: H, X: X, BL: BR, BR: BL, RT: LT, LT: RT}


def _mirror_square(sq: tuple) -> tuple:
    sw, se, nw, ne = sq
    return (_CC_MIRROR[se], _CC_MIRROR[sw], _CC_MIRROR[ne], _CC_MIRROR[nw])


def allowed_squares(mirrors: bool = False) -> frozenset:
    """The generators closed under rotation (and left-right mirroring if asked)."""
    seen = set()
    base = list(_P_BASE)
    if mirrors:
        base += [_mirror_square(sq) for sq in _P_BASE]
    for sq in base:
        for _ in range(4):
            seen.add(sq)
            sq = _rotate_square(sq)
    return frozenset(seen)


def corner_cross_spec(mirrors: bool = False) -> ShiftSpec:
    """Forbid every 2x2 square outside the allowed table.

    With the rotation-only table the nested squares of x_n, n >= 2, are
    rejected: the mirror image of the second generator shows up where two
    rings run side by side.  ``mirrors=True`` adds the mirror images.
    """
    allowed = allowed_squares(mirrors)
    forb = [Pattern(2, tuple(zip(_CELLS, sq)))
            for sq in iproduct(range(8), repeat=4) if sq not in allowed]
    name = "corner-cross-mirrored" if mirrors else "corner-cross"
    return ShiftSpec(2, tuple(range(8)), tuple(forb), meta=(("name", name),))


def _ring_symbol(a: int, b: int, side: int) -> int:
    k = min(a, b, side - 1 - a, side - 1 - b)
    lo, hi = k, side - 1 - k
    if a in (lo, hi) and b in (lo, hi):
        if a == lo:
            return RT if b == lo else BR
        return LT if b == lo else BL
    return V if a in (lo, hi) else H


def xn_symbol(n: int, x: int, y: int) -> int:
    """Symbol of x_n at (x, y): crosses on (2n+1)Z^2, lines between, n nested squares in each block."""
    if n < 1:
        raise ValueError("n must be at least 1")
    p = 2 * n + 1
    rx, ry = x % p, y % p
    if rx == 0 and ry == 0:
        return X
    if rx == 0:
        return V
    if ry == 0:
        return H
    return _ring_symbol(rx - 1, ry - 1, 2 * n)


def sample_xn(n: int, window: Window) -> Pattern:
    if window.dim != 2:
        raise ValueError("corner/cross samples are two-dimensional")
    return Pattern(2, tuple((c, xn_symbol(n, *c)) for c in window.coords))


def sample_plus(window: Window) -> Pattern:
    if window.dim != 2:
        raise ValueError("corner/cross samples are two-dimensional")
    return Pattern(2, tuple((c, X) for c in window.coords))


def two_by_two_blocks(p: Pattern) -> list[Pattern]:
    """Every full 2x2 sub-pattern of p, translated to the origin."""
    d = p.as_dict()
    out = []
    for (x, y) in sorted(d):
        cells = [(x + dx, y + dy) for dx, dy in _CELLS]
        if all(c in d for c in cells):
            out.append(Pattern(2, tuple(((dx, dy), d[c]) for (dx, dy), c in zip(_CELLS, cells))))
    return out


# --- arrow shift --------------------------------------------------------------

UP, DOWN, RIGHT, LEFT, BOX = range(5)
ARROW_GLYPHS = ("↑", "↓", "→", "←", "□")

# (lower, upper) and (left, right) pairs read off the orbit closure
ARROW_VERTICAL = frozenset({(UP, UP), (DOWN, DOWN), (RIGHT, UP), (LEFT, UP), (BOX, UP),
                            (DOWN, RIGHT), (DOWN, LEFT), (DOWN, BOX)})
ARROW_HORIZONTAL = frozenset({(UP, UP), (DOWN, DOWN), (RIGHT, RIGHT), (LEFT, LEFT),
                              (LEFT, BOX), (BOX, RIGHT)})


def arrow_symbol(x: int, y: int) -> int:
    if y > 0:
        return UP
    if y < 0:
        return DOWN
    if x > 0:
        return RIGHT
    return LEFT if x < 0 else BOX


def arrow_shift_spec() -> ShiftSpec:
    forb = []
    for a, b in iproduct(range(5), repeat=2):
        if (a, b) not in ARROW_HORIZONTAL:
            forb.append(Pattern(2, (((0, 0), a), ((1, 0), b))))
        if (a, b) not in ARROW_VERTICAL:
            forb.append(Pattern(2, (((0, 0), a), ((0, 1), b))))
    return ShiftSpec(2, tuple(range(5)), tuple(forb), meta=(("name", "arrow"),))


def arrow_sample(window: Window, shift: Sequence[int] = (0, 0)) -> Pattern:
    """The defining configuration translated by ``shift``, restricted to the window."""
    sx, sy = shift
    return Pattern(2, tuple((c, arrow_symbol(c[0] + sx, c[1] + sy)) for c in window.coords))


def without_box(spec: ShiftSpec) -> ShiftSpec:
    """The arrow spec with the box symbol forbidden outright."""
    extra = Pattern(2, (((0, 0), BOX),))
    return ShiftSpec(2, spec.alphabet, spec.forbidden + (extra,), meta=(("name", "arrow-no-box"),))


# --- sunny-side-up approximants ---------------------------------------------

def sunny_side_up_approximants(k_max: int, dim: int = 1) -> list[ShiftSpec]:
    """Member k forbids two 1s at sup-distance in 1..k; the list decreases with k."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if dim not in (1, 2):
        raise ValueError("dim must be 1 or 2")
    origin = (0,) * dim
    out = []
    for k in range(1, k_max + 1):
        forb = []
        for u in iproduct(range(-k, k + 1), repeat=dim):
            if u > origin:
                forb.append(Pattern(dim, ((origin, 1), (u, 1))))
        out.append(ShiftSpec(dim, (0, 1), tuple(forb), meta=(("name", f"sunny-{dim}d-k{k}"),)))
    return out


# --- claim bundles ------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    name: str
    where: str
    check: Callable[[], bool]

    def run(self) -> tuple[bool, str]:
        try:
            ok = bool(self.check())
        except Exception as exc:  # a crashing claim is a failed claim
            return False, f"{type(exc).__name__}: {exc}"
        return ok, ""


@dataclass(frozen=True)
class NamedExample:
    name: str
    spec: ShiftSpec
    claims: tuple[Claim, ...]
    sample: Callable[[Window], Pattern]
    glyphs: tuple[str, ...]

    def check(self) -> list[tuple[Claim, bool, str]]:
        return [(c, *c.run()) for c in self.claims]


def _cc_claims(spec: ShiftSpec) -> tuple[Claim, ...]:
    where = "corner/cross example"

    def closed():
        sq = allowed_squares()
        return all(_rotate_square(s) in sq for s in sq)

    mirrored = corner_cross_spec(mirrors=True)

    def xn_blocks(n, s, expect=True):
        def run():
            blocks = two_by_two_blocks(sample_xn(n, Window.centered(5, 2)))
            return all(is_locally_admissible(s, b) for b in blocks) == expect
        return run

    def plus():
        p = sample_plus(Window.centered(3, 2))
        return set(p.symbols) == {X} and all(is_locally_admissible(spec, b) for b in two_by_two_blocks(p))

    def corner_diagonal():
        # a corner touching bottom and right sees the same corner or a cross up-left of it
        for n in (1, 2, 3):
            for (x, y), s in sample_xn(n, Window.centered(6, 2)).cells:
                if s == BR and xn_symbol(n, x - 1, y + 1) not in (BR, X):
                    return False
        return True

    return (
        Claim("allowed squares closed under rotation", where, closed),
        Claim("x_1 2x2 blocks on B_5 admissible", where, xn_blocks(1, spec)),
        Claim("x_2 rejected by the rotation-only table", where, xn_blocks(2, spec, expect=False)),
        *(Claim(f"x_{n} 2x2 blocks on B_5 admissible with mirrors", where, xn_blocks(n, mirrored))
          for n in (2, 3, 4)),
        Claim("x_plus is all crosses and admissible", where, plus),
        Claim("corner up-left neighbour is same corner or cross", where, corner_diagonal),
    )


def _arrow_claims(spec: ShiftSpec) -> tuple[Claim, ...]:
    where = "arrow shift example"

    def defining():
        return is_locally_admissible(spec, arrow_sample(Window.centered(2, 2)), margin=1)

    def all_up():
        p = Pattern(2, tuple((c, UP) for c in Window.centered(2, 2).coords))
        return is_locally_admissible(spec, p, margin=1)

    def two_boxes():
        p = Pattern(2, (((0, 0), BOX), ((2, 0), BOX)))
        return not is_locally_admissible(spec, p, margin=1)

    def box_free():
        w = Window.corner(2, 2)
        full = window_language(spec, w, 1).words
        sub = window_language(without_box(spec), w, 1).words
        return tuple(x for x in full if BOX not in x) == sub

    return (
        Claim("defining configuration on B_2 admissible", where, defining),
        Claim("all-up window admissible", where, all_up),
        Claim("two boxes at distance 2 in a row inadmissible", where, two_boxes),
        Claim("box-free 2x2 words form the box-free sub-language", where, box_free),
    )


def _sunny_claims(k_max: int) -> tuple[Claim, ...]:
    where = "sunny-side-up example"
    ladder = sunny_side_up_approximants(k_max)

    def first_not_isolated():
        from .one_dim import NotIsolated, isolated_verdict_1d
        return isinstance(isolated_verdict_1d(ladder[0], 3), NotIsolated)

    def decreasing():
        for r in range(4):
            w = Window.centered(r, 1)
            langs = [set(window_language(s, w).words) for s in ladder]
            if any(not b <= a for a, b in zip(langs, langs[1:])):
                return False
        return True

    def converges():
        from .lang import check_convergence
        rep = check_convergence(ladder, ladder[-1], 2)
        return rep.consistent

    return (
        Claim("k=1 approximant is not isolated", where, first_not_isolated),
        Claim("approximant languages decrease on radii <= 3", where, decreasing),
        Claim("convergence report against the last member", where, converges),
    )


def _sunny_sample(window: Window) -> Pattern:
    return Pattern(window.dim, tuple((c, 1 if not any(c) else 0) for c in window.coords))


def named_examples() -> dict[str, NamedExample]:
    cc = corner_cross_spec()
    ar = arrow_shift_spec()
    sunny = sunny_side_up_approximants(4)
    return {
        "corner-cross": NamedExample("corner-cross", cc, _cc_claims(cc), lambda w: sample_xn(1, w), CC_GLYPHS),
        "corner-cross-x3": NamedExample("corner-cross-x3", cc, (), lambda w: sample_xn(3, w), CC_GLYPHS),
        "corner-cross-plus": NamedExample("corner-cross-plus", cc, (), sample_plus, CC_GLYPHS),
        "arrow": NamedExample("arrow", ar, _arrow_claims(ar), arrow_sample, ARROW_GLYPHS),
        "sunny-side-up": NamedExample("sunny-side-up", sunny[-1], _sunny_claims(4), _sunny_sample, (".", "1")),
    }


def get_example(name: str) -> NamedExample:
    ex = named_examples()
    if name not in ex:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(sorted(ex))}")
    return ex[name]


def render_text(p: Pattern, glyphs: Sequence[str]) -> str:
    """North row first; 1D patterns render as a single row."""
    d = p.as_dict()
    if p.dim == 1:
        return "".join(glyphs[d[c]] for c in sorted(d))
    xs = sorted({c[0] for c in d})
    ys = sorted({c[1] for c in d}, reverse=True)
    return "\n".join("".join(glyphs[d[(x, y)]] if (x, y) in d else "?" for x in xs) for y in ys)


def render_svg(p: Pattern, glyphs: Sequence[str], unit: int = 20) -> str:
    d = p.as_dict()
    if p.dim == 1:
        d = {(c[0], 0): s for c, s in d.items()}
    xs = [c[0] for c in d]
    ys = [c[1] for c in d]
    x0, y1 = min(xs), max(ys)
    w, h = (max(xs) - x0 + 1) * unit, (y1 - min(ys) + 1) * unit
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}">']
    for (x, y), s in sorted(d.items()):
        px, py = (x - x0) * unit, (y1 - y) * unit
        out.append(f'<rect x="{px}" y="{py}" width="{unit}" height="{unit}" fill="white" stroke="gray"/>')
        out.append(f'<text x="{px + unit // 2}" y="{py + unit * 3 // 4}" font-size="{unit * 3 // 4}" '
                   f'text-anchor="middle">{glyphs[s]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
