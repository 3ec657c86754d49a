"""The x2 x3 shift X0 on Z^2 over Z/6Z.

Horizontally each symbol doubles (plus a carry in {0,1}), vertically it
triples (plus a carry in {0,1,2}).  The diagonal read in base 6 gives a point
of the circle; these helpers check at finite scale that the diagonal
determines the whole square and that the shifts act as x2 and x3.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

from .core import Pattern, ShiftSpec, extend_dims, g_layer

ALPHABET = tuple(range(6))
H_CARRIES = (0, 1)
V_CARRIES = (0, 1, 2)
DEFAULT_CAP = 5

Grid = tuple[tuple[int, ...], ...]  # grid[y][x]


class DefectError(AssertionError):
    """A finite check contradicted a statement that is supposed to hold."""


class NotInLanguage(ValueError):
    pass


def h_ok(a: int, b: int) -> bool:
    """b may sit right of a."""
    return (b - 2 * a) % 6 in H_CARRIES


def v_ok(a: int, c: int) -> bool:
    """c may sit above a."""
    return (c - 3 * a) % 6 in V_CARRIES


def x0_spec() -> ShiftSpec:
    forb = []
    for a, b in iproduct(ALPHABET, repeat=2):
        if not h_ok(a, b):
            forb.append(Pattern(2, (((0, 0), a), ((1, 0), b))))
        if not v_ok(a, b):
            forb.append(Pattern(2, (((0, 0), a), ((0, 1), b))))
    return ShiftSpec(2, ALPHABET, tuple(forb), meta=(("name", "x0"),))


def x0_extended(extra: int) -> ShiftSpec:
    """X0 with ``extra`` additional axes along which configurations are constant."""
    return extend_dims(x0_spec(), extra)


def g_x0(n: int, extra: int = 0) -> ShiftSpec:
    """Product of (extended) X0 with the n-point constant layer."""
    return g_layer(x0_extended(extra), n)


@dataclass(frozen=True)
class X0Square:
    a: int  # (0,0)
    b: int  # (1,0)
    c: int  # (0,1)
    d: int  # (1,1)

    def valid(self) -> bool:
        return h_ok(self.a, self.b) and v_ok(self.a, self.c) and h_ok(self.c, self.d) and v_ok(self.b, self.d)

    def as_grid(self) -> Grid:
        return ((self.a, self.b), (self.c, self.d))


def all_valid_squares() -> list[X0Square]:
    """Brute force over all 6^4 candidates."""
    return [sq for sq in (X0Square(*t) for t in iproduct(ALPHABET, repeat=4)) if sq.valid()]


def square_from_corners(k: int, l: int) -> X0Square:
    if k not in ALPHABET or l not in ALPHABET:
        raise ValueError("corners must lie in 0..5")
    found = [X0Square(k, b, c, l) for b in ALPHABET for c in ALPHABET if X0Square(k, b, c, l).valid()]
    if len(found) != 1:
        raise DefectError(f"corners ({k},{l}) admit {len(found)} squares")
    return found[0]


def corner_counts() -> dict[tuple[int, int], int]:
    counts = Counter((sq.a, sq.d) for sq in all_valid_squares())
    return {(k, l): counts.get((k, l), 0) for k in ALPHABET for l in ALPHABET}


# --- fillings of squares --------------------------------------------------

def _fillings(m: int, diagonal: Sequence[int] | None = None, limit: int | None = None) -> list[Grid]:
    """Locally admissible fillings of [0,m-1]^2, optionally with a prescribed diagonal."""
    grid = [[0] * m for _ in range(m)]
    out: list[Grid] = []
    cells = [(x, y) for y in range(m) for x in range(m)]

    def walk(i):
        if limit is not None and len(out) >= limit:
            return
        if i == len(cells):
            out.append(tuple(tuple(r) for r in grid))
            return
        x, y = cells[i]
        choices = (diagonal[x],) if diagonal is not None and x == y else ALPHABET
        for s in choices:
            if x > 0 and not h_ok(grid[y][x - 1], s):
                continue
            if y > 0 and not v_ok(grid[y - 1][x], s):
                continue
            grid[y][x] = s
            walk(i + 1)

    walk(0)
    return out


def diagonal_of(grid: Grid) -> tuple[int, ...]:
    return tuple(grid[n][n] for n in range(len(grid)))


@dataclass(frozen=True)
class DeterminismReport:
    m: int
    fillings: int
    counts: tuple[tuple[tuple[int, ...], int], ...]  # every diagonal word with its filling count

    @property
    def unique(self) -> int:
        return sum(1 for _, c in self.counts if c == 1)

    @property
    def exceptional(self) -> list[tuple[tuple[int, ...], int]]:
        return [(w, c) for w, c in self.counts if c != 1]

    @property
    def ok(self) -> bool:
        return not self.exceptional

    def lines(self) -> list[str]:
        out = [f"determinism m {self.m} words {len(self.counts)} unique {self.unique} fillings {self.fillings}"]
        for w, c in self.exceptional:
            out.append(f"exception {''.join(map(str, w))} fillings {c}")
        return out

    def summary(self) -> str:
        return f"m={self.m}: {self.unique}/{len(self.counts)} unique"


def verify_diagonal_determinism(m: int, cap: int = DEFAULT_CAP) -> DeterminismReport:
    if not 1 <= m <= cap:
        raise ValueError(f"m must lie in 1..{cap}")
    counts = Counter(diagonal_of(g) for g in _fillings(m))
    words = tuple((w, counts.get(w, 0)) for w in iproduct(ALPHABET, repeat=m))
    return DeterminismReport(m, sum(counts.values()), words)


def lambda_decode(digits: Sequence[int]) -> Fraction:
    """Sum of d_n 6^-(n+1): the truncated base-6 value of a diagonal word."""
    if not digits:
        raise ValueError("empty diagonal word")
    if any(d not in ALPHABET for d in digits):
        raise ValueError("digits must lie in 0..5")
    return sum((Fraction(d, 6 ** (n + 1)) for n, d in enumerate(digits)), Fraction(0))


@dataclass(frozen=True)
class Encoding:
    digits: tuple[int, ...]
    grid: Grid
    unique: bool

    def render(self) -> str:
        # north row first
        return "\n".join(" ".join(map(str, row)) for row in reversed(self.grid))


def lambda_encode(digits: Sequence[int], cap: int = DEFAULT_CAP) -> Encoding:
    digits = tuple(digits)
    if not digits:
        raise ValueError("empty diagonal word")
    if len(digits) > cap:
        raise ValueError(f"word longer than the cap {cap}")
    if any(d not in ALPHABET for d in digits):
        raise ValueError("digits must lie in 0..5")
    found = _fillings(len(digits), digits, limit=2)
    if not found:
        raise NotInLanguage(f"diagonal {digits} has no admissible filling")
    return Encoding(digits, found[0], len(found) == 1)


def _circle_gap(x: Fraction, y: Fraction) -> Fraction:
    d = (x - y) % 1
    return min(d, 1 - d)


@dataclass(frozen=True)
class CompatibilityReport:
    m: int
    patches: int
    bound: Fraction
    worst_x2: Fraction
    worst_x3: Fraction

    @property
    def ok(self) -> bool:
        return self.worst_x2 < self.bound and self.worst_x3 < self.bound

    def lines(self) -> list[str]:
        return [
            f"compat m {self.m} patches {self.patches} bound 6^-{self.m}",
            f"shift e1 vs x2 worst {self.worst_x2} {'ok' if self.worst_x2 < self.bound else 'FAIL'}",
            f"shift e2 vs x3 worst {self.worst_x3} {'ok' if self.worst_x3 < self.bound else 'FAIL'}",
        ]


def multiplication_compatibility_check(m: int, cap: int = DEFAULT_CAP) -> CompatibilityReport:
    """Compare the diagonals of shifted (m+1)-patches with x2 and x3 of the original diagonal.

    Truncation keeps each decoded value within 6^-len below the infinite one, so
    the circle gap stays strictly below 6^-m whenever the relations hold exactly.
    """
    if not 1 <= m <= cap:
        raise ValueError(f"m must lie in 1..{cap}")
    worst2 = worst3 = Fraction(0)
    grids = _fillings(m + 1)
    for g in grids:
        base = lambda_decode(diagonal_of(g))
        right = lambda_decode([g[n][n + 1] for n in range(m)])
        up = lambda_decode([g[n + 1][n] for n in range(m)])
        worst2 = max(worst2, _circle_gap(right, 2 * base))
        worst3 = max(worst3, _circle_gap(up, 3 * base))
    return CompatibilityReport(m, len(grids), Fraction(1, 6**m), worst2, worst3)
