"""Window languages, the resolution distance between SFTs, convergence reports.

A window language here is the set of patterns on a window that extend to the
window inflated by a margin without any forbidden occurrence.  In 1D this is
exact once the margin is large enough; in 2D it is an over-approximation of the
true language and reports say so.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import AlphabetError, DimensionError, Pattern, ShiftSpec, Window

DEFAULT_BUDGET = 10**7


class BudgetExhausted(RuntimeError):
    """The search hit its node budget before reaching a verdict."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"budget exhausted after {budget} assignments")


def _groups(spec: ShiftSpec):
    """Forbidden patterns grouped by (canonical) support: {offsets: set of symbol tuples}."""
    out: dict[tuple, set] = {}
    for p in spec.forbidden:
        out.setdefault(p.support, set()).add(p.symbols)
    return out


def _compile(spec: ShiftSpec, order: Sequence[tuple]):
    """For every position in ``order``, the placements whose last cell (in order) it is."""
    pos = {c: i for i, c in enumerate(order)}
    checks: list[list] = [[] for _ in order]
    for shape, forb in _groups(spec).items():
        for c in order:
            idxs = []
            for off in shape:
                j = pos.get(tuple(a + b for a, b in zip(c, off)))
                if j is None:
                    break
                idxs.append(j)
            else:
                checks[max(idxs)].append((tuple(idxs), frozenset(forb)))
    return checks


class _Search:
    """Depth-first assignment in a fixed cell order with forbidden-pattern checks."""

    def __init__(self, spec: ShiftSpec, order: Sequence[tuple], budget: int):
        self.order = list(order)
        self.checks = _compile(spec, self.order)
        self.alphabet = spec.alphabet
        self.vals: list = [None] * len(self.order)
        self.budget = budget
        self.nodes = 0

    def _ok(self, i: int) -> bool:
        vals = self.vals
        for idxs, forb in self.checks[i]:
            if tuple(vals[j] for j in idxs) in forb:
                return False
        return True

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.budget)

    def extend(self, i: int) -> bool:
        """Can positions i.. be filled given positions < i?"""
        if i == len(self.order):
            return True
        for a in self.alphabet:
            self._tick()
            self.vals[i] = a
            if self._ok(i) and self.extend(i + 1):
                return True
        self.vals[i] = None
        return False

    def enumerate(self, n_enum: int, fixed: dict | None = None) -> list[tuple]:
        """All assignments of the first ``n_enum`` positions that extend to the rest."""
        out = []
        fixed = fixed or {}

        def walk(i):
            if i == n_enum:
                if self.extend(i):
                    out.append(tuple(self.vals[:n_enum]))
                return
            for a in fixed.get(i, self.alphabet):
                self._tick()
                self.vals[i] = a
                if self._ok(i):
                    walk(i + 1)
            self.vals[i] = None

        walk(0)
        return out


def _ensure_recursion(depth: int):
    if sys.getrecursionlimit() < depth + 200:
        sys.setrecursionlimit(depth + 200)


@dataclass(frozen=True)
class WindowLanguage:
    """Margin-certified patterns on a window, sorted lexicographically by symbols."""

    spec: ShiftSpec = field(repr=False)
    window: Window
    margin: int
    words: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.patterns)

    def __contains__(self, p: Pattern):
        if set(p.support) != set(self.window.coords):
            return False
        d = p.as_dict()
        return tuple(d[c] for c in self.window.coords) in set(self.words)

    @property
    def patterns(self) -> list[Pattern]:
        coords = self.window.coords
        return [Pattern(self.window.dim, tuple(zip(coords, w))) for w in self.words]

    @property
    def label(self) -> str:
        if self.spec.dim == 1:
            return f"margin-{self.margin} local admissibility"
        return f"margin-{self.margin} local admissibility (over-approximation of the {self.spec.dim}D language)"

    def same_words(self, other: "WindowLanguage") -> bool:
        return self.words == other.words


@lru_cache(maxsize=4096)
def _language_words(spec: ShiftSpec, window: Window, margin: int, budget: int):
    inner = list(window.coords)
    inner_set = set(inner)
    outer = [c for c in window.inflate(margin).coords if c not in inner_set]
    _ensure_recursion(len(inner) + len(outer))
    search = _Search(spec, inner + outer, budget)
    return tuple(search.enumerate(len(inner)))


def window_language(spec: ShiftSpec, window: Window, margin: int = 0,
                    budget: int = DEFAULT_BUDGET) -> WindowLanguage:
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    if window.dim != spec.dim:
        raise DimensionError(f"window has dimension {window.dim}, spec has {spec.dim}")
    return WindowLanguage(spec, window, margin, _language_words(spec, window, margin, budget))


def language_size(spec: ShiftSpec, window: Window, margin: int = 0, budget: int = DEFAULT_BUDGET) -> int:
    return len(window_language(spec, window, margin, budget))


def is_locally_admissible(spec: ShiftSpec, p: Pattern, margin: int = 0,
                          budget: int = DEFAULT_BUDGET) -> bool:
    if p.dim != spec.dim:
        raise DimensionError(f"pattern has dimension {p.dim}, spec has {spec.dim}")
    allowed = set(spec.alphabet)
    for s in p.symbols:
        if s not in allowed:
            raise AlphabetError(f"symbol {s} is outside the alphabet")
    if not p.cells:
        return True
    inner = list(p.support)
    inner_set = set(inner)
    win = Window(p.dim, tuple(inner))
    outer = [c for c in win.inflate(margin).coords if c not in inner_set]
    _ensure_recursion(len(inner) + len(outer))
    search = _Search(spec, inner + outer, budget)
    fixed = {i: (s,) for i, s in enumerate(p.symbols)}
    return bool(search.enumerate(len(inner), fixed))


def stabilization_margin(spec: ShiftSpec, window: Window, max_margin: int | None = None,
                         budget: int = DEFAULT_BUDGET) -> int | None:
    """Smallest m with language(m) == language(m+1), or None if not found by ``max_margin``."""
    if max_margin is None:
        max_margin = 2 * (spec.diameter + max(len(window), 1))
    prev = window_language(spec, window, 0, budget)
    for m in range(max_margin):
        cur = window_language(spec, window, m + 1, budget)
        if cur.words == prev.words:
            return m
        prev = cur
    return None


@dataclass(frozen=True)
class ResolutionDistance:
    """First radius where centered-box languages differ, or None ("beyond N")."""

    radius: int | None
    resolution: int
    margin: int = 0
    reason: str = ""

    @property
    def value(self) -> Fraction:
        if self.radius is None:
            return Fraction(0)
        return Fraction(1, 2**self.radius)

    @property
    def beyond(self) -> bool:
        return self.radius is None

    def __str__(self):
        if self.radius is None:
            return f"beyond {self.resolution}"
        return f"2^-{self.radius}"

    def __lt__(self, other: "ResolutionDistance"):
        return self.value < other.value

    def __le__(self, other: "ResolutionDistance"):
        return self.value <= other.value


def resolution_distance(a: ShiftSpec, b: ShiftSpec, N: int, margin: int = 0,
                        budget: int = DEFAULT_BUDGET) -> ResolutionDistance:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} != {b.dim}")
    if N < 0:
        raise ValueError("N must be nonnegative")
    if a.alphabet != b.alphabet:
        return ResolutionDistance(0, N, margin, "alphabets differ")
    for s in range(N + 1):
        w = Window.centered(s, a.dim)
        if window_language(a, w, margin, budget).words != window_language(b, w, margin, budget).words:
            return ResolutionDistance(s, N, margin, f"languages differ on the radius-{s} box")
    return ResolutionDistance(None, N, margin, f"languages agree up to radius {N}")


@dataclass(frozen=True)
class ConvergenceReport:
    resolution: int
    margin: int
    agree_from: tuple[int | None, ...]  # indexed by radius s = 0..N
    names: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return all(m is not None for m in self.agree_from)

    @property
    def verdict(self) -> str:
        if self.consistent:
            return f"consistent with convergence up to resolution {self.resolution}"
        return f"not consistent with convergence at resolution {self.resolution}"

    def lines(self) -> list[str]:
        return [f"radius {s} agree_from {'never' if m is None else m}" for s, m in enumerate(self.agree_from)]

    def table(self) -> str:
        rows = ["radius  agree_from"]
        for s, m in enumerate(self.agree_from):
            rows.append(f"{s:>6}  {'never within list' if m is None else m}")
        rows.append(f"verdict: {self.verdict} (margin {self.margin})")
        return "\n".join(rows)


def check_convergence(sequence: Sequence[ShiftSpec], limit: ShiftSpec, N: int, margin: int = 0,
                      budget: int = DEFAULT_BUDGET) -> ConvergenceReport:
    if not sequence:
        raise ValueError("empty sequence")
    for s in sequence:
        if s.dim != limit.dim:
            raise DimensionError("all specs must share the limit's dimension")
    agree = []
    for s in range(N + 1):
        w = Window.centered(s, limit.dim)
        target = window_language(limit, w, margin, budget).words
        ok = [x.alphabet == limit.alphabet and window_language(x, w, margin, budget).words == target
              for x in sequence]
        m = len(ok)
        while m > 0 and ok[m - 1]:
            m -= 1
        agree.append(m if m < len(ok) else None)
    return ConvergenceReport(N, margin, tuple(agree))
