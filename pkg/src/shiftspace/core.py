"""Patterns, windows and shift-of-finite-type descriptors.

Everything in this module is an immutable value.  A :class:`ShiftSpec` is the
pair (alphabet, forbidden patterns); the constructors at the bottom build new
specs out of old ones (products, disjoint unions, constant layers, extra
constant dimensions).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Coord = tuple[int, ...]


class SpecError(ValueError):
    """Malformed spec text or inconsistent spec contents."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class DimensionError(SpecError):
    pass


class AlphabetError(SpecError):
    pass


@dataclass(frozen=True, order=True)
class Pattern:
    """A finite map from lattice points to integer symbols.

    ``cells`` is kept sorted by coordinate so equal patterns compare equal.
    """

    dim: int
    cells: tuple[tuple[Coord, int], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"dimension must be positive, got {self.dim}")
        seen = {}
        for c, s in self.cells:
            if len(c) != self.dim:
                raise DimensionError(f"coordinate {c} does not have dimension {self.dim}")
            if c in seen and seen[c] != s:
                raise SpecError(f"two symbols at coordinate {c}")
            seen[c] = s
        object.__setattr__(self, "cells", tuple(sorted((tuple(c), int(s)) for c, s in seen.items())))

    @classmethod
    def from_dict(cls, mapping: Mapping[Sequence[int], int], dim: int | None = None) -> "Pattern":
        items = [(tuple(int(v) for v in c), s) for c, s in mapping.items()]
        if dim is None:
            if not items:
                raise DimensionError("cannot infer the dimension of an empty pattern")
            dim = len(items[0][0])
        return cls(dim, tuple(items))

    @classmethod
    def word(cls, symbols: Sequence[int], start: int = 0) -> "Pattern":
        """1D pattern reading ``symbols`` from position ``start``."""
        return cls(1, tuple(((start + k,), s) for k, s in enumerate(symbols)))

    @classmethod
    def empty(cls, dim: int) -> "Pattern":
        return cls(dim, ())

    def as_dict(self) -> dict[Coord, int]:
        return dict(self.cells)

    @property
    def support(self) -> tuple[Coord, ...]:
        return tuple(c for c, _ in self.cells)

    @property
    def symbols(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.cells)

    def __len__(self):
        return len(self.cells)

    def canonical(self) -> "Pattern":
        """Translate so that the lexicographically smallest coordinate is the origin."""
        if not self.cells:
            return self
        return translate(self, self.cells[0][0])

    def restrict(self, coords: Iterable[Coord]) -> "Pattern":
        d = self.as_dict()
        return Pattern(self.dim, tuple((c, d[c]) for c in coords))


def _check_dim(a: int, b: int):
    if a != b:
        raise DimensionError(f"dimension mismatch: {a} != {b}")


def translate(p: Pattern, u: Sequence[int]) -> Pattern:
    """Shift action: the result read at ``w`` is ``p`` read at ``w + u``."""
    _check_dim(p.dim, len(u))
    return Pattern(p.dim, tuple((tuple(a - b for a, b in zip(c, u)), s) for c, s in p.cells))


def appears_in(p: Pattern, q: Pattern) -> bool:
    """True when some translate of ``p`` occurs inside ``q``."""
    _check_dim(p.dim, q.dim)
    if not p.cells:
        return True
    qd = q.as_dict()
    anchor, sym = p.cells[0]
    for c, s in q.cells:
        if s != sym:
            continue
        off = tuple(a - b for a, b in zip(c, anchor))
        if all(qd.get(tuple(x + o for x, o in zip(v, off))) == t for v, t in p.cells):
            return True
    return False


@dataclass(frozen=True)
class Window:
    """A finite set of lattice points, stored sorted."""

    dim: int
    coords: tuple[Coord, ...]
    kind: str = field(default="explicit", compare=False)

    def __post_init__(self):
        for c in self.coords:
            if len(c) != self.dim:
                raise DimensionError(f"coordinate {c} does not have dimension {self.dim}")
        object.__setattr__(self, "coords", tuple(sorted(set(map(tuple, self.coords)))))

    @classmethod
    def centered(cls, n: int, dim: int) -> "Window":
        """The box [-n, n]^d."""
        return cls(dim, tuple(itertools.product(range(-n, n + 1), repeat=dim)), f"centered({n})")

    @classmethod
    def corner(cls, n: int, dim: int) -> "Window":
        """The box [0, n-1]^d."""
        return cls(dim, tuple(itertools.product(range(n), repeat=dim)), f"corner({n})")

    @classmethod
    def interval(cls, lo: int, hi: int) -> "Window":
        return cls(1, tuple((k,) for k in range(lo, hi + 1)), f"[{lo},{hi}]")

    @classmethod
    def box(cls, lows: Sequence[int], highs: Sequence[int]) -> "Window":
        ranges = [range(a, b + 1) for a, b in zip(lows, highs)]
        return cls(len(lows), tuple(itertools.product(*ranges)), f"box({tuple(lows)},{tuple(highs)})")

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def inflate(self, margin: int) -> "Window":
        if margin == 0:
            return self
        offs = list(itertools.product(range(-margin, margin + 1), repeat=self.dim))
        pts = {tuple(a + b for a, b in zip(c, o)) for c in self.coords for o in offs}
        return Window(self.dim, tuple(pts), f"{self.kind}+{margin}")

    def shifted(self, u: Sequence[int]) -> "Window":
        return Window(self.dim, tuple(tuple(a + b for a, b in zip(c, u)) for c in self.coords), self.kind)


@dataclass(frozen=True)
class ShiftSpec:
    """A shift of finite type: dimension, finite alphabet of ints, forbidden patterns.

    Forbidden patterns are canonically translated, deduplicated and sorted on
    construction.  ``meta`` carries free-form provenance (relabelings, pairing
    conventions) and does not take part in equality.
    """

    dim: int
    alphabet: tuple[int, ...]
    forbidden: tuple[Pattern, ...] = ()
    meta: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"dimension must be positive, got {self.dim}")
        alphabet = tuple(sorted(set(int(a) for a in self.alphabet)))
        if not alphabet:
            raise AlphabetError("alphabet must be nonempty")
        allowed = set(alphabet)
        canon = set()
        for idx, p in enumerate(self.forbidden):
            if p.dim != self.dim:
                raise DimensionError(f"forbidden pattern {idx} has dimension {p.dim}, spec has {self.dim}")
            bad = [s for s in p.symbols if s not in allowed]
            if bad:
                raise AlphabetError(f"forbidden pattern {idx} uses symbol {bad[0]} outside the alphabet")
            if not p.cells:
                raise SpecError(f"forbidden pattern {idx} is empty")
            canon.add(p.canonical())
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "forbidden", tuple(sorted(canon, key=_pattern_key)))
        object.__setattr__(self, "meta", tuple(self.meta))

    def meta_dict(self) -> dict[str, str]:
        return dict(self.meta)

    def with_meta(self, **items: str) -> "ShiftSpec":
        meta = dict(self.meta)
        meta.update({k: str(v) for k, v in items.items()})
        return ShiftSpec(self.dim, self.alphabet, self.forbidden, tuple(sorted(meta.items())))

    @property
    def diameter(self) -> int:
        """Largest side of the bounding box of a forbidden pattern (0 with no patterns)."""
        best = 0
        for p in self.forbidden:
            for k in range(self.dim):
                vals = [c[k] for c in p.support]
                best = max(best, max(vals) - min(vals) + 1)
        return best


def _pattern_key(p: Pattern):
    return (len(p.cells), p.cells)


def full_shift(alphabet: Iterable[int], dim: int = 1) -> ShiftSpec:
    return ShiftSpec(dim, tuple(alphabet))


def forbid_words(alphabet: Iterable[int], words: Iterable[Sequence[int]]) -> ShiftSpec:
    """1D spec forbidding the given words."""
    return ShiftSpec(1, tuple(alphabet), tuple(Pattern.word(w) for w in words))


def golden_mean() -> ShiftSpec:
    return forbid_words((0, 1), [(1, 1)])


def pair_code(alpha: Sequence[int], beta: Sequence[int]) -> dict[tuple[int, int], int]:
    """Injective re-encoding of alpha x beta into the integers (index(a)*|beta| + index(b))."""
    alpha, beta = sorted(alpha), sorted(beta)
    return {(a, b): i * len(beta) + j for i, a in enumerate(alpha) for j, b in enumerate(beta)}


def _lift(p: Pattern, other: Sequence[int], code, first: bool) -> list[Pattern]:
    out = []
    for fill in itertools.product(other, repeat=len(p.cells)):
        cells = []
        for (c, s), t in zip(p.cells, fill):
            cells.append((c, code[(s, t)] if first else code[(t, s)]))
        out.append(Pattern(p.dim, tuple(cells)))
    return out


def product(a: ShiftSpec, b: ShiftSpec) -> ShiftSpec:
    """The product shift, re-encoded over ``pair_code(a.alphabet, b.alphabet)``."""
    _check_dim(a.dim, b.dim)
    code = pair_code(a.alphabet, b.alphabet)
    forb = []
    for p in a.forbidden:
        forb.extend(_lift(p, b.alphabet, code, first=True))
    for p in b.forbidden:
        forb.extend(_lift(p, a.alphabet, code, first=False))
    return ShiftSpec(
        a.dim, tuple(code.values()), tuple(forb),
        meta=(("pairing", f"index(a)*{len(b.alphabet)}+index(b)"),),
    )


def unit_vector(k: int, dim: int) -> Coord:
    return tuple(1 if i == k else 0 for i in range(dim))


def _mixing_pairs(left: Iterable[int], right: Iterable[int], dim: int, axes: Iterable[int]) -> list[Pattern]:
    origin = (0,) * dim
    out = []
    for k in axes:
        e = unit_vector(k, dim)
        for s in left:
            for t in right:
                out.append(Pattern(dim, ((origin, s), (e, t))))
    return out


def disjoint_union(a: ShiftSpec, b: ShiftSpec) -> ShiftSpec:
    """Union of ``a`` and a relabeled copy of ``b`` whose configurations never mix."""
    _check_dim(a.dim, b.dim)
    offset = max(a.alphabet) + 1 - min(b.alphabet)
    relabel = {s: s + offset for s in b.alphabet}
    b_alpha = tuple(relabel.values())
    forb = list(a.forbidden)
    for p in b.forbidden:
        forb.append(Pattern(p.dim, tuple((c, relabel[s]) for c, s in p.cells)))
    axes = range(a.dim)
    forb += _mixing_pairs(a.alphabet, b_alpha, a.dim, axes)
    forb += _mixing_pairs(b_alpha, a.alphabet, a.dim, axes)
    return ShiftSpec(a.dim, a.alphabet + b_alpha, tuple(forb), meta=(("union_offset", str(offset)),))


def _constancy_pairs(alphabet: Sequence[int], dim: int, axes: Iterable[int]) -> list[Pattern]:
    origin = (0,) * dim
    out = []
    for k in axes:
        e = unit_vector(k, dim)
        for s in alphabet:
            for t in alphabet:
                if s != t:
                    out.append(Pattern(dim, ((origin, s), (e, t))))
    return out


def extend_dims(a: ShiftSpec, extra: int) -> ShiftSpec:
    """Add ``extra`` dimensions along which every configuration is constant."""
    if extra < 0:
        raise ValueError("extra must be nonnegative")
    if extra == 0:
        return a
    dim = a.dim + extra
    pad = (0,) * extra
    forb = [Pattern(dim, tuple((c + pad, s) for c, s in p.cells)) for p in a.forbidden]
    forb += _constancy_pairs(a.alphabet, dim, range(a.dim, dim))
    return ShiftSpec(dim, a.alphabet, tuple(forb), a.meta)


def constant_layer(n: int, dim: int = 1) -> ShiftSpec:
    """The shift of the n constant configurations over the alphabet 1..n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    alpha = tuple(range(1, n + 1))
    return ShiftSpec(dim, alpha, tuple(_constancy_pairs(alpha, dim, range(dim))))


def g_layer(spec: ShiftSpec, n: int) -> ShiftSpec:
    """Product with the n-point constant layer."""
    return product(spec, constant_layer(n, spec.dim))


# --- text format ---------------------------------------------------------

HEADER = "shift v1"


def serialize_spec(spec: ShiftSpec) -> str:
    lines = [HEADER, f"dim {spec.dim}", "alphabet " + " ".join(str(s) for s in spec.alphabet)]
    for key, value in spec.meta:
        lines.append(f"# meta {key}={value}")
    for p in spec.forbidden:
        lines.append("forbid")
        for c, s in p.cells:
            lines.append(" ".join(str(v) for v in c) + f" {s}")
        lines.append("end")
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int, line: str) -> list[int]:
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise SpecError(f"expected an integer, got {tok!r}", lineno, line.find(tok) + 1) from None
    return out


def parse_spec(text: str) -> ShiftSpec:
    meta = []
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("# meta "):
            key, _, value = line[len("# meta "):].partition("=")
            meta.append((key.strip(), value.strip()))
            continue
        if not line or line.startswith("#"):
            continue
        body.append((lineno, line))
    if not body or body[0][1] != HEADER:
        where = body[0][0] if body else 1
        raise SpecError(f"expected header {HEADER!r}", where, 1)
    if len(body) < 3:
        raise SpecError("missing dim/alphabet lines", body[-1][0], 1)

    lineno, line = body[1]
    parts = line.split()
    if parts[0] != "dim" or len(parts) != 2:
        raise SpecError("expected 'dim <d>'", lineno, 1)
    dim = _ints(parts[1:], lineno, line)[0]
    if dim < 1:
        raise DimensionError("dimension must be positive", lineno, 5)

    lineno, line = body[2]
    parts = line.split()
    if parts[0] != "alphabet" or len(parts) < 2:
        raise SpecError("expected 'alphabet <s1> <s2> ...'", lineno, 1)
    alphabet = _ints(parts[1:], lineno, line)
    allowed = set(alphabet)

    patterns = []
    cells: list[tuple[Coord, int]] | None = None
    start = 0
    for lineno, line in body[3:]:
        if line == "forbid":
            if cells is not None:
                raise SpecError("nested 'forbid'", lineno, 1)
            cells, start = [], lineno
        elif line == "end":
            if cells is None:
                raise SpecError("'end' without 'forbid'", lineno, 1)
            if not cells:
                raise SpecError("empty forbidden pattern", lineno, 1)
            patterns.append(Pattern(dim, tuple(cells)))
            cells = None
        else:
            if cells is None:
                raise SpecError(f"unexpected line {line!r}", lineno, 1)
            vals = _ints(line.split(), lineno, line)
            if len(vals) != dim + 1:
                raise DimensionError(f"cell line has {len(vals) - 1} coordinates, expected {dim}", lineno, 1)
            if vals[-1] not in allowed:
                col = line.rfind(line.split()[-1]) + 1
                raise AlphabetError(
                    f"forbidden pattern {len(patterns)} uses symbol {vals[-1]} outside the alphabet",
                    lineno, col)
            cells.append((tuple(vals[:-1]), vals[-1]))
    if cells is not None:
        raise SpecError("unterminated 'forbid' block", start, 1)
    return ShiftSpec(dim, tuple(alphabet), tuple(patterns), tuple(sorted(meta)))


def load_spec(path) -> ShiftSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def save_spec(spec: ShiftSpec, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_spec(spec))
