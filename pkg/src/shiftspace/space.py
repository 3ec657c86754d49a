"""Finite families of shifts at a fixed resolution: distances, derivatives, ladders.

Two members are neighbours at resolution N when their centered-box languages
agree on every radius up to N, i.e. their distance is strictly below 2^-N.
Isolation therefore always depends on N, and every report carries it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .core import DimensionError, ShiftSpec, forbid_words, full_shift, load_spec, Pattern
from .lang import DEFAULT_BUDGET, ResolutionDistance, resolution_distance
from .times23 import g_x0, x0_spec


@dataclass(frozen=True)
class ShiftFamily:
    names: tuple[str, ...]
    members: tuple[ShiftSpec, ...]
    resolution: int
    margin: int = 0
    budget: int = field(default=DEFAULT_BUDGET, compare=False)

    def __post_init__(self):
        if len(self.names) != len(self.members):
            raise ValueError("names and members differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("member names must be unique")
        if self.resolution < 0 or self.margin < 0:
            raise ValueError("resolution and margin must be nonnegative")
        if len({m.dim for m in self.members}) > 1:
            raise DimensionError("all members must share one dimension")

    @classmethod
    def of(cls, members: Mapping[str, ShiftSpec], resolution: int, margin: int = 0) -> "ShiftFamily":
        return cls(tuple(members), tuple(members.values()), resolution, margin)

    def __len__(self):
        return len(self.names)

    def spec(self, name: str) -> ShiftSpec:
        return self.members[self.names.index(name)]

    def at(self, resolution: int) -> "ShiftFamily":
        return ShiftFamily(self.names, self.members, resolution, self.margin, self.budget)

    def without(self, name: str) -> "ShiftFamily":
        keep = [i for i, n in enumerate(self.names) if n != name]
        return ShiftFamily(tuple(self.names[i] for i in keep), tuple(self.members[i] for i in keep),
                           self.resolution, self.margin, self.budget)


def distance_matrix(fam: ShiftFamily, workers: int = 1) -> list[list[ResolutionDistance]]:
    n = len(fam)
    out: list[list] = [[None] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = ResolutionDistance(None, fam.resolution, fam.margin, "same member")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def one(ij):
        i, j = ij
        return resolution_distance(fam.members[i], fam.members[j], fam.resolution, fam.margin, fam.budget)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(one, pairs))
    else:
        results = [one(p) for p in pairs]
    for (i, j), d in zip(pairs, results):
        out[i][j] = out[j][i] = d
    return out


def format_matrix(fam: ShiftFamily, mat) -> str:
    width = max([len(n) for n in fam.names] + [10])
    head = " " * width + " " + " ".join(n.rjust(width) for n in fam.names)
    rows = [head]
    for name, row in zip(fam.names, mat):
        rows.append(name.ljust(width) + " " + " ".join(str(d).rjust(width) for d in row))
    return "\n".join(rows)


def _neighbours(fam: ShiftFamily, level: Iterable[str], mat) -> dict[str, set[str]]:
    idx = {n: i for i, n in enumerate(fam.names)}
    level = list(level)
    return {a: {b for b in level if b != a and mat[idx[a]][idx[b]].beyond} for a in level}


def derived_set(fam: ShiftFamily, level_members: Iterable[str], mat=None) -> frozenset[str]:
    """Members of the level with some other level member closer than 2^-N."""
    level = set(level_members)
    unknown = level - set(fam.names)
    if unknown:
        raise KeyError(f"not in the family: {sorted(unknown)}")
    if mat is None:
        mat = distance_matrix(fam)
    return frozenset(a for a, nb in _neighbours(fam, level, mat).items() if nb)


@dataclass(frozen=True)
class DerivationTrace:
    resolution: int
    levels: tuple[frozenset[str], ...]
    rank: int

    @property
    def residue(self) -> frozenset[str]:
        return self.levels[-1]

    def lines(self) -> list[str]:
        out = [f"level {i} {' '.join(sorted(lv)) or '-'}" for i, lv in enumerate(self.levels)]
        out.append(f"rank {self.rank} residue {' '.join(sorted(self.residue)) or '-'} resolution {self.resolution}")
        return out


def cb_ladder(fam: ShiftFamily, mat=None) -> DerivationTrace:
    if mat is None:
        mat = distance_matrix(fam)
    levels = [frozenset(fam.names)]
    while True:
        nxt = derived_set(fam, levels[-1], mat)
        if nxt == levels[-1]:
            break
        levels.append(nxt)
    # levels[-1] is the first fixed point
    return DerivationTrace(fam.resolution, tuple(levels), len(levels) - 1)


# --- presets ------------------------------------------------------------------

def unary_ladder(ks: Iterable[int], resolution: int = 3) -> ShiftFamily:
    members = {f"X{k}": forbid_words((0, 1), [(1,) * k]) for k in ks}
    members["full"] = full_shift((0, 1))
    return ShiftFamily.of(members, resolution)


def constant_block(n: int, symbol: int, dim: int = 1) -> Pattern:
    import itertools
    return Pattern(dim, tuple((c, symbol) for c in itertools.product(range(-n, n + 1), repeat=dim)))


def fullshift_approximants(n_max: int, alphabet=(0, 1), dim: int = 1) -> list[ShiftSpec]:
    """X_{p_n} for n = 0..n_max, p_n the constant block of the first symbol on B_n."""
    return [ShiftSpec(dim, tuple(alphabet), (constant_block(n, alphabet[0], dim),)) for n in range(n_max + 1)]


def build_ladder_examples() -> dict[str, tuple[ShiftFamily, str]]:
    """Preset families with the trace each one is expected to produce."""
    unary = unary_ladder((2, 3, 5, 9), 3)
    approx = {f"P{n}": s for n, s in enumerate(fullshift_approximants(5))}
    approx["full"] = full_shift((0, 1))
    g = {f"G{n}": g_x0(n) for n in (1, 2, 3)}
    g["X0"] = x0_spec()
    return {
        "unary-blocks": (unary, "rank 1, residue {X9, full}"),
        "fullshift-approx": (ShiftFamily.of(approx, 3),
                             "rank 1, residue {P4, P5, full}: the tail agrees with full beyond radius 3"),
        "g-ladder": (ShiftFamily.of(g, 1),
                     "rank 1, residue {G1, X0}: G1 re-encodes onto X0's alphabet; the other pairs differ in alphabet"),
    }


# --- family files ---------------------------------------------------------------

def parse_family(text: str, base: Path | None = None) -> ShiftFamily:
    base = base or Path(".")
    members: dict[str, ShiftSpec] = {}
    resolution, margin = None, 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "member" and len(tok) == 3:
                if tok[1] in members:
                    raise ValueError(f"duplicate member {tok[1]}")
                path = Path(tok[2])
                members[tok[1]] = load_spec(path if path.is_absolute() else base / path)
            elif tok[0] == "resolution" and len(tok) == 2:
                resolution = int(tok[1])
            elif tok[0] == "margin" and len(tok) == 2:
                margin = int(tok[1])
            else:
                raise ValueError(f"unrecognised line {line!r}")
        except (ValueError, OSError) as exc:
            raise ValueError(f"family line {lineno}: {exc}") from exc
    if resolution is None:
        raise ValueError("family file lacks a resolution line")
    if not members:
        raise ValueError("family file lists no members")
    return ShiftFamily.of(members, resolution, margin)


def load_family(path) -> ShiftFamily:
    path = Path(path)
    return parse_family(path.read_text(), path.parent)
