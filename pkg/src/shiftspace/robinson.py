"""Robinson tiles, their local rules and the finite supertile hierarchy.

Tile-table legend
-----------------
Each side of a tile carries arrows at up to three positions, 1, 2 and 3,
meaning 0.3, 0.6 and 0.9 of the side length, measured left to right on the
top and bottom sides and bottom to top on the left and right sides.  Arrows on a
side either all point into the tile ("in") or all point out of it ("out").

At rotation 0, every arrow tile has its principal arrow(s) running from the
top side to the bottom side, and side arrows entering from left and right:

    shape  arrows  principal (top in / bottom out)  sides (left in / right in)
    A      3       {2}                              {2}
    B      5       {2}                              {1,2}
    C      4       {1,2}                            {2}
    D      4       {2,3}                            {2}
    E      6       {1,2}                            {1,2}
    F      6       {2,3}                            {1,2}

The corner tile at orientation sw sends arrows out of every side: top {1,2},
right {1,2}, left {2}, bottom {2}.  The orientations se, ne and nw are its
rotations by a quarter, half and three quarter turn counterclockwise.

Rotation r means r counterclockwise quarter turns.  One turn maps the top side
to the left side (same position), left to bottom (p -> 4-p), bottom to right
(same position) and right to top (p -> 4-p).

Bits: arrow tiles carry (i, j) in {0,1}^2; i is shared by horizontal
neighbours and j by vertical neighbours.  Corners carry a center bit (0 blue,
1 red) and the gray outer bit g; a corner takes part in bit transmission with
i = j = g.  The three corner variants are blue (0,0), red (1,0), red (1,1).

Tile ids: arrow tiles first, ordered by shape A..F, rotation 0..3, then
(i, j) in the order (0,0), (0,1), (1,0), (1,1) (ids 0..95); then corners
ordered by orientation sw, se, ne, nw and variant blue, red0, red1 (ids 96..107).

Patches are indexed cells[y][x] with y = 0 the southern row; text, ascii and
image outputs list rows from north to south.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import Pattern, ShiftSpec

SIDES = ("top", "right", "bottom", "left")
QUADRANTS = ("sw", "se", "ne", "nw")  # rotation index = position in this tuple
DEFAULT_ORDER_CAP = 6

_SHAPES = {
    # name: (arrows, principal positions, side positions)
    "A": (3, (2,), (2,)),
    "B": (5, (2,), (1, 2)),
    "C": (4, (1, 2), (2,)),
    "D": (4, (2, 3), (2,)),
    "E": (6, (1, 2), (1, 2)),
    "F": (6, (2, 3), (1, 2)),
}


class ConstructionError(RuntimeError):
    """The cross fill ran into a contradiction or an ambiguity."""

    def __init__(self, message: str, cell=None):
        self.cell = cell
        super().__init__(message if cell is None else f"{message} at cell {cell}")


def _rot_once(arms: dict) -> dict:
    def flip(side):
        d, ps = side
        return (d, frozenset(4 - p for p in ps))

    return {"left": arms["top"], "bottom": flip(arms["left"]), "right": arms["bottom"], "top": flip(arms["right"])}


def _rotate(arms: dict, r: int) -> dict:
    for _ in range(r % 4):
        arms = _rot_once(arms)
    return arms


def _base_arms(shape: str) -> dict:
    if shape == "K":
        return {"top": ("out", frozenset({1, 2})), "right": ("out", frozenset({1, 2})),
                "left": ("out", frozenset({2})), "bottom": ("out", frozenset({2}))}
    _, princ, side = _SHAPES[shape]
    return {"top": ("in", frozenset(princ)), "bottom": ("out", frozenset(princ)),
            "left": ("in", frozenset(side)), "right": ("in", frozenset(side))}


@dataclass(frozen=True)
class RobinsonTile:
    id: int
    shape: str  # "A".."F" for arrow tiles, "K" for corners
    rotation: int  # counterclockwise quarter turns
    i: int
    j: int
    color: str | None = None  # corners only: "blue" or "red"
    top: tuple = ()
    right: tuple = ()
    bottom: tuple = ()
    left: tuple = ()

    @property
    def is_corner(self) -> bool:
        return self.shape == "K"

    @property
    def is_blue(self) -> bool:
        return self.color == "blue"

    @property
    def is_red(self) -> bool:
        return self.color == "red"

    @property
    def arrows(self) -> int:
        return 0 if self.is_corner else _SHAPES[self.shape][0]

    @property
    def orientation(self) -> str | None:
        return QUADRANTS[self.rotation] if self.is_corner else None

    @property
    def gray(self) -> int | None:
        return self.i if self.is_corner else None

    def side(self, name: str) -> tuple:
        return getattr(self, name)

    @property
    def label(self) -> str:
        if self.is_corner:
            return f"{self.color}-{self.orientation}-g{self.i}"
        return f"{self.shape}{self.rotation * 90}-i{self.i}j{self.j}"


def _build_table() -> tuple[RobinsonTile, ...]:
    out = []
    for shape in "ABCDEF":
        for r in range(4):
            arms = _rotate(_base_arms(shape), r)
            for i, j in itertools.product((0, 1), repeat=2):
                out.append(RobinsonTile(len(out), shape, r, i, j, None,
                                        arms["top"], arms["right"], arms["bottom"], arms["left"]))
    for r in range(4):
        arms = _rotate(_base_arms("K"), r)
        for color, g in (("blue", 0), ("red", 0), ("red", 1)):
            out.append(RobinsonTile(len(out), "K", r, g, g, color,
                                    arms["top"], arms["right"], arms["bottom"], arms["left"]))
    return tuple(out)


TILES = _build_table()
N_TILES = len(TILES)


def tile_set() -> list[RobinsonTile]:
    return list(TILES)


def corner(orientation: str, color: str, gray: int = 0) -> RobinsonTile:
    r = QUADRANTS.index(orientation)
    for t in TILES:
        if t.is_corner and t.rotation == r and t.color == color and t.i == gray:
            return t
    raise ValueError(f"no {color} corner {orientation} with gray bit {gray}")


def arrow_tile(shape: str, rotation: int, i: int, j: int) -> RobinsonTile:
    for t in TILES:
        if t.shape == shape and t.rotation == rotation % 4 and t.i == i and t.j == j:
            return t
    raise ValueError("no such arrow tile")


# --- local rules ------------------------------------------------------------

def _sides_match(a: tuple, b: tuple) -> bool:
    (da, pa), (db, pb) = a, b
    if pa != pb:
        return False
    return not pa or da != db


def h_compatible(a: RobinsonTile, b: RobinsonTile) -> bool:
    """b may sit immediately right of a (rules 1 and 3)."""
    return _sides_match(a.right, b.left) and a.i == b.i


def v_compatible(a: RobinsonTile, b: RobinsonTile) -> bool:
    """b may sit immediately above a (rules 1 and 3)."""
    return _sides_match(a.top, b.bottom) and a.j == b.j


def rule4_ok(t: RobinsonTile) -> bool:
    return t.arrows < 5 or t.i != t.j


@lru_cache(maxsize=None)
def _compat_tables():
    h = [[h_compatible(a, b) for b in TILES] for a in TILES]
    v = [[v_compatible(a, b) for b in TILES] for a in TILES]
    return h, v


@dataclass(frozen=True)
class RobinsonPatch:
    width: int
    height: int
    cells: tuple[tuple[int | None, ...], ...]  # cells[y][x], tile ids, None = hole

    def __post_init__(self):
        if len(self.cells) != self.height or any(len(r) != self.width for r in self.cells):
            raise ValueError("patch is not rectangular")

    @classmethod
    def from_grid(cls, grid) -> "RobinsonPatch":
        rows = tuple(tuple(None if c is None else (c.id if isinstance(c, RobinsonTile) else int(c)) for c in r)
                     for r in grid)
        return cls(len(rows[0]) if rows else 0, len(rows), rows)

    @classmethod
    def empty(cls) -> "RobinsonPatch":
        return cls(0, 0, ())

    def tile(self, x: int, y: int) -> RobinsonTile | None:
        c = self.cells[y][x]
        return None if c is None else TILES[c]

    def sub(self, x0: int, y0: int, w: int, h: int) -> "RobinsonPatch":
        return RobinsonPatch(w, h, tuple(tuple(self.cells[y][x0:x0 + w]) for y in range(y0, y0 + h)))

    @property
    def holes(self) -> int:
        return sum(c is None for r in self.cells for c in r)

    def to_pattern(self) -> Pattern:
        return Pattern(2, tuple(((x, y), c) for y, r in enumerate(self.cells) for x, c in enumerate(r)
                                if c is not None))

    def to_text(self) -> str:
        lines = [f"robipatch v1 {self.width} {self.height}"]
        for r in reversed(self.cells):
            lines.append(" ".join("." if c is None else str(c) for c in r))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RobinsonPatch":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        head = lines[0].split() if lines else []
        if len(head) != 4 or head[:2] != ["robipatch", "v1"]:
            raise ValueError("expected header 'robipatch v1 <w> <h>'")
        w, h = int(head[2]), int(head[3])
        body = lines[1:]
        if len(body) != h:
            raise ValueError(f"expected {h} rows, found {len(body)}")
        rows = []
        for k, ln in enumerate(body):
            toks = ln.split()
            if len(toks) != w:
                raise ValueError(f"row {k + 1} has {len(toks)} cells, expected {w}")
            row = []
            for t in toks:
                if t == ".":
                    row.append(None)
                else:
                    v = int(t)
                    if not 0 <= v < N_TILES:
                        raise ValueError(f"tile id {v} out of range")
                    row.append(v)
            rows.append(tuple(row))
        return cls(w, h, tuple(reversed(rows)))


@dataclass(frozen=True)
class Violation:
    rule: int
    position: tuple[int, int]
    detail: str

    def __str__(self):
        return f"rule {self.rule} at {self.position}: {self.detail}"


def check_local_rules(patch: RobinsonPatch) -> list[Violation]:
    if patch.holes:
        raise ValueError("patch has holes")
    out = []
    W, H = patch.width, patch.height
    t = patch.tile
    for y in range(H):
        for x in range(W):
            a = t(x, y)
            if not rule4_ok(a):
                out.append(Violation(4, (x, y), f"{a.label} needs i != j"))
            if x + 1 < W:
                b = t(x + 1, y)
                if not _sides_match(a.right, b.left):
                    out.append(Violation(1, (x, y), f"arrows disagree with right neighbour {b.label}"))
                if a.i != b.i:
                    out.append(Violation(3, (x, y), "i differs from right neighbour"))
            if y + 1 < H:
                b = t(x, y + 1)
                if not _sides_match(a.top, b.bottom):
                    out.append(Violation(1, (x, y), f"arrows disagree with upper neighbour {b.label}"))
                if a.j != b.j:
                    out.append(Violation(3, (x, y), "j differs from upper neighbour"))
            if x + 1 < W and y + 1 < H:
                if not any(t(x + dx, y + dy).is_blue for dx in (0, 1) for dy in (0, 1)):
                    out.append(Violation(2, (x, y), "2x2 square without a blue corner"))
            if a.is_blue:
                for dx, dy in ((2, 0), (-2, 0), (0, 2), (0, -2)):
                    u, v = x + dx, y + dy
                    if 0 <= u < W and 0 <= v < H and not t(u, v).is_blue:
                        out.append(Violation(2, (x, y), f"blue corner without blue corner at {(u, v)}"))
    return out


# --- supertiles -------------------------------------------------------------

@dataclass(frozen=True)
class SupertileId:
    quadrant: str
    order: int

    def __post_init__(self):
        if self.quadrant not in QUADRANTS:
            raise ValueError(f"quadrant must be one of {QUADRANTS}")
        if self.order < 0:
            raise ValueError("order must be nonnegative")


def side_length(order: int) -> int:
    """2^(n+1) - 1, which is 1 at order 0."""
    return 2 ** (order + 1) - 1


def quadrant_offsets(order: int) -> dict[str, tuple[int, int]]:
    """Where the four order-(n-1) pieces sit inside an order-n supertile."""
    s = 2 ** order
    return {"sw": (0, 0), "se": (s, 0), "nw": (0, s), "ne": (s, s)}


def supertile(id_or_quadrant, order: int | None = None, cap: int = DEFAULT_ORDER_CAP) -> RobinsonPatch:
    sid = id_or_quadrant if isinstance(id_or_quadrant, SupertileId) else SupertileId(id_or_quadrant, order)
    if sid.order > cap:
        raise ValueError(f"order {sid.order} exceeds the cap {cap}")
    return _supertile(sid.quadrant, sid.order)


@lru_cache(maxsize=None)
def _supertile(q: str, n: int) -> RobinsonPatch:
    if n == 0:
        return RobinsonPatch(1, 1, ((corner(q, "blue").id,),))
    side = side_length(n)
    c = 2**n - 1
    grid: list[list[int | None]] = [[None] * side for _ in range(side)]
    sub_side = side_length(n - 1)
    for quad, (ox, oy) in quadrant_offsets(n).items():
        sub = _supertile(quad, n - 1)
        for y in range(sub_side):
            for x in range(sub_side):
                grid[oy + y][ox + x] = sub.cells[y][x]
    centre_domain = [corner(q, "red", g).id for g in (0, 1)]
    cross = [(x, c) for x in range(side)] + [(c, y) for y in range(side) if y != c]
    solutions = _fill(grid, cross, {(c, c): centre_domain}, limit=2)
    if not solutions:
        raise ConstructionError("no admissible cross fill", (c, c))
    if len(solutions) > 1:
        diff = next(k for k in solutions[0] if solutions[0][k] != solutions[1][k])
        raise ConstructionError("cross fill is not unique", diff)
    for (x, y), tid in solutions[0].items():
        grid[y][x] = tid
    return RobinsonPatch(side, side, tuple(tuple(r) for r in grid))


def _fill(grid, cells: list, domains: dict, limit: int = 2) -> list[dict]:
    """Arc-consistency plus backtracking over the given empty cells."""
    H, W = len(grid), len(grid[0])
    hc, vc = _compat_tables()
    cellset = set(cells)

    def fixed(x, y):
        if 0 <= x < W and 0 <= y < H and (x, y) not in cellset:
            return grid[y][x]
        return None

    def unary_ok(x, y, tid):
        t = TILES[tid]
        if not rule4_ok(t):
            return False
        for (dx, dy) in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            f = fixed(x + dx, y + dy)
            if f is None:
                continue
            if dx == -1 and not hc[f][tid]:
                return False
            if dx == 1 and not hc[tid][f]:
                return False
            if dy == -1 and not vc[f][tid]:
                return False
            if dy == 1 and not vc[tid][f]:
                return False
        if t.is_blue:
            for dx, dy in ((2, 0), (-2, 0), (0, 2), (0, -2)):
                f = fixed(x + dx, y + dy)
                if f is not None and not TILES[f].is_blue:
                    return False
        return True

    dom = {}
    for (x, y) in cells:
        base = domains.get((x, y), range(N_TILES))
        dom[(x, y)] = [tid for tid in base if unary_ok(x, y, tid)]
        if not dom[(x, y)]:
            raise ConstructionError("empty domain after unary filtering", (x, y))

    def ok_pair(p, a, q, b):
        (x, y), (u, v) = p, q
        if u == x + 1 and v == y:
            return hc[a][b]
        if u == x - 1 and v == y:
            return hc[b][a]
        if v == y + 1 and u == x:
            return vc[a][b]
        if v == y - 1 and u == x:
            return vc[b][a]
        return True

    neigh = {p: [q for q in ((p[0] + 1, p[1]), (p[0] - 1, p[1]), (p[0], p[1] + 1), (p[0], p[1] - 1))
                 if q in cellset] for p in cells}

    def ac3(d):
        queue = deque((p, q) for p in cells for q in neigh[p])
        while queue:
            p, q = queue.popleft()
            keep = [a for a in d[p] if any(ok_pair(p, a, q, b) for b in d[q])]
            if len(keep) != len(d[p]):
                if not keep:
                    return False
                d[p] = keep
                queue.extend((r, p) for r in neigh[p] if r != q)
        return True

    if not ac3(dom):
        raise ConstructionError("arc consistency wiped out a domain", cells[0])

    out: list[dict] = []

    def search(d):
        if len(out) >= limit:
            return
        open_cells = [p for p in cells if len(d[p]) > 1]
        if not open_cells:
            out.append({p: d[p][0] for p in cells})
            return
        p = min(open_cells, key=lambda c: (len(d[c]), c))
        for a in d[p]:
            d2 = {k: list(v) for k, v in d.items()}
            d2[p] = [a]
            if ac3(d2):
                search(d2)

    search(dom)
    return out


# --- structure --------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    blue_corners: tuple[tuple[int, int, str], ...]
    red_corners: tuple[tuple[int, int, str, int], ...]  # x, y, orientation, gray
    sites: tuple[tuple[int, tuple[int, int]], ...]  # (order, position)
    red_center: tuple[int, int] | None
    taxonomy: str

    def sites_of_order(self, k: int) -> list[tuple[int, int]]:
        return [p for o, p in self.sites if o == k]

    def lines(self) -> list[str]:
        out = [f"blue {x} {y} {o}" for x, y, o in self.blue_corners]
        out += [f"red {x} {y} {o} gray {g}" for x, y, o, g in self.red_corners]
        out += [f"site order {k} at {p[0]} {p[1]}" for k, p in self.sites]
        if self.red_center is not None:
            out.append(f"red-corner center {self.red_center[0]} {self.red_center[1]}")
        out.append(f"taxonomy {self.taxonomy}")
        return out


def _matches_supertile(patch: RobinsonPatch, x0: int, y0: int, q: str, k: int) -> bool:
    s = side_length(k)
    if x0 < 0 or y0 < 0 or x0 + s > patch.width or y0 + s > patch.height:
        return False
    ref = _supertile(q, k)
    return all(patch.cells[y0 + y][x0:x0 + s] == ref.cells[y] for y in range(s))


def _taxonomy_hint(patch: RobinsonPatch) -> str:
    W, H = patch.width, patch.height
    if W == 0 or H == 0:
        return "none (empty window)"
    t = patch.tile
    for y in range(H):
        for x in range(W):
            centre = t(x, y)
            if not (centre.is_red or centre.arrows >= 5):
                continue
            row = [t(u, y) for u in range(W) if u != x]
            col = [t(x, v) for v in range(H) if v != y]
            if W > 1 and H > 1 and all(not a.is_corner for a in row + col):
                return "(iii) four supertiles around a cross, window-limited"
    for y in range(H):
        kinds = {t(x, y).arrows for x in range(W)}
        if kinds in ({3}, {4}) and W > 1:
            return "(ii) two supertiles split by a row, window-limited"
    for x in range(W):
        kinds = {t(x, y).arrows for y in range(H)}
        if kinds in ({3}, {4}) and H > 1:
            return "(ii) two supertiles split by a column, window-limited"
    return "(i) one supertile covers the window, window-limited"


def locate_structure(patch: RobinsonPatch) -> StructureReport:
    blue, red, sites = [], [], []
    if patch.holes:
        raise ValueError("patch has holes")
    for y in range(patch.height):
        for x in range(patch.width):
            t = patch.tile(x, y)
            if t.is_blue:
                blue.append((x, y, t.orientation))
            elif t.is_red:
                red.append((x, y, t.orientation, t.gray))
    whole = None
    for x, y, q, _ in red:
        k = 1
        while True:
            c = 2**k - 1
            x0, y0 = x - c, y - c
            s = side_length(k)
            if x0 < 0 or y0 < 0 or x0 + s > patch.width or y0 + s > patch.height:
                break
            if _matches_supertile(patch, x0, y0, q, k):
                if s == patch.width and s == patch.height:
                    whole = (x, y)
                else:
                    sites.append((k, (x, y)))
                break
            k += 1
    sites.sort()
    return StructureReport(tuple(blue), tuple(red), tuple(sites), whole, _taxonomy_hint(patch))


# --- rendering ----------------------------------------------------------------

_PRINCIPAL = {0: "↓", 1: "→", 2: "↑", 3: "←"}
_CORNER_GLYPH = {"sw": "└", "se": "┘", "ne": "┐", "nw": "┌"}


def glyph(t: RobinsonTile | None) -> str:
    """Two characters per tile.

    Corners: box-drawing corner pointing along the arms, then b (blue),
    r (red, gray 0) or R (red, gray 1).  Arrow tiles: the direction of the
    principal arrow, then the shape letter.  Holes render as two dots.
    """
    if t is None:
        return ".."
    if t.is_corner:
        mark = "b" if t.is_blue else ("R" if t.gray else "r")
        return _CORNER_GLYPH[t.orientation] + mark
    return _PRINCIPAL[t.rotation] + t.shape


def render_ascii(patch: RobinsonPatch) -> str:
    rows = []
    for y in reversed(range(patch.height)):
        rows.append(" ".join(glyph(None if c is None else TILES[c]) for c in patch.cells[y]))
    return "\n".join(rows) + ("\n" if rows else "")


def render_pgm(patch: RobinsonPatch) -> bytes:
    head = f"P5\n{patch.width} {patch.height}\n255\n".encode("ascii")
    body = bytes(255 if c is None else c for y in reversed(range(patch.height)) for c in patch.cells[y])
    return head + body


def _pos(p: int) -> float:
    return 0.3 * p


def _svg_tile(t: RobinsonTile, x: int, y: int, H: int, unit: int) -> list[str]:
    ox, oy = x * unit, (H - 1 - y) * unit
    out = [f'<g id="t{x}_{y}" transform="translate({ox},{oy})">',
           f'<rect width="{unit}" height="{unit}" fill="white" stroke="black" stroke-width="0.5"/>']
    if t.is_corner:
        colour = "#8fa8ff" if t.is_blue else "#ff8f8f"
        out.append(f'<circle cx="{unit / 2}" cy="{unit / 2}" r="{unit / 6}" fill="{colour}"/>')
    for name in SIDES:
        d, ps = t.side(name)
        for p in sorted(ps):
            f = _pos(p) / 1.2
            if name == "top":
                edge, inner = (f, 0.0), (f, 0.5)
            elif name == "bottom":
                edge, inner = (f, 1.0), (f, 0.5)
            elif name == "left":
                edge, inner = (0.0, 1 - f), (0.5, 1 - f)
            else:
                edge, inner = (1.0, 1 - f), (0.5, 1 - f)
            a, b = (edge, inner) if d == "in" else (inner, edge)
            out.append(f'<line x1="{a[0] * unit:.1f}" y1="{a[1] * unit:.1f}" x2="{b[0] * unit:.1f}" '
                       f'y2="{b[1] * unit:.1f}" stroke="black" marker-end="url(#arr)"/>')
    out.append("</g>")
    return out


def render_svg(patch: RobinsonPatch, unit: int = 24) -> str:
    W, H = patch.width, patch.height
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W * unit}" height="{H * unit}">',
             '<defs><marker id="arr" markerWidth="4" markerHeight="4" refX="3" refY="2" orient="auto">'
             '<path d="M0,0 L4,2 L0,4 z"/></marker></defs>']
    for y in range(H):
        for x in range(W):
            t = patch.tile(x, y)
            if t is not None:
                lines.extend(_svg_tile(t, x, y, H, unit))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render(patch: RobinsonPatch, fmt: str = "ascii"):
    if fmt == "ascii":
        return render_ascii(patch)
    if fmt == "svg":
        return render_svg(patch)
    if fmt == "pgm":
        return render_pgm(patch)
    raise ValueError(f"unsupported format {fmt!r}")


# --- SFT presentation ---------------------------------------------------------

def robinson_spec() -> ShiftSpec:
    """The Robinson rules as forbidden patterns over tile ids.

    Rule 2's density clause is listed only through the blue-free 2x2 squares
    whose four dominoes are otherwise allowed; any other blue-free square already
    contains a forbidden domino.
    """
    hc, vc = _compat_tables()
    forb = []
    o, e1, e2 = (0, 0), (1, 0), (0, 1)
    for t in TILES:
        if not rule4_ok(t):
            forb.append(Pattern(2, ((o, t.id),)))
    for a in range(N_TILES):
        for b in range(N_TILES):
            if not hc[a][b]:
                forb.append(Pattern(2, ((o, a), (e1, b))))
            if not vc[a][b]:
                forb.append(Pattern(2, ((o, a), (e2, b))))
    blue = [t.id for t in TILES if t.is_blue]
    other = [t.id for t in TILES if not t.is_blue and rule4_ok(t)]
    for a in blue:
        for b in other:
            for d in ((2, 0), (0, 2)):
                forb.append(Pattern(2, ((o, a), (d, b))))
                forb.append(Pattern(2, ((o, b), (d, a))))
    for a, b, c, d in _blue_free_squares(other, hc, vc):
        forb.append(Pattern(2, ((o, a), (e1, b), (e2, c), ((1, 1), d))))
    return ShiftSpec(2, tuple(range(N_TILES)), tuple(forb), meta=(("name", "robinson"),))


def _blue_free_squares(other: Iterable[int], hc, vc):
    other = list(other)
    for a in other:
        for b in other:
            if not hc[a][b]:
                continue
            for c in other:
                if not vc[a][c]:
                    continue
                for d in other:
                    if hc[c][d] and vc[b][d]:
                        yield a, b, c, d
