"""Exact theory of one-dimensional SFTs through their word graphs.

The word graph of order n has the admissible words of length n as vertices and
an edge w -> w' whenever w and w' overlap in n-1 symbols and their union is an
admissible word of length n+1.  Everything below (middle cycles, subsystem
lattices, decompositions, gluing gaps) is computed on the essential part of
that graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import networkx as nx

from .core import DimensionError, ShiftSpec, Window
from .lang import window_language

Word = tuple[int, ...]


class ThresholdError(ValueError):
    def __init__(self, n: int, minimum: int):
        self.n = n
        self.minimum = minimum
        super().__init__(f"word length {n} is below the exactness threshold {minimum}")


class MiddleCycleError(ValueError):
    """Raised by lattice operations when the graph has a middle cycle."""

    def __init__(self, certificate: "MiddleCycle"):
        self.certificate = certificate
        super().__init__(f"graph has a middle cycle: {certificate}")


def span(spec: ShiftSpec) -> int:
    """Length of the longest forbidden pattern's support interval."""
    if spec.dim != 1:
        raise DimensionError("one_dim works with 1D specs only")
    return spec.diameter


def threshold(spec: ShiftSpec) -> int:
    return max(1, span(spec) - 1)


def word_str(w: Word) -> str:
    if all(0 <= s <= 9 for s in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def _words(spec: ShiftSpec, length: int) -> list[Word]:
    return list(window_language(spec, Window.interval(0, length - 1), 0).words)


def _trim(vertices: set, edges: set) -> tuple[set, set]:
    """Keep only vertices lying on a bi-infinite path."""
    vs, es = set(vertices), set(edges)
    while True:
        has_in = {v for _, v in es}
        has_out = {u for u, _ in es}
        keep = vs & has_in & has_out
        if keep == vs:
            return vs, es
        vs = keep
        es = {(u, v) for u, v in es if u in vs and v in vs}


@dataclass(frozen=True)
class Graph1D:
    n: int
    vertices: tuple[Word, ...]
    edges: tuple[tuple[Word, Word], ...]
    raw_vertices: tuple[Word, ...] = field(repr=False, default=())
    raw_edges: tuple[tuple[Word, Word], ...] = field(repr=False, default=())

    def nx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def has_edge(self, u: Word, v: Word) -> bool:
        return (u, v) in set(self.raw_edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{word_str(v)}";')
        for u, v in self.edges:
            lines.append(f'  "{word_str(u)}" -> "{word_str(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(spec: ShiftSpec, n: int) -> Graph1D:
    t = threshold(spec)
    if n < t:
        raise ThresholdError(n, t)
    verts = set(_words(spec, n))
    edges = set()
    for w in _words(spec, n + 1):
        edges.add((w[:-1], w[1:]))
    vs, es = _trim(verts, edges)
    return Graph1D(n, tuple(sorted(vs)), tuple(sorted(es)), tuple(sorted(verts)), tuple(sorted(edges)))


# --- middle cycles --------------------------------------------------------

@dataclass(frozen=True)
class MiddleCycle:
    cycle: tuple[Word, ...]
    incoming: tuple[Word, Word]
    outgoing: tuple[Word, Word]

    def validate(self, g: Graph1D) -> bool:
        raw = set(g.raw_edges)
        cyc = set(self.cycle)
        k = len(self.cycle)
        if k == 0 or len(cyc) != k:
            return False
        if any((self.cycle[i], self.cycle[(i + 1) % k]) not in raw for i in range(k)):
            return False
        (a, b), (c, d) = self.incoming, self.outgoing
        return ((a, b) in raw and a not in cyc and b in cyc
                and (c, d) in raw and c in cyc and d not in cyc)

    def __str__(self):
        cyc = " -> ".join(word_str(v) for v in self.cycle)
        a, b = self.incoming
        c, d = self.outgoing
        return f"cycle [{cyc}] in {word_str(a)}->{word_str(b)} out {word_str(c)}->{word_str(d)}"


def _canonical_cycle(cycle: list) -> tuple:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def _shortest_cycle(g: nx.DiGraph, nodes: Iterable) -> tuple:
    best = None
    for s in sorted(nodes):
        if g.has_edge(s, s):
            return (s,)
        preds = {s: None}
        frontier = [s]
        found = None
        while frontier and found is None:
            nxt = []
            for u in frontier:
                for v in sorted(g.successors(u)):
                    if v == s:
                        found = u
                        break
                    if v not in preds:
                        preds[v] = u
                        nxt.append(v)
                if found is not None:
                    break
            frontier = nxt
        if found is None:
            continue
        path = [found]
        while preds[path[-1]] is not None:
            path.append(preds[path[-1]])
        cyc = _canonical_cycle(path[::-1])
        if best is None or (len(cyc), cyc) < (len(best), best):
            best = cyc
    return best


def _is_simple_cycle(g: nx.DiGraph, comp: set) -> bool:
    return all(len([v for v in g.successors(u) if v in comp]) == 1 for u in comp)


def _nontrivial(g: nx.DiGraph, comp: set) -> bool:
    return len(comp) > 1 or any(g.has_edge(v, v) for v in comp)


def find_middle_cycle(g: Graph1D) -> MiddleCycle | None:
    G = g.nx()
    for comp in sorted((set(c) for c in nx.strongly_connected_components(G)), key=min):
        if not _nontrivial(G, comp):
            continue
        if _is_simple_cycle(G, comp):
            ins = sorted((u, v) for v in comp for u in G.predecessors(v) if u not in comp)
            outs = sorted((u, v) for u in comp for v in G.successors(u) if v not in comp)
            if ins and outs:
                return MiddleCycle(_canonical_cycle(_cycle_order(G, comp)), ins[0], outs[0])
            continue
        cyc = _shortest_cycle(G, comp)
        cs = set(cyc)
        ins = sorted((u, v) for v in cs for u in G.predecessors(v) if u not in cs)
        outs = sorted((u, v) for u in cs for v in G.successors(u) if v not in cs)
        return MiddleCycle(cyc, ins[0], outs[0])
    return None


def _cycle_order(G: nx.DiGraph, comp: set) -> list:
    start = min(comp)
    order = [start]
    v = next(w for w in G.successors(start) if w in comp)
    while v != start:
        order.append(v)
        v = next(w for w in G.successors(v) if w in comp)
    return order


@dataclass(frozen=True)
class NMCVerdict:
    holds: bool
    n: int
    certificate: MiddleCycle | None = None

    def __str__(self):
        if self.holds:
            return f"holds from n={self.n}"
        return f"middle cycle persists at n={self.n}: {self.certificate}"


def has_nmc_property(spec: ShiftSpec, n_max: int) -> NMCVerdict:
    t = threshold(spec)
    if n_max < t:
        raise ThresholdError(n_max, t)
    cert = None
    for n in range(t, n_max + 1):
        cert = find_middle_cycle(build_graph(spec, n))
        if cert is None:
            # the property persists for larger n; spot-check one step
            if find_middle_cycle(build_graph(spec, n + 1)) is not None:
                raise AssertionError(f"no-middle-cycle property lost between n={n} and n={n + 1}")
            return NMCVerdict(True, n)
    return NMCVerdict(False, n_max, cert)


@dataclass(frozen=True)
class Isolated:
    n: int

    def __str__(self):
        return f"Isolated (no middle cycle from n={self.n})"


@dataclass(frozen=True)
class NotIsolated:
    certificate: MiddleCycle
    n: int

    def __str__(self):
        return f"NotIsolated (n={self.n}; {self.certificate})"


def isolated_verdict_1d(spec: ShiftSpec, n_max: int):
    v = has_nmc_property(spec, n_max)
    if v.holds:
        return Isolated(v.n)
    return NotIsolated(v.certificate, v.n)


# --- irreducible subsystems and the lattice ------------------------------

@dataclass(frozen=True)
class CycleOrBarbell:
    kind: str  # "cycle" | "barbell"
    cycle1: tuple[Word, ...]
    path: tuple[Word, ...] = ()
    cycle2: tuple[Word, ...] = ()

    def edges(self) -> set:
        out = set()
        for c in (self.cycle1, self.cycle2):
            for i in range(len(c)):
                out.add((c[i], c[(i + 1) % len(c)]))
        for i in range(len(self.path) - 1):
            out.add((self.path[i], self.path[i + 1]))
        return out

    def vertices(self) -> set:
        return set(self.cycle1) | set(self.path) | set(self.cycle2)

    def __str__(self):
        c1 = " ".join(word_str(v) for v in self.cycle1)
        if self.kind == "cycle":
            return f"cycle({c1})"
        p = " ".join(word_str(v) for v in self.path)
        c2 = " ".join(word_str(v) for v in self.cycle2)
        return f"barbell({c1} | {p} | {c2})"


def enumerate_irreducibles(g: Graph1D) -> list[CycleOrBarbell]:
    cert = find_middle_cycle(g)
    if cert is not None:
        raise MiddleCycleError(cert)
    G = g.nx()
    cycles = []
    where = {}
    for comp in nx.strongly_connected_components(G):
        comp = set(comp)
        if _nontrivial(G, comp):
            cyc = _canonical_cycle(_cycle_order(G, comp))
            cycles.append(cyc)
    cycles.sort()
    for i, c in enumerate(cycles):
        for v in c:
            where[v] = i
    out = [CycleOrBarbell("cycle", c) for c in cycles]
    barbells = []
    for i, c in enumerate(cycles):
        for start in c:
            # paths leave the cycle and run through vertices on no cycle
            stack = [(start, (start,))]
            while stack:
                u, path = stack.pop()
                for v in G.successors(u):
                    if v in where:
                        if where[v] != i:
                            barbells.append(CycleOrBarbell("barbell", c, path + (v,), cycles[where[v]]))
                    elif v not in path:
                        stack.append((v, path + (v,)))
    out.extend(sorted(set(barbells), key=lambda b: (b.cycle1, b.cycle2, b.path)))
    return out


@dataclass(frozen=True)
class SubsystemLattice:
    irreducibles: tuple[CycleOrBarbell, ...]
    elements: tuple[frozenset, ...]  # sorted by (size, members)

    @property
    def whole(self) -> frozenset:
        return frozenset(range(len(self.irreducibles)))

    def closure(self, idxs: Iterable[int]) -> frozenset:
        """Smallest element containing the given irreducibles (empty stays empty)."""
        out = set()
        for i in idxs:
            out |= _irr_closure(self.irreducibles, i)
        return frozenset(out)

    def proper(self) -> list[frozenset]:
        return [e for e in self.elements if e != self.whole]

    def below(self, top: frozenset) -> list[frozenset]:
        return [e for e in self.elements if e <= top]

    def describe(self, e: frozenset) -> str:
        return "{" + ", ".join(str(self.irreducibles[i]) for i in sorted(e)) + "}"


def _irr_closure(irrs, i: int) -> frozenset:
    h = irrs[i]
    out = {i}
    if h.kind == "barbell":
        for j, k in enumerate(irrs):
            if k.kind == "cycle" and k.cycle1 in (h.cycle1, h.cycle2):
                out.add(j)
    return frozenset(out)


def _lattice_from(irrs: tuple) -> tuple[frozenset, ...]:
    basics = {_irr_closure(irrs, i) for i in range(len(irrs))}
    elems = set(basics)
    frontier = set(basics)
    while frontier:
        new = set()
        for a in frontier:
            for b in basics:
                u = a | b
                if u not in elems:
                    new.add(u)
        elems |= new
        frontier = new
    return tuple(sorted(elems, key=lambda e: (len(e), sorted(e))))


def subsystem_lattice(g: Graph1D) -> SubsystemLattice:
    irrs = tuple(enumerate_irreducibles(g))
    return SubsystemLattice(irrs, _lattice_from(irrs))


def _maximal_in(elements: Iterable[frozenset], top: frozenset) -> list[frozenset]:
    proper = [e for e in elements if e < top]
    return [e for e in proper if not any(e < f for f in proper)]


def maximal_subsystems(lat: SubsystemLattice) -> list[frozenset]:
    return _maximal_in(lat.elements, lat.whole)


def maximality_type(lat: SubsystemLattice) -> int:
    return len(maximal_subsystems(lat))


def star_check(lat: SubsystemLattice) -> tuple[bool, list[frozenset]]:
    maxes = maximal_subsystems(lat)
    outcasts = [e for e in lat.proper() if not any(e <= m for m in maxes)]
    return True, outcasts


def element_is_minimal(lat: SubsystemLattice, e: frozenset) -> bool:
    return not any(f < e for f in lat.elements)


def element_is_transitive(lat: SubsystemLattice, e: frozenset) -> bool:
    """A shift is transitive iff it is not the union of its proper subsystems."""
    union = frozenset().union(*[f for f in lat.elements if f < e])
    return union != e


def element_type(lat: SubsystemLattice, e: frozenset) -> int:
    return len(_maximal_in(lat.elements, e))


# --- transitivity ---------------------------------------------------------

@dataclass(frozen=True)
class Transitivity:
    transitive: bool
    kind: str  # "scc", "chain" or "none"
    detail: str = ""

    def __bool__(self):
        return self.transitive


def is_transitive(g: Graph1D) -> Transitivity:
    G = g.nx()
    if G.number_of_nodes() == 0:
        return Transitivity(False, "none", "empty shift")
    comps = [set(c) for c in nx.strongly_connected_components(G)]
    if len(comps) == 1:
        return Transitivity(True, "scc", f"strongly connected on {G.number_of_nodes()} vertices")
    big = [c for c in comps if _nontrivial(G, c)]
    if len(big) != 2:
        return Transitivity(False, "none", f"{len(big)} recurrent components")
    inner = {(u, v) for c in big for u, v in G.edges if u in c and v in c}
    rest = [e for e in G.edges if e not in inner]
    # the connecting edges must form one simple path from one component to the other
    succ = {}
    for u, v in rest:
        if u in succ:
            return Transitivity(False, "none", "connecting edges branch")
        succ[u] = v
    in_big = set().union(*big)
    starts = [u for u in succ if u in in_big]
    if len(starts) != 1:
        return Transitivity(False, "none", "no single transition path")
    path = [starts[0]]
    while path[-1] in succ and len(path) <= len(rest):
        path.append(succ[path[-1]])
    a = next(c for c in big if path[0] in c)
    if (len(path) - 1 != len(rest) or path[-1] not in in_big or path[-1] in a
            or any(v in in_big for v in path[1:-1])):
        return Transitivity(False, "none", "connecting edges do not form one path")
    return Transitivity(True, "chain", " -> ".join(word_str(v) for v in path))


# --- maximality decomposition ---------------------------------------------

@dataclass(frozen=True)
class Decomposition1D:
    K: frozenset | None
    T_list: tuple[frozenset, ...]
    E: frozenset
    checks: tuple[tuple[str, bool], ...]
    reconstructed: tuple[frozenset, ...]

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.checks)


def maximality_decomposition(lat: SubsystemLattice) -> Decomposition1D:
    whole = lat.whole
    maxes = maximal_subsystems(lat)
    T_list = []
    for m in maxes:
        t = lat.closure(whole - m)
        if t not in T_list:
            T_list.append(t)
    T_list.sort(key=lambda e: (len(e), sorted(e)))
    E = frozenset().union(*T_list)
    K = lat.closure(whole - E) or None

    minimal = bool(whole) and element_is_minimal(lat, whole)

    def ok_T(t):
        return element_is_minimal(lat, t) or (element_is_transitive(lat, t) and element_type(lat, t) == 1)

    checks = [
        ("(i) each T minimal or transitive of type 1", all(ok_T(t) for t in T_list)),
        # a minimal shift is its own nucleus, so (ii) only concerns non-minimal shifts
        ("(ii) K empty or type 0 and not minimal",
         minimal or K is None or (element_type(lat, K) == 0 and not element_is_minimal(lat, K))),
        ("(iii) whole = K union E", (K or frozenset()) | E == whole),
        ("(iv) T pairwise incomparable", all(not (a <= b or b <= a) for a, b in combinations(T_list, 2))),
        ("(v) no T inside K", K is None or all(not t <= K for t in T_list)),
        ("(vi) finitely many T", True),
    ]
    rebuilt = reconstruct_maximals(lat, K, T_list)
    checks.append(("reconstruction reproduces the maximal subsystems", set(rebuilt) == set(maxes)))
    if minimal:
        checks.append(("minimal shift has K = whole", K == whole and not T_list))
    return Decomposition1D(K, tuple(T_list), E, tuple(checks), tuple(rebuilt))


def reconstruct_maximals(lat: SubsystemLattice, K, T_list) -> list[frozenset]:
    """S(T) = K | union of the other T' | M(T), with M(T) empty for minimal T."""
    out = []
    for t in T_list:
        s = set(K or ())
        for u in T_list:
            if u != t:
                s |= u
        if not element_is_minimal(lat, t):
            sub = _maximal_in(lat.elements, t)
            s |= sub[0]
        s = frozenset(s)
        if s not in out:
            out.append(s)
    return sorted(out, key=lambda e: (len(e), sorted(e)))


# --- block gluing -----------------------------------------------------------

class _Language:
    """Exact membership in the language of a 1D SFT via its essential graph."""

    def __init__(self, spec: ShiftSpec, k: int):
        self.g = build_graph(spec, k)
        self.k = k
        self.succ: dict[Word, list[Word]] = {v: [] for v in self.g.vertices}
        for u, v in self.g.edges:
            self.succ[u].append(v)
        self.prefixes = {v[:i] for v in self.g.vertices for i in range(k + 1)}

    def words(self, length: int) -> list[Word]:
        if length <= self.k:
            return sorted({v[:length] for v in self.g.vertices})
        out = []
        for v in self.g.vertices:
            stack = [(v, v)]
            while stack:
                u, w = stack.pop()
                if len(w) == length:
                    out.append(w)
                    continue
                for x in self.succ[u]:
                    stack.append((x, w + x[-1:]))
        return sorted(set(out))

    def contains(self, w: Word) -> bool:
        if len(w) <= self.k:
            return w in self.prefixes
        cur = {w[: self.k]} & set(self.succ)
        for i in range(self.k, len(w)):
            cur = {x for u in cur for x in self.succ[u] if x[-1] == w[i]}
            if not cur:
                return False
        return True


def _pair_gap(lang: _Language, u: Word, v: Word) -> int | None:
    """Smallest g such that u w v is admissible for every |w| >= g; None if impossible for arbitrarily long w."""
    k, L = lang.k, len(u)
    starts = frozenset(x for x in lang.g.vertices if x[:L] == u)
    ends = {x for x in lang.g.vertices if x[-L:] == v}
    # layer t = vertices reachable in t steps; word length = k + t
    seen: dict[frozenset, int] = {}
    hits = []
    cur = starts
    t = 0
    while cur not in seen:
        seen[cur] = t
        hits.append(bool(cur & ends))
        cur = frozenset(x for y in cur for x in lang.succ[y])
        t += 1
    loop_from = seen[cur]
    if not all(hits[loop_from:]):
        return None

    period = len(hits) - loop_from

    def hit(t):
        return hits[t] if t < len(hits) else hits[loop_from + (t - loop_from) % period]

    def ok(ell):
        n = 2 * L + ell
        if n < k:
            return any(lang.contains(u + w + v) for w in lang.words(ell))
        return hit(n - k)

    last_bad = -1
    for ell in range(len(hits) + k + 1):
        if not ok(ell):
            last_bad = ell
    return last_bad + 1


def block_gluing_gap(spec: ShiftSpec, n_max: int) -> dict[int, int | None]:
    """n -> gap for blocks of length 2n+1, or None when the shift is not gluing at that size."""
    out = {}
    for n in range(n_max + 1):
        L = 2 * n + 1
        lang = _Language(spec, max(threshold(spec), L))
        words = lang.words(L)
        gap = 0
        for u in words:
            for v in words:
                g = _pair_gap(lang, u, v)
                if g is None:
                    gap = None
                    break
                gap = max(gap, g)
            if gap is None:
                break
        out[n] = gap
    return out
