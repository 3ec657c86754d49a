"""Isolation verdicts, lattices and decompositions for a few 1D shifts."""

from shiftspace.core import disjoint_union, forbid_words, full_shift, golden_mean
from shiftspace.one_dim import (NotIsolated, build_graph, is_transitive, isolated_verdict_1d,
                                maximality_decomposition, maximality_type, subsystem_lattice)

SHIFTS = {
    "golden mean": golden_mean(),
    "forbid 10": forbid_words((0, 1), [(1, 0)]),
    "two loops": disjoint_union(full_shift((0,)), full_shift((0,))),
    "full {0,1}": full_shift((0, 1)),
}

for name, spec in SHIFTS.items():
    v = isolated_verdict_1d(spec, 4)
    print(f"{name}: {v}")
    if isinstance(v, NotIsolated):
        continue
    g = build_graph(spec, v.n)
    lat = subsystem_lattice(g)
    dec = maximality_decomposition(lat)
    print(f"  type {maximality_type(lat)}, transitive: {is_transitive(g).kind}, decomposition ok: {dec.ok}")
