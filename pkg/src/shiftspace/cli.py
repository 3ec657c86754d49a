"""Command-line entry point.

Exit codes: 0 success or verdict produced, 1 claim or audit failure,
2 usage or input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import examples as ex
from . import one_dim, robinson, space, times23
from .core import SpecError, Window, load_spec
from .lang import (DEFAULT_BUDGET, BudgetExhausted, check_convergence, resolution_distance,
                   window_language)

OK, FAILED, USAGE, BUDGET = 0, 1, 2, 3


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


def _emit(lines, out):
    for line in lines:
        out.write(line + "\n")


def _write_artifact(path: str, data) -> None:
    p = Path(path)
    if isinstance(data, bytes):
        p.write_bytes(data)
    else:
        p.write_text(data, encoding="utf-8")


# --- lang / dist / converge -------------------------------------------------

def cmd_lang(a, out):
    spec = load_spec(a.spec)
    w = Window.corner(a.radius, spec.dim) if a.corner else Window.centered(a.radius, spec.dim)
    lang = window_language(spec, w, a.margin, a.budget)
    if a.porcelain:
        _emit([f"window {w.kind} margin {a.margin} words {len(lang)}"], out)
        _emit(["word " + " ".join(map(str, word)) for word in lang.words], out)
    else:
        _emit([f"window {w.kind}: {len(lang)} words ({lang.label})"], out)
        if a.list:
            _emit(["  " + " ".join(map(str, word)) for word in lang.words], out)
    return OK


def cmd_dist(a, out):
    d = resolution_distance(load_spec(a.a), load_spec(a.b), a.radius, a.margin, a.budget)
    if a.porcelain:
        _emit([f"distance {'beyond' if d.beyond else d.radius} resolution {a.radius} margin {a.margin}"], out)
    else:
        _emit([f"distance {d} ({d.reason}; margin {a.margin})"], out)
    return OK


def cmd_converge(a, out):
    seq = [load_spec(p) for p in a.spec]
    rep = check_convergence(seq, load_spec(a.limit), a.radius, a.margin, a.budget)
    _emit(rep.lines() if a.porcelain else [rep.table()], out)
    return OK


# --- 1D ---------------------------------------------------------------------

def cmd_iso1d(a, out):
    spec = load_spec(a.spec)
    if spec.dim != 1:
        raise _Usage("iso1d needs a one-dimensional spec")
    verdict = one_dim.isolated_verdict_1d(spec, a.nmax)
    lines = [f"verdict {verdict}"]
    g = one_dim.build_graph(spec, verdict.n)
    if isinstance(verdict, one_dim.NotIsolated):
        ok = verdict.certificate.validate(g)
        lines.append(f"certificate {verdict.certificate} {'valid' if ok else 'INVALID'}")
    else:
        lat = one_dim.subsystem_lattice(g)
        maxes = one_dim.maximal_subsystems(lat)
        lines.append(f"lattice elements {len(lat.elements)} maximal {len(maxes)} "
                     f"type {one_dim.maximality_type(lat)}")
        lines += [f"maximal {lat.describe(m)}" for m in maxes]
        star, outcasts = one_dim.star_check(lat)
        lines.append(f"star {'holds' if star else 'fails'} outcasts {len(outcasts)}")
        tr = one_dim.is_transitive(g)
        lines.append(f"transitive {'yes' if tr.transitive else 'no'} ({tr.kind})")
        dec = one_dim.maximality_decomposition(lat)
        lines.append(f"decomposition K {lat.describe(dec.K) if dec.K else '-'} "
                     f"T {len(dec.T_list)} ok {'yes' if dec.ok else 'no'}")
        lines += [f"check {name}: {'pass' if v else 'FAIL'}" for name, v in dec.checks]
        ok = dec.ok
    if a.emit_dot:
        _write_artifact(a.emit_dot, g.to_dot())
        print(f"wrote {a.emit_dot}", file=sys.stderr)
    _emit(lines, out)
    return OK if ok else FAILED


# --- robinson ---------------------------------------------------------------

def _fmt_for(path: str | None, fmt: str | None) -> str:
    if fmt:
        return fmt
    if path:
        suffix = Path(path).suffix.lower()
        return {".svg": "svg", ".pgm": "pgm", ".txt": "text"}.get(suffix, "ascii")
    return "ascii"


def _patch_output(patch, path, fmt, out):
    data = patch.to_text() if fmt == "text" else robinson.render(patch, fmt)
    if path:
        _write_artifact(path, data)
        print(f"wrote {path}", file=sys.stderr)
    elif isinstance(data, bytes):
        raise _Usage("binary formats need --out")
    else:
        out.write(data if data.endswith("\n") else data + "\n")


def _audit_lines(patch):
    viol = robinson.check_local_rules(patch)
    lines = [f"audit {patch.width}x{patch.height} violations {len(viol)}"]
    lines += [f"violation {v}" for v in viol]
    return viol, lines


def cmd_robinson(a, out):
    if a.rcmd == "supertile":
        patch = robinson.supertile(a.quadrant, a.order)
        viol, lines = _audit_lines(patch)
        _patch_output(patch, a.out, _fmt_for(a.out, a.format), out)
        if a.structure:
            lines += robinson.locate_structure(patch).lines()
        _emit(lines, sys.stderr if not a.out and not a.porcelain else out)
        return FAILED if viol else OK
    patch = robinson.RobinsonPatch.from_text(Path(a.input).read_text())
    if a.rcmd == "audit":
        viol, lines = _audit_lines(patch)
        if a.structure:
            lines += robinson.locate_structure(patch).lines()
        _emit(lines, out)
        return FAILED if viol else OK
    _patch_output(patch, a.out, _fmt_for(a.out, a.format), out)
    return OK


# --- times23 ----------------------------------------------------------------

def cmd_times23(a, out):
    if a.tcmd == "verify":
        if a.m == 2 or a.squares:
            counts = times23.corner_counts()
            good = sum(1 for c in counts.values() if c == 1)
            lines = [f"squares {len(times23.all_valid_squares())} corner-pairs {len(counts)}",
                     f"{good}/{len(counts)} unique"]
            lines += [f"corner {k} {l} count {c}" for (k, l), c in sorted(counts.items()) if c != 1]
            ok = good == len(counts)
        else:
            lines, ok = [], True
        rep = times23.verify_diagonal_determinism(a.m, a.cap)
        comp = times23.multiplication_compatibility_check(a.m, a.cap)
        lines += rep.lines() + [rep.summary()] + comp.lines()
        _emit(lines, out)
        return OK if ok and rep.ok and comp.ok else FAILED
    if a.tcmd == "square":
        try:
            sq = times23.square_from_corners(a.k, a.l)
        except times23.DefectError as exc:
            print(str(exc), file=sys.stderr)
            return FAILED
        if a.porcelain:
            _emit([f"square {sq.a} {sq.b} {sq.c} {sq.d}"], out)
        else:
            _emit([f"{sq.c} {sq.d}", f"{sq.a} {sq.b}"], out)
        return OK
    digits = [int(t) for t in a.digits.split(",") if t.strip()]
    try:
        enc = times23.lambda_encode(digits, a.cap)
    except times23.NotInLanguage as exc:
        print(str(exc), file=sys.stderr)
        return FAILED
    value = times23.lambda_decode(digits)
    if a.porcelain:
        _emit([f"lambda {value}", f"unique {'yes' if enc.unique else 'no'}"]
              + ["row " + " ".join(map(str, r)) for r in enc.grid], out)
    else:
        _emit([f"lambda = {value} (truncated base 6)", f"unique filling: {'yes' if enc.unique else 'no'}",
               enc.render()], out)
    return OK


# --- space ------------------------------------------------------------------

def cmd_space(a, out):
    if a.preset:
        presets = space.build_ladder_examples()
        if a.preset not in presets:
            raise _Usage(f"unknown preset {a.preset!r}; known: {', '.join(presets)}")
        fam, expected = presets[a.preset]
    elif a.family:
        fam, expected = space.load_family(a.family), None
    else:
        raise _Usage("space derive needs --family or --preset")
    if a.resolution is not None:
        fam = fam.at(a.resolution)
    if a.margin is not None:
        fam = space.ShiftFamily(fam.names, fam.members, fam.resolution, a.margin, fam.budget)
    mat = space.distance_matrix(fam)
    trace = space.cb_ladder(fam, mat)
    lines = []
    if not a.porcelain:
        lines.append(space.format_matrix(fam, mat))
    else:
        lines += [f"distance {fam.names[i]} {fam.names[j]} {mat[i][j]}"
                  for i in range(len(fam)) for j in range(i + 1, len(fam))]
    lines += trace.lines()
    if expected and not a.porcelain:
        lines.append(f"expected {expected}")
    _emit(lines, out)
    return OK


# --- examples ---------------------------------------------------------------

def cmd_examples(a, out):
    if a.ecmd == "list":
        for name, e in ex.named_examples().items():
            _emit([f"{name} dim {e.spec.dim} alphabet {len(e.spec.alphabet)} claims {len(e.claims)}"], out)
        return OK
    try:
        e = ex.get_example(a.name)
    except KeyError as exc:
        raise _Usage(str(exc.args[0]))
    if a.ecmd == "check":
        bad = 0
        for claim, ok, msg in e.check():
            bad += not ok
            _emit([f"{'PASS' if ok else 'FAIL'} {claim.name} [{claim.where}]" + (f" {msg}" if msg else "")], out)
        return FAILED if bad else OK
    w = Window.centered(a.window, e.spec.dim)
    p = e.sample(w)
    fmt = _fmt_for(a.out, a.format)
    data = ex.render_svg(p, e.glyphs) if fmt == "svg" else ex.render_text(p, e.glyphs) + "\n"
    if a.out:
        _write_artifact(a.out, data)
        print(f"wrote {a.out}", file=sys.stderr)
    else:
        out.write(data)
    return OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # subcommands repeat the flag without a default so a top-level --porcelain survives
    common = _Parser(add_help=False)
    common.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable line output")
    p = _Parser(prog="shiftspace", description="Subshifts of finite type at desk scale.")
    p.add_argument("--porcelain", action="store_true", help="machine-readable line output")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def budgeted(sp):
        sp.add_argument("--radius", type=int, default=2, help="box radius / resolution N")
        sp.add_argument("--margin", type=int, default=0, help="admissibility margin")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")

    s = sub.add_parser("lang", parents=[common], help="window language of a spec")
    s.add_argument("--spec", required=True)
    s.add_argument("--corner", action="store_true", help="use [0,R-1]^d instead of [-R,R]^d")
    s.add_argument("--list", action="store_true", help="list the words")
    budgeted(s)
    s.set_defaults(fn=cmd_lang)

    s = sub.add_parser("dist", parents=[common], help="resolution distance between two specs")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    budgeted(s)
    s.set_defaults(fn=cmd_dist)

    s = sub.add_parser("converge", parents=[common], help="convergence report of a spec sequence")
    s.add_argument("--limit", required=True)
    s.add_argument("--spec", required=True, nargs="+", help="sequence members in order")
    budgeted(s)
    s.set_defaults(fn=cmd_converge)

    s = sub.add_parser("iso1d", parents=[common], help="isolation verdict for a 1D spec")
    s.add_argument("--spec", required=True)
    s.add_argument("--nmax", type=int, default=4)
    s.add_argument("--emit-dot", metavar="PATH", help="write the word graph in dot syntax")
    s.set_defaults(fn=cmd_iso1d)

    s = sub.add_parser("robinson", parents=[common], help="Robinson supertiles")
    rsub = s.add_subparsers(dest="rcmd", required=True, parser_class=_Parser)
    r = rsub.add_parser("supertile", parents=[common])
    r.add_argument("--quadrant", choices=robinson.QUADRANTS, default="sw")
    r.add_argument("--order", type=int, required=True)
    r.add_argument("--out", help="output path (.svg, .pgm, .txt); ascii to stdout otherwise")
    r.add_argument("--format", choices=("ascii", "svg", "pgm", "text"))
    r.add_argument("--structure", action="store_true", help="also report corners and sites")
    r = rsub.add_parser("audit", parents=[common])
    r.add_argument("--in", dest="input", required=True, help="robipatch text file")
    r.add_argument("--structure", action="store_true")
    r = rsub.add_parser("render", parents=[common])
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--out")
    r.add_argument("--format", choices=("ascii", "svg", "pgm", "text"))
    s.set_defaults(fn=cmd_robinson)

    s = sub.add_parser("times23", parents=[common], help="the x2 x3 shift")
    tsub = s.add_subparsers(dest="tcmd", required=True, parser_class=_Parser)
    t = tsub.add_parser("verify", parents=[common])
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--squares", action="store_true", help="include the 2x2 corner census at any m")
    t.add_argument("--cap", type=int, default=times23.DEFAULT_CAP)
    t = tsub.add_parser("square", parents=[common])
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--l", type=int, required=True)
    t = tsub.add_parser("encode", parents=[common])
    t.add_argument("--digits", required=True, help="comma-separated base-6 digits")
    t.add_argument("--cap", type=int, default=times23.DEFAULT_CAP)
    s.set_defaults(fn=cmd_times23)

    s = sub.add_parser("space", parents=[common], help="derivatives of finite shift families")
    ssub = s.add_subparsers(dest="scmd", required=True, parser_class=_Parser)
    d = ssub.add_parser("derive", parents=[common])
    d.add_argument("--family", help="family file")
    d.add_argument("--preset", help="unary-blocks, fullshift-approx or g-ladder")
    d.add_argument("--resolution", type=int)
    d.add_argument("--margin", type=int)
    s.set_defaults(fn=cmd_space)

    s = sub.add_parser("examples", parents=[common], help="named example shifts")
    esub = s.add_subparsers(dest="ecmd", required=True, parser_class=_Parser)
    esub.add_parser("list", parents=[common])
    e = esub.add_parser("check", parents=[common])
    e.add_argument("name")
    e = esub.add_parser("render", parents=[common])
    e.add_argument("name")
    e.add_argument("--window", type=int, default=3, help="radius R of the rendered box")
    e.add_argument("--out")
    e.add_argument("--format", choices=("ascii", "svg"))
    s.set_defaults(fn=cmd_examples)
    return p


def run(argv, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except _Usage as exc:
        print(str(exc), file=sys.stderr)
        return USAGE
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return BUDGET
    except (SpecError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
