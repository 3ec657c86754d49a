import io
import subprocess
import sys
from importlib.resources import files


from shiftspace.cli import main, run
from shiftspace.core import forbid_words, full_shift, save_spec
from shiftspace.robinson import RobinsonPatch, corner, supertile

DATA = files("shiftspace") / "data"
GOLDEN = str(DATA / "goldenmean.shift")


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_iso1d_golden_mean():
    code, out = call("iso1d", "--spec", GOLDEN, "--nmax", "3")
    assert code == 0
    assert "NotIsolated" in out and "valid" in out


def test_iso1d_isolated_with_lattice(tmp_path):
    path = tmp_path / "f10.shift"
    save_spec(forbid_words((0, 1), [(1, 0)]), path)
    dot = tmp_path / "g.dot"
    code, out = call("iso1d", "--spec", str(path), "--nmax", "3", "--emit-dot", str(dot))
    assert code == 0
    assert "lattice elements 4 maximal 1 type 1" in out
    assert dot.read_text().startswith("digraph")


def test_times23_verify_m2():
    code, out = call("times23", "verify", "--m", "2")
    assert code == 0 and "36/36 unique" in out


def test_times23_square_and_encode():
    assert call("--porcelain", "times23", "square", "--k", "2", "--l", "3") == (0, "square 2 5 1 3\n")
    code, out = call("times23", "encode", "--digits", "1,0,3")
    assert code == 0 and "13/72" in out
    assert call("times23", "encode", "--digits", "1,0,3,1,1,1")[0] == 2


def test_robinson_supertile_svg(tmp_path):
    path = tmp_path / "s2.svg"
    code, out = call("robinson", "supertile", "--quadrant", "sw", "--order", "2", "--out", str(path))
    assert code == 0
    assert path.read_text().startswith("<?xml")
    assert "violations 0" in out


def test_robinson_audit_round_trip(tmp_path):
    txt = tmp_path / "p.txt"
    assert call("robinson", "supertile", "--order", "2", "--out", str(txt))[0] == 0
    code, out = call("robinson", "audit", "--in", str(txt), "--structure")
    assert code == 0 and "red-corner center 3 3" in out
    rows = [list(r) for r in supertile("sw", 2).cells]
    rows[3][3] = corner("sw", "blue").id
    txt.write_text(RobinsonPatch.from_grid(rows).to_text())
    code, out = call("robinson", "audit", "--in", str(txt))
    assert code == 1 and "violation" in out


def test_robinson_render_pgm(tmp_path):
    txt, pgm = tmp_path / "p.txt", tmp_path / "p.pgm"
    call("robinson", "supertile", "--order", "1", "--out", str(txt))
    assert call("robinson", "render", "--in", str(txt), "--out", str(pgm))[0] == 0
    assert pgm.read_bytes().startswith(b"P5")


def test_lang_dist_converge(tmp_path):
    full = tmp_path / "full.shift"
    save_spec(full_shift((0, 1)), full)
    seq = []
    for k in (2, 3, 4, 5):
        p = tmp_path / f"x{k}.shift"
        save_spec(forbid_words((0, 1), [(1,) * k]), p)
        seq.append(str(p))
    assert call("--porcelain", "lang", "--spec", GOLDEN, "--radius", "1")[1].splitlines()[0].endswith("words 5")
    assert call("--porcelain", "dist", "--a", str(full), "--b", seq[0], "--radius", "3")[1] == \
        "distance 1 resolution 3 margin 0\n"
    code, out = call("--porcelain", "converge", "--limit", str(full), "--spec", *seq, "--radius", "2")
    assert code == 0 and out.splitlines() == ["radius 0 agree_from 0", "radius 1 agree_from 2",
                                              "radius 2 agree_from never"]


def test_space_derive(tmp_path):
    code, out = call("--porcelain", "space", "derive", "--preset", "unary-blocks")
    assert code == 0 and "rank 1 residue X9 full resolution 3" in out
    save_spec(full_shift((0, 1)), tmp_path / "a.shift")
    (tmp_path / "fam").write_text("member a a.shift\nresolution 2\n")
    assert call("space", "derive", "--family", str(tmp_path / "fam"))[0] == 0


def test_examples_subcommands(tmp_path):
    code, out = call("examples", "list")
    assert code == 0 and "corner-cross" in out
    code, out = call("examples", "check", "arrow")
    assert code == 0 and out.count("PASS") == 4
    code, out = call("examples", "render", "corner-cross", "--window", "3")
    assert out.splitlines()[0] == "┼──┼──┼"
    svg = tmp_path / "a.svg"
    assert call("examples", "render", "arrow", "--out", str(svg))[0] == 0 and svg.exists()


def test_exit_codes():
    assert call("bogus")[0] == 2
    assert call("iso1d")[0] == 2
    assert call("iso1d", "--spec", "/nonexistent.shift")[0] == 2
    assert call("lang", "--spec", GOLDEN, "--radius", "2", "--budget", "3")[0] == 3
    assert call("examples", "check", "nope")[0] == 2
    assert main(["--help"]) == 0


def test_deterministic_output():
    a = call("robinson", "supertile", "--order", "3", "--format", "svg")
    b = call("robinson", "supertile", "--order", "3", "--format", "svg")
    assert a == b


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "shiftspace.cli", "times23", "verify", "--m", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "36/36 unique" in res.stdout
