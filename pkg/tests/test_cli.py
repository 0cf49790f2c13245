"""Command-line behaviour: pipelines, exit codes, file round trips."""

import subprocess
import sys

import pytest

from holesandwich.cli import main
from holesandwich.io import parse_instance

DIMACS_XYZ = "c one clause\np cnf 3 1\n1 2 3 0\n"
DIMACS_MIXED = "p cnf 3 1\n1 -2 3 0\n"


@pytest.fixture
def workdir(tmp_path):
    (tmp_path / "xyz.cnf").write_text(DIMACS_XYZ)
    (tmp_path / "mixed.cnf").write_text(DIMACS_MIXED)
    return tmp_path


def run(*argv):
    return main([str(a) for a in argv])


# -- reduce / solve / extract pipelines -----------------------------------------

def test_even_pipeline(workdir, capsys):
    inst = workdir / "even.inst"
    comp = workdir / "even.comp"
    assert run("reduce-even", workdir / "xyz.cnf", "--out", inst) == 0
    assert (workdir / "even.inst.roles.json").exists()
    assert run("solve", inst, "--property", "even-hole-free",
               "--completion-out", comp) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "SAT"
    assert run("extract", comp, "--roles",
               workdir / "even.inst.roles.json") == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "satisfies formula: true"
    assert all(line.split("=")[1] in ("true", "false")
               for line in out.splitlines()[:-1])


@pytest.mark.parametrize("prop", ["c5-free", "odd-hole-free"])
def test_odd_pipeline(workdir, capsys, prop):
    inst = workdir / "odd.inst"
    comp = workdir / "odd.comp"
    roles = workdir / "odd.roles.json"
    assert run("reduce-odd", workdir / "mixed.cnf", "--property", prop,
               "--out", inst, "--roles", roles) == 0
    assert run("solve", inst, "--property", prop,
               "--completion-out", comp) == 0
    assert capsys.readouterr().out.splitlines()[0] == "SAT"
    assert run("extract", comp, "--roles", roles) == 0
    assert capsys.readouterr().out.splitlines()[-1] == \
        "satisfies formula: true"


def test_reduce_writes_parseable_instance(workdir, capsys):
    assert run("reduce-even", workdir / "xyz.cnf") == 0
    text = capsys.readouterr().out
    inst = parse_instance(text)
    assert inst.n == 16 and len(inst.optional) == 60


# -- complement ------------------------------------------------------------------

def test_complement_twice_is_byte_identical(workdir):
    inst = workdir / "even.inst"
    once = workdir / "c1.inst"
    twice = workdir / "c2.inst"
    run("reduce-even", workdir / "xyz.cnf", "--out", inst)
    assert run("complement", inst, "--out", once) == 0
    assert run("complement", once, "--out", twice) == 0
    assert twice.read_bytes() == inst.read_bytes()
    assert once.read_bytes() != inst.read_bytes()


# -- check -----------------------------------------------------------------------

def test_check_verdicts_and_exit_codes(workdir, capsys):
    inst = workdir / "even.inst"
    comp = workdir / "even.comp"
    run("reduce-even", workdir / "xyz.cnf", "--out", inst)
    run("solve", inst, "--property", "even-hole-free",
        "--completion-out", comp)
    capsys.readouterr()

    assert run("check", inst, "--property", "even-hole-free",
               "--completion", comp) == 0
    assert capsys.readouterr().out.startswith("even-hole-free: true")

    assert run("check", inst, "--property", "chordal", "--graph", "g1") == 1
    out = capsys.readouterr().out
    assert out.startswith("chordal: false")
    assert "certificate hole:" in out

    # Ambiguous target graph is a usage error.
    assert run("check", inst, "--property", "chordal") == 2
    assert run("check", inst, "--property", "chordal", "--graph", "g1",
               "--completion", comp) == 2


def test_check_budget_exhaustion_is_exit_three(workdir, capsys):
    inst = workdir / "even.inst"
    run("reduce-even", workdir / "xyz.cnf", "--out", inst)
    capsys.readouterr()
    assert run("check", inst, "--property", "even-hole-free", "--graph",
               "g2", "--budget", "1") == 3


def test_solve_budget_verdict_is_exit_three(workdir, capsys):
    inst = workdir / "even.inst"
    run("reduce-even", workdir / "xyz.cnf", "--out", inst)
    capsys.readouterr()
    assert run("solve", inst, "--property", "even-hole-free",
               "--budget", "1") == 3
    assert capsys.readouterr().out.splitlines()[0] == "BUDGET"


# -- extract failure paths -------------------------------------------------------

def test_extract_flags_unsound_completion(workdir, capsys):
    inst = workdir / "even.inst"
    run("reduce-even", workdir / "xyz.cnf", "--out", inst)
    (workdir / "empty.comp").write_text("completion 0\n")
    capsys.readouterr()
    code = run("extract", workdir / "empty.comp", "--roles",
               workdir / "even.inst.roles.json")
    assert code == 1
    assert "error:" in capsys.readouterr().err


# -- usage errors ----------------------------------------------------------------

def test_usage_errors_exit_two(workdir, capsys):
    assert run("solve", workdir / "missing.inst",
               "--property", "chordal") == 2
    assert "error:" in capsys.readouterr().err
    (workdir / "bad.inst").write_text("not an instance\n")
    assert run("solve", workdir / "bad.inst", "--property", "chordal") == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as info:
        run("solve", workdir / "bad.inst", "--property", "berge")
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        run("frobnicate")
    capsys.readouterr()


def test_malformed_cnf_exits_two(workdir, capsys):
    (workdir / "bad.cnf").write_text("p cnf 3 1\n1 2 0\n")
    assert run("reduce-even", workdir / "bad.cnf") == 2
    assert "error:" in capsys.readouterr().err


# -- export-dot ------------------------------------------------------------------

def test_export_dot_styles(workdir, capsys):
    inst = workdir / "even.inst"
    comp = workdir / "even.comp"
    run("reduce-even", workdir / "xyz.cnf", "--out", inst)
    run("solve", inst, "--property", "even-hole-free",
        "--completion-out", comp)
    capsys.readouterr()
    assert run("export-dot", inst, "--name", "gadget") == 0
    out = capsys.readouterr().out
    assert out.startswith("graph gadget {")
    assert '[label="H"]' in out
    assert "style=dashed" in out
    assert "style=bold" not in out
    assert run("export-dot", inst, "--completion", comp) == 0
    assert "style=bold" in capsys.readouterr().out


# -- verify ----------------------------------------------------------------------

def test_verify_reports_seed_and_passes(workdir, capsys):
    assert run("verify", "--suite", "even-instance-census",
               "--seed", "5") == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "seed 5"
    assert "[PASS] 8 even-instance-census" in out


# -- console script wiring -------------------------------------------------------

def test_module_entry_point(workdir):
    done = subprocess.run(
        [sys.executable, "-m", "holesandwich.cli", "reduce-even",
         str(workdir / "xyz.cnf")],
        capture_output=True, text=True)
    assert done.returncode == 0
    assert done.stdout.startswith("sandwich 16")
