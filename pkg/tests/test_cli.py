import io
import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BENCHMARKS, GOLDEN, oracle_unitary, same_up_to_phase
from qsynth.circuit import parse_qasm, write_qasm
from qsynth.circuit.random import random_clifford
from qsynth.cli.args import ArgumentError, render_help
from qsynth.cli.commands import build_commands
from qsynth.cli.session import Session
from qsynth.cli.shell import ALIAS_DEPTH_CAP, Shell

TOF3 = str(BENCHMARKS / "tof3.qasm")


class Run:
    """A shell with captured output streams."""

    def __init__(self):
        self.out, self.err = io.StringIO(), io.StringIO()
        self.shell = Shell(Session(out=self.out, err=self.err))

    def __call__(self, line: str) -> int:
        return self.shell.execute_line(line)

    @property
    def session(self) -> Session:
        return self.shell.session

    def stdout(self) -> str:
        return self.out.getvalue()

    def stderr(self) -> str:
        return self.err.getvalue()


@pytest.fixture
def run() -> Run:
    return Run()


def cli(*args: str, env: dict | None = None) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "qsynth", "--no-rc", *args],
                          capture_output=True, text=True, env=env, timeout=120)


def command(path: str):
    words = path.split()
    cmd = next(c for c in build_commands() if c.name == words[0])
    for w in words[1:]:
        cmd = cmd.resolve_sub(w)
    return cmd


class TestHelp:

    def test_qcir_read_golden(self, run):
        assert run("qcir read -h") == 0
        assert run.stdout() == (GOLDEN / "qcir_read_help.txt").read_text()

    def test_qcir_read_layout(self):
        text = render_help(command("qcir read"))
        lines = text.splitlines()
        assert lines[0] == "Usage: qcir read [-h] [-r] <string filepath>"
        headers = [ln for ln in lines if ln and not ln.startswith(" ")][1:]
        assert headers == ["Description:", "Positional Arguments:", "Options:"]
        assert any(ln.startswith("  flag  -r, --replace") and "if specified, replace the" in ln for ln in lines)
        assert any(ln.split()[:2] == ["string", "filepath"] for ln in lines)

    def test_no_options_only_help_flag(self):
        text = render_help(command("usage"))
        options = text.split("Options:\n")[1].strip().splitlines()
        assert len(options) == 1 and "-h, --help" in options[0]

    def test_nested_usage_has_full_path(self):
        assert render_help(command("tableau optimize full")).startswith("Usage: tableau optimize full ")

    def test_byte_identical(self):
        assert render_help(command("qcir read")) == render_help(command("qcir read"))

    def test_help_command_lists_everything(self, run):
        assert run("help") == 0
        names = [ln.split()[0] for ln in run.stdout().splitlines() if ln and not ln.startswith("Aliases")]
        assert names == sorted(c.name for c in build_commands())

    def test_phasepoly_strategy_default(self, run):
        assert run("tabl opt phasepoly -h") == 0
        assert "(choices: todd) (default: todd)" in run.stdout()


class TestParsing:

    def test_alias_expansion(self, run):
        assert run('alias qr "qcir read"') == 0
        ((cmd, values),) = run.shell.parse_line("qr foo.qasm")
        assert cmd.path == "qcir read"
        assert values["filepath"] == "foo.qasm"
        assert run("alias qr") == 0
        assert run.stdout().strip() == "qr = qcir read"

    def test_alias_cycle_is_capped(self, run):
        run("alias loop1 loop2")
        run("alias loop2 loop1")
        assert run("loop1") == 1
        assert f"depth {ALIAS_DEPTH_CAP}" in run.stderr()

    def test_alias_delete(self, run):
        run("alias qr qcir")
        assert run("alias -d qr") == 0
        assert "qr" not in run.session.aliases
        assert run("alias -d qr") == 1

    def test_variable_substitution(self, run):
        assert run(f"set F {TOF3}") == 0
        assert run("qcir read ${F}") == 0
        assert run.session.manager("qcir").get().n_qubits == 3

    def test_undefined_variable(self, run):
        assert run("qcir read ${NOPE}") == 1
        assert "NOPE" in run.stderr()

    def test_semicolons_and_comments(self, run):
        assert run(f"qcir read {TOF3}; qc2zx; zx2qc // comment; qcir new") == 0
        assert run.session.manager("qcir").ids() == [0, 1]

    def test_quoted_semicolon(self, run):
        assert run('echo "a; b"') == 0
        assert run.stdout() == "a; b\n"

    @pytest.mark.parametrize("line", ["zx opt", "zx optimize --full", "tabl opt ph todd"])
    def test_prefix_matching(self, run, line):
        cmd, _ = run.shell.parse_line(line)[0]
        assert cmd.path in ("zx optimize", "tableau optimize phasepoly")

    @pytest.mark.parametrize("line,needle", [
        ("nosuch", "'nosuch'"),
        ("t", "ambiguous command 't'"),
        ("qcir read", "filepath"),
        ("tabl opt phasepoly bogus", "'bogus'"),
        ("history abc", "'abc'"),
        ("qcir frobnicate", "'frobnicate'"),
    ])
    def test_diagnostics(self, run, line, needle):
        assert run(line) == 1
        err = run.stderr()
        assert err.startswith("Error: ") and err.count("\n") == 1
        assert needle in err

    @settings(max_examples=300, deadline=None)
    @given(st.text(alphabet="qcirzxtablhsp -;\"'${}/\\0123", max_size=30))
    def test_parsing_is_total(self, line):
        shell = Shell(Session(out=io.StringIO(), err=io.StringIO()))
        try:
            parsed = shell.parse_line(line)
        except ArgumentError as exc:
            assert str(exc)
        else:
            assert isinstance(parsed, list)


class TestManagers:

    def test_new_list_checkout_delete(self, run):
        assert run("qcir new; qcir new") == 0
        mgr = run.session.manager("qcir")
        assert mgr.ids() == [0, 1] and mgr.focus == 1
        run.out.truncate(0)
        run("qcir list")
        assert [ln.startswith("*") for ln in run.stdout().splitlines()] == [False, True]
        run("qcir checkout 0")
        assert mgr.focus == 0
        run("qcir new")
        run("qcir delete")
        assert mgr.ids() == [0, 1] and mgr.focus == 1

    def test_ids_never_reused(self, run):
        run("qcir new; qcir new; qcir delete 1; qcir new")
        assert run.session.manager("qcir").ids() == [0, 2]

    @pytest.mark.parametrize("line", ["qcir checkout 7", "qcir delete 3", "qcir print", "zx print"])
    def test_invalid_ids_and_empty(self, run, line):
        assert run(line) == 1

    def test_read_write_round_trip(self, run, tmp_path):
        out = tmp_path / "w.qasm"
        assert run(f"qcir read {TOF3}; qcir write {out}") == 0
        a = parse_qasm(Path(TOF3).read_text())
        b = parse_qasm(out.read_text())
        assert same_up_to_phase(oracle_unitary(a), oracle_unitary(b))

    def test_read_replace(self, run):
        run(f"qcir read {TOF3}; qcir read -r {BENCHMARKS / 'adder4.qasm'}")
        mgr = run.session.manager("qcir")
        assert mgr.ids() == [0] and mgr.get().n_qubits == 4


class TestConvertAndEquiv:

    def test_convert_empty_tableau_errors(self, run):
        assert run("convert tabl qc") == 1
        assert "empty" in run.stderr()

    def test_convert_qc_tabl(self, run):
        assert run(f"qcir read {TOF3}; convert qc tabl") == 0
        assert len(run.session.manager("tableau")) == 1
        assert len(run.session.manager("qcir")) == 1

    @pytest.mark.parametrize("seed", range(5))
    def test_clifford_round_trip(self, run, tmp_path, seed):
        original = random_clifford(4, 40, seed)
        path = tmp_path / "cliff.qasm"
        path.write_text(write_qasm(original))
        assert run(f"qcir read {path}") == 0
        assert run("convert qc zx; convert zx qc") == 0
        out = run.session.manager("qcir").get()
        assert same_up_to_phase(oracle_unitary(out), oracle_unitary(original))
        assert run("qc equiv 0 1") == 0
        assert run.stdout().splitlines()[-1].startswith("Equivalent")

    def test_equiv_self(self, run):
        assert run(f"qcir read {TOF3}; qc equiv 0 0 --tensor") == 0
        assert run.stdout().splitlines()[-1].startswith("Equivalent")

    def test_x_vs_z(self, run, tmp_path):
        for g in "xz":
            (tmp_path / f"{g}.qasm").write_text(f'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[1];\n{g} q[0];\n')
        assert run(f"qcir read {tmp_path / 'x.qasm'}; qcir read {tmp_path / 'z.qasm'}; qc equiv 0 1") == 0
        assert run.stdout().splitlines()[-1].startswith("Not equivalent")

    def test_zx_pipeline_equivalent(self, run):
        assert run(f"qcir read {BENCHMARKS / 'qft3_t.qasm'}; qc2zx; zx opt; zx2qc; qc equiv 0 1") == 0
        assert run.stdout().splitlines()[-1].startswith("Equivalent")


class TestUtilities:

    def test_history_three_lines(self, run):
        for line in ("qcir new", "qcir new", "qcir list"):
            run(line)
        run.out.truncate(0)
        run.out.seek(0)
        run("history")
        assert [ln.split(None, 1)[1] for ln in run.stdout().splitlines()] == ["qcir new", "qcir new", "qcir list"]

    def test_history_replay_reproduces_state(self, run, tmp_path):
        for line in (f"qcir read {TOF3}", "qc2zx", "zx optimize --full", "zx2qc", "qcir optimize", "set X 1"):
            assert run(line) == 0
        script = tmp_path / "replay.qsyn"
        assert run(f"history -o {script}") == 0
        replay = Run()
        assert replay.shell.run_script(str(script), []) == 0
        for key in ("qcir", "zx"):
            a, b = run.session.manager(key), replay.session.manager(key)
            assert a.ids() == b.ids() and a.focus == b.focus
        assert run.session.manager("qcir").get().gates == replay.session.manager("qcir").get().gates
        assert replay.session.variables["X"] == "1"

    def test_history_export_unwritable(self, run, tmp_path):
        run("qcir new")
        assert run(f"history -o {tmp_path / 'missing' / 'h.txt'}") == 1

    def test_logger_debug(self, run):
        run(f"qcir read {TOF3}; qc2zx")
        run("zx optimize --full")
        assert "[DEBUG]" not in run.stderr()
        run("logger debug")
        run("zx checkout 0; zx optimize --full")
        run.session.close()
        assert "[DEBUG]" in run.stderr()

    def test_usage(self, run):
        assert run("usage") == 0
        lines = run.stdout().splitlines()
        assert lines[0].startswith("Period time: ")
        assert lines[1].startswith("Peak memory: ")

    def test_set_unset(self, run):
        run("set A b")
        assert run("set -d A") == 0
        assert run("set -d A") == 1

    def test_error_does_not_stop_shell(self, run):
        assert run("nosuch") == 1
        assert run("qcir new") == 0


class TestScripts:

    def test_zxopt_end_to_end(self, run):
        assert run.shell.run_script("builtin:zxopt", [TOF3]) == 0
        out = run.stdout()
        assert "--- pre-optimization  ---" in out and "--- post-optimization ---" in out
        assert out.index("pre-optimization") < out.index("post-optimization")
        assert out.count("t-count") >= 2

    def test_zxopt_missing_input(self, run):
        assert run.shell.run_script("builtin:zxopt", []) != 0
        assert "INPUT" in run.stderr()

    def test_extra_arguments(self, run):
        assert run.shell.run_script("builtin:zxopt", [TOF3, "extra"]) != 0

    def test_comments_only(self, run, tmp_path):
        script = tmp_path / "c.qsyn"
        script.write_text("// nothing here\n\n   // still nothing\n")
        assert run.shell.run_script(str(script), []) == 0
        assert run.stdout() == run.stderr() == ""
        assert all(len(m) == 0 for m in run.session.managers.values())

    def test_aborts_on_first_error(self, run, tmp_path):
        script = tmp_path / "bad.qsyn"
        script.write_text("qcir new\nnosuch\nqcir new\n")
        assert run.shell.run_script(str(script), []) != 0
        assert len(run.session.manager("qcir")) == 1

    def test_missing_file(self, run, tmp_path):
        assert run.shell.run_script(str(tmp_path / "none.qsyn"), []) != 0

    @pytest.mark.parametrize("routine", ["qzq", "qtablq"])
    def test_routines(self, run, routine):
        assert run(f"qcir read {BENCHMARKS / 'qft3_t.qasm'}; {routine}; qc equiv 0 -t") == 0
        assert run.stdout().splitlines()[-1].startswith("Equivalent")


class TestProcess:

    def test_batch_script(self):
        res = cli("builtin:zxopt", TOF3)
        assert res.returncode == 0
        assert "--- post-optimization ---" in res.stdout

    def test_batch_script_arity(self):
        res = cli("builtin:zxopt")
        assert res.returncode != 0
        assert "INPUT" in res.stderr

    def test_piped_input(self):
        res = subprocess.run([sys.executable, "-m", "qsynth", "--no-rc"], input="qcir new\nqcir list\n",
                             capture_output=True, text=True, timeout=60)
        assert res.returncode == 0
        assert "* 0" in res.stdout

    def test_rc_file_from_env(self, tmp_path):
        rc = tmp_path / "rc"
        rc.write_text("alias hi \"echo hello\"\n")
        env = dict(os.environ, QSYNTH_RC=str(rc))
        res = subprocess.run([sys.executable, "-m", "qsynth", "-c", "hi"], capture_output=True, text=True,
                             env=env, timeout=60)
        assert res.stdout == "hello\n"

    def test_command_failure_status(self):
        assert cli("-c", "nosuch").returncode != 0
