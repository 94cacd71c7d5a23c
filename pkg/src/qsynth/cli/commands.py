"""The command tree of the shell."""

from __future__ import annotations

import resource
import sys
import time
from pathlib import Path
from typing import TYPE_CHECKING, Any

from .. import tableau as tabl
from .. import zx
from ..circuit import basic_optimize, decompose_multi_controlled, parse_qasm, statistics, write_qasm
from ..circuit.core import QuantumCircuit, adjoint, compose
from ..circuit.qasm import QasmError
from ..circuit.random import random_clifford_t
from ..device import (
    DeviceFormatError,
    RoutingError,
    complete_device,
    heavy_hex_device,
    line_device,
    parse_device,
    route,
    star_device,
    t_device,
    unmap,
    validate_mapping,
    write_device,
)
from ..tensor import QubitCapError, Unitary, equiv_up_to_global_phase, unitary_of_circuit, unitary_of_zx
from .args import ArgumentSpec as Arg
from .args import Command, render_help, resolve_name
from .session import LOG_LEVELS, CommandError, Manager

if TYPE_CHECKING:
    from .shell import Shell

KINDS = {"qcir": "qcir", "qc": "qcir", "zx": "zx", "tableau": "tableau", "tabl": "tableau",
         "tensor": "tensor", "ts": "tensor", "device": "device"}
KIND_CHOICES = list(KINDS)


# descriptions of stored objects

def describe(key: str, obj: Any) -> str:
    if key == "qcir":
        return f"{obj.name or 'circuit'}: {obj.n_qubits} qubits, {len(obj.gates)} gates"
    if key == "zx":
        return (f"ZX-diagram: {len(obj.inputs)} inputs, {len(obj.outputs)} outputs, "
                f"{len(obj.spiders())} spiders, {obj.num_edges()} edges")
    if key == "tableau":
        return (f"tableau: {obj.n} qubits, {len(obj.elements)} elements, "
                f"{obj.rotation_count()} rotations, t-count {obj.t_count()}")
    if key == "tensor":
        return f"tensor: {obj.n} qubits"
    if key == "device":
        return str(obj)
    return repr(obj)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CommandError(f"cannot read '{path}': {exc.strerror or exc}") from None


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CommandError(f"cannot write '{path}': {exc.strerror or exc}") from None


def _store(sh: Shell, key: str, obj: Any, replace: bool = False) -> None:
    mgr = sh.session.manager(key)
    if replace and mgr.focus is not None:
        mgr.replace(obj)
        sh.session.print(f"Replaced {mgr.label} {mgr.focus}")
    else:
        i = mgr.add(obj)
        sh.session.print(f"Stored {mgr.label} {i}")


# generic manager verbs

def _manager_commands(key: str) -> list[Command]:
    def do_list(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        if not len(mgr):
            sh.session.print(f"(no {mgr.label}s)")
        for i, obj in mgr.entries.items():
            mark = "*" if i == mgr.focus else " "
            sh.session.print(f"{mark} {i}  {describe(key, obj)}")

    def do_checkout(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        mgr.checkout(v["id"])
        sh.session.print(f"Checked out {mgr.label} {v['id']}")

    def do_delete(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        target = mgr.focus if v["id"] is None else v["id"]
        if target is None:
            raise CommandError(f"{mgr.label} list is empty")
        mgr.delete(target)
        sh.session.print(f"Deleted {mgr.label} {target}")

    return [
        Command("list", f"list the stored {key} entries; '*' marks the focus", on_success=do_list),
        Command("checkout", "move the focus to another entry",
                [Arg("id", "int", "id of the entry to focus")], on_success=do_checkout),
        Command("delete", "delete an entry (the focused one by default)",
                [Arg("id", "int", "id of the entry to delete", required=False)], on_success=do_delete),
    ]


def _report_equiv(sh: Shell, a: Unitary, b: Unitary) -> None:
    rep = equiv_up_to_global_phase(a, b)
    verdict = "Equivalent" if rep.equivalent else "Not equivalent"
    sh.session.print(f"{verdict} (fidelity {rep.fidelity:.9f})")


def _equiv_pair(mgr: Manager, ids: list[int]) -> tuple[Any, Any]:
    if len(ids) > 2:
        raise CommandError("equiv takes at most two ids")
    if len(ids) == 2:
        return mgr.get(ids[0]), mgr.get(ids[1])
    if len(ids) == 1:
        return mgr.get(), mgr.get(ids[0])
    if len(mgr) < 2:
        raise CommandError(f"equiv needs two stored {mgr.label}s")
    # without ids: compare the focused entry with the oldest one
    return mgr.get(), mgr.get(min(mgr.ids()))


def _to_unitary(key: str, obj: Any) -> Unitary:
    try:
        if key == "qcir":
            return unitary_of_circuit(obj)
        if key == "zx":
            return unitary_of_zx(obj)
        if key == "tableau":
            return unitary_of_circuit(tabl.to_circuit(obj))
        if key == "tensor":
            return obj
    except QubitCapError as exc:
        raise CommandError(str(exc)) from None
    raise CommandError(f"no unitary for {key}")


def _equiv_command(key: str) -> Command:
    def run(sh: Shell, v: dict) -> None:
        a, b = _equiv_pair(sh.session.manager(key), v["ids"])
        _report_equiv(sh, _to_unitary(key, a), _to_unitary(key, b))

    return Command("equiv", "check two entries for equality up to global phase",
                   [Arg("ids", "int", "ids to compare; with one id it is compared to the focus",
                        nargs="*"),
                    Arg("-t", "flag", "compare dense unitaries (the only method available)",
                        aliases=("--tensor",))],
                   on_success=run)


# circuits

def _qcir_command() -> Command:
    key = "qcir"

    def do_read(sh: Shell, v: dict) -> None:
        path = v["filepath"]
        try:
            c = parse_qasm(_read_text(path), name=Path(path).stem)
        except QasmError as exc:
            raise CommandError(f"{path}: {exc}") from None
        _store(sh, key, c, v["replace"])

    def do_write(sh: Shell, v: dict) -> None:
        _write_text(v["filepath"], write_qasm(sh.session.manager(key).get()))

    def do_new(sh: Shell, v: dict) -> None:
        _store(sh, key, QuantumCircuit(v["n_qubits"]))

    def do_print(sh: Shell, v: dict) -> None:
        c = sh.session.manager(key).get()
        sh.session.print(describe(key, c))
        if v["stat"]:
            sh.session.print(statistics(c).format())
        if v["gates"]:
            for i, g in enumerate(c.gates):
                sh.session.print(f"  {i}: {g}")
        if v["qasm"]:
            sh.session.out.write(write_qasm(c))

    def do_optimize(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        mgr.replace(basic_optimize(mgr.get()))

    def do_adjoint(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        mgr.replace(adjoint(mgr.get()))

    def do_compose(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        try:
            mgr.replace(compose(mgr.get(), mgr.get(v["id"])))
        except ValueError as exc:
            raise CommandError(str(exc)) from None

    def do_decompose(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        mgr.replace(decompose_multi_controlled(mgr.get()))

    def do_random(sh: Shell, v: dict) -> None:
        c = random_clifford_t(v["n_qubits"], v["n_gates"], v["seed"])
        c.name = f"random_{v['n_qubits']}_{v['n_gates']}_{v['seed']}"
        _store(sh, key, c)

    cmd = Command("qcir", "quantum circuit commands", subcommands=_manager_commands(key))
    for sub in [
        Command("read", "read a quantum circuit from a file and store it",
                [Arg("filepath", "string", "path to the circuit file (OpenQASM 2, .qasm)"),
                 Arg("-r", "flag", "if specified, replace the focused circuit instead of storing a new one",
                     aliases=("--replace",))],
                on_success=do_read),
        Command("write", "write the focused circuit as OpenQASM",
                [Arg("filepath", "string", "output path")], on_success=do_write),
        Command("new", "store a new empty circuit",
                [Arg("n_qubits", "int", "number of qubits", default=0)], on_success=do_new),
        Command("print", "print the focused circuit",
                [Arg("-s", "flag", "print gate statistics", aliases=("--stat",)),
                 Arg("-g", "flag", "list every gate", aliases=("--gates",)),
                 Arg("-q", "flag", "print the circuit as OpenQASM", aliases=("--qasm",))],
                on_success=do_print),
        _equiv_command(key),
        Command("optimize", "run the basic gate cancellation and merging passes", on_success=do_optimize),
        Command("adjoint", "replace the focused circuit by its inverse", on_success=do_adjoint),
        Command("compose", "append another stored circuit to the focused one",
                [Arg("id", "int", "id of the circuit to append")], on_success=do_compose),
        Command("decompose", "expand multi-controlled gates into Clifford+T", on_success=do_decompose),
        Command("random", "store a random Clifford+T circuit",
                [Arg("n_qubits", "int", "number of qubits"), Arg("n_gates", "int", "number of gates"),
                 Arg("--seed", "int", "random seed", default=0)],
                on_success=do_random),
    ]:
        cmd.add_subcommand(sub)
    return cmd


# ZX-diagrams

def _zx_command() -> Command:
    key = "zx"

    def do_read(sh: Shell, v: dict) -> None:
        try:
            d = zx.parse_zx(_read_text(v["filepath"]))
        except ValueError as exc:
            raise CommandError(f"{v['filepath']}: {exc}") from None
        _store(sh, key, d, v["replace"])

    def do_write(sh: Shell, v: dict) -> None:
        _write_text(v["filepath"], zx.write_zx(sh.session.manager(key).get()))

    def do_new(sh: Shell, v: dict) -> None:
        _store(sh, key, zx.ZXDiagram())

    def do_print(sh: Shell, v: dict) -> None:
        d = sh.session.manager(key).get()
        sh.session.print(describe(key, d))
        sh.session.print(f"t-count: {d.t_count()}, non-Clifford spiders: {d.non_clifford_count()}, "
                         f"graph-like: {'yes' if d.is_graph_like() else 'no'}")
        if v["raw"]:
            sh.session.out.write(zx.write_zx(d))

    def do_optimize(sh: Shell, v: dict) -> None:
        mgr = sh.session.manager(key)
        d = mgr.get()
        try:
            if v["clifford"]:
                out = zx.simplify.clifford_reduce(d)
            elif v["graph_like"]:
                out = zx.to_graph_like(d)
            else:
                out = zx.full_reduce(d, early_stop=v["early_stop"])
        except zx.IterationCapError as exc:
            raise CommandError(str(exc)) from None
        mgr.replace(out)

    cmd = Command("zx", "ZX-diagram commands", subcommands=_manager_commands(key))
    for sub in [
        Command("read", "read a ZX-diagram in the zx-v1 text format",
                [Arg("filepath", "string", "path to the diagram file"),
                 Arg("-r", "flag", "if specified, replace the focused diagram instead of storing a new one",
                     aliases=("--replace",))],
                on_success=do_read),
        Command("write", "write the focused diagram in the zx-v1 text format",
                [Arg("filepath", "string", "output path")], on_success=do_write),
        Command("new", "store a new empty diagram", on_success=do_new),
        Command("print", "print the focused diagram",
                [Arg("-r", "flag", "dump vertices and edges", aliases=("--raw",))], on_success=do_print),
        _equiv_command(key),
        Command("optimize", "simplify the focused diagram (full reduction by default)",
                [Arg("-f", "flag", "full reduction including phase-gadget rules", aliases=("--full",)),
                 Arg("-c", "flag", "Clifford rules only", aliases=("--clifford",)),
                 Arg("-g", "flag", "only bring the diagram to graph-like form", aliases=("--graph-like",)),
                 Arg("-e", "flag", "stop once the two-qubit estimate stops improving",
                     aliases=("--early-stop",))],
                on_success=do_optimize),
    ]:
        cmd.add_subcommand(sub)
    return cmd


# tableaux

def _tableau_command() -> Command:
    key = "tableau"

    def focused(sh: Shell):
        return sh.session.manager(key)

    def do_new(sh: Shell, v: dict) -> None:
        _store(sh, key, tabl.Tableau(v["n_qubits"], [tabl.CliffordTableau(v["n_qubits"])]))

    def do_print(sh: Shell, v: dict) -> None:
        t = focused(sh).get()
        sh.session.print(describe(key, t) if v["stat"] else str(t))

    def do_write(sh: Shell, v: dict) -> None:
        _write_text(v["filepath"], str(focused(sh).get()) + "\n")

    def replace_with(fn):
        def run(sh: Shell, v: dict) -> None:
            mgr = focused(sh)
            before = mgr.get().t_count()
            mgr.replace(fn(mgr.get(), v))
            sh.session.print(f"t-count {before} -> {mgr.get().t_count()}")
        return run

    def full(t, v):
        best, history = tabl.full_optimize(t, v["max_rounds"])
        return best

    opt = Command("optimize", "tableau optimization passes")
    for sub in [
        Command("full", "repeat tmerge, hopt and phase-polynomial optimization until the t-count settles",
                [Arg("--max-rounds", "int", "round limit", default=20)], on_success=replace_with(full)),
        Command("tmerge", "merge rotations about the same Pauli axis",
                on_success=replace_with(lambda t, v: tabl.tmerge(t))),
        Command("hopt", "regroup rotations into diagonal groups between Clifford layers",
                on_success=replace_with(lambda t, v: tabl.hopt(t))),
        Command("phasepoly", "optimize the diagonal rotation groups as phase polynomials",
                [Arg("strategy", "string", "optimization strategy", default="todd", choices=["todd"])],
                on_success=replace_with(lambda t, v: tabl.phasepoly_optimize(t, v["strategy"]))),
    ]:
        opt.add_subcommand(sub)

    cmd = Command("tableau", "tableau commands", subcommands=_manager_commands(key))
    for sub in [
        Command("new", "store an identity tableau",
                [Arg("n_qubits", "int", "number of qubits", default=0)], on_success=do_new),
        Command("print", "print the focused tableau",
                [Arg("-s", "flag", "print only a one-line summary", aliases=("--stat",))],
                on_success=do_print),
        Command("write", "write the printed form of the focused tableau",
                [Arg("filepath", "string", "output path")], on_success=do_write),
        _equiv_command(key),
        opt,
    ]:
        cmd.add_subcommand(sub)
    return cmd


def _tensor_command() -> Command:
    key = "tensor"

    def do_print(sh: Shell, v: dict) -> None:
        u = sh.session.manager(key).get()
        sh.session.print(describe(key, u))
        if v["matrix"]:
            import numpy as np
            sh.session.print(np.array2string(u.matrix, precision=4, suppress_small=True))

    cmd = Command("tensor", "dense unitary commands", subcommands=_manager_commands(key))
    cmd.add_subcommand(Command("print", "print the focused unitary",
                               [Arg("-m", "flag", "print the matrix", aliases=("--matrix",))],
                               on_success=do_print))
    cmd.add_subcommand(_equiv_command(key))
    return cmd


# devices and routing

_DEVICE_BUILDERS = {
    "line": line_device,
    "complete": complete_device,
    "star": star_device,
    "heavyhex": heavy_hex_device,
}


def _device_command() -> Command:
    key = "device"

    def do_read(sh: Shell, v: dict) -> None:
        try:
            d = parse_device(_read_text(v["filepath"]))
        except DeviceFormatError as exc:
            raise CommandError(f"{v['filepath']}: {exc}") from None
        _store(sh, key, d, v["replace"])

    def do_write(sh: Shell, v: dict) -> None:
        _write_text(v["filepath"], write_device(sh.session.manager(key).get()))

    def do_new(sh: Shell, v: dict) -> None:
        if v["topology"] == "tee":
            d = t_device()
        else:
            try:
                d = _DEVICE_BUILDERS[v["topology"]](v["n_qubits"])
            except ValueError as exc:
                raise CommandError(str(exc)) from None
        _store(sh, key, d)

    def do_print(sh: Shell, v: dict) -> None:
        d = sh.session.manager(key).get()
        sh.session.print(str(d))
        sh.session.out.write(write_device(d))

    cmd = Command("device", "device topology commands", subcommands=_manager_commands(key))
    for sub in [
        Command("read", "read a device coupling graph",
                [Arg("filepath", "string", "path to the device file"),
                 Arg("-r", "flag", "if specified, replace the focused device instead of storing a new one",
                     aliases=("--replace",))],
                on_success=do_read),
        Command("write", "write the focused device", [Arg("filepath", "string", "output path")],
                on_success=do_write),
        Command("new", "store a generated device",
                [Arg("topology", "string", "coupling graph family",
                     choices=["line", "complete", "star", "heavyhex", "tee"]),
                 Arg("n_qubits", "int", "number of physical qubits", default=5)],
                on_success=do_new),
        Command("print", "print the focused device", on_success=do_print),
    ]:
        cmd.add_subcommand(sub)
    return cmd


def _duostra_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        circuits = sh.session.manager("qcir")
        c = circuits.get()
        d = sh.session.manager("device").get()
        try:
            r = route(c, d, v["objective"], v["scheduler"], v["placement"],
                      decompose_swaps=v["decompose_swaps"])
        except RoutingError as exc:
            raise CommandError(str(exc)) from None
        sh.session.print(f"Routed onto {d.name}: {r.summary()}")
        if v["check"]:
            ok = validate_mapping(r, d)
            sh.session.print(f"mapping valid: {'yes' if ok else 'no'}")
            if c.n_qubits <= 10:
                _report_equiv(sh, unitary_of_circuit(c), unitary_of_circuit(unmap(r)))
        mapped = r.mapped_circuit
        mapped.name = f"{c.name or 'circuit'}_mapped"
        _store(sh, "qcir", mapped)

    return Command("duostra", "route the focused circuit onto the focused device",
                   [Arg("-o", "string", "quantity to minimize", default="swaps", choices=["swaps", "depth"],
                        aliases=("--objective",)),
                    Arg("-s", "string", "SWAP selection strategy", default="heuristic",
                        choices=["heuristic", "search"], aliases=("--scheduler",)),
                    Arg("-p", "string", "initial placement", default="identity", choices=["identity", "greedy"],
                        aliases=("--placement",)),
                    Arg("-d", "flag", "report delay as if each SWAP were three CX gates",
                        aliases=("--decompose-swaps",)),
                    Arg("-c", "flag", "validate the mapping and check equivalence after routing",
                        aliases=("--check",))],
                   on_success=run)


# conversion

def _convert(sh: Shell, src: str, dst: str) -> None:
    s = sh.session
    obj = s.manager(src).get()
    try:
        if (src, dst) == ("qcir", "zx"):
            out: Any = zx.from_circuit(obj)
        elif (src, dst) == ("zx", "qcir"):
            d = obj if obj.is_graph_like() else zx.to_graph_like(obj)
            out = zx.extract_circuit(d)
        elif (src, dst) == ("qcir", "tableau"):
            out = tabl.from_circuit(obj)
        elif (src, dst) == ("tableau", "qcir"):
            out = tabl.to_circuit(obj)
        elif dst == "tensor" and src in ("qcir", "zx", "tableau"):
            out = _to_unitary(src, obj)
        else:
            raise CommandError(f"no conversion from {src} to {dst}")
    except (ValueError, zx.ExtractionError) as exc:
        raise CommandError(f"conversion failed: {exc}") from None
    if dst == "qcir" and src == "tableau":
        out.name = "from_tableau"
    _store(sh, dst, out)


def _convert_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        _convert(sh, KINDS[v["src"]], KINDS[v["dst"]])

    return Command("convert", "convert the focused entry of one representation into another",
                   [Arg("src", "string", "source representation", choices=KIND_CHOICES),
                    Arg("dst", "string", "target representation", choices=KIND_CHOICES)],
                   on_success=run)


# utilities

def _alias_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        s = sh.session
        name, text = v["name"], v["expansion"]
        if v["delete"]:
            if name is None:
                raise CommandError("alias -d needs a name")
            if name not in s.aliases:
                raise CommandError(f"unknown alias '{name}'")
            del s.aliases[name]
            return
        if name is None:
            for k, e in s.aliases.items():
                s.print(f"{k} = {e}")
            return
        if text is None:
            if name not in s.aliases:
                raise CommandError(f"unknown alias '{name}'")
            s.print(f"{name} = {s.aliases[name]}")
            return
        if not name or any(ch.isspace() or ch == ";" for ch in name):
            raise CommandError(f"invalid alias name '{name}'")
        s.aliases[name] = text

    return Command("alias", "set, show or remove command aliases",
                   [Arg("name", "string", "alias name", required=False),
                    Arg("expansion", "string", "replacement text for the first word of a command", required=False),
                    Arg("-d", "flag", "remove the alias", aliases=("--delete",))],
                   on_success=run)


def _set_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        s = sh.session
        name, value = v["name"], v["value"]
        if v["delete"]:
            if name is None or name not in s.variables:
                raise CommandError(f"unknown variable '{name}'")
            del s.variables[name]
            return
        if name is None:
            for k, val in s.variables.items():
                s.print(f"{k} = {val}")
            return
        if value is None:
            if name not in s.variables:
                raise CommandError(f"unknown variable '{name}'")
            s.print(f"{name} = {s.variables[name]}")
            return
        if not name.replace("_", "a").isalnum():
            raise CommandError(f"invalid variable name '{name}'")
        s.variables[name] = value

    return Command("set", "set, show or remove variables used as ${NAME}",
                   [Arg("name", "string", "variable name", required=False),
                    Arg("value", "string", "value", required=False),
                    Arg("-d", "flag", "remove the variable", aliases=("--delete",))],
                   on_success=run)


def _history_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        s = sh.session
        lines = s.history if v["count"] is None else s.history[-v["count"]:] if v["count"] else []
        if v["output"]:
            _write_text(v["output"], "".join(line + "\n" for line in lines))
            return
        start = len(s.history) - len(lines)
        for i, line in enumerate(lines, start):
            s.print(f"{i:4d}  {line}")

    return Command("history", "show or export the executed command lines",
                   [Arg("count", "int", "show only the most recent lines", required=False),
                    Arg("-o", "string", "write the lines to this file instead", aliases=("--output",),
                        metavar="file")],
                   on_success=run)


def _usage_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        elapsed = time.perf_counter() - sh.session.started
        try:
            peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
            scale = 1 if sys.platform == "darwin" else 1024
            mem = f"{peak * scale / 2 ** 20:.2f} MiB"
        except (AttributeError, ValueError, OSError):
            mem = "n/a"
        sh.session.print(f"Period time: {elapsed:.3f} s")
        sh.session.print(f"Peak memory: {mem}")

    return Command("usage", "show the time since start-up and the peak memory", on_success=run)


def _logger_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        if v["level"] is None:
            sh.session.print(f"log level: {sh.session.log_level}")
        else:
            sh.session.set_log_level(v["level"])

    return Command("logger", "show or set the log level",
                   [Arg("level", "string", "new level", required=False, choices=list(LOG_LEVELS))],
                   on_success=run)


def _help_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        words = v["command"]
        if not words:
            width = max(len(c.name) for c in sh.commands) + 4
            for c in sh.commands:
                sh.session.print(f"{c.name.ljust(width)}{c.description}")
            if sh.session.aliases:
                sh.session.print("")
                sh.session.print("Aliases: " + ", ".join(sh.session.aliases))
            return
        first = sh.session.aliases.get(words[0], words[0]).split() + words[1:]
        cmd = resolve_name(sh.commands, first[0])
        for w in first[1:]:
            cmd = cmd.resolve_sub(w)
        sh.session.out.write(render_help(cmd))

    return Command("help", "list the commands or show the help of one",
                   [Arg("command", "string", "command path", nargs="*")], on_success=run)


def _echo_command() -> Command:
    return Command("echo", "print the arguments",
                   [Arg("text", "string", "words to print", nargs="*")],
                   on_success=lambda sh, v: sh.session.print(" ".join(v["text"])), raw=True)


def _source_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        status = sh.run_script(v["script"], v["args"])
        if status:
            raise CommandError(f"script '{v['script']}' failed")

    return Command("source", "run the commands of a script file (builtin:NAME for bundled scripts)",
                   [Arg("script", "string", "script path"),
                    Arg("args", "string", "script arguments", nargs="*")],
                   on_success=run)


def _quit_command() -> Command:
    def run(sh: Shell, v: dict) -> None:
        sh.quit_requested = True

    return Command("quit", "leave the shell", on_success=run)


def build_commands() -> list[Command]:
    return [
        _alias_command(),
        _convert_command(),
        _device_command(),
        _duostra_command(),
        _echo_command(),
        _help_command(),
        _history_command(),
        _logger_command(),
        _qcir_command(),
        _quit_command(),
        _set_command(),
        _source_command(),
        _tableau_command(),
        _tensor_command(),
        _usage_command(),
        _zx_command(),
    ]


DEFAULT_ALIASES = {
    "qc": "qcir",
    "tabl": "tableau",
    "ts": "tensor",
    "qc2zx": "convert qcir zx",
    "zx2qc": "convert zx qcir",
    "qc2tabl": "convert qcir tableau",
    "tabl2qc": "convert tableau qcir",
    "qc2ts": "convert qcir tensor",
    "zx2ts": "convert zx tensor",
    "qzq": "source builtin:qzq",
    "qtablq": "source builtin:qtablq",
    "exit": "quit",
}
