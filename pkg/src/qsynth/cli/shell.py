"""Line processing, script execution and the process entry point."""

from __future__ import annotations

import argparse
import os
import re
import shlex
import sys
from importlib import resources
from pathlib import Path
from typing import Any, TextIO

from .args import ArgumentError, Command, HelpRequest, parse_args, render_help, resolve_name
from .commands import DEFAULT_ALIASES, build_commands
from .session import CommandError, Session

ALIAS_DEPTH_CAP = 16
RC_ENV = "QSYNTH_RC"
DEFAULT_RC = Path("~/.config/qsyn/qsynrc")
PROMPT = "qsyn> "
_VAR = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")


def strip_comment(line: str) -> str:
    """Drop everything after an unquoted ``//``."""
    quote = None
    for i, ch in enumerate(line):
        if quote:
            if ch == quote:
                quote = None
        elif ch in "\"'":
            quote = ch
        elif line.startswith("//", i):
            return line[:i]
    return line


def split_statements(line: str) -> list[str]:
    """Split on unquoted semicolons."""
    parts, buf, quote = [], [], None
    for ch in line:
        if quote:
            if ch == quote:
                quote = None
        elif ch in "\"'":
            quote = ch
        elif ch == ";":
            parts.append("".join(buf))
            buf = []
            continue
        buf.append(ch)
    parts.append("".join(buf))
    return [p.strip() for p in parts if p.strip()]


def parse_script_header(text: str) -> list[str]:
    """Variable names from a leading ``//!ARGS`` banner (empty when absent)."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("//!ARGS"):
            return line[len("//!ARGS"):].split()
        return []
    return []


class Shell:
    def __init__(self, session: Session | None = None, load_rc: bool = False):
        self.session = session or Session()
        self.commands: list[Command] = build_commands()
        for name, text in DEFAULT_ALIASES.items():
            self.session.aliases.setdefault(name, text)
        self.quit_requested = False
        self._script_depth = 0
        if load_rc:
            self.load_rc()

    # parsing

    def substitute(self, text: str) -> str:
        def repl(m: re.Match) -> str:
            name = m.group(1)
            if name not in self.session.variables:
                raise ArgumentError(f"undefined variable '{name}'")
            return self.session.variables[name]
        return _VAR.sub(repl, text)

    def tokenize(self, text: str) -> list[str]:
        try:
            return shlex.split(text)
        except ValueError as exc:
            raise ArgumentError(f"cannot split '{text}': {exc}") from None

    def expand(self, statement: str, depth: int = 0) -> list[list[str]]:
        """Variables, then alias expansion of the first word (possibly into several statements)."""
        tokens = self.tokenize(self.substitute(statement))
        if not tokens:
            return []
        head = tokens[0]
        if head in self.session.aliases:
            if depth >= ALIAS_DEPTH_CAP:
                raise ArgumentError(f"alias expansion of '{head}' exceeds depth {ALIAS_DEPTH_CAP}")
            text = self.session.aliases[head]
            if len(tokens) > 1:
                text += " " + shlex.join(tokens[1:])
            out = []
            for part in split_statements(text):
                out += self.expand(part, depth + 1)
            return out
        return [tokens]

    def resolve(self, tokens: list[str]) -> tuple[Command, dict[str, Any] | HelpRequest]:
        cmd = resolve_name(self.commands, tokens[0])
        i = 1
        while cmd.subcommands and i < len(tokens) and not tokens[i].startswith("-"):
            cmd = cmd.resolve_sub(tokens[i])
            i += 1
        rest = tokens[i:]
        if cmd.on_success is None:
            if any(t in ("-h", "--help") for t in rest):
                return cmd, HelpRequest(cmd)
            names = ", ".join(c.name for c in cmd.subcommands)
            raise ArgumentError(f"'{cmd.path}' needs a subcommand ({names})")
        return cmd, parse_args(cmd, rest)

    def parse_line(self, line: str) -> list[tuple[Command, dict[str, Any] | HelpRequest]]:
        """Parse every statement of ``line`` without running anything."""
        out = []
        for statement in split_statements(strip_comment(line)):
            for tokens in self.expand(statement):
                out.append(self.resolve(tokens))
        return out

    # execution

    def execute_line(self, line: str, record: bool = True) -> int:
        """Run one input line; returns 0 on success, nonzero after the first failure."""
        body = strip_comment(line).strip()
        if not body:
            return 0
        status = 0
        try:
            for statement in split_statements(body):
                for tokens in self.expand(statement):
                    cmd, values = self.resolve(tokens)
                    if isinstance(values, HelpRequest):
                        self.session.out.write(render_help(values.command))
                        continue
                    cmd.on_success(self, values)
                    if self.quit_requested:
                        break
                if self.quit_requested:
                    break
        except (ArgumentError, CommandError) as exc:
            self.session.error(str(exc))
            status = 1
        except KeyboardInterrupt:
            self.session.error("interrupted")
            status = 130
        except Exception as exc:  # the shell must survive any failing pass
            self.session.error(f"{type(exc).__name__}: {exc}")
            status = 1
        if record:
            self.session.history.append(line.strip())
        return status

    def _script_text(self, path: str) -> tuple[str, str]:
        if path.startswith("builtin:"):
            name = path[len("builtin:"):]
            if not name.endswith(".qsyn"):
                name += ".qsyn"
            res = resources.files("qsynth").joinpath("data", "scripts", name)
            if not res.is_file():
                raise CommandError(f"no built-in script '{path[len('builtin:'):]}'")
            return name, res.read_text()
        try:
            return path, Path(path).read_text()
        except OSError as exc:
            raise CommandError(f"cannot read script '{path}': {exc.strerror or exc}") from None

    def run_script(self, path: str, args: list[str]) -> int:
        try:
            name, text = self._script_text(path)
        except CommandError as exc:
            self.session.error(str(exc))
            return 1
        required = parse_script_header(text)
        if len(args) != len(required):
            expected = " ".join(required) if required else "none"
            self.session.error(f"script '{name}' expects {len(required)} argument(s) ({expected}), "
                               f"got {len(args)}")
            return 1
        if self._script_depth >= ALIAS_DEPTH_CAP:
            self.session.error("scripts nested too deeply")
            return 1
        for var, value in zip(required, args):
            self.session.variables[var] = value
        self._script_depth += 1
        try:
            for lineno, line in enumerate(text.splitlines(), 1):
                status = self.execute_line(line, record=False)
                if status:
                    self.session.error(f"{name}:{lineno}: stopped at '{line.strip()}'")
                    return status
                if self.quit_requested:
                    break
        finally:
            self._script_depth -= 1
        return 0

    def rc_path(self) -> Path:
        return Path(os.environ.get(RC_ENV) or DEFAULT_RC).expanduser()

    def load_rc(self) -> None:
        path = self.rc_path()
        if not path.is_file():
            return
        for line in path.read_text().splitlines():
            self.execute_line(line, record=False)

    def interact(self, stream: TextIO) -> int:
        tty = stream.isatty()
        if tty:
            try:
                import readline  # noqa: F401  (line editing when available)
            except ImportError:
                pass
        failed = 0
        while not self.quit_requested:
            try:
                line = input(PROMPT) if tty and stream is sys.stdin else stream.readline()
            except EOFError:
                break
            except KeyboardInterrupt:
                self.session.print("")
                continue
            if not tty and line == "":
                break
            if self.execute_line(line.rstrip("\n")):
                failed = 1
        return 0 if tty else failed


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="qsynth", description="quantum circuit synthesis shell")
    parser.add_argument("-c", "--command", action="append", default=[],
                        help="run this command line (repeatable) instead of reading input")
    parser.add_argument("--no-rc", action="store_true", help="skip the start-up config file")
    parser.add_argument("--log", default=None, help="initial log level")
    parser.add_argument("script", nargs="?", help="script to run")
    parser.add_argument("args", nargs=argparse.REMAINDER, help="script arguments")
    ns = parser.parse_args(argv)
    shell = Shell(load_rc=not ns.no_rc)
    if ns.log:
        try:
            shell.session.set_log_level(ns.log)
        except CommandError as exc:
            shell.session.error(str(exc))
            return 2
    try:
        if ns.script:
            return shell.run_script(ns.script, ns.args)
        if ns.command:
            for line in ns.command:
                if shell.execute_line(line):
                    return 1
            return 0
        return shell.interact(sys.stdin)
    finally:
        shell.session.close()


if __name__ == "__main__":
    sys.exit(main())
