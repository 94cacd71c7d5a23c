"""Declarative command definitions, argument parsing and help rendering.

The help layout is fixed by golden files, so this module formats it by hand
instead of going through :mod:`argparse`.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

ValueKind = str  # "string" | "int" | "real" | "flag"

_TYPE_WORDS = {"string": "string", "int": "int", "real": "real", "flag": "flag"}


class ArgumentError(ValueError):
    """A user-facing parse failure, reported as one line."""


@dataclass
class ArgumentSpec:
    name: str
    kind: ValueKind = "string"
    help: str = ""
    default: Any = None
    required: bool | None = None
    choices: list[str] | None = None
    aliases: tuple[str, ...] = ()
    nargs: str | None = None  # None (exactly one) or "*" (zero or more, positional only)
    metavar: str | None = None

    def __post_init__(self):
        if self.kind not in _TYPE_WORDS:
            raise ValueError(f"unknown argument kind {self.kind!r}")
        if self.is_option:
            if not all(a.startswith("-") for a in self.aliases):
                raise ValueError("option aliases must start with '-'")
        elif self.aliases:
            raise ValueError("positional arguments take no aliases")
        if self.choices is not None and len(set(self.choices)) != len(self.choices):
            raise ValueError(f"duplicate choices for {self.name}")
        if self.kind == "flag":
            if not self.is_option:
                raise ValueError("flags must be options")
            self.default = bool(self.default)
        if self.required is None:
            self.required = not self.is_option and self.default is None and self.nargs != "*"

    @property
    def is_option(self) -> bool:
        return self.name.startswith("-")

    @property
    def dest(self) -> str:
        forms = [self.name, *self.aliases]
        long = next((f for f in forms if f.startswith("--")), forms[0])
        return long.lstrip("-").replace("-", "_")

    def forms(self) -> list[str]:
        """Short forms first, then long ones."""
        forms = [self.name, *self.aliases]
        return sorted(forms, key=lambda f: (f.startswith("--"), forms.index(f)))

    @property
    def type_word(self) -> str:
        return _TYPE_WORDS[self.kind]

    @property
    def label(self) -> str:
        return self.metavar or self.dest

    def convert(self, raw: str) -> Any:
        if self.kind == "int":
            try:
                value: Any = int(raw)
            except ValueError:
                raise ArgumentError(f"argument {self.label}: expected an integer, got {raw!r}") from None
        elif self.kind == "real":
            try:
                value = float(raw)
            except ValueError:
                raise ArgumentError(f"argument {self.label}: expected a number, got {raw!r}") from None
        else:
            value = raw
        if self.choices is not None and value not in self.choices:
            raise ArgumentError(f"argument {self.label}: invalid choice {raw!r} "
                                f"(choose from {', '.join(self.choices)})")
        return value

    def usage_token(self) -> str:
        if self.is_option:
            short = self.forms()[0]
            if self.kind == "flag":
                return f"[{short}]"
            return f"[{short} <{self.type_word} {self.label}>]"
        inner = f"<{self.type_word} {self.label}>"
        if self.nargs == "*":
            return f"[{inner}...]"
        return inner if self.required else f"[{inner}]"

    def help_text(self) -> str:
        text = self.help
        if self.choices is not None:
            text += f" (choices: {', '.join(self.choices)})"
        if self.default not in (None, False) and self.kind != "flag":
            text += f" (default: {self.default})"
        return text.strip()


HELP_OPTION = ArgumentSpec("-h", "flag", "show this help message", aliases=("--help",))


Action = Callable[[Any, dict[str, Any]], None]


@dataclass
class Command:
    name: str
    description: str
    args: list[ArgumentSpec] = field(default_factory=list)
    subcommands: list[Command] = field(default_factory=list)
    on_success: Action | None = None
    # pass every token to the single list positional, even ones starting with '-'
    raw: bool = False
    parent: Command | None = field(default=None, repr=False)

    def __post_init__(self):
        for sub in self.subcommands:
            sub.parent = self

    def add_subcommand(self, cmd: Command) -> Command:
        cmd.parent = self
        self.subcommands.append(cmd)
        return cmd

    @property
    def path(self) -> str:
        return f"{self.parent.path} {self.name}" if self.parent else self.name

    def all_args(self) -> list[ArgumentSpec]:
        return [HELP_OPTION, *self.args]

    def resolve_sub(self, token: str) -> Command:
        return resolve_name(self.subcommands, token, f"subcommand of '{self.path}'")


def resolve_name(cmds: list[Command], token: str, what: str = "command") -> Command:
    """Exact match first, otherwise a unique prefix."""
    for c in cmds:
        if c.name == token:
            return c
    matches = [c for c in cmds if c.name.startswith(token)]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise ArgumentError(f"unknown {what}: '{token}'")
    names = ", ".join(c.name for c in matches)
    raise ArgumentError(f"ambiguous {what} '{token}': could be {names}")


@dataclass
class HelpRequest:
    command: Command


def parse_args(cmd: Command, tokens: list[str]) -> dict[str, Any] | HelpRequest:
    """Parse ``tokens`` for ``cmd``; a ``-h`` anywhere short-circuits to help."""
    if cmd.raw:
        return {cmd.args[0].dest: list(tokens)}
    if any(t in ("-h", "--help") for t in tokens):
        return HelpRequest(cmd)
    options = [a for a in cmd.args if a.is_option]
    positionals = [a for a in cmd.args if not a.is_option]
    values: dict[str, Any] = {a.dest: ([] if a.nargs == "*" else a.default) for a in cmd.args}
    seen: set[str] = set()
    pos_tokens: list[str] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.startswith("-") and len(tok) > 1 and not _is_number(tok):
            spec = _match_option(options, tok)
            if spec.kind == "flag":
                values[spec.dest] = True
            else:
                if i + 1 >= len(tokens):
                    raise ArgumentError(f"option {tok} expects a value")
                i += 1
                values[spec.dest] = spec.convert(tokens[i])
            seen.add(spec.dest)
            i += 1
            continue
        pos_tokens.append(tok)
        i += 1
    k = 0
    for spec in positionals:
        if spec.nargs == "*":
            values[spec.dest] = [spec.convert(t) for t in pos_tokens[k:]]
            k = len(pos_tokens)
            continue
        if k < len(pos_tokens):
            values[spec.dest] = spec.convert(pos_tokens[k])
            seen.add(spec.dest)
            k += 1
        elif spec.required:
            raise ArgumentError(f"missing required argument: {spec.label}")
    if k < len(pos_tokens):
        raise ArgumentError(f"unexpected argument: '{pos_tokens[k]}'")
    for spec in options:
        if spec.required and spec.dest not in seen:
            raise ArgumentError(f"missing required option: {spec.forms()[-1]}")
    return values


def _is_number(tok: str) -> bool:
    try:
        float(tok)
    except ValueError:
        return False
    return True


def _match_option(options: list[ArgumentSpec], tok: str) -> ArgumentSpec:
    exact = [o for o in options if tok in o.forms()]
    if exact:
        return exact[0]
    if tok.startswith("--"):
        pref = [o for o in options if any(f.startswith(tok) for f in o.forms() if f.startswith("--"))]
        if len(pref) == 1:
            return pref[0]
        if len(pref) > 1:
            raise ArgumentError(f"ambiguous option '{tok}'")
    raise ArgumentError(f"unknown option '{tok}'")


def _rows(specs: list[ArgumentSpec], names: list[str]) -> list[str]:
    type_w = max(len(s.type_word) for s in specs)
    name_w = max(len(n) for n in names) + 4
    out = []
    for s, n in zip(specs, names):
        text = s.help_text()
        line = f"  {s.type_word.ljust(type_w)}  {n.ljust(name_w)}{text}" if text else f"  {s.type_word.ljust(type_w)}  {n}"
        out.append(line.rstrip())
    return out


def render_help(cmd: Command) -> str:
    """Usage, description, subcommands, positional arguments and options."""
    specs = cmd.all_args()
    usage = [f"Usage: {cmd.path}"] + [s.usage_token() for s in specs if s.is_option]
    usage += [s.usage_token() for s in specs if not s.is_option]
    if cmd.subcommands:
        usage.append("<(" + " | ".join(c.name for c in cmd.subcommands) + ")>")
    lines = [" ".join(usage), "", "Description:", f"  {cmd.description}"]
    if cmd.subcommands:
        lines += ["", "Subcommands:"]
        width = max(len(c.name) for c in cmd.subcommands) + 4
        lines += [f"  {c.name.ljust(width)}{c.description}" for c in cmd.subcommands]
    pos = [s for s in specs if not s.is_option]
    if pos:
        lines += ["", "Positional Arguments:"]
        lines += _rows(pos, [s.label for s in pos])
    opts = [s for s in specs if s.is_option]
    lines += ["", "Options:"]
    names = []
    for s in opts:
        form = ", ".join(s.forms())
        if s.kind != "flag":
            form += f" <{s.label}>"
        names.append(form)
    lines += _rows(opts, names)
    return "\n".join(lines) + "\n"
