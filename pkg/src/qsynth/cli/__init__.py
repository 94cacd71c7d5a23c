"""The interactive synthesis shell."""

from .args import ArgumentError, ArgumentSpec, Command, parse_args, render_help
from .session import CommandError, Manager, Session
from .shell import Shell, main, parse_script_header, split_statements, strip_comment

__all__ = [
    "ArgumentError",
    "ArgumentSpec",
    "Command",
    "CommandError",
    "Manager",
    "Session",
    "Shell",
    "main",
    "parse_args",
    "parse_script_header",
    "render_help",
    "split_statements",
    "strip_comment",
]
