"""Workspace state: snapshot managers, aliases, variables and history."""

from __future__ import annotations

import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Generic, TextIO, TypeVar

T = TypeVar("T")

LOG_LEVELS = {
    "off": logging.CRITICAL + 10,
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
    "trace": 5,
}
logging.addLevelName(5, "TRACE")


class CommandError(RuntimeError):
    """A command failed; the message is shown to the user."""


@dataclass
class Manager(Generic[T]):
    """Snapshots of one representation, keyed by ids that are never reused."""

    label: str
    entries: dict[int, T] = field(default_factory=dict)
    focus: int | None = None
    next_id: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def ids(self) -> list[int]:
        return list(self.entries)

    def add(self, obj: T) -> int:
        i = self.next_id
        self.next_id += 1
        self.entries[i] = obj
        self.focus = i
        return i

    def get(self, i: int | None = None) -> T:
        if i is None:
            if self.focus is None:
                raise CommandError(f"{self.label} list is empty")
            return self.entries[self.focus]
        if i not in self.entries:
            raise CommandError(f"{self.label} {i} does not exist")
        return self.entries[i]

    def replace(self, obj: T, i: int | None = None) -> None:
        key = self.focus if i is None else i
        if key is None or key not in self.entries:
            raise CommandError(f"no {self.label} to replace")
        self.entries[key] = obj

    def checkout(self, i: int) -> None:
        if i not in self.entries:
            raise CommandError(f"{self.label} {i} does not exist")
        self.focus = i

    def delete(self, i: int) -> None:
        if i not in self.entries:
            raise CommandError(f"{self.label} {i} does not exist")
        del self.entries[i]
        if self.focus == i:
            self.focus = max(self.entries) if self.entries else None


@dataclass
class Session:
    out: TextIO = field(default_factory=lambda: sys.stdout)
    err: TextIO = field(default_factory=lambda: sys.stderr)
    managers: dict[str, Manager[Any]] = field(default_factory=dict)
    aliases: dict[str, str] = field(default_factory=dict)
    variables: dict[str, str] = field(default_factory=dict)
    history: list[str] = field(default_factory=list)
    log_level: str = "warn"
    started: float = field(default_factory=time.perf_counter)

    def __post_init__(self):
        for key, label in (("qcir", "circuit"), ("zx", "ZX-diagram"), ("tableau", "tableau"),
                           ("device", "device"), ("tensor", "tensor")):
            self.managers.setdefault(key, Manager(label))
        self._handler: logging.Handler | None = None
        self.set_log_level(self.log_level)

    def manager(self, key: str) -> Manager[Any]:
        return self.managers[key]

    def print(self, *parts: object) -> None:
        print(*parts, file=self.out)

    def error(self, message: str) -> None:
        print(f"Error: {message}", file=self.err)

    def set_log_level(self, level: str) -> None:
        if level not in LOG_LEVELS:
            raise CommandError(f"unknown log level '{level}'")
        self.log_level = level
        logger = logging.getLogger("qsynth")
        if self._handler is not None:
            logger.removeHandler(self._handler)
        self._handler = logging.StreamHandler(self.err)
        self._handler.setFormatter(logging.Formatter("[%(levelname)s] %(name)s: %(message)s"))
        logger.addHandler(self._handler)
        logger.setLevel(LOG_LEVELS[level])
        logger.propagate = False

    def close(self) -> None:
        if self._handler is not None:
            logging.getLogger("qsynth").removeHandler(self._handler)
            self._handler = None
