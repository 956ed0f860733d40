"""Execute command streams against one index."""

from __future__ import annotations

import json
import sys
from typing import IO, Iterable

from fostree.dawg import Dawg
from fostree.suffix_tree import SuffixTree
from fostree.workloads import Add, Append, Command, Dot, NewString, Prepend, Query, Stats


class ModeError(ValueError):
    pass


class Session:
    """Holds an index whose orientation is fixed by ``mode`` or, if ``mode`` is
    None, by the first extension command seen."""

    def __init__(self, mode: str | None = None, sentinel: bool = True,
                 out: IO[str] | None = None) -> None:
        if mode not in (None, "st", "dawg"):
            raise ValueError(f"unknown mode {mode!r}")
        self.sentinel = sentinel
        self.out = out if out is not None else sys.stdout
        self.mode: str | None = None
        self.index: SuffixTree | Dawg | None = None
        self._pending_strings = 0
        if mode is not None:
            self._fix_mode(mode)

    def _fix_mode(self, mode: str) -> None:
        self.mode = mode
        self.index = SuffixTree(self.sentinel) if mode == "st" else Dawg(self.sentinel)
        for _ in range(self._pending_strings):
            self.index.add_string()

    @property
    def tree(self) -> SuffixTree:
        if self.index is None:
            # orientation still open: answer from a throwaway tree
            scratch = SuffixTree(self.sentinel)
            for _ in range(self._pending_strings):
                scratch.add_string()
            return scratch
        return self.index if isinstance(self.index, SuffixTree) else self.index.tree

    def _extend(self, verb: str, sid: int, char: str) -> None:
        if verb == "add":
            verb = "append" if self.mode == "dawg" else "prepend"
        want = "st" if verb == "prepend" else "dawg"
        if self.mode is None:
            self._fix_mode(want)
        elif self.mode != want:
            raise ModeError(f"{verb} is not allowed in {self.mode} mode")
        if isinstance(self.index, Dawg):
            self.index.append(sid, char)
        else:
            self.index.prepend(sid, char)

    def execute(self, cmd: Command) -> None:
        if isinstance(cmd, NewString):
            if self.index is None:
                self._pending_strings += 1
            else:
                self.index.add_string()
        elif isinstance(cmd, Prepend):
            self._extend("prepend", cmd.sid, cmd.char)
        elif isinstance(cmd, Append):
            self._extend("append", cmd.sid, cmd.char)
        elif isinstance(cmd, Add):
            self._extend("add", cmd.sid, cmd.char)
        elif isinstance(cmd, Query):
            found = self.is_substring(cmd.pattern)
            self.out.write("1\n" if found else "0\n")
        elif isinstance(cmd, Stats):
            self.out.write(json.dumps(self.stats()) + "\n")
        elif isinstance(cmd, Dot):
            with open(cmd.path, "w", encoding="utf-8") as fh:
                self.export_dot(fh)
        else:
            raise TypeError(f"not a command: {cmd!r}")

    def run(self, commands: Iterable[Command]) -> None:
        for cmd in commands:
            self.execute(cmd)

    def is_substring(self, pattern: str) -> bool:
        if isinstance(self.index, Dawg):
            return self.index.is_substring(pattern)
        return self.tree.is_substring(pattern)

    def stats(self) -> dict:
        return self.tree.stats()

    def export_dot(self, sink: IO[str]) -> None:
        if isinstance(self.index, Dawg):
            self.index.export_dot(sink)
        else:
            self.tree.export_dot(sink)
