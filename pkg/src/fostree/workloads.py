"""Command streams: the text grammar, random fully-online workloads, and the
adversarial binary instance that forces many large in-coming-set splits.

Grammar, one command per line, tokens separated by whitespace::

    new
    prepend <id> <char>
    append <id> <char>
    add <id> <char>        # prepend or append, whichever the run's mode uses
    query <chars>
    stats
    dot <path>

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import math
import random
import string
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

RNG_NAME = "python-random-mt19937"


@dataclass(frozen=True)
class NewString:
    def to_line(self) -> str:
        return "new"


@dataclass(frozen=True)
class Prepend:
    sid: int
    char: str

    def to_line(self) -> str:
        return f"prepend {self.sid} {self.char}"


@dataclass(frozen=True)
class Append:
    sid: int
    char: str

    def to_line(self) -> str:
        return f"append {self.sid} {self.char}"


@dataclass(frozen=True)
class Add:
    sid: int
    char: str

    def to_line(self) -> str:
        return f"add {self.sid} {self.char}"


@dataclass(frozen=True)
class Query:
    pattern: str

    def to_line(self) -> str:
        return f"query {self.pattern}" if self.pattern else "query"


@dataclass(frozen=True)
class Stats:
    def to_line(self) -> str:
        return "stats"


@dataclass(frozen=True)
class Dot:
    path: str

    def to_line(self) -> str:
        return f"dot {self.path}"


Command = Union[NewString, Prepend, Append, Add, Query, Stats, Dot]


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _extension(verb: str, args: list[str], lineno: int) -> Command:
    if len(args) != 2:
        raise ParseError(lineno, f"{verb} takes <id> <char>")
    sid_text, char = args
    if not sid_text.isdigit():
        raise ParseError(lineno, f"bad string id {sid_text!r}")
    if len(char) != 1:
        raise ParseError(lineno, f"expected a single character, got {char!r}")
    cls = {"prepend": Prepend, "append": Append, "add": Add}[verb]
    return cls(int(sid_text), char)


def parse_line(line: str, lineno: int = 0) -> Command | None:
    tokens = line.split()
    if not tokens or tokens[0].startswith("#"):
        return None
    verb, args = tokens[0], tokens[1:]
    if verb == "new":
        if args:
            raise ParseError(lineno, "new takes no arguments")
        return NewString()
    if verb in ("prepend", "append", "add"):
        return _extension(verb, args, lineno)
    if verb == "query":
        if len(args) > 1:
            raise ParseError(lineno, "query takes one pattern")
        return Query(args[0] if args else "")
    if verb == "stats":
        if args:
            raise ParseError(lineno, "stats takes no arguments")
        return Stats()
    if verb == "dot":
        if len(args) != 1:
            raise ParseError(lineno, "dot takes one path")
        return Dot(args[0])
    raise ParseError(lineno, f"unknown command {verb!r}")


def parse(lines: Iterable[str]) -> Iterator[tuple[int, Command]]:
    """Yield ``(line number, command)`` pairs; raises :class:`ParseError`."""
    for lineno, line in enumerate(lines, 1):
        cmd = parse_line(line, lineno)
        if cmd is not None:
            yield lineno, cmd


def dumps(commands: Iterable[Command]) -> str:
    return "".join(c.to_line() + "\n" for c in commands)


def loads(text: str) -> list[Command]:
    return [c for _, c in parse(text.splitlines())]


def alphabet(sigma: int) -> str:
    """The first ``sigma`` symbols of a fixed printable alphabet."""
    base = string.ascii_lowercase + string.ascii_uppercase + string.digits
    if sigma <= len(base):
        return base[:sigma]
    return base + "".join(chr(0xC0 + j) for j in range(sigma - len(base)))


def random_workload(seed: int, n: int, k: int, sigma: int, verb: str = "prepend") -> list[Command]:
    """``k`` new strings interleaved with ``n`` extensions by uniform symbols.

    Each extension goes to a uniformly chosen string among those created so
    far.  String 0 is created first; the others appear at random points.
    """
    if k < 1 or sigma < 2 or n < 0:
        raise ValueError("need k >= 1, sigma >= 2, n >= 0")
    ext = {"prepend": Prepend, "append": Append, "add": Add}[verb]
    rng = random.Random(seed)
    symbols = alphabet(sigma)
    slots = sorted(rng.randrange(n + 1) for _ in range(k - 1))
    out: list[Command] = [NewString()]
    live = 1
    pending = 0
    for j in range(n):
        while pending < len(slots) and slots[pending] <= j:
            out.append(NewString())
            live += 1
            pending += 1
        out.append(ext(rng.randrange(live), symbols[rng.randrange(sigma)]))
    out.extend(NewString() for _ in range(len(slots) - pending))
    return out


@dataclass(frozen=True)
class AdversarialPlan:
    n: int
    k: int              # strings in the instance, including the filler
    a_lengths: tuple[int, ...]
    filler: int

    @property
    def split_phase(self) -> int:
        """Number of trailing ``b`` extensions."""
        return self.k - 1


def adversarial_plan(n: int, filler: bool = True) -> AdversarialPlan:
    if n < 16:
        raise ValueError("n must be at least 16")
    m = math.isqrt(n)
    k1 = math.ceil(math.sqrt(n) / 2)
    lengths = tuple(m - i + 1 for i in range(1, k1 + 1))
    fill = max(0, n - sum(lengths) - k1) if filler else 0
    return AdversarialPlan(n, k1 + 1, lengths, fill)


def lemma3_instance(n: int, filler: bool = True, verb: str = "prepend") -> list[Command]:
    """Strings ``a^(m-i+1)`` for ``i = 1..ceil(sqrt(n)/2)`` (``m = isqrt(n)``), an
    optional unary filler string, then one ``b`` added to each short string in
    increasing order.  With the filler the total added length is ``n``.
    """
    plan = adversarial_plan(n, filler)
    ext = {"prepend": Prepend, "append": Append, "add": Add}[verb]
    out: list[Command] = []
    for sid, length in enumerate(plan.a_lengths):
        out.append(NewString())
        out.extend(ext(sid, "a") for _ in range(length))
    if plan.filler:
        out.append(NewString())
        out.extend(ext(len(plan.a_lengths), "a") for _ in range(plan.filler))
    out.extend(ext(sid, "b") for sid in range(len(plan.a_lengths)))
    return out
