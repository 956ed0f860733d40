"""Command-line front end.

    fostree run [FILE] [--mode auto|st|dawg] [--raw]
    fostree bench --workload random --seed 7 --n 10000 --k 8 --sigma 4
    fostree bench --workload lemma3 --n 1024
    fostree gen --workload random --seed 1 --n 10 --k 2 --sigma 2
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Sequence

from fostree.config import BenchConfig
from fostree.session import ModeError, Session
from fostree.suffix_tree import TreeError
from fostree.workloads import RNG_NAME, ParseError, dumps, adversarial_plan, parse


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fostree", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a command file")
    run.add_argument("input", nargs="?", default="-")
    run.add_argument("--mode", choices=["auto", "st", "dawg"], default="auto")
    run.add_argument("--raw", action="store_true", help="no per-string terminators")

    for name, help_text in (("bench", "run a generated workload and report counters"),
                            ("gen", "print a generated workload")):
        g = sub.add_parser(name, help=help_text)
        g.add_argument("--workload", choices=["random", "lemma3"], default="random")
        g.add_argument("--seed", type=int, default=0)
        g.add_argument("--n", type=int, default=1000)
        g.add_argument("--k", type=int, default=4)
        g.add_argument("--sigma", type=int, default=4)
        g.add_argument("--mode", choices=["st", "dawg"], default="st")
        g.add_argument("--no-filler", action="store_true", help="lemma3: omit the unary filler string")
        if name == "bench":
            g.add_argument("--raw", action="store_true")
            g.add_argument("--out", default="-")
    return p


def _config(args: argparse.Namespace) -> BenchConfig:
    return BenchConfig(workload=args.workload, n=args.n, seed=args.seed, k=args.k,
                       sigma=args.sigma, mode=args.mode,
                       sentinel=not getattr(args, "raw", False), filler=not args.no_filler)


def _open_out(path: str) -> IO[str]:
    return sys.stdout if path == "-" else open(path, "w", encoding="utf-8")


def run(args: argparse.Namespace) -> int:
    mode = None if args.mode == "auto" else args.mode
    session = Session(mode=mode, sentinel=not args.raw)
    fh = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    lineno = 0
    try:
        for lineno, cmd in parse(fh):
            session.execute(cmd)
    except ParseError as exc:
        print(f"fostree: parse error: {exc}", file=sys.stderr)
        return 2
    except (ModeError, TreeError) as exc:
        print(f"fostree: line {lineno}: {exc}", file=sys.stderr)
        return 3
    finally:
        if fh is not sys.stdin:
            fh.close()
    return 0


def bench(config: BenchConfig, out: IO[str]) -> int:
    """Replay a generated workload, emitting counter snapshots as JSON lines."""
    commands = config.commands()
    session = Session(mode=config.mode, sentinel=config.sentinel, out=open_null())
    base = {"workload": config.workload, "n": config.n, "mode": config.mode,
            "sentinel": config.sentinel}
    if config.workload == "random":
        base.update(seed=config.seed, k=config.k, sigma=config.sigma, rng=RNG_NAME)
    step = max(1, len(commands) // 16)
    phase_start = None
    if config.workload == "lemma3":
        plan = adversarial_plan(config.n, filler=config.filler)
        phase_start = len(commands) - plan.split_phase
    mark = None
    for idx, cmd in enumerate(commands):
        if idx == phase_start:
            tree = session.tree
            mark = (tree.counters.redirect_splits, tree.probe.split_touches)
            tree.probe.max_split_size = 0
        session.execute(cmd)
        done = idx + 1
        if done % step == 0 or done == len(commands):
            line = dict(base, milestone=done // step, commands=done)
            line.update(session.stats())
            out.write(json.dumps(line) + "\n")
    if phase_start is not None:
        tree = session.tree
        summary = dict(base, summary="split_phase", k=plan.k,
                       redirect_splits=tree.counters.redirect_splits - mark[0],
                       split_touches=tree.probe.split_touches - mark[1],
                       max_split_size=tree.probe.max_split_size,
                       n_total=tree.total_length())
        out.write(json.dumps(summary) + "\n")
    return 0


class _Null:
    def write(self, s: str) -> int:
        return len(s)


def open_null() -> IO[str]:
    return _Null()  # type: ignore[return-value]


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return run(args)
        if args.command == "bench":
            sink = _open_out(args.out)
            try:
                return bench(_config(args), sink)
            finally:
                if sink is not sys.stdout:
                    sink.close()
        sys.stdout.write(dumps(_config(args).commands()))
        return 0
    except (OSError, ValueError) as exc:
        print(f"fostree: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
