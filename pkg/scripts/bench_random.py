"""Amortized work per added character on random fully-online workloads.

Prints, for each N, the final per-N ratios of the work counters and the worst
set-finds/N seen at any milestone.
"""

import argparse
import io
import json
import time
from dataclasses import replace

from fostree.cli import bench
from fostree.config import BenchConfig


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[1000, 10_000, 100_000])
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--mode", choices=["st", "dawg"], default="st")
    args = p.parse_args()

    base = BenchConfig(k=args.k, sigma=args.sigma, seed=args.seed, mode=args.mode)
    print(f"{'N':>7} {'finds/N':>8} {'max finds/N':>11} {'inserts/N':>9} "
          f"{'(climb+copy)/N':>14} {'touches/N':>9} {'d':>3} {'secs':>6}")
    for n in args.sizes:
        buf = io.StringIO()
        start = time.perf_counter()
        bench(replace(base, n=n), buf)
        elapsed = time.perf_counter() - start
        lines = [json.loads(x) for x in buf.getvalue().splitlines()]
        worst = max(x["set_finds"] / x["n_total"] for x in lines if x["n_total"])
        last = lines[-1]
        big_n = last["n_total"]
        print(f"{big_n:>7} {last['set_finds'] / big_n:>8.3f} {worst:>11.3f} "
              f"{last['set_inserts'] / big_n:>9.3f} "
              f"{(last['climbed_nodes'] + last['copied_links']) / big_n:>14.3f} "
              f"{last['avl_touches'] / big_n:>9.3f} {last['d']:>3} {elapsed:>6.2f}")


if __name__ == "__main__":
    main()
