"""Split-phase cost of the adversarial binary instance across sizes.

    python scripts/bench_adversarial.py --sizes 256 1024 4096 16384
"""

import argparse
import io
import json
import math

from fostree.cli import bench
from fostree.config import BenchConfig


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[256, 1024, 4096, 16384])
    p.add_argument("--no-filler", action="store_true")
    args = p.parse_args()

    print(f"{'N':>7} {'K':>4} {'splits':>6} {'max|S|':>6} {'touches':>8} {'touches/N':>9} "
          f"{'touches/(sqrtN lgN)':>19}")
    for n in args.sizes:
        buf = io.StringIO()
        bench(BenchConfig(workload="lemma3", n=n, filler=not args.no_filler), buf)
        s = json.loads(buf.getvalue().splitlines()[-1])
        big_n = s["n_total"]
        scale = math.sqrt(big_n) * math.log2(big_n)
        print(f"{big_n:>7} {s['k']:>4} {s['redirect_splits']:>6} {s['max_split_size']:>6} "
              f"{s['split_touches']:>8} {s['split_touches'] / big_n:>9.4f} "
              f"{s['split_touches'] / scale:>19.4f}")


if __name__ == "__main__":
    main()
