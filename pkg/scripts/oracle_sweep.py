"""Replay a seeded sweep of random workloads against the brute-force oracle."""

import argparse
import time
from collections import Counter

from fostree.config import SweepConfig
from fostree.oracle import check_replay


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--n-max", type=int, default=512)
    p.add_argument("--every", type=int, default=32)
    args = p.parse_args()

    sweep = SweepConfig(count=args.count, n_max=args.n_max, every=args.every)
    start = time.perf_counter()
    mismatches, size_bad, states, checkpoints = [], 0, 0, 0
    ties = Counter()
    worst_gap = None
    for case in sweep.cases():
        r = check_replay(case.commands(), mode=case.mode, sentinel=case.sentinel, every=sweep.every)
        states += r.states
        checkpoints += r.checkpoints
        size_bad += len(r.size_violations)
        if r.mismatch:
            mismatches.append((case, r.mismatch))
        for _, d, h, _ in r.strict_d_violations:
            ties[h] += 1
        if worst_gap is None or r.max_d_minus_height > worst_gap:
            worst_gap = r.max_d_minus_height
    elapsed = time.perf_counter() - start

    print(f"workloads {sweep.count}  states {states}  checkpoints {checkpoints}  {elapsed:.1f} s")
    print(f"oracle mismatches: {len(mismatches)}")
    for case, msg in mismatches[:5]:
        print(f"  {case}: {msg}")
    print(f"size-bound violations: {size_bad}")
    print(f"max(d - height): {worst_gap}")
    print(f"states with d >= height: {sum(ties.values())}  by height: {dict(sorted(ties.items()))}")


if __name__ == "__main__":
    main()
