"""Run configurations shared by the CLI, the test suite and scripts/."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from fostree.workloads import Command, lemma3_instance, random_workload


@dataclass(frozen=True)
class BenchConfig:
    workload: str = "random"        # random | lemma3
    n: int = 1000
    seed: int = 0
    k: int = 4
    sigma: int = 4
    mode: str = "st"                # st (prepend) | dawg (append)
    sentinel: bool = True
    filler: bool = True             # lemma3 only

    @property
    def verb(self) -> str:
        return "prepend" if self.mode == "st" else "append"

    def commands(self) -> list[Command]:
        if self.workload == "lemma3":
            return lemma3_instance(self.n, filler=self.filler, verb=self.verb)
        if self.workload == "random":
            return random_workload(self.seed, self.n, self.k, self.sigma, verb=self.verb)
        raise ValueError(f"unknown workload {self.workload!r}")


@dataclass(frozen=True)
class SweepConfig:
    """Random-workload sweep: N log-uniform in [n_min, n_max], K uniform in
    1..k_max; mode, terminator scheme and sigma cycle with the case index."""
    count: int = 1000
    n_min: int = 8
    n_max: int = 512
    k_max: int = 8
    sigmas: tuple[int, ...] = (2, 4, 26)
    every: int = 32
    base_seed: int = 17
    modes: tuple[str, ...] = field(default=("st", "dawg"))

    def case(self, i: int) -> BenchConfig:
        rng = random.Random(1_000_003 * i + self.base_seed)
        n = round(math.exp(rng.uniform(math.log(self.n_min), math.log(self.n_max))))
        return BenchConfig(
            workload="random", n=n, seed=i, k=rng.randint(1, self.k_max),
            sigma=self.sigmas[(i // 4) % len(self.sigmas)],
            mode=self.modes[i % len(self.modes)],
            sentinel=(i // 2) % 2 == 0,
        )

    def cases(self):
        for i in range(self.count):
            yield self.case(i)
