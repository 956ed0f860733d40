"""The eight acceptance criteria, each at its stated tolerance.

Every test carries a ``criterion`` marker; conftest prints one PASS/FAIL line
per criterion after the run.
"""

import io
import json
import math
import random
import time

import pytest

from fostree import cli
from fostree.config import BenchConfig, SweepConfig
from fostree.dawg import Dawg
from fostree.oracle import (canonical_dawg, canonical_tree, check_replay, equivalent, naive_dawg,
                            naive_suffix_tree)
from fostree.ordered_sets import SplitInsertFind
from fostree.session import Session
from fostree.suffix_tree import SuffixTree
from fostree.workloads import lemma3_instance, adversarial_plan, random_workload

# ---------------------------------------------------------------- C1


@pytest.mark.criterion(1, "two-string reference build")
def test_c1_reference_pair():
    start = time.perf_counter()
    tree = SuffixTree()
    tree.add_string()
    tree.add_string()
    for sid, s in enumerate(["cabaa", "abaab"]):
        for ch in reversed(s):
            tree.prepend(sid, ch)
    dawg = Dawg()
    dawg.add_string()
    dawg.add_string()
    for sid, s in enumerate(["aabac", "baaba"]):
        for ch in s:
            dawg.append(sid, ch)
    assert len(tree.nodes) == 19
    assert dawg.state_count == 19
    ref_tree = naive_suffix_tree(["cabaa", "abaab"])
    assert canonical_tree(tree).links == ref_tree.links
    assert equivalent(canonical_tree(tree), ref_tree) == (True, None)
    assert equivalent(canonical_dawg(dawg), naive_dawg(["aabac", "baaba"])) == (True, None)
    assert time.perf_counter() - start < 1.0


# ---------------------------------------------------------------- C2, C3, C6


SWEEP = SweepConfig(count=1000, n_min=8, n_max=512, k_max=8, sigmas=(2, 4, 26), every=32)


@pytest.fixture(scope="module")
def sweep():
    start = time.perf_counter()
    results = []
    for case in SWEEP.cases():
        report = check_replay(case.commands(), mode=case.mode, sentinel=case.sentinel,
                              every=SWEEP.every)
        results.append((case, report))
    return results, time.perf_counter() - start


@pytest.mark.criterion(2, "oracle equivalence sweep")
def test_c2_oracle_sweep(sweep):
    results, elapsed = sweep
    assert len(results) >= 1000
    cases = [c for c, _ in results]
    assert max(c.n for c in cases) <= 512 and max(c.k for c in cases) <= 8
    assert {c.sigma for c in cases} == {2, 4, 26}
    assert {(c.mode, c.sentinel) for c in cases} == {("st", True), ("st", False),
                                                     ("dawg", True), ("dawg", False)}
    bad = [(c.seed, r.mismatch) for c, r in results if r.mismatch]
    assert not bad, bad[:3]
    # every workload was compared at the end, and at every 32nd command
    assert all(r.checkpoints == -(-r.states // 32) for _, r in results)
    assert elapsed < 60, f"sweep took {elapsed:.1f} s"


@pytest.mark.criterion(3, "size bounds")
def test_c3_size_bounds(sweep):
    results, _ = sweep
    bad = [(c.seed, r.size_violations[0]) for c, r in results if r.size_violations]
    assert not bad, bad[:3]
    assert sum(r.states for _, r in results) == sum(len(c.commands()) for c, _ in results)


@pytest.mark.criterion(6, "d-bound")
def test_c6_d_below_height(sweep):
    results, _ = sweep
    violations = [(c.seed, v) for c, r in results for v in r.strict_d_violations]
    if violations:
        ties = all(d == h for _, (_, d, h, _) in violations)
        top_h = max(h for _, (_, _, h, _) in violations)
        top_n = max(n for _, (_, _, _, n) in violations)
        pytest.fail(f"{len(violations)} states with d >= height (all ties d == height: {ties}; "
                    f"height <= {top_h}, N <= {top_n}); first: {violations[:3]}")


@pytest.mark.criterion(6, "d-bound")
def test_c6_d_below_height_split_instance():
    for n in (256, 1024, 4096):
        s = Session(mode="st", out=cli.open_null())
        s.run(lemma3_instance(n))
        st = s.tree.stats()
        assert st["d"] < st["height"]


def test_d_never_exceeds_height(sweep):
    """Companion to C6: the non-strict d <= height holds on every state."""
    results, _ = sweep
    assert max(r.max_d_minus_height for _, r in results) <= 0


# ---------------------------------------------------------------- C4


def _random_run(n):
    s = Session(mode="st", out=cli.open_null())
    s.run(random_workload(20_241, n, 8, 4))
    c = s.tree.counters
    return s.tree.total_length(), c


@pytest.mark.criterion(4, "work-bound counters")
def test_c4_work_bounds():
    start = time.perf_counter()
    ratios = {}
    for n in (10_000, 100_000):
        big_n, c = _random_run(n)
        assert c.set_finds <= 4 * big_n - 4
        assert c.set_inserts <= 3 * big_n - 4
        ratios[n] = (c.climbed_nodes + c.copied_links) / big_n
    drift = abs(ratios[100_000] - ratios[10_000]) / ratios[10_000]
    assert drift < 0.25, ratios
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(4, "work-bound counters")
@pytest.mark.parametrize("sigma", [2, 26])
def test_c4_bounds_other_alphabets(sigma):
    s = Session(mode="st", out=cli.open_null())
    s.run(random_workload(sigma, 100_000, 8, sigma))
    big_n, c = s.tree.total_length(), s.tree.counters
    assert c.set_finds <= 4 * big_n - 4
    assert c.set_inserts <= 3 * big_n - 4


# ---------------------------------------------------------------- C5


def _split_summary(n):
    buf = io.StringIO()
    cli.bench(BenchConfig(workload="lemma3", n=n), buf)
    return json.loads(buf.getvalue().splitlines()[-1])


@pytest.mark.criterion(5, "adversarial split instance")
def test_c5_split_instance():
    per_n = []
    for n in (256, 1024, 4096):
        summary = _split_summary(n)
        k = adversarial_plan(n).k
        assert k - 1 == math.ceil(math.sqrt(n) / 2)
        assert summary["redirect_splits"] == k - 2
        assert summary["max_split_size"] >= math.ceil(math.sqrt(n)) / 2
        per_n.append(summary["split_touches"] / summary["n_total"])
    assert per_n[0] > per_n[1] > per_n[2], per_n


# ---------------------------------------------------------------- C7


def _model_check(ops, seed, validate_every_op):
    rng = random.Random(seed)
    forest = SplitInsertFind()
    sets = []       # [dict key -> element, owner tag]
    tag = 0
    for _ in range(ops):
        op = rng.random()
        touched = []
        if op < 0.05 or not sets:
            tag += 1
            key = rng.randrange(2000)
            e = forest.make_singleton(key, key)
            forest.set_owner(e, tag)
            sets.append([{key: e}, tag])
            touched.append(sets[-1])
        elif op < 0.65:
            entry = rng.choice(sets)
            key = rng.randrange(2000)
            if key not in entry[0]:
                entry[0][key] = forest.insert_into(rng.choice(list(entry[0].values())), key, key)
            touched.append(entry)
        elif op < 0.8:
            members, _ = sets.pop(rng.randrange(len(sets)))
            k = rng.randrange(-1, 2001)
            low, high = forest.split(rng.choice(list(members.values())), k)
            for root, part in ((low, {a: e for a, e in members.items() if a <= k}),
                               (high, {a: e for a, e in members.items() if a > k})):
                assert (root is None) == (not part)
                if part:
                    tag += 1
                    forest.set_owner(root, tag)
                    sets.append([part, tag])
                    touched.append(sets[-1])
        else:
            members, owner = rng.choice(sets)
            probe = rng.choice(list(members.values()))
            root, got = forest.find_root(probe)
            assert got == owner
        for members, owner in touched:
            root, got = forest.find_root(next(iter(members.values())))
            assert got == owner
            if validate_every_op:
                assert forest.validate(root) is None
                assert root.keys() == sorted(members)
        # keep the live collection bounded so per-op validation stays cheap
        if len(sets) > 400:
            sets.sort(key=lambda s: len(s[0]))
            del sets[:200]
    for members, owner in sets:
        root, got = forest.find_root(next(iter(members.values())))
        assert got == owner and root.keys() == sorted(members)
        assert forest.validate(root) is None


@pytest.mark.criterion(7, "ordered_sets model check")
def test_c7_model_check():
    _model_check(100_000, seed=77, validate_every_op=False)


@pytest.mark.criterion(7, "ordered_sets model check")
def test_c7_validate_every_op():
    _model_check(100_000, seed=78, validate_every_op=True)


@pytest.mark.criterion(7, "ordered_sets model check")
def test_c7_bulk_build_linear():
    ratios = []
    for exp in (10, 13, 16):
        n = 1 << exp
        f = SplitInsertFind()
        root = f.bulk_build_desc([(k, None) for k in range(n, 0, -1)])
        assert root.size == n
        ratios.append(f.counters.bulk_touches / n)
    assert (max(ratios) - min(ratios)) / min(ratios) < 0.25, ratios


# ---------------------------------------------------------------- C8


@pytest.mark.criterion(8, "frozen-DAWG agreement")
def test_c8_frozen_walks():
    start = time.perf_counter()
    rng = random.Random(8)
    for build in range(50):
        k = rng.randint(1, 8)
        sigma = rng.choice((2, 4, 26))
        n = rng.randint(50, 2000)
        s = Session(mode="dawg", sentinel=build % 2 == 0, out=cli.open_null())
        s.run(random_workload(rng.randrange(2**32), n, k, sigma, "append"))
        d = s.index
        frozen = d.finalize()
        symbols = sorted({c for j in range(d.tree.string_count) for c in d.text(j)}) + ["?"]
        state = d.initial
        for _ in range(10_000):
            a = rng.choice(symbols)
            live = d.transition(state, a)
            assert live == frozen.transition(state, a)
            state = d.initial if live is None else live
    assert time.perf_counter() - start < 10
