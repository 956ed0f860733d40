import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fostree.ordered_sets import root_of
from fostree.session import Session
from fostree.workloads import (Add, Append, Dot, NewString, ParseError, Prepend, Query, Stats,
                               dumps, lemma3_instance, adversarial_plan, loads, parse_line,
                               random_workload)


class TestRandomWorkload:
    def test_deterministic(self):
        assert random_workload(1, 10, 2, 2) == random_workload(1, 10, 2, 2)
        assert random_workload(1, 50, 3, 4) != random_workload(2, 50, 3, 4)

    def test_counts(self):
        w = random_workload(1, 10, 2, 2)
        assert sum(isinstance(c, Prepend) for c in w) == 10
        assert sum(isinstance(c, NewString) for c in w) == 2

    def test_ids_reference_earlier_strings(self):
        w = random_workload(5, 500, 7, 4)
        live = 0
        for c in w:
            if isinstance(c, NewString):
                live += 1
            else:
                assert 0 <= c.sid < live <= 7

    def test_append_verb(self):
        assert all(isinstance(c, (NewString, Append)) for c in random_workload(3, 20, 2, 3, "append"))

    @pytest.mark.parametrize("args", [(0, 10, 0, 2), (0, 10, 2, 1), (0, -1, 2, 2)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            random_workload(*args)


class TestSplitInstance:
    def test_n64(self):
        plan = adversarial_plan(64)
        assert plan.a_lengths == (8, 7, 6, 5)
        w = lemma3_instance(64)
        assert [c.char for c in w[-4:]] == ["b"] * 4
        assert [c.sid for c in w[-4:]] == [0, 1, 2, 3]
        assert sum(isinstance(c, Prepend) for c in w) == 64

    def test_without_filler(self):
        w = lemma3_instance(64, filler=False)
        assert sum(isinstance(c, NewString) for c in w) == 4
        assert sum(isinstance(c, Prepend) for c in w) == 8 + 7 + 6 + 5 + 4

    def test_small_n(self):
        with pytest.raises(ValueError):
            adversarial_plan(15)

    def test_first_b_links(self):
        n = 256
        s = Session(mode="st")
        w = lemma3_instance(n, filler=False)
        s.run(w[: len(w) - adversarial_plan(n, False).split_phase])
        tree = s.tree
        tree.prepend(0, "b")
        leaf = tree.active_node(0)
        # every node a^j (0 <= j <= sqrt N) gets its b-link to the first b-leaf
        assert root_of(leaf.win).size >= math.isqrt(n)

    @pytest.mark.parametrize("n", [64, 256, 1024])
    def test_split_count(self, n):
        plan = adversarial_plan(n)
        s = Session(mode="st")
        w = lemma3_instance(n)
        head, tail = w[:-plan.split_phase], w[-plan.split_phase:]
        s.run(head)
        before = s.tree.counters.redirect_splits
        s.run(tail)
        # the first b-extension creates the leaf; every later one splits its set
        assert s.tree.counters.redirect_splits - before == plan.k - 2


class TestGrammar:
    def test_round_trip(self):
        cmds = [NewString(), Prepend(0, "a"), Append(0, "é"), Add(1, "b"), Query("ab"), Query(""),
                Stats(), Dot("out.dot")]
        assert loads(dumps(cmds)) == cmds

    @given(st.integers(0, 2**31), st.integers(0, 60), st.integers(1, 5), st.sampled_from([2, 4, 26, 70]))
    def test_round_trip_random(self, seed, n, k, sigma):
        w = random_workload(seed, n, k, sigma)
        assert loads(dumps(w)) == w

    def test_comments_and_blank(self):
        assert loads("# hi\n\nnew\n   \n") == [NewString()]

    @pytest.mark.parametrize("line", ["prepend 0", "prepend x a", "prepend 0 ab", "bogus",
                                      "new 1", "query a b", "dot", "stats now"])
    def test_errors(self, line):
        with pytest.raises(ParseError) as info:
            parse_line(line, 7)
        assert info.value.lineno == 7
        assert "line 7" in str(info.value)
