"""Brute-force reference constructions for small collections.

Strings are handled as Python ``str``.  Per-string terminators are mapped to
private-use code points ``TERMINATOR_BASE + i`` which sort above every input
character we accept here.  Nothing in this module touches the online engine
except :func:`canonical_tree` / :func:`canonical_dawg`, which only read it.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from fostree.dawg import Dawg
    from fostree.suffix_tree import SuffixTree

TERMINATOR_BASE = 0xF0000


def terminator(i: int) -> str:
    return chr(TERMINATOR_BASE + i)


def _check_alphabet(strings: Sequence[str]) -> None:
    for s in strings:
        if s and max(s) >= chr(TERMINATOR_BASE):
            raise ValueError("input characters must lie below U+F0000")


def readable(s: str) -> str:
    """Render terminators as ``$i`` for reports."""
    out = []
    for ch in s:
        o = ord(ch)
        out.append(f"${o - TERMINATOR_BASE}" if o >= TERMINATOR_BASE else ch)
    return "".join(out)


@dataclass(frozen=True)
class CanonicalTree:
    # (node string, parent string or None), sorted by node string
    nodes: tuple[tuple[str, str | None], ...]
    # (origin, symbol, target, hard), sorted
    links: tuple[tuple[str, str, str, bool], ...]

    @property
    def node_count(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class CanonicalDawg:
    # Long strings of all states, sorted
    states: tuple[str, ...]
    # (Long(u), symbol, Long(v), primary), sorted
    transitions: tuple[tuple[str, str, str, bool], ...]

    @property
    def state_count(self) -> int:
        return len(self.states)


def _lcp(a: str, b: str) -> int:
    lo, hi = 0, min(len(a), len(b))
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if a[:mid] == b[:mid]:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _node_strings(texts: Sequence[str]) -> list[str]:
    """Explicit nodes: the root, every suffix, every right-branching substring."""
    suffixes = sorted({t[i:] for t in texts for i in range(len(t) + 1)})
    nodes = {""}
    nodes.update(suffixes)
    for a, b in zip(suffixes, suffixes[1:]):
        nodes.add(a[: _lcp(a, b)])
    return sorted(nodes)


def tree_from_nodes(node_list: list[str]) -> CanonicalTree:
    """Given the sorted explicit node strings, derive parents and Weiner links."""
    node_set = set(node_list)
    parents: list[tuple[str, str | None]] = []
    stack: list[str] = []
    for w in node_list:
        while stack and not w.startswith(stack[-1]):
            stack.pop()
        parents.append((w, stack[-1] if stack else None))
        stack.append(w)
    symbols = sorted({ch for w in node_list for ch in w})
    links = []
    for v in node_list:
        for a in symbols:
            av = a + v
            j = bisect_left(node_list, av)
            if j < len(node_list) and node_list[j].startswith(av):
                target = node_list[j]
                links.append((v, a, target, len(target) == len(av)))
    assert all(t in node_set for _, _, t, _ in links)
    return CanonicalTree(tuple(parents), tuple(sorted(links)))


def naive_suffix_tree(strings: Sequence[str], sentinel: bool = True) -> CanonicalTree:
    """Suffix tree (with all hard and soft Weiner links) of a string collection.

    In sentinel mode string ``i`` is terminated by :func:`terminator(i) <terminator>`.
    Without terminators every suffix of every string is kept as an explicit
    node, which may then be non-branching.
    """
    _check_alphabet(strings)
    texts = [s + terminator(i) for i, s in enumerate(strings)] if sentinel else list(strings)
    return tree_from_nodes(_node_strings(texts))


def naive_dawg(strings: Sequence[str], sentinel: bool = True) -> CanonicalDawg:
    """DAWG of a collection, with states formed as end-position classes.

    In sentinel mode string ``i`` is *prefixed* by its terminator, mirroring
    the right-to-left suffix tree of the reversed strings.
    """
    _check_alphabet(strings)
    texts = [terminator(i) + s for i, s in enumerate(strings)] if sentinel else list(strings)
    endpos: dict[str, list[tuple[int, int]]] = defaultdict(list)
    for i, t in enumerate(texts):
        for e in range(len(t) + 1):
            for st in range(e + 1):
                endpos[t[st:e]].append((i, e))
    classes: dict[tuple[tuple[int, int], ...], str] = {}
    for w, ends in endpos.items():
        key = tuple(ends)
        if key not in classes or len(w) > len(classes[key]):
            classes[key] = w
    long_of = {w: classes[tuple(ends)] for w, ends in endpos.items()}
    states = sorted(classes.values())
    symbols = sorted({ch for t in texts for ch in t})
    transitions = []
    for u in states:
        for a in symbols:
            ua = u + a
            if ua in long_of:
                v = long_of[ua]
                transitions.append((u, a, v, len(v) == len(u) + 1))
    return CanonicalDawg(tuple(states), tuple(sorted(transitions)))


def canonical_tree(tree: SuffixTree) -> CanonicalTree:
    """Read an engine-built tree into canonical form."""
    strings = tree.node_strings(terminator_base=TERMINATOR_BASE)
    nodes = []
    for node in tree.nodes:
        parent = None if node.parent is None else strings[node.parent.id]
        nodes.append((strings[node.id], parent))
    links = []
    for node in tree.nodes:
        for code, target, hard in tree.iter_links(node):
            links.append((strings[node.id], tree.symbol_text(code, TERMINATOR_BASE),
                          strings[target.id], hard))
    return CanonicalTree(tuple(sorted(nodes, key=lambda r: r[0])), tuple(sorted(links)))


def canonical_dawg(dawg: Dawg) -> CanonicalDawg:
    """Read the DAWG view of an engine into canonical form (Long strings)."""
    ct = canonical_tree(dawg.tree)
    states = sorted(w[::-1] for w, _ in ct.nodes)
    transitions = sorted((o[::-1], a, t[::-1], hard) for o, a, t, hard in ct.links)
    return CanonicalDawg(tuple(states), tuple(transitions))


def _first_difference(a: tuple, b: tuple) -> str | None:
    sa, sb = set(a), set(b)
    only_a = sorted(sa - sb)
    only_b = sorted(sb - sa)
    if not only_a and not only_b:
        return None
    candidates = [(x, "built only") for x in only_a[:1]] + [(x, "reference only") for x in only_b[:1]]
    item, where = min(candidates, key=lambda p: p[0])
    return f"{where}: {tuple(readable(f) if isinstance(f, str) else f for f in item)!r}"


def equivalent(built: CanonicalTree | CanonicalDawg,
               reference: CanonicalTree | CanonicalDawg) -> tuple[bool, str | None]:
    """Structural equality plus a report of the lexicographically first difference."""
    if isinstance(built, CanonicalTree) and isinstance(reference, CanonicalTree):
        parts = [("node", built.nodes, reference.nodes), ("link", built.links, reference.links)]
    elif isinstance(built, CanonicalDawg) and isinstance(reference, CanonicalDawg):
        parts = [("state", tuple((s,) for s in built.states), tuple((s,) for s in reference.states)),
                 ("transition", built.transitions, reference.transitions)]
    else:
        raise TypeError("cannot compare a tree with a DAWG")
    for label, a, b in parts:
        diff = _first_difference(a, b)
        if diff is not None:
            return False, f"{label} {diff}"
    return True, None


@dataclass
class ReplayReport:
    checkpoints: int = 0
    states: int = 0
    mismatch: str | None = None
    # (commands executed, nodes, links, n_total) of states breaking 2N-1 / 3N-4
    size_violations: list[tuple[int, int, int, int]] | None = None
    # (commands executed, d, height, n_total) of states where d >= height
    strict_d_violations: list[tuple[int, int, int, int]] | None = None
    # largest d - height over the states where d was evaluated exactly
    max_d_minus_height: int | None = None


def check_replay(commands, mode: str = "st", sentinel: bool = True, every: int = 32) -> ReplayReport:
    """Replay ``commands`` and compare against the brute-force structures.

    The tree (``mode="st"``) or DAWG (``mode="dawg"``) is compared after every
    ``every`` commands and after the last one.  Size bounds and ``d < height``
    are checked after every command.
    """
    from fostree.session import Session

    session = Session(mode=mode, sentinel=sentinel)
    report = ReplayReport(size_violations=[], strict_d_violations=[])
    tree = session.tree
    total = len(commands)
    # A prepend adds at most one element to any existing set, and the new
    # leaf's set holds at most the climbed nodes plus the split node, so
    # d_bound stays >= d.  Exact d is only computed once d_bound >= height.
    d_bound = 0
    climbed = 0
    # nodes are never removed and keep their depth, so height only grows
    height = 0
    seen = 0
    for idx, cmd in enumerate(commands, 1):
        session.execute(cmd)
        report.states += 1
        c = tree._counters
        n_total = tree.total_length()
        nodes, links = len(tree.nodes), c.created_links + c.copied_links
        if n_total >= 3 and (nodes > 2 * n_total - 1 or links > 3 * n_total - 4):
            report.size_violations.append((idx, nodes, links, n_total))
        d_bound = max(d_bound + 1, c.climbed_nodes - climbed + 2)
        climbed = c.climbed_nodes
        height = max([height] + [n.depth for n in tree.nodes[seen:]])
        seen = nodes
        if d_bound >= height:
            d = max((size for _, size in tree.set_sizes()), default=0)
            d_bound = d
            if d >= height:
                report.strict_d_violations.append((idx, d, height, n_total))
            gap = d - height
            if report.max_d_minus_height is None or gap > report.max_d_minus_height:
                report.max_d_minus_height = gap
        if idx % every and idx != total:
            continue
        report.checkpoints += 1
        texts = [tree.text(j) for j in range(tree.string_count)]
        if mode == "st":
            ok, msg = equivalent(canonical_tree(tree), naive_suffix_tree(texts, sentinel))
        else:
            ok, msg = equivalent(canonical_dawg(session.index),
                                 naive_dawg([t[::-1] for t in texts], sentinel))
        if not ok and report.mismatch is None:
            report.mismatch = f"after {idx} commands: {msg}"
    return report
