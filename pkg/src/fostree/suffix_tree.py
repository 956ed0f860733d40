"""Fully-online right-to-left generalized suffix tree with hard and soft Weiner links.

Each string is stored reversed (position 0 is its rightmost symbol), so a
prepend is a list append and an edge label ``(sid, b, e)`` -- the symbols at
distances ``e-1 ... b`` from the right end of string ``sid`` -- never has to be
renumbered.

The in-coming Weiner links of a node ``u`` form one ordered set keyed by the
string depth of their origins.  Out-going links are held as references to the
elements of those sets, so resolving a link is a find on the set, and the
redirection step of Weiner's update becomes a single split.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import IO, Iterator

from fostree.ordered_sets import Element, SplitInsertFind, iter_inorder, root_of

SENTINEL_BASE = 0x110000


class TreeError(Exception):
    pass


class UnknownStringError(TreeError, KeyError):
    pass


class SymbolError(TreeError, ValueError):
    pass


class OrientationError(TreeError):
    pass


def sentinel(i: int) -> int:
    """Symbol code of the terminator of string ``i``."""
    return SENTINEL_BASE + i


def is_sentinel(code: int) -> bool:
    return code >= SENTINEL_BASE


def symbol_code(sym: str | int) -> int:
    if isinstance(sym, str):
        if len(sym) != 1:
            raise SymbolError(f"symbol must be a single character, got {sym!r}")
        return ord(sym)
    if isinstance(sym, int) and sym >= 0:
        return sym
    raise SymbolError(f"bad symbol {sym!r}")


def symbol_repr(code: int) -> str:
    return f"${code - SENTINEL_BASE}" if is_sentinel(code) else chr(code)


class Node:
    __slots__ = ("id", "depth", "parent", "sid", "lb", "le", "children", "wout", "win")

    def __init__(self, node_id: int, depth: int, parent: Node | None = None,
                 sid: int = -1, lb: int = 0, le: int = 0) -> None:
        self.id = node_id
        self.depth = depth
        self.parent = parent
        # in-coming edge label, right-anchored: distances le-1 .. lb of string sid
        self.sid = sid
        self.lb = lb
        self.le = le
        self.children: dict[int, Node] = {}
        # symbol -> element of the target's in-coming set
        self.wout: dict[int, Element] = {}
        # some member of S(self); the set's root owner is self
        self.win: Element | None = None

    def __repr__(self) -> str:
        return f"Node({self.id}, depth={self.depth})"


@dataclass
class Counters:
    prepends: int = 0
    climbed_nodes: int = 0
    created_links: int = 0
    copied_links: int = 0
    redirect_splits: int = 0
    set_inserts: int = 0
    set_finds: int = 0
    avl_rotations: int = 0
    avl_touches: int = 0


@dataclass
class SplitProbe:
    """Per-split measurements, kept apart from the counters."""
    split_touches: int = 0
    max_split_size: int = 0
    splits: int = 0


class SuffixTree:
    """Generalized suffix tree over a collection receiving prepends in any interleaving."""

    def __init__(self, sentinel: bool = True, orientation: str = "st") -> None:
        if orientation not in ("st", "dawg"):
            raise ValueError(f"unknown orientation {orientation!r}")
        self.sentinel = sentinel
        self.orientation = orientation
        self.sets = SplitInsertFind()
        self.nodes: list[Node] = []
        self.root = self._new_node(0)
        self._buffers: list[list[int]] = []
        self._active: list[Node] = []
        self._counters = Counters()
        self.probe = SplitProbe()

    # -- construction ----------------------------------------------------

    def _new_node(self, depth: int, parent: Node | None = None,
                  sid: int = -1, lb: int = 0, le: int = 0) -> Node:
        node = Node(len(self.nodes), depth, parent, sid, lb, le)
        self.nodes.append(node)
        return node

    def _attach_leaf(self, parent: Node, sid: int) -> Node:
        buf = self._buffers[sid]
        n = len(buf)
        leaf = self._new_node(n, parent, sid, 0, n - parent.depth)
        parent.children[buf[n - parent.depth - 1]] = leaf
        return leaf

    def add_string(self) -> int:
        """Register a new (empty) string and return its id."""
        sid = len(self._buffers)
        if self.sentinel:
            self._buffers.append([sentinel(sid)])
            leaf = self._attach_leaf(self.root, sid)
            # W_$(root) = $ is a hard link
            e = self.sets.make_singleton(0, self.root)
            self.sets.set_owner(e, leaf)
            leaf.win = e
            self.root.wout[sentinel(sid)] = e
            self._counters.created_links += 1
            self._active.append(leaf)
        else:
            self._buffers.append([])
            self._active.append(self.root)
        return sid

    def prepend(self, sid: int, sym: str | int) -> None:
        if self.orientation != "st":
            raise OrientationError("this index receives appends (DAWG orientation)")
        self._extend(sid, sym)

    def _extend(self, sid: int, sym: str | int) -> None:
        if not 0 <= sid < len(self._buffers):
            raise UnknownStringError(sid)
        a = symbol_code(sym)
        if is_sentinel(a):
            raise SymbolError("terminator symbols cannot be prepended")
        c = self._counters
        sets = self.sets
        c.prepends += 1
        v, climbed = self.find_deepest_wlink_ancestor(self._active[sid], a)
        c.climbed_nodes += len(climbed) + (v is not None)
        self._buffers[sid].append(a)
        if v is None:
            w = self.root
        else:
            u = sets.find_root(v.wout[a])[1]
            if u.depth == v.depth + 1:
                w = u
            else:
                w = self._split_edge(u, v, a)
                if climbed and climbed[-1] is u:
                    # y now lies between u and v on the climbed path
                    climbed.append(w)
        if not climbed:
            # raw mode only: aT already occurs and now ends at w
            self._active[sid] = w
            return
        leaf = self._attach_leaf(w, sid)
        elems: list[Element] = []
        root = sets.bulk_build_desc([(x.depth, x) for x in climbed], out=elems)
        sets.set_owner(root, leaf)
        leaf.win = root
        for x, e in zip(climbed, elems):
            x.wout[a] = e
        c.created_links += len(climbed)
        self._active[sid] = leaf

    def _split_edge(self, u: Node, v: Node, a: int) -> Node:
        """Insert ``y = a v`` as the new parent of ``u`` and hand it its links."""
        sets = self.sets
        p = u.parent
        buf_u = self._buffers[u.sid]
        upper = v.depth + 1 - p.depth
        y = self._new_node(v.depth + 1, p, u.sid, u.le - upper, u.le)
        p.children[buf_u[u.le - 1]] = y
        u.le -= upper
        u.parent = y
        y.children[buf_u[u.le - 1]] = u
        for code, e in u.wout.items():
            y.wout[code] = sets.insert_into(e, y.depth, y)
        self._counters.copied_links += len(u.wout)
        member = v.wout[a]
        size = root_of(member).size
        before = sets.counters.split_touches
        low, high = sets.split(member, v.depth)
        sets.set_owner(low, y)
        y.win = low
        sets.set_owner(high, u)
        u.win = high
        self._counters.redirect_splits += 1
        pr = self.probe
        pr.splits += 1
        pr.split_touches += sets.counters.split_touches - before
        if size > pr.max_split_size:
            pr.max_split_size = size
        return y

    # -- queries ---------------------------------------------------------

    def find_deepest_wlink_ancestor(self, node: Node, sym: str | int) -> tuple[Node | None, list[Node]]:
        """Climb from ``node`` to the deepest ancestor-or-self with an ``a``-link.

        Returns that ancestor (or None) and the nodes passed on the way, deepest first.
        """
        a = symbol_code(sym)
        climbed = []
        x: Node | None = node
        while x is not None:
            if a in x.wout:
                return x, climbed
            climbed.append(x)
            x = x.parent
        return None, climbed

    def weiner_target(self, node: Node, sym: str | int) -> tuple[Node, bool] | None:
        e = node.wout.get(symbol_code(sym))
        if e is None:
            return None
        u = root_of(e).owner
        return u, u.depth == node.depth + 1

    def iter_links(self, node: Node) -> Iterator[tuple[int, Node, bool]]:
        """Out-going links of ``node`` as ``(symbol, target, hard)``, by symbol."""
        for code in sorted(node.wout):
            u = root_of(node.wout[code]).owner
            yield code, u, u.depth == node.depth + 1

    def active_node(self, sid: int) -> Node:
        return self._active[sid]

    @property
    def string_count(self) -> int:
        return len(self._buffers)

    def text(self, sid: int) -> str:
        """String ``sid`` without its terminator."""
        buf = self._buffers[sid]
        return "".join(chr(c) for c in reversed(buf) if not is_sentinel(c))

    def total_length(self) -> int:
        return sum(len(b) for b in self._buffers)

    def label(self, node: Node) -> list[int]:
        """Symbols on the in-coming edge of ``node``, top-down."""
        if node.parent is None:
            return []
        buf = self._buffers[node.sid]
        return buf[node.le - 1: node.lb - 1 if node.lb else None: -1]

    def node_symbols(self, node: Node) -> list[int]:
        parts = []
        while node.parent is not None:
            parts.append(self.label(node))
            node = node.parent
        out: list[int] = []
        for part in reversed(parts):
            out.extend(part)
        return out

    @staticmethod
    def symbol_text(code: int, terminator_base: int) -> str:
        return chr(terminator_base + code - SENTINEL_BASE) if is_sentinel(code) else chr(code)

    def node_strings(self, terminator_base: int) -> list[str]:
        """Represented string of every node, with terminators mapped to ``terminator_base + i``."""
        out = [""] * len(self.nodes)
        stack = [self.root]
        while stack:
            node = stack.pop()
            for child in node.children.values():
                out[child.id] = out[node.id] + "".join(
                    self.symbol_text(s, terminator_base) for s in self.label(child))
                stack.append(child)
        return out

    def is_substring(self, pattern) -> bool:
        codes = [symbol_code(s) for s in pattern]
        node = self.root
        i = 0
        while i < len(codes):
            child = node.children.get(codes[i])
            if child is None:
                return False
            lab = self.label(child)
            for s in lab:
                if i == len(codes):
                    return True
                if codes[i] != s:
                    return False
                i += 1
            node = child
        return True

    def set_sizes(self) -> Iterator[tuple[Node, int]]:
        for node in self.nodes:
            if node.win is not None:
                yield node, root_of(node.win).size

    @property
    def counters(self) -> Counters:
        c = self._counters
        sc = self.sets.counters
        c.set_inserts = sc.inserts
        c.set_finds = sc.finds
        c.avl_rotations = sc.rotations
        c.avl_touches = sc.touches
        return c

    def link_count(self) -> int:
        return sum(len(n.wout) for n in self.nodes)

    def stats(self) -> dict:
        out = asdict(self.counters)
        out["nodes"] = len(self.nodes)
        out["links"] = self.link_count()
        out["d"] = max((s for _, s in self.set_sizes()), default=0)
        out["height"] = max(n.depth for n in self.nodes)
        out["n_total"] = self.total_length()
        return out

    def check(self) -> list[str]:
        """Internal consistency of sets, ownership and labels; returns problems found."""
        problems = []
        for node in self.nodes:
            for child_key, child in node.children.items():
                if child.parent is not node:
                    problems.append(f"{child} parent mismatch")
                if child.depth != node.depth + (child.le - child.lb):
                    problems.append(f"{child} depth/label mismatch")
                if self.label(child)[0] != child_key:
                    problems.append(f"{child} keyed under wrong symbol")
            if node.win is not None:
                r = root_of(node.win)
                bad = SplitInsertFind.validate(r)
                if bad is not None:
                    problems.append(f"S({node.id}): {bad}")
                if r.owner is not node:
                    problems.append(f"S({node.id}) owned by {r.owner}")
                for e in iter_inorder(r):
                    x = e.payload
                    if x.depth != e.key:
                        problems.append(f"S({node.id}) key {e.key} for origin of depth {x.depth}")
        return problems

    # -- export ----------------------------------------------------------

    def export_dot(self, sink: IO[str]) -> None:
        from fostree.dot import write_tree_dot
        write_tree_dot(self, sink)
