"""Ordered split-insert-find over integer-keyed sets, backed by AVL trees.

Every element carries a parent pointer so that the set an element belongs to
can be named by walking up to the root.  The root additionally carries an
``owner`` tag; rotations that replace the root move the tag along with it.

All work is tallied in :class:`SetCounters` as *touches* (elements visited or
relinked), which is the cost proxy used by the suffix-tree engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence


class OrderedSetError(Exception):
    """Base class for misuse of the split-insert-find structure."""


class DuplicateKeyError(OrderedSetError):
    pass


class UnownedSetError(OrderedSetError):
    pass


class NotRootError(OrderedSetError):
    pass


class Element:
    __slots__ = ("key", "payload", "left", "right", "parent", "height", "size", "owner")

    def __init__(self, key: int, payload: Any = None) -> None:
        self.key = key
        self.payload = payload
        self.left: Element | None = None
        self.right: Element | None = None
        self.parent: Element | None = None
        self.height = 1
        self.size = 1
        # only meaningful on a root
        self.owner: Any = None

    def __repr__(self) -> str:
        return f"Element(key={self.key}, h={self.height}, size={self.size})"

    def is_root(self) -> bool:
        return self.parent is None

    def keys(self) -> list[int]:
        """Keys of the subtree rooted here, in order."""
        return [e.key for e in iter_inorder(self)]


def _h(e: Element | None) -> int:
    return 0 if e is None else e.height


def _sz(e: Element | None) -> int:
    return 0 if e is None else e.size


def _update(e: Element) -> None:
    hl = _h(e.left)
    hr = _h(e.right)
    e.height = (hl if hl > hr else hr) + 1
    e.size = _sz(e.left) + _sz(e.right) + 1


def iter_inorder(root: Element | None) -> Iterator[Element]:
    stack: list[Element] = []
    cur = root
    while stack or cur is not None:
        while cur is not None:
            stack.append(cur)
            cur = cur.left
        cur = stack.pop()
        yield cur
        cur = cur.right


def root_of(member: Element) -> Element:
    """Uncounted walk to the root; for queries and diagnostics."""
    while member.parent is not None:
        member = member.parent
    return member


def decompose_complete(n: int) -> list[int]:
    """Greedy decomposition of ``n`` into complete-binary-tree sizes ``2**h - 1``.

    Heights are non-increasing; only the last two can coincide (for example
    ``n = 2`` gives ``[1, 1]``).
    """
    heights = []
    r = n
    while r > 0:
        h = (r + 1).bit_length() - 1
        heights.append(h)
        r -= (1 << h) - 1
    return heights


@dataclass
class SetCounters:
    touches: int = 0
    rotations: int = 0
    finds: int = 0
    inserts: int = 0
    splits: int = 0
    split_touches: int = 0
    bulk_builds: int = 0
    bulk_touches: int = 0


@dataclass(frozen=True)
class Violation:
    kind: str
    key: int
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} violation at key {self.key}: {self.detail}"


class SplitInsertFind:
    """A forest of disjoint ordered sets supporting make-set, insert, split and find."""

    def __init__(self) -> None:
        self.counters = SetCounters()

    # -- rotations -------------------------------------------------------

    def _replace_child(self, old: Element, new: Element, parent: Element | None) -> None:
        new.parent = parent
        if parent is None:
            new.owner = old.owner
            old.owner = None
        elif parent.left is old:
            parent.left = new
        else:
            parent.right = new

    def _rotate_right(self, x: Element) -> Element:
        top = x.left
        assert top is not None
        parent = x.parent
        x.left = top.right
        if top.right is not None:
            top.right.parent = x
        top.right = x
        x.parent = top
        self._replace_child(x, top, parent)
        _update(x)
        _update(top)
        self.counters.rotations += 1
        self.counters.touches += 2
        return top

    def _rotate_left(self, x: Element) -> Element:
        top = x.right
        assert top is not None
        parent = x.parent
        x.right = top.left
        if top.left is not None:
            top.left.parent = x
        top.left = x
        x.parent = top
        self._replace_child(x, top, parent)
        _update(x)
        _update(top)
        self.counters.rotations += 1
        self.counters.touches += 2
        return top

    def _rebalance(self, e: Element) -> Element:
        _update(e)
        balance = _h(e.left) - _h(e.right)
        if balance > 1:
            if _h(e.left.left) < _h(e.left.right):
                self._rotate_left(e.left)
            return self._rotate_right(e)
        if balance < -1:
            if _h(e.right.right) < _h(e.right.left):
                self._rotate_right(e.right)
            return self._rotate_left(e)
        return e

    def _retrace(self, e: Element) -> Element:
        """Fix heights and balance from ``e`` up to the root; returns the root."""
        c = self.counters
        while True:
            c.touches += 1
            e = self._rebalance(e)
            if e.parent is None:
                return e
            e = e.parent

    def _walk_root(self, member: Element) -> Element:
        c = self.counters
        c.touches += 1
        while member.parent is not None:
            member = member.parent
            c.touches += 1
        return member

    # -- public operations -----------------------------------------------

    def make_singleton(self, key: int, payload: Any = None) -> Element:
        self.counters.touches += 1
        return Element(key, payload)

    def set_owner(self, root: Element, owner: Any) -> None:
        if root.parent is not None:
            raise NotRootError(f"set_owner on non-root element with key {root.key}")
        if owner is None:
            raise ValueError("owner must not be None")
        root.owner = owner

    def find_root(self, member: Element) -> tuple[Element, Any]:
        """Return ``(root, owner)`` of the set containing ``member``."""
        self.counters.finds += 1
        root = self._walk_root(member)
        if root.owner is None:
            raise UnownedSetError(f"set containing key {member.key} has no owner")
        return root, root.owner

    def insert_into(self, member: Element, key: int, payload: Any = None) -> Element:
        """Insert a new element into the set containing ``member``."""
        c = self.counters
        c.finds += 1
        c.inserts += 1
        cur = self._walk_root(member)
        while True:
            c.touches += 1
            if key == cur.key:
                raise DuplicateKeyError(f"key {key} already present")
            nxt = cur.left if key < cur.key else cur.right
            if nxt is None:
                break
            cur = nxt
        e = Element(key, payload)
        e.parent = cur
        if key < cur.key:
            cur.left = e
        else:
            cur.right = e
        self._retrace(cur)
        return e

    def _join(self, left: Element | None, pivot: Element, right: Element | None) -> Element:
        """Concatenate detached trees around ``pivot`` (keys left < pivot < right)."""
        c = self.counters
        hl, hr = _h(left), _h(right)
        if hl > hr + 1:
            parent = None
            cur = left
            while _h(cur) > hr + 1:
                c.touches += 1
                parent = cur
                cur = cur.right
            pivot.left, pivot.right = cur, right
            if cur is not None:
                cur.parent = pivot
            if right is not None:
                right.parent = pivot
            _update(pivot)
            parent.right = pivot
            pivot.parent = parent
            return self._retrace(parent)
        if hr > hl + 1:
            parent = None
            cur = right
            while _h(cur) > hl + 1:
                c.touches += 1
                parent = cur
                cur = cur.left
            pivot.left, pivot.right = left, cur
            if cur is not None:
                cur.parent = pivot
            if left is not None:
                left.parent = pivot
            _update(pivot)
            parent.left = pivot
            pivot.parent = parent
            return self._retrace(parent)
        c.touches += 1
        pivot.left, pivot.right = left, right
        pivot.parent = None
        if left is not None:
            left.parent = pivot
        if right is not None:
            right.parent = pivot
        _update(pivot)
        return pivot

    def _split_tree(self, t: Element | None, k: int) -> tuple[Element | None, Element | None]:
        if t is None:
            return None, None
        self.counters.touches += 1
        left, right = t.left, t.right
        t.left = t.right = t.parent = None
        t.owner = None
        if left is not None:
            left.parent = None
        if right is not None:
            right.parent = None
        if t.key <= k:
            a, b = self._split_tree(right, k)
            return self._join(left, t, a), b
        a, b = self._split_tree(left, k)
        return a, self._join(b, t, right)

    def split(self, member: Element, k: int) -> tuple[Element | None, Element | None]:
        """Split the set containing ``member`` into keys ``<= k`` and keys ``> k``.

        Both resulting roots come back unowned.
        """
        c = self.counters
        before = c.touches
        c.splits += 1
        root = self._walk_root(member)
        root.owner = None
        result = self._split_tree(root, k)
        c.split_touches += c.touches - before
        return result

    def _build_complete(self, items: Sequence[tuple[int, Any]], lo: int, hi: int,
                        out: list[Element] | None) -> Element | None:
        if lo >= hi:
            return None
        mid = (lo + hi) // 2
        e = Element(*items[mid])
        self.counters.touches += 1
        if out is not None:
            out[mid] = e
        e.left = self._build_complete(items, lo, mid, out)
        e.right = self._build_complete(items, mid + 1, hi, out)
        if e.left is not None:
            e.left.parent = e
        if e.right is not None:
            e.right.parent = e
        _update(e)
        return e

    def bulk_build_desc(self, pairs: Sequence[tuple[int, Any]],
                        out: list[Element] | None = None) -> Element:
        """Build one set from ``(key, payload)`` pairs given in strictly decreasing key order.

        The pairs are cut into maximal complete trees (largest first, holding the
        smallest keys), which are then concatenated along the right spine using
        the minimum of each following tree as the pivot.  Work is linear in
        ``len(pairs)``.  If ``out`` is a list, it receives the new elements in
        input order.
        """
        n = len(pairs)
        if n == 0:
            raise ValueError("bulk_build_desc needs at least one pair")
        for i in range(1, n):
            if pairs[i][0] >= pairs[i - 1][0]:
                raise ValueError("keys must be strictly decreasing")
        c = self.counters
        before = c.touches
        c.bulk_builds += 1
        items = pairs[::-1]
        slots: list[Element] | None = [None] * n if out is not None else None  # type: ignore[list-item]
        heights = decompose_complete(n)
        first = (1 << heights[0]) - 1
        acc = self._build_complete(items, 0, first, slots)
        pos = first
        for h in heights[1:]:
            size = (1 << h) - 1
            pivot = Element(*items[pos])
            c.touches += 1
            if slots is not None:
                slots[pos] = pivot
            rest = self._build_complete(items, pos + 1, pos + size, slots)
            acc = self._join(acc, pivot, rest)
            pos += size
        if out is not None:
            out.extend(reversed(slots))
        c.bulk_touches += c.touches - before
        return acc

    # -- diagnostics -----------------------------------------------------

    @staticmethod
    def validate(root: Element) -> Violation | None:
        """Full structural check of one set; returns the first violation found."""
        if root.parent is not None:
            return Violation("root", root.key, "root has a parent")
        prev: int | None = None
        for e in iter_inorder(root):
            for child in (e.left, e.right):
                if child is not None and child.parent is not e:
                    return Violation("parent", child.key, f"parent ref does not point to {e.key}")
            if prev is not None and e.key <= prev:
                return Violation("order", e.key, f"follows key {prev} in order")
            prev = e.key
            hl, hr = _h(e.left), _h(e.right)
            if e.height != max(hl, hr) + 1:
                return Violation("height", e.key, f"stored {e.height}, children {hl}/{hr}")
            if abs(hl - hr) > 1:
                return Violation("balance", e.key, f"child heights {hl}/{hr}")
            if e.size != _sz(e.left) + _sz(e.right) + 1:
                return Violation("size", e.key, f"stored {e.size}")
            if e is not root and e.owner is not None:
                return Violation("owner", e.key, "owner tag on a non-root element")
        return None


def keys_of(root: Element | None) -> list[int]:
    return [] if root is None else root.keys()


def build_ascending(forest: SplitInsertFind, keys: Iterable[int], payload: Any = None) -> Element:
    """Convenience: build a set from ascending keys (via the descending bulk builder)."""
    pairs = [(k, payload) for k in sorted(keys, reverse=True)]
    return forest.bulk_build_desc(pairs)
