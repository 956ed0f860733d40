"""DAWG of a fully-online left-to-right collection, read off the suffix-tree engine.

Appending ``a`` to ``S_i`` is prepending ``a`` to ``T_i = rev(S_i)``.  Tree node
``v`` is the DAWG state whose longest member is ``rev(v)``; the Weiner link
``W_a(v)`` is the ``a``-edge leaving that state, primary exactly when the
link is hard.  States are addressed by tree node id.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import IO, Mapping

from fostree.ordered_sets import iter_inorder, root_of
from fostree.suffix_tree import SuffixTree, symbol_code


@dataclass(frozen=True)
class FrozenDawg:
    """Snapshot with every edge resolved; traversal is a single map lookup."""
    initial: int
    long_length: tuple[int, ...]
    # per state: symbol -> (target state, primary)
    edges: tuple[Mapping[int, tuple[int, bool]], ...]

    @property
    def state_count(self) -> int:
        return len(self.edges)

    @property
    def edge_count(self) -> int:
        return sum(len(e) for e in self.edges)

    def transition(self, state: int, sym: str | int) -> int | None:
        hit = self.edges[state].get(symbol_code(sym))
        return None if hit is None else hit[0]

    def is_substring(self, pattern) -> bool:
        state: int | None = self.initial
        for s in pattern:
            state = self.transition(state, s)
            if state is None:
                return False
        return True

    def export_dot(self, sink: IO[str]) -> None:
        from fostree.dot import write_dawg_dot
        write_dawg_dot(self, sink)


class Dawg:
    def __init__(self, sentinel: bool = True) -> None:
        self.tree = SuffixTree(sentinel=sentinel, orientation="dawg")

    def add_string(self) -> int:
        return self.tree.add_string()

    def append(self, sid: int, sym: str | int) -> None:
        self.tree._extend(sid, sym)

    @property
    def initial(self) -> int:
        return self.tree.root.id

    @property
    def state_count(self) -> int:
        return len(self.tree.nodes)

    @property
    def edge_count(self) -> int:
        return self.tree.link_count()

    def long_length(self, state: int) -> int:
        return self.tree.nodes[state].depth

    def long_string(self, state: int) -> list[int]:
        """Symbols of the longest member of ``state``, left to right."""
        return self.tree.node_symbols(self.tree.nodes[state])[::-1]

    def text(self, sid: int) -> str:
        return self.tree.text(sid)[::-1]

    def transition(self, state: int, sym: str | int) -> int | None:
        # ordered-map lookup, then a walk to the owning root
        e = self.tree.nodes[state].wout.get(symbol_code(sym))
        return None if e is None else root_of(e).owner.id

    def is_primary(self, state: int, sym: str | int) -> bool | None:
        hit = self.tree.weiner_target(self.tree.nodes[state], sym)
        return None if hit is None else hit[1]

    def is_substring(self, pattern) -> bool:
        state: int | None = self.initial
        for s in pattern:
            state = self.transition(state, s)
            if state is None:
                return False
        return True

    def finalize(self) -> FrozenDawg:
        """Resolve every edge once: label each set's elements by walking it from its root."""
        nodes = self.tree.nodes
        owner_of: dict[int, int] = {}
        for node in nodes:
            if node.win is not None:
                for e in iter_inorder(root_of(node.win)):
                    owner_of[id(e)] = node.id
        edges = []
        for node in nodes:
            out = {}
            for code, e in node.wout.items():
                target = owner_of[id(e)]
                out[code] = (target, nodes[target].depth == node.depth + 1)
            edges.append(MappingProxyType(dict(sorted(out.items()))))
        return FrozenDawg(self.initial, tuple(n.depth for n in nodes), tuple(edges))

    def stats(self) -> dict:
        return self.tree.stats()

    def export_dot(self, sink: IO[str]) -> None:
        self.finalize().export_dot(sink)
