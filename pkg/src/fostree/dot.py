"""Graphviz DOT writers for the suffix tree and its DAWG view.

Vertices are named ``n<id>`` by allocation order and edges are emitted in
sorted symbol order, so identical build histories give identical bytes.
"""

from __future__ import annotations

from typing import IO, TYPE_CHECKING

from fostree.suffix_tree import symbol_repr

if TYPE_CHECKING:
    from fostree.dawg import FrozenDawg
    from fostree.suffix_tree import SuffixTree


def quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_tree_dot(tree: SuffixTree, sink: IO[str]) -> None:
    sink.write("digraph stree {\n")
    sink.write("  node [shape=circle];\n")
    for node in tree.nodes:
        sink.write(f"  n{node.id} [label={quote(str(node.depth))}];\n")
    for node in tree.nodes:
        for code in sorted(node.children):
            child = node.children[code]
            text = "".join(symbol_repr(s) for s in tree.label(child))
            sink.write(f"  n{node.id} -> n{child.id} [label={quote(text)}];\n")
    for node in tree.nodes:
        for code, target, hard in tree.iter_links(node):
            kind = "hard" if hard else "soft"
            width = "2" if hard else "1"
            sink.write(f"  n{node.id} -> n{target.id} [style=dashed, penwidth={width}, "
                       f"label={quote(symbol_repr(code) + ' ' + kind)}];\n")
    sink.write("}\n")


def write_dawg_dot(frozen: FrozenDawg, sink: IO[str]) -> None:
    sink.write("digraph dawg {\n")
    sink.write("  rankdir=LR;\n  node [shape=circle];\n")
    for sid in range(frozen.state_count):
        shape = ", shape=doublecircle" if sid == frozen.initial else ""
        sink.write(f"  s{sid} [label={quote(str(frozen.long_length[sid]))}{shape}];\n")
    for sid in range(frozen.state_count):
        for code, (target, primary) in sorted(frozen.edges[sid].items()):
            style = "solid" if primary else "dashed"
            sink.write(f"  s{sid} -> s{target} [style={style}, label={quote(symbol_repr(code))}];\n")
    sink.write("}\n")
