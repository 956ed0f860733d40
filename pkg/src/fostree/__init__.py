"""Fully-online suffix trees (right-to-left) and DAWGs (left-to-right) on AVL-managed Weiner links."""

from fostree.dawg import Dawg, FrozenDawg
from fostree.ordered_sets import SplitInsertFind
from fostree.suffix_tree import Counters, SuffixTree

__all__ = ["Counters", "Dawg", "FrozenDawg", "SplitInsertFind", "SuffixTree"]
