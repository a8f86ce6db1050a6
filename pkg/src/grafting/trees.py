"""Planar binary trees over a single leaf symbol, and leaf-indexed insertion.

Trees are immutable values; insertion is always evaluated eagerly to a tree,
so every object downstream has a unique representative.  Leaf positions are
1-based, counted from the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IndexRangeError, ParseError


class Tree:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Leaf(Tree):
    pass


@dataclass(frozen=True, slots=True)
class Wedge(Tree):
    left: Tree
    right: Tree


LEAF = Leaf()
TWO = Wedge(LEAF, LEAF)


def leaf_count(tree: Tree) -> int:
    match tree:
        case Leaf():
            return 1
        case Wedge(left, right):
            return leaf_count(left) + leaf_count(right)
    raise TypeError(f"not a tree: {tree!r}")


def wedge(left: Tree, right: Tree) -> Wedge:
    return Wedge(left, right)


def insert(tree: Tree, n: int, graft: Tree) -> Tree:
    """Replace the n-th leaf of ``tree`` (1-based, from the left) by ``graft``."""
    size = leaf_count(tree)
    if not 1 <= n <= size:
        raise IndexRangeError(f"insertion index {n} out of range 1..{size}")
    return _insert(tree, n, graft)


def _insert(tree: Tree, n: int, graft: Tree) -> Tree:
    match tree:
        case Leaf():
            return graft
        case Wedge(left, right):
            left_size = leaf_count(left)
            if n <= left_size:
                return Wedge(_insert(left, n, graft), right)
            return Wedge(left, _insert(right, n - left_size, graft))
    raise TypeError(f"not a tree: {tree!r}")


def format_tree(tree: Tree) -> str:
    """Canonical text: ``*`` for a leaf, ``(X^Y)`` for a wedge, no spaces."""
    match tree:
        case Leaf():
            return "*"
        case Wedge(left, right):
            return f"({format_tree(left)}^{format_tree(right)})"
    raise TypeError(f"not a tree: {tree!r}")


def parse_tree(text: str) -> Tree:
    """Parse the grammar  Tree ::= "*" | "(" Tree "^" Tree ")".

    Whitespace is ignored, and the outermost pair of parentheses may be
    omitted, so ``*^(*^*)`` and ``( * ^ ( * ^ * ) )`` both parse.
    """
    tree, pos = _parse_tree_at(text, _skip_ws(text, 0))
    pos = _skip_ws(text, pos)
    if pos < len(text) and text[pos] == "^":
        # top-level wedge with the outer parentheses left off
        right, pos = _parse_tree_at(text, _skip_ws(text, pos + 1))
        tree = Wedge(tree, right)
        pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r} after tree", pos)
    return tree


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_tree_at(text: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(text):
        raise ParseError("unexpected end of input, expected a tree", pos)
    ch = text[pos]
    if ch == "*":
        return LEAF, pos + 1
    if ch == "(":
        left, pos = _parse_tree_at(text, _skip_ws(text, pos + 1))
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != "^":
            raise ParseError("expected '^' in wedge", pos)
        right, pos = _parse_tree_at(text, _skip_ws(text, pos + 1))
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise ParseError("expected ')'", pos)
        return Wedge(left, right), pos + 1
    raise ParseError(f"unexpected {ch!r}, expected '*' or '('", pos)


@lru_cache(maxsize=None)
def all_trees(n_leaves: int) -> tuple[Tree, ...]:
    """All trees with exactly ``n_leaves`` leaves, in a fixed order."""
    if n_leaves < 1:
        raise ValueError("a tree has at least one leaf")
    if n_leaves == 1:
        return (LEAF,)
    return tuple(
        Wedge(left, right)
        for k in range(1, n_leaves)
        for left in all_trees(k)
        for right in all_trees(n_leaves - k)
    )


def subtree_positions(tree: Tree) -> list[tuple[int, ...]]:
    """All node positions in preorder; children are 1 (left) and 2 (right)."""
    out: list[tuple[int, ...]] = []

    def walk(t: Tree, path: tuple[int, ...]) -> None:
        out.append(path)
        if isinstance(t, Wedge):
            walk(t.left, path + (1,))
            walk(t.right, path + (2,))

    walk(tree, ())
    return out


def subtree_at(tree: Tree, path: tuple[int, ...]) -> Tree:
    for step in path:
        if not isinstance(tree, Wedge):
            raise IndexRangeError(f"path {path} leaves the tree")
        tree = tree.left if step == 1 else tree.right
    return tree


def replace_subtree(tree: Tree, path: tuple[int, ...], graft: Tree) -> Tree:
    if not path:
        return graft
    if not isinstance(tree, Wedge):
        raise IndexRangeError(f"path {path} leaves the tree")
    if path[0] == 1:
        return Wedge(replace_subtree(tree.left, path[1:], graft), tree.right)
    return Wedge(tree.left, replace_subtree(tree.right, path[1:], graft))


def decompositions(tree: Tree) -> list[tuple[Tree, int, Tree]]:
    """All ways to write ``tree`` as insert(A, n, B).

    One decomposition per node position P of the tree: B is the subtree at P,
    A is the tree with P collapsed to a leaf, and n is the leaf index that
    the collapsed position occupies in A.  Positions are enumerated in
    preorder, so the whole-tree decomposition (A = leaf) comes first.
    """
    out = []
    for path in subtree_positions(tree):
        part = subtree_at(tree, path)
        host = replace_subtree(tree, path, LEAF)
        n = 1 + _leaves_left_of(tree, path)
        out.append((host, n, part))
    return out


def _leaves_left_of(tree: Tree, path: tuple[int, ...]) -> int:
    count = 0
    for step in path:
        assert isinstance(tree, Wedge)
        if step == 2:
            count += leaf_count(tree.left)
            tree = tree.right
        else:
            tree = tree.left
    return count
