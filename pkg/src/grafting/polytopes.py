"""Rotation and transposition graphs, and the worked hexagon collapse.

Vertices carry canonical text labels (tree text, or a permutation word);
generation is deterministic, so DOT output is byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from string import ascii_lowercase
from typing import Mapping

from .errors import IndexRangeError
from .terms import Ins, TWO_TERM, eval_v, format_iterm
from .trees import Tree, Wedge, all_trees, format_tree

Edge = tuple[str, str, str | None]


@dataclass(frozen=True)
class SkeletonGraph:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    directed: bool = False


def _build(name: str, vertices: list[str], edges: list[Edge],
           directed: bool) -> SkeletonGraph:
    unique_edges: dict[tuple[str, str], str | None] = {}
    for u, v, label in edges:
        if u == v:
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        unique_edges.setdefault(key, label)
    return SkeletonGraph(
        name,
        tuple(sorted(set(vertices))),
        tuple(sorted((u, v, unique_edges[(u, v)]) for u, v in unique_edges)),
        directed,
    )


def rotations(tree: Tree) -> list[tuple[str, Tree]]:
    """Single left rotations U^(V^W) -> (U^V)^W, one per applicable node
    position; positions use the proof-path notation (root, 1, 2.1, ...)."""
    out: list[tuple[str, Tree]] = []

    def walk(t: Tree, path: tuple[int, ...]) -> None:
        if isinstance(t, Wedge):
            if isinstance(t.right, Wedge):
                label = "root" if not path else ".".join(str(p) for p in path)
                rotated = Wedge(Wedge(t.left, t.right.left), t.right.right)
                out.append((label, _replace(tree, path, rotated)))
            walk(t.left, path + (1,))
            walk(t.right, path + (2,))

    walk(tree, ())
    return out


def _replace(tree: Tree, path: tuple[int, ...], new: Tree) -> Tree:
    if not path:
        return new
    assert isinstance(tree, Wedge)
    if path[0] == 1:
        return Wedge(_replace(tree.left, path[1:], new), tree.right)
    return Wedge(tree.left, _replace(tree.right, path[1:], new))


def tamari_graph(n_leaves: int, directed: bool = False) -> SkeletonGraph:
    """All trees with ``n_leaves`` leaves; edges are single rotations."""
    if not 2 <= n_leaves <= 12:
        raise IndexRangeError("tamari graph size must be in 2..12")
    vertices = [format_tree(t) for t in all_trees(n_leaves)]
    edges: list[Edge] = []
    for tree in all_trees(n_leaves):
        src = format_tree(tree)
        for label, rotated in rotations(tree):
            edges.append((src, format_tree(rotated), label))
    suffix = "-directed" if directed else ""
    return _build(f"tamari-{n_leaves}{suffix}", vertices, edges, directed)


def permutohedron_graph(n_letters: int) -> SkeletonGraph:
    """All permutations of the first n letters; edges swap adjacent letters."""
    if not 2 <= n_letters <= 8:
        raise IndexRangeError("permutohedron graph size must be in 2..8")
    letters = ascii_lowercase[:n_letters]
    vertices = ["".join(p) for p in permutations(letters)]
    edges: list[Edge] = []
    for word in vertices:
        for i in range(n_letters - 1):
            swapped = word[:i] + word[i + 1] + word[i] + word[i + 2:]
            edges.append((word, swapped, str(i + 1)))
    return _build(f"permutohedron-{n_letters}", vertices, edges, directed=False)


def to_dot(graph: SkeletonGraph) -> str:
    kind = "digraph" if graph.directed else "graph"
    arrow = "->" if graph.directed else "--"
    lines = [f'{kind} "{graph.name}" {{']
    for vertex in graph.vertices:
        lines.append(f'  "{vertex}";')
    for u, v, label in graph.edges:
        suffix = f' [label="{label}"]' if label is not None else ""
        lines.append(f'  "{u}" {arrow} "{v}"{suffix};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graphs_isomorphic(a: SkeletonGraph, b: SkeletonGraph) -> bool:
    """Brute-force isomorphism on small graphs (at most 8 vertices)."""
    if a.directed != b.directed:
        return False
    if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return False
    if len(a.vertices) > 8:
        raise IndexRangeError("isomorphism check is limited to 8 vertices")
    edges_a = {(u, v) for u, v, _ in a.edges}
    edges_b = {(u, v) for u, v, _ in b.edges}
    if not a.directed:
        edges_b |= {(v, u) for u, v in edges_b}
    for image in permutations(b.vertices):
        mapping = dict(zip(a.vertices, image))
        if all((mapping[u], mapping[v]) in edges_b for u, v in edges_a):
            return True
    return False


# The transposition-hexagon vertices as insertion terms in three copies of
# the two-leaf tree; evaluation identifies exactly one pair of them.
_HEXAGON_TERMS = {
    "abc": Ins(Ins(TWO_TERM, 2, TWO_TERM), 3, TWO_TERM),
    "bac": Ins(Ins(TWO_TERM, 1, TWO_TERM), 3, TWO_TERM),
    "bca": Ins(Ins(TWO_TERM, 2, TWO_TERM), 1, TWO_TERM),
    "acb": Ins(Ins(TWO_TERM, 2, TWO_TERM), 2, TWO_TERM),
    "cab": Ins(Ins(TWO_TERM, 1, TWO_TERM), 2, TWO_TERM),
    "cba": Ins(Ins(TWO_TERM, 1, TWO_TERM), 1, TWO_TERM),
}


@dataclass(frozen=True)
class CollapseReport:
    hexagon: SkeletonGraph
    pentagon: SkeletonGraph
    vertex_terms: Mapping[str, str]     # permutation word -> insertion term
    vertex_map: Mapping[str, str]       # permutation word -> tree label
    identified: tuple[str, str]
    merged_vertex: str
    isomorphic_to_tamari: bool


def hexagon_pentagon_collapse() -> CollapseReport:
    """Collapse the three-letter transposition hexagon onto the pentagon.

    Each hexagon vertex denotes an insertion term in three copies of the
    two-leaf tree; exactly one pair of terms denotes the same tree, and
    merging that pair turns the hexagon into the four-leaf rotation graph.
    """
    hexagon = permutohedron_graph(3)
    hexagon = SkeletonGraph("transposition-hexagon", hexagon.vertices,
                            hexagon.edges, hexagon.directed)
    vertex_map = {word: format_tree(eval_v(term))
                  for word, term in _HEXAGON_TERMS.items()}
    by_tree: dict[str, list[str]] = {}
    for word in sorted(vertex_map):
        by_tree.setdefault(vertex_map[word], []).append(word)
    doubled = [(tree, words) for tree, words in by_tree.items() if len(words) > 1]
    assert len(doubled) == 1 and len(doubled[0][1]) == 2
    merged_vertex, identified = doubled[0][0], tuple(doubled[0][1])
    pentagon_edges: list[Edge] = [
        (vertex_map[u], vertex_map[v], label) for u, v, label in hexagon.edges
    ]
    pentagon = _build("collapsed-pentagon", sorted(set(vertex_map.values())),
                      pentagon_edges, directed=False)
    return CollapseReport(
        hexagon=hexagon,
        pentagon=pentagon,
        vertex_terms={w: format_iterm(t) for w, t in sorted(_HEXAGON_TERMS.items())},
        vertex_map=dict(sorted(vertex_map.items())),
        identified=(identified[0], identified[1]),
        merged_vertex=merged_vertex,
        isomorphic_to_tamari=graphs_isomorphic(pentagon, tamari_graph(4)),
    )
