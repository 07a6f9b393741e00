"""Simple graphs, trees, rooted views and the two text formats.

Edge-list text: one ``u v`` pair per line, 0-based vertex indices. Blank
lines and ``#`` comments are ignored. A line holding a single index declares
that vertex without an edge, so ``0`` alone is the one-vertex tree.

Level sequences: the depths of the vertices of a rooted tree listed in
preorder, root first with depth 0, e.g. ``0 1 2 1`` for a root with a
two-vertex branch and a leaf.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonSimpleError, NotATreeError, ParseError

__all__ = [
    "Graph",
    "Tree",
    "RootedView",
    "parse_edge_list",
    "format_edge_list",
    "is_tree",
    "root_at",
    "parents_from_level_sequence",
    "tree_from_level_sequence",
    "parse_level_sequence",
]


class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adjacency", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise NonSimpleError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise NonSimpleError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._m = m

    @property
    def num_edges(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return type(self)(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={self.edges()})"


class Tree(Graph):
    """A connected acyclic graph; checked on construction."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        super().__init__(n, edges)
        if not is_tree(self):
            raise NotATreeError(f"graph on {n} vertices with {self.num_edges} edges is not a tree")

    @classmethod
    def from_graph(cls, g: Graph) -> Tree:
        return cls(g.n, g.edges())


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and g.is_connected()


@dataclass(frozen=True)
class RootedView:
    """BFS layering of a tree from ``root``.

    ``order`` lists vertices in BFS order, so every parent precedes its
    children; ``children[u]`` is sorted by vertex index.
    """

    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    level: tuple[int, ...]
    order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def eccentricity(self) -> int:
        return max(self.level)

    def level_sets(self) -> list[list[int]]:
        sets: list[list[int]] = [[] for _ in range(self.eccentricity + 1)]
        for v in self.order:
            sets[self.level[v]].append(v)
        return sets


def root_at(t: Tree, v0: int) -> RootedView:
    if not 0 <= v0 < t.n:
        raise ValueError(f"root {v0} out of range for n={t.n}")
    parent: list[int | None] = [None] * t.n
    level = [0] * t.n
    children: list[tuple[int, ...]] = [()] * t.n
    seen = [False] * t.n
    seen[v0] = True
    order = []
    queue = deque([v0])
    while queue:
        u = queue.popleft()
        order.append(u)
        kids = []
        for w in t.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                level[w] = level[u] + 1
                kids.append(w)
                queue.append(w)
        children[u] = tuple(kids)
    return RootedView(v0, tuple(parent), tuple(children), tuple(level), tuple(order))


def parse_edge_list(text: str, cls=Graph) -> Graph:
    edges = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            idx = [int(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", lineno) from None
        if any(i < 0 for i in idx):
            raise ParseError("vertex indices must be non-negative", lineno)
        n = max(n, max(idx) + 1)
        if len(idx) == 2:
            u, v = idx
            if u == v:
                raise NonSimpleError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u, v, lineno))
    seen = set()
    for u, v, lineno in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NonSimpleError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
    if n == 0:
        raise ParseError("no vertices in input")
    return cls(n, [(u, v) for u, v, _ in edges])


def format_edge_list(g: Graph) -> str:
    if g.n == 1:
        return "0\n"
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def parents_from_level_sequence(seq: Sequence[int]) -> list[int]:
    """Parent index of each preorder position (-1 for the root)."""
    if not seq or seq[0] != 0:
        raise ValueError("level sequence must start with the root at depth 0")
    parents = [-1] * len(seq)
    # stack[d] = most recent vertex at depth d
    stack = [0]
    for i in range(1, len(seq)):
        d = seq[i]
        if d < 1 or d > len(stack):
            raise ValueError(f"invalid depth {d} at position {i}")
        del stack[d:]
        parents[i] = stack[d - 1]
        stack.append(i)
    return parents


def tree_from_level_sequence(seq: Sequence[int]) -> Tree:
    parents = parents_from_level_sequence(seq)
    return Tree(len(seq), [(parents[i], i) for i in range(1, len(seq))])


def parse_level_sequence(text: str) -> Tree:
    try:
        seq = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError("level sequence must contain integers only") from None
    try:
        return tree_from_level_sequence(seq)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
