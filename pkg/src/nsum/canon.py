"""Tree canonical forms and the labeled-tree (Prüfer) reference enumeration.

``canonical_form`` roots a tree at its centroid (trying both centroids when
there are two), builds the AHU-style sorted level sequence, and keeps the
larger one. Two trees are isomorphic iff their canonical forms are equal.
"""
from __future__ import annotations

import heapq
import itertools
from typing import Iterator, Sequence

from .tree_core import Tree

__all__ = [
    "centroids",
    "rooted_canonical",
    "canonical_form",
    "prufer_decode",
    "labeled_trees",
    "free_tree_forms",
]


def centroids(t: Tree) -> list[int]:
    n = t.n
    if n == 1:
        return [0]
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    for u in order:
        for w in t.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    out = []
    for u in range(n):
        heaviest = n - size[u]
        for w in t.adjacency[u]:
            if w != parent[u]:
                heaviest = max(heaviest, size[w])
        if 2 * heaviest <= n:
            out.append(u)
    return out


def rooted_canonical(t: Tree, root: int) -> tuple[int, ...]:
    """Level sequence of ``t`` rooted at ``root`` with subtrees in descending order."""
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in t.adjacency[u]:
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    codes: dict[int, tuple[int, ...]] = {}
    for u in reversed(order):
        subs = sorted((codes.pop(w) for w in t.adjacency[u] if w != parent[u]), reverse=True)
        code = [0]
        for s in subs:
            code.extend(d + 1 for d in s)
        codes[u] = tuple(code)
    return codes[root]


def canonical_form(t: Tree) -> tuple[int, ...]:
    return max(rooted_canonical(t, c) for c in centroids(t))


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``0..n-1`` with Prüfer sequence ``seq``."""
    if n == 1:
        return []
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def labeled_trees(n: int, degree_sorted: bool = False) -> Iterator[Tree]:
    """Every labeled tree on ``n`` vertices, one per Prüfer sequence.

    With ``degree_sorted`` only sequences in which label ``i`` occurs at
    least as often as label ``i + 1`` are used, i.e. labelings where degree
    does not increase with the label. Every tree has such a labeling, so
    every isomorphism class is still hit, at a fraction of the cost.
    """
    if n < 1:
        raise ValueError("n must be positive")
    seqs = _degree_sorted_sequences(n) if degree_sorted else itertools.product(range(n), repeat=max(n - 2, 0))
    for seq in seqs:
        yield Tree(n, prufer_decode(seq, n))


def _partitions(total: int, parts: int, cap: int) -> Iterator[list[int]]:
    """Non-increasing lists of at most ``parts`` positive ints <= cap summing to total."""
    if total == 0:
        yield []
        return
    if parts == 0:
        return
    for first in range(min(total, cap), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield [first] + rest


def _arrangements(counts: list[int], length: int) -> Iterator[tuple[int, ...]]:
    """Distinct sequences using symbol ``i`` exactly ``counts[i]`` times."""
    if length == 0:
        yield ()
        return
    for i, c in enumerate(counts):
        if c:
            counts[i] -= 1
            for rest in _arrangements(counts, length - 1):
                yield (i,) + rest
            counts[i] += 1


def _degree_sorted_sequences(n: int) -> Iterator[tuple[int, ...]]:
    length = max(n - 2, 0)
    for lam in _partitions(length, n, length):
        yield from _arrangements(lam + [0] * (n - len(lam)), length)


def free_tree_forms(n: int, degree_sorted: bool = False) -> set[tuple[int, ...]]:
    """Brute-force set of canonical forms of all trees on ``n`` vertices."""
    return {canonical_form(t) for t in labeled_trees(n, degree_sorted)}
