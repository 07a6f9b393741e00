"""Exact nullspace of ``I - A`` for any simple graph.

A vector ``f`` is in the kernel of ``I - A`` iff ``f(x)`` equals the sum of
``f`` over the neighbours of ``x`` for every vertex, so the kernel dimension
is the number of independent neighbour-sum solutions.

Rows are kept sparse (``dict`` column -> int) and reduced fraction-free, so
trees with tens of thousands of vertices eliminate without fill-in when the
rows are fed leaves-first. The returned basis does not depend on the
elimination path: it is brought to the unique reduced form of the kernel
(the one reduced row echelon form of the matrix would give) and each vector
is then scaled so that its first nonzero entry is 1.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .tree_core import Graph

__all__ = [
    "RationalMatrix",
    "KernelBasis",
    "ns_matrix",
    "nullspace",
    "kernel_basis",
    "kernel_dim",
]


@dataclass
class RationalMatrix:
    """Sparse matrix with exact rational entries, one ``dict`` per row.

    ``pivot_hint[i]``, when given, names the column row ``i`` should pivot
    on if that entry survives reduction.
    """

    cols: int
    rows: list[dict[int, Fraction]] = field(default_factory=list)
    pivot_hint: list[int | None] | None = None

    def __post_init__(self):
        clean = []
        for r in self.rows:
            entries = {}
            for c, v in r.items():
                if not 0 <= c < self.cols:
                    raise ValueError(f"column {c} out of range")
                v = Fraction(v)
                if v:
                    entries[c] = v
            clean.append(entries)
        self.rows = clean

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def to_dense(self) -> list[list[Fraction]]:
        return [[r.get(c, Fraction(0)) for c in range(self.cols)] for r in self.rows]


@dataclass(frozen=True)
class KernelBasis:
    dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    def as_strings(self) -> list[list[str]]:
        return [[str(x) for x in vec] for vec in self.basis]


def _leaves_first(g: Graph) -> list[int]:
    """Reverse BFS order over every component (children before parents)."""
    seen = [False] * g.n
    order = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    order.reverse()
    return order


def ns_matrix(g: Graph) -> RationalMatrix:
    """``I - A`` with rows ordered leaves-first; row for ``v`` pivots on ``v``."""
    order = _leaves_first(g)
    rows = []
    for v in order:
        r = {v: Fraction(1)}
        for w in g.adjacency[v]:
            r[w] = Fraction(-1)
        rows.append(r)
    return RationalMatrix(g.n, rows, pivot_hint=order)


def _primitive(r: dict[int, int]) -> dict[int, int]:
    d = 0
    for v in r.values():
        d = gcd(d, v)
        if d == 1:
            return r
    return {c: v // d for c, v in r.items()}


def _integer_row(r: dict[int, Fraction]) -> dict[int, int]:
    den = 1
    for v in r.values():
        den = den * v.denominator // gcd(den, v.denominator)
    return _primitive({c: int(v * den) for c, v in r.items()})


def _eliminate(m: RationalMatrix):
    """Forward elimination; returns pivot rows in creation order and free columns."""
    pivot_of: dict[int, int] = {}  # column -> index into pivots
    pivots: list[tuple[int, dict[int, int]]] = []
    hints = m.pivot_hint or [None] * len(m.rows)
    for raw, hint in zip(m.rows, hints):
        r = _integer_row(raw)
        # a pivot row only mentions columns pivoted after it, so
        # reducing in creation order terminates
        heap = [pivot_of[c] for c in r if c in pivot_of]
        heapq.heapify(heap)
        done = set()
        while heap:
            k = heapq.heappop(heap)
            if k in done:
                continue
            done.add(k)
            col, prow = pivots[k]
            b = r.get(col)
            if not b:
                continue
            a = prow[col]
            out = {c: a * v for c, v in r.items()}
            for c, v in prow.items():
                nv = out.get(c, 0) - b * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
                    continue
                if c in pivot_of and c != col and pivot_of[c] not in done:
                    heapq.heappush(heap, pivot_of[c])
            r = _primitive(out) if out else out
        if not r:
            continue
        col = hint if hint is not None and hint in r else min(r)
        pivot_of[col] = len(pivots)
        pivots.append((col, r))
    free = [c for c in range(m.cols) if c not in pivot_of]
    return pivots, free


def _canonical(vectors: list[list[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Unique reduced basis of span(vectors): RREF over reversed columns."""
    rows = [list(v) for v in vectors]
    lead_cols = []
    r = 0
    for c in range(ncols - 1, -1, -1):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        lead_cols.append(c)
        r += 1
        if r == len(rows):
            break
    rows = rows[:r]
    # order by the free column each vector owns, then scale to a leading 1
    rows = [row for _, row in sorted(zip(lead_cols, rows))]
    out = []
    for row in rows:
        first = next(x for x in row if x != 0)
        out.append(tuple(x / first for x in row))
    return out


def nullspace(m: RationalMatrix) -> KernelBasis:
    pivots, free = _eliminate(m)
    vectors = []
    for f in free:
        x: dict[int, Fraction] = {f: Fraction(1)}
        for col, prow in reversed(pivots):
            s = sum((Fraction(v) * x[c] for c, v in prow.items() if c != col and c in x), Fraction(0))
            if s:
                x[col] = -s / prow[col]
        vectors.append([x.get(c, Fraction(0)) for c in range(m.cols)])
    basis = _canonical(vectors, m.cols) if vectors else []
    return KernelBasis(len(basis), tuple(basis))


def kernel_basis(g: Graph) -> KernelBasis:
    return nullspace(ns_matrix(g))


def kernel_dim(g: Graph) -> int:
    pivots, free = _eliminate(ns_matrix(g))
    return len(free)


def matrix_from_dense(dense: Sequence[Sequence]) -> RationalMatrix:
    cols = len(dense[0]) if dense else 0
    return RationalMatrix(cols, [{c: v for c, v in enumerate(row) if v} for row in dense])
