"""Breadth-first solutions on prefixes of locally finite infinite trees.

A :class:`LazyTree` describes an infinite tree by its children: for any
vertex handle it returns the child handles, each tagged internal (has
children of its own) or leaf. If no expanded vertex has only leaf children,
a solution can be grown level by level from ``f(root) = 1``:

* a leaf child copies its parent's value (its only equation);
* the internal children of ``v`` share the amount
  ``(1 - #leaf children) * f(v) - f(parent)``.

The module also builds finite windows of the spine-with-pendant-paths tree,
which has no solution at all, and solves the equations visible in the
window.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable

from .errors import HypothesisViolation, ParseError, WitnessVerificationError
from .linear_oracle import KernelBasis, RationalMatrix, nullspace

__all__ = [
    "LazyTree",
    "BinaryTree",
    "RayTree",
    "SpineWithPendants",
    "LevelSpecTree",
    "RandomLazyTree",
    "PrefixAssignment",
    "construct_prefix",
    "counterexample_window",
    "WindowKernel",
    "named_generator",
    "GENERATORS",
]


class LazyTree:
    """Base class: subclasses implement ``children(handle)``."""

    root: Hashable = ()

    def children(self, handle) -> list[tuple[Hashable, bool]]:
        """Ordered ``(child_handle, is_internal)`` pairs."""
        raise NotImplementedError


class _CountTree(LazyTree):
    """Handles are paths of child indices; children depend on depth only."""

    def counts(self, handle: tuple[int, ...]) -> tuple[int, int]:
        raise NotImplementedError

    def children(self, handle):
        internal, leaves = self.counts(handle)
        out = [(handle + (i,), True) for i in range(internal)]
        out.extend((handle + (internal + i,), False) for i in range(leaves))
        return out


class BinaryTree(_CountTree):
    def counts(self, handle):
        return 2, 0


class RayTree(_CountTree):
    """The one-ended infinite path, rooted at its end."""

    def counts(self, handle):
        return 1, 0


class LevelSpecTree(_CountTree):
    """Every internal vertex at depth j has ``spec[j]`` = (internal, leaf) children.

    The last entry repeats for all deeper levels. Text form: one line per
    depth holding the two counts.
    """

    def __init__(self, spec):
        spec = [tuple(map(int, row)) for row in spec]
        if not spec:
            raise ValueError("level spec must have at least one line")
        for i, (a, b) in enumerate(spec):
            if a < 0 or b < 0 or a + b == 0:
                raise ValueError(f"level {i}: internal vertices need at least one child")
        if spec[-1][0] == 0:
            raise ValueError("the repeating last level must have internal children")
        self.spec = spec

    @classmethod
    def parse(cls, text: str) -> LevelSpecTree:
        rows = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("expected 'internal leaves'", lineno)
            try:
                rows.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError("counts must be integers", lineno) from None
        try:
            return cls(rows)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def counts(self, handle):
        return self.spec[min(len(handle), len(self.spec) - 1)]


class RandomLazyTree(_CountTree):
    """Seeded random tree with 1..max_internal internal and 0..max_leaves leaf children.

    Each vertex draws its counts from an RNG seeded by ``(seed, handle)``, so
    the tree is a fixed object however it is explored.
    """

    def __init__(self, seed: int, max_internal: int = 2, max_leaves: int = 2):
        self.seed = seed
        self.max_internal = max_internal
        self.max_leaves = max_leaves

    def counts(self, handle):
        rng = random.Random(f"{self.seed}:{handle}")
        return rng.randint(1, self.max_internal), rng.randint(0, self.max_leaves)


class SpineWithPendants(LazyTree):
    """Two-way infinite spine v_n, each v_n carrying a pendant path u_n - w_n.

    Rooted at v_0. Every u_n has the single leaf child w_n, so the
    construction stops there with :class:`HypothesisViolation`.
    """

    root = ("v", 0)

    def children(self, handle):
        kind, n = handle
        if kind == "w":
            return []
        if kind == "u":
            return [(("w", n), False)]
        if n == 0:
            return [(("v", -1), True), (("v", 1), True), (("u", 0), True)]
        step = 1 if n > 0 else -1
        return [(("v", n + step), True), (("u", n), True)]


GENERATORS = {
    "binary": BinaryTree,
    "path": RayTree,
    "spine": SpineWithPendants,
    "figure4": SpineWithPendants,  # alias kept for the documented CLI name
}


def named_generator(name: str, seed: int | None = None) -> LazyTree:
    if name == "random":
        return RandomLazyTree(0 if seed is None else seed)
    try:
        return GENERATORS[name]()
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; choose from "
                         f"{sorted([*GENERATORS, 'random'])}") from None


@dataclass
class PrefixAssignment:
    levels: list[list[Hashable]]
    values: dict[Hashable, Fraction]
    parent: dict[Hashable, Hashable]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level_values(self, j: int) -> list[Fraction]:
        return [self.values[h] for h in self.levels[j]]


def construct_prefix(t: LazyTree, levels: int, split: str = "even") -> PrefixAssignment:
    """Values on depths ``0..levels`` satisfying every equation above depth ``levels``.

    ``split="even"`` shares each required amount equally among the internal
    children; ``split="first"`` gives all of it to the first one.
    """
    if levels < 1:
        raise ValueError("levels must be at least 1")
    if split not in ("even", "first"):
        raise ValueError(f"unknown split {split!r}")
    root = t.root
    values = {root: Fraction(1)}
    parent = {}
    kids_of = {}
    is_internal = {root: True}
    layers = [[root]]
    for depth in range(levels):
        nxt = []
        for v in layers[depth]:
            kids = t.children(v)
            kids_of[v] = kids
            if not kids:
                if is_internal[v]:
                    raise ValueError(f"vertex {v!r} is tagged internal but has no children")
                continue
            internal = [h for h, is_int in kids if is_int]
            leaves = [h for h, is_int in kids if not is_int]
            if not internal:
                raise HypothesisViolation(f"all children of {v!r} at depth {depth} are leaves")
            fv = values[v]
            need = (1 - len(leaves)) * fv - (values[parent[v]] if v in parent else 0)
            for h in leaves:
                values[h] = fv
            if split == "even":
                share = need / len(internal)
                for h in internal:
                    values[h] = share
            else:
                values[internal[0]] = need
                for h in internal[1:]:
                    values[h] = Fraction(0)
            for h, tag in kids:
                parent[h] = v
                is_internal[h] = tag
                nxt.append(h)
        layers.append(nxt)
    for depth in range(levels):
        for v in layers[depth]:
            total = values[parent[v]] if v in parent else Fraction(0)
            total += sum((values[h] for h, _ in kids_of[v]), Fraction(0))
            if total != values[v]:
                raise WitnessVerificationError(f"equation at {v!r} fails: {values[v]} != {total}")
    return PrefixAssignment(layers, values, parent)


@dataclass(frozen=True)
class WindowKernel:
    m: int
    labels: tuple[tuple[str, int], ...]
    kernel: KernelBasis

    def interior(self) -> list[int]:
        """Indices forced to zero: every v_n, and u_n, w_n for |n| < m."""
        return [i for i, (kind, n) in enumerate(self.labels) if kind == "v" or abs(n) < self.m]

    def interior_is_zero(self) -> bool:
        idx = self.interior()
        return all(vec[i] == 0 for vec in self.kernel.basis for i in idx)


def counterexample_window(m: int) -> WindowKernel:
    """Kernel of the equations of the spine tree whose neighbourhoods fit in ``|n| <= m``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    labels = [(kind, n) for n in range(-m, m + 1) for kind in ("v", "u", "w")]
    index = {lab: i for i, lab in enumerate(labels)}
    rows = []
    hints = []

    def equation(x, nbrs):
        row = {index[x]: Fraction(1)}
        for y in nbrs:
            row[index[y]] = row.get(index[y], Fraction(0)) - 1
        rows.append(row)
        hints.append(index[x])

    for n in range(-m, m + 1):
        equation(("w", n), [("u", n)])
        equation(("u", n), [("v", n), ("w", n)])
    for n in range(-m + 1, m):
        equation(("v", n), [("v", n - 1), ("v", n + 1), ("u", n)])
    matrix = RationalMatrix(len(labels), rows, pivot_hint=hints)
    return WindowKernel(m, tuple(labels), nullspace(matrix))
