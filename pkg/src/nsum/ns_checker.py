"""Deciding the neighbour-sum property on trees.

For a tree rooted at ``v0`` every vertex ``u`` carries the subtree sum

    g(u) = sum over children c of (1 - g(c))^-1,     g(leaf) = 0,

evaluated with the extended arithmetic of :mod:`nsum.exact_arith`. A finite
tree has a nonzero function ``f`` with ``f(x) = sum of f over the
neighbours of x`` exactly when ``g(v0) == 1`` for some choice of root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, WitnessVerificationError
from .exact_arith import ONE, POS_INF, ExtRat, one_minus_inv
from .tree_core import Graph, RootedView, Tree, root_at

__all__ = [
    "SubtreeS",
    "Witness",
    "compute_S",
    "s_at_all_roots",
    "satisfies_ns",
    "satisfying_roots",
    "construct_witness",
    "verify_witness",
    "tree_report",
    "satisfies_ns_parents",
    "float_s_values",
    "satisfies_ns_float",
]

_ONE = Fraction(1)
_ZERO = Fraction(0)


@dataclass(frozen=True)
class SubtreeS:
    view: RootedView
    g: tuple[ExtRat, ...]

    @property
    def root_value(self) -> ExtRat:
        return self.g[self.view.root]


@dataclass(frozen=True)
class Witness:
    values: tuple[Fraction, ...]
    root: int | None = None

    def scaled(self, c) -> Witness:
        c = Fraction(c)
        return Witness(tuple(c * v for v in self.values), self.root)

    def __len__(self):
        return len(self.values)


def compute_S(view: RootedView) -> SubtreeS:
    """Subtree sums for every vertex of ``view``, one postorder pass."""
    g: list[ExtRat] = [None] * view.n  # type: ignore[list-item]
    for u in reversed(view.order):
        total = ExtRat(0)
        for c in view.children[u]:
            total = total + one_minus_inv(g[c])
        g[u] = total
    return SubtreeS(view, tuple(g))


# Rerooting works on raw values: a Fraction, or None for +inf. The sum of a
# vertex's child terms is kept as (finite part, number of +inf terms) so one
# term can be taken back out even when it is infinite.

def _term(x):
    """(1 - x)^-1 as a (finite, inf_count) pair; x is Fraction or None."""
    if x is None:
        return _ZERO, 0
    if x == _ONE:
        return _ZERO, 1
    return 1 / (1 - x), 0


def _all_roots_raw(order, children) -> list:
    """Root value at every vertex; ``order`` lists parents before children."""
    n = len(order)
    fin = [_ZERO] * n
    cnt = [0] * n
    down = [None] * n
    for u in reversed(order):
        f, k = _ZERO, 0
        for c in children[u]:
            tf, tk = _term(down[c])
            f += tf
            k += tk
        fin[u], cnt[u] = f, k
        down[u] = None if k else f
    out = [None] * n
    up = [None] * n
    root = order[0]
    for u in order:
        f, k = fin[u], cnt[u]
        if u != root:
            tf, tk = _term(up[u])
            f += tf
            k += tk
        out[u] = None if k else f
        for c in children[u]:
            tf, tk = _term(down[c])
            up[c] = None if k - tk else f - tf
    return out


def _to_ext(x) -> ExtRat:
    return POS_INF if x is None else ExtRat(x)


def s_at_all_roots(t: Tree, method: str = "reroot") -> list[ExtRat]:
    """Root value g(v) for the tree rooted at each vertex v.

    ``method="reroot"`` runs in O(n) arithmetic operations; ``"naive"``
    reruns :func:`compute_S` at every root and serves as the reference.
    """
    if method == "naive":
        return [compute_S(root_at(t, v)).root_value for v in range(t.n)]
    if method != "reroot":
        raise ValueError(f"unknown method {method!r}")
    view = root_at(t, 0)
    return [_to_ext(x) for x in _all_roots_raw(view.order, view.children)]


def satisfying_roots(t: Tree) -> list[int]:
    return [v for v, s in enumerate(s_at_all_roots(t)) if s == ONE]


def satisfies_ns(t: Tree) -> bool:
    if t.n == 1:
        # f(v) = 0 is the only equation
        return False
    view = root_at(t, 0)
    return any(x == _ONE for x in _all_roots_raw(view.order, view.children))


def satisfies_ns_parents(parents: Sequence[int]) -> bool:
    """Same decision for a tree given as a preorder parent array (root -1).

    Used by the census, which produces trees in this form.
    """
    n = len(parents)
    if n == 1:
        return False
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        children[parents[v]].append(v)
    return any(x == _ONE for x in _all_roots_raw(range(n), children))


def construct_witness(t: Tree, v0: int) -> Witness:
    """Top-down construction of a solution with ``f(v0) = 1``.

    Children receive ``f(c) = f(u) * (1 - g(c))^-1``. Where ``f(u) = 0``
    but the parent of ``u`` is nonzero, the equation at ``u`` asks its
    children to cancel ``f(parent)``; the whole amount goes to the
    lowest-indexed child with ``g(c) = 1`` and that child is solved like a
    fresh root.
    """
    view = root_at(t, v0)
    g = compute_S(view).g
    if g[v0] != ONE:
        raise PreconditionError(f"S at root {v0} is {g[v0]}, not 1")
    f: list[Fraction] = [_ZERO] * t.n
    f[v0] = _ONE
    for u in view.order:
        fu = f[u]
        kids = view.children[u]
        if fu != 0:
            for c in kids:
                term = one_minus_inv(g[c])
                if term.is_pos_inf:
                    raise WitnessVerificationError(f"infinite value forced at vertex {c}")
                f[c] = fu * term.fraction
            continue
        p = view.parent[u]
        fp = f[p] if p is not None else _ZERO
        if fp != 0:
            ones = [c for c in kids if g[c] == ONE]
            if not ones:
                raise WitnessVerificationError(f"no child of vertex {u} can absorb {-fp}")
            f[ones[0]] = -fp
    w = Witness(tuple(f), v0)
    if not verify_witness(t, w):
        raise WitnessVerificationError(f"constructed assignment from root {v0} fails verification")
    return w


def verify_witness(g: Graph, w) -> bool:
    values = w.values if isinstance(w, Witness) else tuple(w)
    if len(values) != g.n:
        raise ValueError(f"assignment has {len(values)} values for {g.n} vertices")
    if all(v == 0 for v in values):
        return False
    for x in range(g.n):
        if values[x] != sum((values[y] for y in g.adjacency[x]), _ZERO):
            return False
    return True


def tree_report(t: Tree) -> dict:
    """JSON-ready summary: S at every root and a witness from the first root with S = 1."""
    s_values = s_at_all_roots(t)
    roots = [v for v, s in enumerate(s_values) if s == ONE] if t.n > 1 else []
    witness = construct_witness(t, roots[0]) if roots else None
    return {
        "n": t.n,
        "s_values": [str(s) for s in s_values],
        "satisfies": bool(roots),
        "witness": [str(x) for x in witness.values] if witness else None,
        "root": roots[0] if roots else None,
    }


# Floating-point mode, kept only to show where a tolerance comparison goes
# wrong. Never used for decisions.

def _float_inv(x: float) -> float:
    if x == 0:
        return math.inf
    if math.isinf(x):
        return 0.0
    return 1.0 / x


def float_s_values(t: Tree) -> list[float]:
    out = []
    for v in range(t.n):
        view = root_at(t, v)
        g = [0.0] * t.n
        for u in reversed(view.order):
            g[u] = sum(_float_inv(1 - g[c]) for c in view.children[u])
        out.append(g[v])
    return out


def satisfies_ns_float(t: Tree, rel_tol: float = 1e-9) -> bool:
    return any(math.isclose(s, 1.0, rel_tol=rel_tol) for s in float_s_values(t))
