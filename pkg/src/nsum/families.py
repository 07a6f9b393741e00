"""Named graph families with closed-form neighbour-sum predicates.

``expected_ns`` never runs the checker or the kernel oracle; it evaluates
the known characterisation of each family so that the two can be compared.

Spider note: a pendant path of ``l`` vertices hanging from a vertex of
value ``c`` forces, reading from the leaf inward, the period-6 pattern
``t, t, 0, -t, -t, 0, ...``. When ``l % 3 == 2`` the attachment value is
forced to 0 and the legs only need their ``t`` values to cancel at the
centre, giving ``legs - 1`` independent solutions. Otherwise all legs share
one ``t`` and a solution exists only for a single leg with ``l % 3 == 1``
(a path on ``3m + 2`` vertices).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpec
from .tree_core import Graph, Tree

__all__ = [
    "FamilySpec",
    "KINDS",
    "TREE_KINDS",
    "generate",
    "expected_ns",
    "expected_dim",
    "level_sym_recurrence",
    "parse_family",
]

# kind -> number of integer parameters (None = variable)
KINDS = {
    "path": 1,
    "star": 1,
    "spider": 2,
    "level_symmetric": 2,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "complete_multipartite": None,
}
TREE_KINDS = frozenset({"path", "star", "spider", "level_symmetric"})


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown family {self.kind!r}")
        arity = KINDS[self.kind]
        if arity is not None and len(self.params) != arity:
            raise InvalidSpec(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        if not self.params:
            raise InvalidSpec(f"{self.kind} needs at least one part")
        if any(not isinstance(p, int) or p < 1 for p in self.params):
            raise InvalidSpec(f"{self.kind} parameters must be positive integers")
        if self.kind == "cycle" and self.params[0] < 3:
            raise InvalidSpec("a simple cycle needs at least 3 vertices")

    @property
    def is_tree(self) -> bool:
        return self.kind in TREE_KINDS

    def __str__(self):
        return f"{self.kind}({', '.join(map(str, self.params))})"


def parse_family(kind: str, params) -> FamilySpec:
    try:
        values = tuple(int(p) for p in params)
    except ValueError:
        raise InvalidSpec(f"non-integer parameter in {list(params)}") from None
    return FamilySpec(kind, values)


def _path(n):
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def _star(k):
    return Tree(k + 1, [(0, i) for i in range(1, k + 1)])


def _spider(legs, leg_len):
    # BFS labels: vertex at depth j on leg i is 1 + (j - 1) * legs + i
    edges = []
    for i in range(legs):
        prev = 0
        for j in range(1, leg_len + 1):
            v = 1 + (j - 1) * legs + i
            edges.append((prev, v))
            prev = v
    return Tree(1 + legs * leg_len, edges)


def _level_symmetric(d, k):
    edges = []
    frontier = [0]
    n = 1
    for _ in range(k):
        nxt = []
        for u in frontier:
            for _ in range(d):
                edges.append((u, n))
                nxt.append(n)
                n += 1
        frontier = nxt
    return Tree(n, edges)


def _cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _multipartite(parts):
    starts = []
    n = 0
    for p in parts:
        starts.append(n)
        n += p
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(starts[a], starts[a] + parts[a]):
                for v in range(starts[b], starts[b] + parts[b]):
                    edges.append((u, v))
    return Graph(n, edges)


def generate(spec: FamilySpec) -> Graph:
    """The family member; trees come back as :class:`Tree`."""
    p = spec.params
    if spec.kind == "path":
        return _path(p[0])
    if spec.kind == "star":
        return _star(p[0])
    if spec.kind == "spider":
        return _spider(*p)
    if spec.kind == "level_symmetric":
        return _level_symmetric(*p)
    if spec.kind == "cycle":
        return _cycle(p[0])
    if spec.kind == "complete":
        return _multipartite([1] * p[0])
    if spec.kind == "complete_bipartite":
        return _multipartite(p)
    return _multipartite(p)


def expected_ns(spec: FamilySpec) -> bool:
    p = spec.params
    kind = spec.kind
    if kind == "path":
        return p[0] % 3 == 2
    if kind == "star":
        return p[0] == 1
    if kind == "spider":
        legs, leg_len = p
        return (leg_len % 3 == 2 and legs >= 2) or (legs == 1 and leg_len % 3 == 1)
    if kind == "level_symmetric":
        d, k = p
        return d == 1 and k % 3 == 1
    if kind == "cycle":
        return p[0] % 6 == 0
    if kind == "complete":
        return p[0] == 2
    if kind == "complete_bipartite":
        return p == (1, 1)
    return len(p) == 2 and all(x == 1 for x in p)


def expected_dim(spec: FamilySpec) -> int | None:
    """Closed-form solution-space dimension where one is known, else None."""
    p = spec.params
    if spec.kind == "spider":
        legs, leg_len = p
        if leg_len % 3 == 2:
            return legs - 1
        return 1 if expected_ns(spec) else 0
    if spec.kind == "cycle":
        return 2 if p[0] % 6 == 0 else 0
    if spec.kind in ("path", "star", "level_symmetric", "complete", "complete_bipartite",
                     "complete_multipartite"):
        return 1 if expected_ns(spec) else 0
    return None


def level_sym_recurrence(d: int, k: int) -> tuple[int, int]:
    """(a_k, b_k) of a_j = a_{j-1} - d a_{j-2}, a_{-1}=a_0=1, b_{-1}=0, b_0=1.

    ``a_k / b_k`` equals ``1 - S`` at the root of the level-symmetric tree
    with branching ``d`` and depth ``k``, so that tree is solvable exactly
    when ``a_k == 0``.
    """
    if d < 1 or k < 0:
        raise InvalidSpec("need d >= 1 and k >= 0")
    a_prev, a = 1, 1
    b_prev, b = 0, 1
    for _ in range(k):
        a_prev, a = a, a - d * a_prev
        b_prev, b = b, b - d * b_prev
    return a, b
