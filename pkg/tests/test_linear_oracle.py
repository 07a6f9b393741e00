import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from nsum.families import FamilySpec, generate
from nsum.linear_oracle import RationalMatrix, kernel_basis, kernel_dim, matrix_from_dense, nullspace
from nsum.ns_checker import verify_witness
from nsum.tree_core import Graph, Tree


def _sympy_nullspace(g: Graph):
    m = sympy.eye(g.n)
    for u, v in g.edges():
        m[u, v] = m[v, u] = -1
    out = []
    for vec in m.nullspace():
        vals = [Fraction(int(x.p), int(x.q)) for x in vec]
        first = next(x for x in vals if x != 0)
        out.append(tuple(x / first for x in vals))
    return out


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_p2():
    kb = kernel_basis(Tree(2, [(0, 1)]))
    assert kb.dim == 1
    assert kb.basis == ((1, 1),)


def test_spider_dimension_three():
    assert kernel_dim(generate(FamilySpec("spider", (4, 2)))) == 3


def test_c6():
    c6 = generate(FamilySpec("cycle", (6,)))
    kb = kernel_basis(c6)
    assert kb.dim == 2 == len(_sympy_nullspace(c6))


def test_k23():
    assert kernel_dim(generate(FamilySpec("complete_bipartite", (2, 3)))) == 0


def test_k4():
    assert kernel_dim(generate(FamilySpec("complete", (4,)))) == 0


def test_c12():
    c12 = generate(FamilySpec("cycle", (12,)))
    assert kernel_dim(c12) == 2 == len(_sympy_nullspace(c12))


def test_p4():
    p4 = generate(FamilySpec("path", (4,)))
    assert kernel_dim(p4) == 0 == len(_sympy_nullspace(p4))


@given(small_graphs())
@settings(max_examples=150, deadline=None)
def test_matches_sympy(g):
    kb = kernel_basis(g)
    assert kb.dim == kernel_dim(g)
    assert list(kb.basis) == _sympy_nullspace(g)


@given(small_graphs())
@settings(max_examples=100, deadline=None)
def test_basis_vectors_are_witnesses(g):
    for vec in kernel_basis(g).basis:
        assert verify_witness(g, vec)
        assert next(x for x in vec if x != 0) == 1


@given(small_graphs(), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_relabel_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert kernel_dim(g.relabel(perm)) == kernel_dim(g)


@pytest.mark.parametrize("d", range(1, 21))
def test_spider_dims(d):
    g = generate(FamilySpec("spider", (d + 1, 2)))
    kb = kernel_basis(g)
    assert kb.dim == d
    assert all(verify_witness(g, v) for v in kb.basis)


def test_generic_matrix_nullspace():
    m = matrix_from_dense([[1, 2, 3], [2, 4, 6]])
    kb = nullspace(m)
    assert kb.dim == 2
    for vec in kb.basis:
        assert vec[0] + 2 * vec[1] + 3 * vec[2] == 0
    assert nullspace(matrix_from_dense([[1, 0], [0, 1]])).dim == 0


def test_rational_entries():
    m = RationalMatrix(2, [{0: Fraction(1, 3), 1: Fraction(-1, 6)}])
    assert nullspace(m).basis == ((1, 2),)


def test_matrix_validates_columns():
    with pytest.raises(ValueError):
        RationalMatrix(2, [{5: 1}])


def test_isolated_vertex_has_no_solution():
    assert kernel_dim(Graph(3, [(0, 1)])) == 1
    assert kernel_dim(Graph(1)) == 0


def test_deterministic_output():
    rng = random.Random(7)
    n = 12
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3}
    g = Graph(n, sorted(edges))
    assert kernel_basis(g) == kernel_basis(Graph(n, sorted(edges, reverse=True)))
