from fractions import Fraction

import pytest

from nsum.canon import canonical_form
from nsum.errors import InvalidSpec
from nsum.exact_arith import ONE, POS_INF, ExtRat
from nsum.families import (
    FamilySpec,
    expected_dim,
    expected_ns,
    generate,
    level_sym_recurrence,
    parse_family,
)
from nsum.linear_oracle import kernel_dim
from nsum.ns_checker import compute_S, satisfies_ns, verify_witness
from nsum.tree_core import Tree, root_at


def test_path5():
    g = generate(FamilySpec("path", (5,)))
    assert isinstance(g, Tree)
    assert g.edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_level_symmetric_2_2():
    g = generate(FamilySpec("level_symmetric", (2, 2)))
    assert g.n == 7
    assert g.degree(0) == 2
    assert [g.degree(v) for v in (1, 2)] == [3, 3]
    assert all(g.degree(v) == 1 for v in range(3, 7))


def test_k11_is_k2():
    assert generate(FamilySpec("complete_bipartite", (1, 1))) == generate(FamilySpec("complete", (2,)))


def test_spider_labels_bfs():
    g = generate(FamilySpec("spider", (3, 2)))
    assert g.adjacency[0] == (1, 2, 3)
    assert g.adjacency[1] == (0, 4)


def test_multipartite_edges():
    g = generate(FamilySpec("complete_multipartite", (1, 2, 2)))
    assert g.n == 5 and g.num_edges == 2 + 2 + 4


@pytest.mark.parametrize("kind, params", [
    ("path", (0,)),
    ("cycle", (2,)),
    ("spider", (2,)),
    ("nope", (1,)),
    ("complete_multipartite", ()),
])
def test_invalid_specs(kind, params):
    with pytest.raises(InvalidSpec):
        FamilySpec(kind, params)


def test_parse_family():
    assert parse_family("cycle", ["12"]) == FamilySpec("cycle", (12,))
    with pytest.raises(InvalidSpec):
        parse_family("cycle", ["x"])


@pytest.mark.parametrize("spec, expected", [
    (FamilySpec("path", (8,)), True),
    (FamilySpec("level_symmetric", (2, 3)), False),
    (FamilySpec("cycle", (12,)), True),
    (FamilySpec("cycle", (9,)), False),
    (FamilySpec("star", (1,)), True),
    (FamilySpec("star", (2,)), False),
    (FamilySpec("complete_multipartite", (1, 1)), True),
    (FamilySpec("complete_multipartite", (1, 1, 1)), False),
])
def test_expected(spec, expected):
    assert expected_ns(spec) is expected


def test_recurrence_d1_sign_pattern():
    pattern = [1, 0, -1, -1, 0, 1]
    for j in range(61):
        a, _ = level_sym_recurrence(1, j)
        assert a == pattern[j % 6]
        assert (a == 0) == (j % 3 == 1)


def test_recurrence_d2_k2():
    assert level_sym_recurrence(2, 1) == (-1, 1)
    assert level_sym_recurrence(2, 2)[0] == -3


def test_recurrence_d1_k4():
    assert level_sym_recurrence(1, 4)[0] == 0
    assert satisfies_ns(generate(FamilySpec("path", (5,))))


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("k", range(1, 7))
def test_recurrence_is_one_minus_root_value(d, k):
    a, b = level_sym_recurrence(d, k)
    s = compute_S(root_at(generate(FamilySpec("level_symmetric", (d, k))), 0)).root_value
    if b == 0:
        assert s == POS_INF
    else:
        assert s == ExtRat(1 - Fraction(a, b))
    assert (a == 0) == (s == ONE)


def test_level_symmetric_d1_is_path():
    for k in range(1, 8):
        ls = generate(FamilySpec("level_symmetric", (1, k)))
        assert canonical_form(ls) == canonical_form(generate(FamilySpec("path", (k + 1,))))


@pytest.mark.parametrize("n", [6, 12, 18, 60, 120])
def test_cycle_explicit_witness(n):
    g = generate(FamilySpec("cycle", (n,)))
    f = [{0: 1, 1: 1, 2: 0, 5: 0, 3: -1, 4: -1}[k % 6] for k in range(n)]
    assert verify_witness(g, f)


@pytest.mark.parametrize("legs", range(1, 8))
@pytest.mark.parametrize("leg_len", range(1, 9))
def test_spider_closed_form(legs, leg_len):
    spec = FamilySpec("spider", (legs, leg_len))
    g = generate(spec)
    assert kernel_dim(g) == expected_dim(spec)
    assert satisfies_ns(g) == expected_ns(spec)


def test_expected_dim_simple_families():
    assert expected_dim(FamilySpec("cycle", (7,))) == 0
    assert expected_dim(FamilySpec("complete", (2,))) == 1
