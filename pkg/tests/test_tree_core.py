import pytest
from hypothesis import given

from nsum.errors import NonSimpleError, NotATreeError, ParseError
from nsum.tree_core import (
    Graph,
    Tree,
    format_edge_list,
    is_tree,
    parents_from_level_sequence,
    parse_edge_list,
    parse_level_sequence,
    root_at,
    tree_from_level_sequence,
)

from .conftest import THIRTEEN_VERTEX_EDGES, random_trees


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_parse_duplicate_edge():
    with pytest.raises(NonSimpleError):
        parse_edge_list("0 1\n0 1")
    with pytest.raises(NonSimpleError):
        parse_edge_list("0 1\n1 0")


def test_parse_self_loop():
    with pytest.raises(NonSimpleError):
        parse_edge_list("0 0")


@pytest.mark.parametrize("text, line", [("0 1\nx 2", 2), ("0 1\n\n1 2 3", 3), ("0 -1", 1)])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line


def test_parse_comments_and_single_vertex():
    g = parse_edge_list("# a lone vertex\n0\n")
    assert g.n == 1 and g.num_edges == 0
    assert is_tree(g)


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_edge_list("\n# nothing\n")


def test_edge_list_round_trip():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert parse_edge_list(format_edge_list(g)) == g
    assert format_edge_list(Tree(1)) == "0\n"


def test_is_tree():
    c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert not is_tree(c6)
    assert is_tree(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
    assert not is_tree(Graph(4, [(0, 1), (2, 3)]))


def test_tree_rejects_non_tree():
    with pytest.raises(NotATreeError):
        Tree(4, [(0, 1), (2, 3)])
    with pytest.raises(NotATreeError):
        Tree(0)


def test_thirteen_vertex_levels():
    view = root_at(Tree(13, THIRTEEN_VERTEX_EDGES), 0)
    assert [len(a) for a in view.level_sets()] == [1, 3, 4, 5]
    assert view.eccentricity == 3


def test_p2_rooted():
    view = root_at(Tree(2, [(0, 1)]), 0)
    assert view.eccentricity == 1
    assert view.level_sets()[1] == [1]


def test_star_rooted_at_leaf():
    star = Tree(5, [(0, i) for i in range(1, 5)])
    view = root_at(star, 3)
    assert view.eccentricity == 2
    assert [len(a) for a in view.level_sets()] == [1, 1, 3]
    assert view.children[0] == (1, 2, 4)


@given(random_trees())
def test_rooted_view_invariants(t):
    for v in range(t.n):
        view = root_at(t, v)
        assert view.level[v] == 0 and view.parent[v] is None
        assert sum(len(a) for a in view.level_sets()) == t.n
        for u in range(t.n):
            if u != v:
                p = view.parent[u]
                assert view.level[u] == view.level[p] + 1
                assert u in view.children[p]
        assert view.eccentricity == max(view.level)
        assert root_at(t, v) == view


def test_level_sequence_round_trip():
    seq = (0, 1, 2, 2, 1, 2)
    assert parents_from_level_sequence(seq) == [-1, 0, 1, 1, 0, 4]
    t = tree_from_level_sequence(seq)
    assert t.n == 6 and t.degree(0) == 2
    assert parse_level_sequence("0 1 2 2 1 2") == t


@pytest.mark.parametrize("bad", ["1 0", "0 2", "0 1 a"])
def test_level_sequence_errors(bad):
    with pytest.raises(ParseError):
        parse_level_sequence(bad)


def test_relabel_preserves_tree_type():
    t = Tree(3, [(0, 1), (1, 2)])
    r = t.relabel([2, 0, 1])
    assert isinstance(r, Tree)
    assert r.adjacency == ((1, 2), (0,), (0,))
