import pytest
from hypothesis import strategies as st

from nsum.canon import prufer_decode
from nsum.tree_core import Tree
from nsum.tree_enum import enumerate_trees

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def trees_upto_12():
    return {n: list(enumerate_trees(n)) for n in range(1, 13)}


@pytest.fixture
def accept():
    """Record one acceptance line; asserts the outcome."""

    def record(name: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.append((name, bool(ok), detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def _tree_from_prufer(n, seq):
    return Tree(n, prufer_decode(seq, n))


@st.composite
def random_trees(draw, min_n=1, max_n=14):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return Tree(1)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return _tree_from_prufer(n, seq)


THIRTEEN_VERTEX_EDGES = [
    (0, 1), (0, 2), (0, 3),
    (1, 4), (1, 5), (2, 6), (2, 7),
    (5, 8), (5, 9), (7, 10), (7, 11), (7, 12),
]
