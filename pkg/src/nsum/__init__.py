"""Exact tools for the neighbour-sum property on trees and small graphs."""
from .exact_arith import ExtRat, NEG_INF, POS_INF, one_minus_inv
from .linear_oracle import KernelBasis, kernel_basis, kernel_dim
from .ns_checker import (
    Witness,
    compute_S,
    construct_witness,
    s_at_all_roots,
    satisfies_ns,
    verify_witness,
)
from .tree_core import Graph, RootedView, Tree, is_tree, parse_edge_list, root_at
from .tree_enum import census, enumerate_trees

__version__ = "0.1.0"
