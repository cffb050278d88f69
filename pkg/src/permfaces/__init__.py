"""Weak Bruhat order on permutahedron faces, planar trees and trialgebra products."""

from .errors import PermfacesError
from .gamma import fiber, gamma, max_word, min_word
from .order import OrderKind, bruhat_relations, build_order, inclusion_leq
from .pword import EMPTY, PackedWord, compose, cross, enumerate_words, make, parse
from .shuffle import ShuffleSplit, enumerate_sh, wedge, wedge_decompose, xi, z_word
from .tree import LEAF, PlanarTree, build_tree_order, corolla, enumerate_trees, over, parse_tree, under
from .trialg import Basis, LinComb, Op, pword_product, tree_product

__all__ = [
    "EMPTY", "LEAF", "Basis", "LinComb", "Op", "OrderKind", "PackedWord", "PermfacesError",
    "PlanarTree", "ShuffleSplit", "bruhat_relations", "build_order", "build_tree_order",
    "compose", "corolla", "cross", "enumerate_sh", "enumerate_trees", "enumerate_words",
    "fiber", "gamma", "inclusion_leq", "make", "max_word", "min_word", "over", "parse",
    "parse_tree", "pword_product", "tree_product", "under", "wedge", "wedge_decompose",
    "xi", "z_word",
]
