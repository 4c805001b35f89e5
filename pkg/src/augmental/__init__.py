"""Exact toolkit for augmented simplicial complexes and their augmental homology."""

from .complex import (
    EMPTY_SIMPLEX,
    IRRELEVANT,
    NEG_INF,
    VOID,
    Complex,
    ComplexError,
    SimplicialPair,
    State,
    dim,
    f_vector,
    from_facets,
    full_complex,
    reduced_euler,
    simplex_boundary,
)
from .binary_ops import join, pair_join, pair_product, product
from .groups import FgAbGroup, GradedGroups
from .homology import F2, F3, QQ, ZZ, CoeffRing, homology
from .local import cost, link, local_homology
from .manifolds import boundary, classify, is_orientable
from .ring_properties import classify_ring
from .stanley_reisner import ideal, product_basis
from . import catalog

__all__ = [
    "EMPTY_SIMPLEX", "IRRELEVANT", "NEG_INF", "VOID", "Complex", "ComplexError",
    "SimplicialPair", "State", "dim", "f_vector", "from_facets", "full_complex",
    "reduced_euler", "simplex_boundary", "join", "pair_join", "pair_product", "product",
    "FgAbGroup", "GradedGroups", "F2", "F3", "QQ", "ZZ", "CoeffRing", "homology",
    "cost", "link", "local_homology", "boundary", "classify", "is_orientable",
    "classify_ring", "ideal", "product_basis", "catalog",
]
