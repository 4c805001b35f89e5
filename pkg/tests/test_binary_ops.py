import itertools
from math import comb

from hypothesis import given
from hypothesis import strategies as st

from augmental.binary_ops import (
    is_product_chain,
    join,
    join_origin,
    pair_id,
    pair_join,
    pair_product,
    product,
    product_origin,
    unpair_id,
)
from augmental.complex import IRRELEVANT, NEG_INF, VOID, SimplicialPair, dim, f_vector, from_facets, full_complex
from augmental.groups import Z
from augmental.homology import homology
from support import complexes

TWO = from_facets([(0,), (1,)])
EDGE = full_complex([0, 1])


def test_join_unit_and_zero():
    cx = from_facets([(1, 2), (2, 3)])
    assert join(cx, IRRELEVANT) == cx
    assert join(IRRELEVANT, cx) == cx
    assert join(cx, VOID) is VOID
    assert join(VOID, cx) is VOID


def test_two_points_join_is_square():
    sq = join(TWO, TWO)
    assert f_vector(sq) == [1, 4, 4]
    assert all(len(f) == 2 for f in sq.facets)
    assert homology(sq, "Z").groups == {1: Z}


def test_join_origin_tracks_sides():
    origin = join_origin(TWO, TWO)
    assert sorted(origin.values()) == [("L", 0), ("L", 1), ("R", 0), ("R", 1)]


def test_product_absorption():
    assert product(EDGE, IRRELEVANT) == IRRELEVANT
    assert product(IRRELEVANT, EDGE) == IRRELEVANT
    assert product(EDGE, VOID) is VOID


def test_square_product():
    sq = product(EDGE, EDGE)
    assert f_vector(sq) == [1, 4, 5, 2]
    assert homology(sq, "Z").is_zero
    # the diagonal runs from (0,0) to (1,1)
    assert tuple(sorted((pair_id(0, 0), pair_id(1, 1)))) in sq.faces
    assert tuple(sorted((pair_id(1, 0), pair_id(0, 1)))) not in sq.faces


def test_pair_id_round_trip_and_monotone():
    for i, j in itertools.product(range(8), repeat=2):
        assert unpair_id(pair_id(i, j)) == (i, j)
        assert pair_id(i, j) < pair_id(i + 1, j)
        assert pair_id(i, j) < pair_id(i, j + 1)


def test_pair_operations():
    cx = from_facets([(1, 2)])
    assert pair_join(IRRELEVANT, SimplicialPair(cx, from_facets([(1,)]))) == SimplicialPair(cx, from_facets([(1,)]))
    assert pair_product(IRRELEVANT, cx) == SimplicialPair(IRRELEVANT, VOID)
    assert pair_join(cx, cx).sub == VOID
    assert pair_join(cx, cx, "cap") == pair_join(cx, cx, "cup")


@given(complexes(), complexes())
def test_join_dimension_adds(a, b):
    d = dim(join(a, b))
    if a.is_void or b.is_void:
        assert d is NEG_INF
    else:
        assert d == dim(a) + dim(b) + 1


@given(complexes(4, 3, False), complexes(4, 3, False))
def test_product_faces_are_chains(a, b):
    p = product(a, b)
    origin = product_origin(a, b)
    pts = list(origin)
    # brute force: every subset of the vertex grid that is a chain with simplex projections
    expected = {()}
    for r in range(1, min(len(pts), 6) + 1):
        for s in itertools.combinations(sorted(pts), r):
            if is_product_chain([origin[v] for v in s], a, b):
                expected.add(s)
    assert {f for f in p.faces if len(f) <= 6} == expected


@given(st.integers(1, 4), st.integers(1, 4))
def test_simplex_product_facet_count(m, n):
    p = product(full_complex(range(m)), full_complex(range(n)))
    assert len(p.facets) == comb(m + n - 2, n - 1)
    assert dim(p) == m + n - 2
    assert homology(p, "Z").is_zero


@given(complexes(4, 3), complexes(4, 3))
def test_join_commutes_on_homology(a, b):
    assert homology(join(a, b), "Z") == homology(join(b, a), "Z")
