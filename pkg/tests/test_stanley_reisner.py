import itertools

import pytest
from hypothesis import given

from augmental.binary_ops import join, pair_id, product
from augmental.complex import IRRELEVANT, VOID, Complex, ComplexError, from_facets, full_complex, union
from augmental.stanley_reisner import (
    MonomialIdeal,
    ideal,
    ideal_of_intersection,
    ideal_of_union,
    is_non_simplex,
    join_ideal_check,
    minimalize,
    non_simplices,
    product_basis,
)
from support import complexes

C4 = from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])


def brute_non_simplices(cx, universe):
    out = set()
    for r in range(len(universe) + 1):
        for s in itertools.combinations(sorted(universe), r):
            if s not in cx.faces and all(s[:i] + s[i + 1:] in cx.faces for i in range(len(s))):
                out.add(s)
    return out


def test_non_simplex_examples():
    assert non_simplices(VOID) == {()}
    assert non_simplices(IRRELEVANT, [1, 2]) == {(1,), (2,)}
    assert non_simplices(C4) == {(1, 3), (2, 4)}
    assert is_non_simplex((1, 3), C4)
    assert not is_non_simplex((1, 2), C4)


def test_ideal_examples():
    assert ideal(VOID).is_unit
    assert ideal(IRRELEVANT, [1, 2]).format() == "(v1, v2)"
    assert ideal(C4).format() == "(v1*v3, v2*v4)"
    assert ideal(full_complex([1, 2])).format() == "(0)"
    assert ideal(C4).cas_block() == "R = QQ[v1, v2, v3, v4];\nI = ideal(v1*v3, v2*v4);\n"
    with pytest.raises(ComplexError):
        ideal(C4, [1, 2])


def test_union_of_ideals_is_lcm():
    w = (1, 2, 3, 4)
    a, b = MonomialIdeal(w, {(1, 3)}), MonomialIdeal(w, {(2, 4)})
    assert ideal_of_union(a, b).generators == {(1, 2, 3, 4)}
    assert ideal_of_intersection(a, b).generators == {(1, 3), (2, 4)}


def test_minimalize():
    assert minimalize([(1,), (1, 2), (2, 3)]) == {(1,), (2, 3)}


def test_product_basis_examples():
    edge = full_complex([1, 2])
    pb = product_basis(edge, edge)
    assert pb.generators == {tuple(sorted((pair_id(1, 2), pair_id(2, 1))))}
    two, pt = from_facets([(1,), (2,)]), from_facets([(1,)])
    assert tuple(sorted((pair_id(1, 1), pair_id(2, 1)))) in product_basis(two, pt).generators
    assert product_basis(VOID, edge).is_unit


def test_join_ideal_examples():
    assert join_ideal_check(IRRELEVANT, IRRELEVANT, [0], [0])
    two = from_facets([(1,), (2,)])
    assert join_ideal_check(two, two)


@given(complexes(5, 4))
def test_non_simplices_brute_force(cx):
    w = range(5)
    assert non_simplices(cx, w) == brute_non_simplices(cx, w)


@given(complexes(3, 3), complexes(3, 3))
def test_product_basis_property(a, b):
    pb = product_basis(a, b)
    assert pb == ideal(product(a, b), pb.universe)


@given(complexes(5, 4), complexes(5, 4))
def test_union_intersection_property(a, b):
    w = range(5)
    assert ideal(union(a, b), w) == ideal_of_union(ideal(a, w), ideal(b, w))
    assert ideal(Complex(a.faces & b.faces), w) == ideal_of_intersection(ideal(a, w), ideal(b, w))


@given(complexes(3, 3), complexes(3, 3))
def test_join_ideal_property(a, b):
    assert join_ideal_check(a, b, range(4), range(3))


@given(complexes(5, 4))
def test_faces_avoid_ideal(cx):
    # a set is a face iff its monomial is outside the ideal
    ide = ideal(cx, range(5))
    for r in range(6):
        for s in itertools.combinations(range(5), r):
            assert (s in cx.faces) != ide.contains(s)


def test_join_of_squares_ideal():
    two = from_facets([(1,), (2,)])
    sq = join(two, two)
    assert len(ideal(sq).generators) == 2
