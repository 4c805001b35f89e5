import pytest
from hypothesis import given
from hypothesis import strategies as st

from augmental import catalog
from augmental.binary_ops import join, product
from augmental.complex import IRRELEVANT, VOID, ComplexError, from_facets, full_complex
from augmental.ring_properties import (
    bbm_via_links,
    bbm_via_vertex_links,
    classify_ring,
    cone_points,
    core,
    gorenstein_join_law,
    gorenstein_product_law,
    gorenstein_routes,
    is_2CM,
    is_Bbm,
    is_CM,
    is_Gorenstein,
    two_cm_via_deletion,
)
from support import complexes

MOEBIUS = catalog.get("moebius")
S2 = catalog.sphere(2)
BOWTIE = from_facets([(1, 2, 3), (1, 4, 5)])


def test_cone_points_and_core():
    edge = full_complex([1, 2])
    assert cone_points(edge) == [1, 2] and core(edge) == IRRELEVANT
    assert cone_points(catalog.sphere(1)) == [] and core(catalog.sphere(1)) == catalog.sphere(1)
    cone = join(catalog.get("point"), catalog.sphere(1))
    assert len(cone_points(cone)) == 1
    assert len(core(cone).facets) == 3


def test_cm_examples():
    assert is_CM(full_complex([1, 2, 3]))
    assert is_CM(S2)
    for c in ("F2", "F3", "Q"):
        assert not is_CM(BOWTIE, c)


def test_bbm_examples():
    assert is_Bbm(MOEBIUS) and not is_CM(MOEBIUS)
    disjoint = from_facets([(1, 2, 3), (4, 5, 6)])
    assert is_Bbm(disjoint) and not is_CM(disjoint)
    assert not is_Bbm(from_facets([(1, 2, 3), (4,)]))


def test_two_cm_examples():
    assert is_2CM(S2)
    assert is_CM(full_complex([1, 2])) and not is_2CM(full_complex([1, 2]))
    assert is_2CM(catalog.get("two_points"))


def test_gorenstein_examples():
    for name in ("irrelevant", "point", "two_points", "sphere1", "sphere2"):
        assert is_Gorenstein(catalog.get(name), "Z"), name
    assert not is_Gorenstein(MOEBIUS)
    # closed over F2 but with H_1 != 0, so not even CM
    assert not is_Gorenstein(catalog.get("rp2"), "F2")
    # over F3 it is acyclic and CM, but the top link homology at () vanishes
    assert is_CM(catalog.get("rp2"), "F3") and not is_Gorenstein(catalog.get("rp2"), "F3")
    with pytest.raises(ComplexError):
        is_Gorenstein(VOID)


def test_gorenstein_join_law_examples():
    two = catalog.get("two_points")
    assert gorenstein_join_law(two, two) == (True, True)
    assert gorenstein_join_law(MOEBIUS, catalog.get("point")) == (False, False)
    assert gorenstein_join_law(IRRELEVANT, S2) == (True, True)


def test_gorenstein_product_law_examples():
    edge = full_complex([1, 2])
    assert gorenstein_product_law(edge, edge) == (True, True)
    c = catalog.sphere(1)
    assert gorenstein_product_law(c, edge) == (False, False)
    assert gorenstein_product_law(catalog.get("point"), edge) is None
    # cones with the apex as the largest vertex
    cone = from_facets([(0, 1, 9), (1, 2, 9), (0, 2, 9)])
    lhs, pred = gorenstein_product_law(cone, cone)
    assert pred and lhs


def test_classify_ring_report():
    r = classify_ring(MOEBIUS, "F2")
    assert r.Bbm and not r.CM and not r.twoCM and not r.Gorenstein
    assert r.witnesses["CM"] == ((), 1)
    assert "Bbm" not in r.witnesses


@given(complexes(6, 5, False), st.sampled_from(["F2", "F3", "Z"]))
def test_route_agreement(cx, coeff):
    assert is_Bbm(cx, coeff) == bbm_via_links(cx, coeff) == bbm_via_vertex_links(cx, coeff)
    assert is_2CM(cx, coeff) == two_cm_via_deletion(cx, coeff)
    assert len(set(gorenstein_routes(cx, coeff).values())) == 1


@given(complexes(6, 5, False), st.sampled_from(["F2", "F3"]))
def test_hierarchy(cx, coeff):
    if is_Gorenstein(cx, coeff):
        assert is_CM(cx, coeff)
    if is_2CM(cx, coeff):
        assert is_CM(cx, coeff)
    if is_CM(cx, coeff):
        assert is_Bbm(cx, coeff)


@given(complexes(3, 3), complexes(3, 3), st.sampled_from(["F2", "F3"]))
def test_join_law(a, b, coeff):
    if a.is_void or b.is_void:
        return
    lhs, rhs = gorenstein_join_law(a, b, coeff)
    assert lhs == rhs


@pytest.mark.parametrize("a,b", [("ball1", "ball1"), ("ball1", "ball2"), ("ball2", "ball2"),
                                 ("sphere1", "ball1"), ("ball1", "sphere1")])
def test_product_law_on_catalog(a, b):
    lhs, pred = gorenstein_product_law(catalog.get(a), catalog.get(b))
    assert lhs == pred


def test_product_of_gorenstein_cores():
    c = catalog.sphere(1)
    assert not is_Gorenstein(product(c, c), "F2")
