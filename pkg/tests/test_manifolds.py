import pytest
from hypothesis import given
from hypothesis import strategies as st

from augmental import catalog
from augmental.binary_ops import join, product
from augmental.complex import IRRELEVANT, VOID, ComplexError, from_facets, full_complex, is_isomorphic
from augmental.groups import Z
from augmental.homology import homology
from augmental.manifolds import (
    BoundaryNotClosed,
    boundary,
    boundary_components,
    check_manifold_theorem,
    check_weak_theorem,
    classify,
    classify_weak,
    is_homology_manifold,
    is_homology_sphere,
    is_joinable_hm,
    is_jwhm,
    is_orientable,
    is_pseudomanifold,
    is_quasi_manifold,
    is_whm,
    is_whsp,
    links_are_pseudomanifolds,
    pseudo_boundary,
)
from support import complexes

MOEBIUS = catalog.get("moebius")
BOWTIE = from_facets([(1, 2, 3), (1, 4, 5)])
S2 = catalog.sphere(2)


def test_pseudomanifold_examples():
    res = is_pseudomanifold(MOEBIUS)
    assert res.ok
    assert homology(res.boundary, "Z").groups == {1: Z}
    assert len(res.boundary.facets) == 5
    assert pseudo_boundary(full_complex([1, 2])) == from_facets([(1,), (2,)])
    assert pseudo_boundary(catalog.get("two_points")) == VOID
    assert pseudo_boundary(catalog.get("point")) == IRRELEVANT
    assert not is_pseudomanifold(from_facets([(1, 2, 3), (1, 2, 4), (1, 2, 5)])).ok
    with pytest.raises(ComplexError):
        pseudo_boundary(from_facets([(1, 2), (3,)]))


def test_quasi_examples():
    assert is_quasi_manifold(S2)
    assert is_quasi_manifold(MOEBIUS)
    assert not is_quasi_manifold(BOWTIE)
    assert links_are_pseudomanifolds(S2)


def test_homology_manifold_examples():
    two = catalog.get("two_points")
    assert is_homology_manifold(two)
    assert is_homology_sphere(two)
    assert is_homology_sphere(S2, "Z") and is_joinable_hm(S2, "Z")
    assert boundary(S2, "Z") == VOID
    assert is_homology_manifold(MOEBIUS, "Z")
    assert not is_joinable_hm(MOEBIUS, "Z")
    assert boundary(MOEBIUS, "Z") == pseudo_boundary(MOEBIUS)
    assert not is_homology_manifold(BOWTIE, "Z")


def test_coefficient_dependent_boundary():
    rp2 = catalog.get("rp2")
    assert boundary(rp2, "F2") == VOID
    assert is_homology_sphere(rp2, "F2") and is_orientable(rp2, "F2")
    assert boundary(rp2, "Z") == IRRELEVANT
    assert boundary(rp2, "F3") == IRRELEVANT
    assert is_jwhm(rp2, "F3") and homology(rp2, "F3").is_zero
    cone = join(MOEBIUS, catalog.get("point"))
    assert is_isomorphic(boundary(cone, "F3"), rp2)


def test_orientability():
    assert not is_orientable(MOEBIUS, "Z")
    assert is_orientable(MOEBIUS, "F2")
    assert is_orientable(S2, "Z")
    assert is_orientable(catalog.get("point"), "Z")
    assert is_orientable(catalog.get("torus"), "Z")
    assert not is_orientable(catalog.get("rp2"), "Z")
    with pytest.raises(ComplexError):
        is_orientable(VOID)


def test_boundary_components():
    assert len(boundary_components(full_complex([1, 2, 3]))) == 1
    assert len(boundary_components(catalog.get("cylinder"))) == 2
    assert boundary_components(catalog.get("point")) == [IRRELEVANT]


def test_boundary_not_closed_is_reported():
    # a 2-sphere with a flap: the far vertex of the flap has a contractible
    # link, but the whole complex carries top homology, so () is not in Bd
    cx = from_facets([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 4)])
    with pytest.raises(BoundaryNotClosed, match=r"\(4,\)"):
        boundary(cx, "Z")


def test_weak_examples():
    assert is_whsp(catalog.sphere(3))
    assert is_whm(MOEBIUS) and not is_jwhm(MOEBIUS)
    assert is_jwhm(full_complex([1, 2]))
    w = classify_weak(MOEBIUS, "F2")
    assert w.whm and not w.acyclic


def test_classify_report():
    r = classify(MOEBIUS, "Z")
    flags = r.flags()
    assert flags["pseudo"] and flags["quasi"] and flags["hm"]
    assert not flags["joinable"] and flags["orientable"] is False
    assert len(r.components) == 1


def test_manifold_theorem_examples():
    for kind in ("pseudo", "quasi", "hm"):
        assert check_manifold_theorem(full_complex([0, 1]), catalog.sphere(1), "join", kind).ok
        assert check_manifold_theorem(full_complex([0, 1]), full_complex([0, 1]), "product", kind).ok
    assert not check_manifold_theorem(catalog.get("two_points"), S2, "product").applicable
    with pytest.raises(ValueError):
        check_manifold_theorem(S2, S2, "join", "hm", "Z")


MANIFOLD_FACTORS = ["point", "two_points", "ball1", "ball2", "sphere0", "sphere1", "moebius", "cylinder"]


@pytest.mark.parametrize("op", ["join", "product"])
@pytest.mark.parametrize("kind", ["pseudo", "quasi", "hm"])
@pytest.mark.parametrize("coeff", ["F2", "F3"])
def test_manifold_theorem_on_catalog(op, kind, coeff):
    small = MANIFOLD_FACTORS if op == "join" else MANIFOLD_FACTORS[:6]
    for a in small:
        for b in small:
            r = check_manifold_theorem(catalog.get(a), catalog.get(b), op, kind, coeff)
            assert r.ok, (a, b, r.clauses)


@pytest.mark.parametrize("coeff", ["F2", "F3"])
def test_weak_theorem_on_catalog(coeff):
    names = ["point", "two_points", "ball1", "sphere1", "ball2"]
    cases = [(a, b) for a in names for b in names] + [("moebius", "two_points"), ("ball1", "moebius")]
    for a, b in cases:
        r = check_weak_theorem(catalog.get(a), catalog.get(b), coeff)
        assert r.ok, (a, b, r.clauses)


@given(complexes(5, 4), st.sampled_from(["Z", "F2", "F3"]))
def test_hierarchy(cx, coeff):
    # hsp => joinable => hm, and whsp => jwhm => whm, over the same coefficients
    if is_homology_sphere(cx, coeff):
        assert is_joinable_hm(cx, coeff)
    if is_joinable_hm(cx, coeff):
        assert is_homology_manifold(cx, coeff)
    if is_jwhm(cx, coeff):
        assert is_whm(cx, coeff)
    if is_whsp(cx, coeff):
        assert is_jwhm(cx, coeff)


@given(complexes(5, 4, False))
def test_quasi_cross_check_never_raises(cx):
    is_quasi_manifold(cx)


def test_product_of_circles_is_torus_like():
    c3 = catalog.sphere(1)
    t = product(c3, c3)
    assert homology(t, "Z").groups == {1: homology(catalog.get("torus"), "Z")[1], 2: Z}
    assert is_homology_manifold(t, "Z") and boundary(t, "Z") == VOID
