"""Pseudo-, quasi- and homology manifolds, their boundaries, and weak manifolds.

All homological conditions are phrased through links: the group in degree
``i - #s`` of the link of ``s`` is the local homology of the complex at
``s`` in degree ``i``.  The empty simplex is a face like any other and is
included or excluded explicitly per condition.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import NamedTuple

from .binary_ops import join, join_offset, product
from .complex import (
    VOID,
    Complex,
    ComplexError,
    PurityError,
    SimplicialPair,
    dim,
    from_facets,
    is_pure,
    is_strongly_connected,
    strong_components,
    union,
)
from .groups import Z, GradedGroups
from .homology import as_coeff, homology, require_nonvoid
from .local import cost, link


class BoundaryNotClosed(ComplexError):
    """The homological boundary set is not a simplicial complex."""

    def __init__(self, face, missing):
        super().__init__(f"boundary contains {face} but not its face {missing}")
        self.face, self.missing = face, missing


class ManifoldConsistencyError(AssertionError):
    """Two independent routes to the same manifold property disagree."""


def _n(cx: Complex) -> int | None:
    d = dim(cx)
    return d if isinstance(d, int) else None


@functools.lru_cache(maxsize=65536)
def _link(cx: Complex, s: tuple) -> Complex:
    return link(cx, s)


def link_homology(cx: Complex, s, coeff=None) -> GradedGroups:
    return homology(_link(cx, tuple(s)), as_coeff(coeff))


def _faces(cx: Complex, with_empty: bool):
    return [s for s in sorted(cx.faces, key=lambda f: (len(f), f)) if with_empty or s]


# pseudomanifolds

def ridge_cofaces(cx: Complex) -> dict:
    """Number of top-dimensional facets containing each codimension-one face."""
    n = _n(cx)
    counts: dict = {}
    if n is None:
        return counts
    for f in cx.facets:
        if len(f) == n + 1:
            for i in range(len(f)):
                r = f[:i] + f[i + 1:]
                counts[r] = counts.get(r, 0) + 1
    for r in cx.faces:
        if len(r) == n and r not in counts:
            counts[r] = 0
    return counts


class PseudoResult(NamedTuple):
    ok: bool
    boundary: Complex | None


def is_pseudomanifold(cx: Complex) -> PseudoResult:
    """Pure, every ridge in at most two facets, strongly connected.

    The boundary is generated by the ridges lying in exactly one facet; with
    none it is void, so two points have empty boundary and one point has
    boundary ``{()}``.
    """
    if cx.is_void:
        return PseudoResult(True, VOID)
    if not is_pure(cx):
        return PseudoResult(False, None)
    counts = ridge_cofaces(cx)
    if any(c > 2 for c in counts.values()) or not is_strongly_connected(cx):
        return PseudoResult(False, None)
    free = [r for r, c in counts.items() if c == 1]
    return PseudoResult(True, from_facets(free) if free else VOID)


def pseudo_boundary(cx: Complex) -> Complex:
    res = is_pseudomanifold(cx)
    if not res.ok:
        raise ComplexError("not a pseudomanifold")
    return res.boundary


# quasi-manifolds

def _quasi_direct(cx: Complex, coeff) -> bool:
    if cx.is_void:
        return True
    if not is_pure(cx):
        return False
    if any(c > 2 for c in ridge_cofaces(cx).values()):
        return False
    n = _n(cx)
    for s in _faces(cx, with_empty=True):
        if n - len(s) >= 1 and not link_homology(cx, s, coeff)[0].is_zero:
            return False
    return True


def links_are_pseudomanifolds(cx: Complex) -> bool:
    """Sufficient condition for a quasi-manifold, including the link of ()."""
    return all(is_pseudomanifold(_link(cx, s)).ok for s in cx.faces)


def is_quasi_manifold(cx: Complex, coeff=None) -> bool:
    """Pure, ridge condition, and every link of dimension >= 1 connected.

    Cross-checked against the all-links-are-pseudomanifolds criterion, which
    implies it; a violation of that implication raises.
    """
    ok = _quasi_direct(cx, as_coeff(coeff))
    if not ok and links_are_pseudomanifolds(cx):
        raise ManifoldConsistencyError(f"all links are pseudomanifolds but {cx!r} fails the quasi test")
    return ok


# homology manifolds

def _concentrated(h: GradedGroups, degree: int) -> bool:
    return all(q == degree for q in h.degrees())


def _is_two_points(cx: Complex) -> bool:
    return _n(cx) == 0 and len(cx.vertices) == 2


def is_connected(cx: Complex, coeff=None) -> bool:
    return homology(cx, coeff)[0].is_zero


def _local_conditions(cx: Complex, coeff, with_empty: bool, require_rank_one: bool) -> bool:
    n = _n(cx)
    for s in _faces(cx, with_empty):
        h = link_homology(cx, s, coeff)
        top = n - len(s)
        if not _concentrated(h, top):
            return False
        if require_rank_one and not (h[top].is_zero or h[top] == Z):
            return False
    return True


def is_homology_manifold(cx: Complex, coeff=None) -> bool:
    coeff = as_coeff(coeff)
    if cx.is_void or _is_two_points(cx):
        return True
    if not is_connected(cx, coeff):
        return False
    return _local_conditions(cx, coeff, with_empty=False, require_rank_one=True)


def is_joinable_hm(cx: Complex, coeff=None) -> bool:
    coeff = as_coeff(coeff)
    if not is_homology_manifold(cx, coeff):
        return False
    return cx.is_void or _concentrated(homology(cx, coeff), _n(cx))


def is_homology_sphere(cx: Complex, coeff=None) -> bool:
    coeff = as_coeff(coeff)
    if cx.is_void or not is_homology_manifold(cx, coeff):
        return False
    n = _n(cx)
    return all(link_homology(cx, s, coeff)[n - len(s)] == Z for s in cx.faces)


def boundary_faces(cx: Complex, coeff=None) -> frozenset:
    """Faces whose link has vanishing homology in the top local degree."""
    coeff = as_coeff(coeff)
    n = _n(cx)
    if n is None:
        return frozenset()
    return frozenset(s for s in cx.faces if link_homology(cx, s, coeff)[n - len(s)].is_zero)


def boundary(cx: Complex, coeff=None) -> Complex:
    """Coefficient-dependent boundary.

    The face set is checked for closure under taking faces; if it is not a
    complex, BoundaryNotClosed names an offending face and missing subface.
    """
    faces = boundary_faces(cx, coeff)
    for s in sorted(faces, key=len):
        for i in range(len(s)):
            t = s[:i] + s[i + 1:]
            if t not in faces:
                raise BoundaryNotClosed(s, t)
    return Complex(faces)


def is_orientable(cx: Complex, coeff=None, bd: Complex | None = None) -> bool:
    """Top relative homology modulo the boundary is a free module of rank one."""
    require_nonvoid(cx, "orientability")
    coeff = as_coeff(coeff)
    if bd is None:
        bd = boundary(cx, coeff)
    return homology(SimplicialPair(cx, bd), coeff)[_n(cx)] == Z


def boundary_components(cx: Complex, coeff=None) -> list:
    bd = boundary(cx, coeff)
    if not is_pure(bd):
        raise PurityError(f"boundary is not pure: facets {sorted(bd.facets)}")
    return strong_components(bd)


# weak manifolds

@dataclass(frozen=True)
class WeakReport:
    coeff: str
    n: object
    whm: bool
    jwhm: bool
    whsp: bool
    acyclic: bool
    ordinary: bool
    locally_weakly_direct: bool


def is_whm(cx: Complex, coeff=None) -> bool:
    if cx.is_void:
        return True
    return _local_conditions(cx, as_coeff(coeff), with_empty=False, require_rank_one=False)


def is_jwhm(cx: Complex, coeff=None) -> bool:
    coeff = as_coeff(coeff)
    return is_whm(cx, coeff) and (cx.is_void or _concentrated(homology(cx, coeff), _n(cx)))


def costs_vanish(cx: Complex, degrees, coeff=None) -> bool:
    """Whether every contrastar has zero homology in all of ``degrees``."""
    coeff = as_coeff(coeff)
    for s in cx.faces:
        h = homology(cost(cx, s), coeff)
        if any(not h[q].is_zero for q in degrees):
            return False
    return True


def is_whsp(cx: Complex, coeff=None) -> bool:
    coeff = as_coeff(coeff)
    if cx.is_void:
        return True
    return is_jwhm(cx, coeff) and costs_vanish(cx, [_n(cx) - 1], coeff)


def classify_weak(cx: Complex, coeff=None) -> WeakReport:
    coeff = as_coeff(coeff)
    n = _n(cx)
    whm = is_whm(cx, coeff)
    acyclic = homology(cx, coeff).is_zero
    if cx.is_void:
        ordinary = True
        lwd = False
    else:
        ordinary = (not whm) or costs_vanish(cx, range(n, n + 1), coeff)
        lwd = any(g.rank > 0 for s in cx.faces if s for g in link_homology(cx, s, coeff).groups.values())
    return WeakReport(coeff.name, "-inf" if n is None else n, whm, is_jwhm(cx, coeff),
                      is_whsp(cx, coeff), acyclic, ordinary, lwd)


# combined report

@dataclass(frozen=True)
class ManifoldReport:
    coeff: str
    n: object
    pseudo: bool
    quasi: bool
    hm: bool
    joinable: bool
    hsp: bool
    orientable: bool | None
    boundary: Complex | None
    components: list = field(default_factory=list)
    weak: WeakReport | None = None

    def flags(self) -> dict:
        out = {k: getattr(self, k) for k in ("pseudo", "quasi", "hm", "joinable", "hsp", "orientable")}
        out.update({k: getattr(self.weak, k) for k in ("whm", "jwhm", "whsp", "acyclic", "ordinary",
                                                        "locally_weakly_direct")})
        return out


def classify(cx: Complex, coeff=None) -> ManifoldReport:
    coeff = as_coeff(coeff)
    pseudo = is_pseudomanifold(cx)
    quasi = is_quasi_manifold(cx, coeff)
    hm = is_homology_manifold(cx, coeff)
    bd = None
    if quasi or hm:
        bd = boundary(cx, coeff)
    elif pseudo.ok:
        bd = pseudo.boundary
    orientable = None
    comps: list = []
    if bd is not None:
        if not cx.is_void:
            orientable = is_orientable(cx, coeff, bd)
        comps = strong_components(bd) if is_pure(bd) else []
    return ManifoldReport(
        coeff=coeff.name,
        n="-inf" if _n(cx) is None else _n(cx),
        pseudo=pseudo.ok,
        quasi=quasi,
        hm=hm,
        joinable=is_joinable_hm(cx, coeff),
        hsp=is_homology_sphere(cx, coeff),
        orientable=orientable,
        boundary=bd,
        components=comps,
        weak=classify_weak(cx, coeff),
    )


# join and product theorems

KINDS = ("pseudo", "quasi", "hm")


def is_manifold(cx: Complex, kind: str, coeff=None) -> bool:
    if kind == "pseudo":
        return is_pseudomanifold(cx).ok
    if kind == "quasi":
        return is_quasi_manifold(cx, coeff)
    if kind == "hm":
        return is_homology_manifold(cx, coeff)
    raise ValueError(f"unknown manifold kind {kind!r}")


def manifold_boundary(cx: Complex, kind: str, coeff=None) -> Complex:
    return pseudo_boundary(cx) if kind == "pseudo" else boundary(cx, coeff)


def _is_point(cx: Complex) -> bool:
    return _n(cx) == 0 and len(cx.vertices) == 1


@dataclass(frozen=True)
class TheoremReport:
    op: str
    kind: str
    coeff: str
    applicable: bool
    clauses: dict = field(default_factory=dict)  # clause name -> (lhs, rhs) or None

    @property
    def ok(self) -> bool:
        return all(v is None or v[0] == v[1] for v in self.clauses.values())


def _excluded(cx: Complex, op: str) -> bool:
    if op == "join":
        return cx.is_void
    return cx.is_void or cx.is_irrelevant or _is_two_points(cx)


def predicted_boundary(a: Complex, b: Complex, op: str, kind: str, coeff=None) -> Complex:
    """Boundary of the join or product assembled from the factors' boundaries."""
    bda, bdb = manifold_boundary(a, kind, coeff), manifold_boundary(b, kind, coeff)
    if op == "join":
        off = join_offset(a, b)
        return union(join(bda, b, off), join(a, bdb, off))
    if _is_point(a):
        return product(a, bdb)
    if _is_point(b):
        return product(bda, b)
    return union(product(bda, b), product(a, bdb))


def check_manifold_theorem(a: Complex, b: Complex, op: str = "join", kind: str = "hm",
                           coeff="F2") -> TheoremReport:
    """Manifold status, boundary and orientability of a join or product
    against the same data for the factors.

    For joins of homology manifolds the factors must be joinable.  Inputs
    outside the stated exclusions are reported as not applicable.
    """
    coeff = as_coeff(coeff)
    if not coeff.is_field:
        raise ValueError("the join/product manifold laws are stated over a field")
    if _excluded(a, op) or _excluded(b, op):
        return TheoremReport(op, kind, coeff.name, False)
    whole = join(a, b) if op == "join" else product(a, b)
    lhs = is_manifold(whole, kind, coeff)
    if kind == "hm" and op == "join":
        rhs = is_joinable_hm(a, coeff) and is_joinable_hm(b, coeff)
    else:
        rhs = is_manifold(a, kind, coeff) and is_manifold(b, kind, coeff)
    clauses: dict = {"manifold": (lhs, rhs), "boundary": None, "orientable": None}
    if lhs and rhs:
        bd = manifold_boundary(whole, kind, coeff)
        clauses["boundary"] = (bd, predicted_boundary(a, b, op, kind, coeff))
        ora = is_orientable(a, coeff, manifold_boundary(a, kind, coeff))
        orb = is_orientable(b, coeff, manifold_boundary(b, kind, coeff))
        clauses["orientable"] = (is_orientable(whole, coeff, bd), ora and orb)
    return TheoremReport(op, kind, coeff.name, True, clauses)


def check_weak_theorem(a: Complex, b: Complex, coeff="F2") -> TheoremReport:
    """Weak-manifold laws for products and joins over a field."""
    coeff = as_coeff(coeff)
    if not coeff.is_field:
        raise ValueError("the weak-manifold laws are stated over a field")
    if any(x.is_void or x.is_irrelevant for x in (a, b)):
        return TheoremReport("weak", "whm", coeff.name, False)
    wa, wb = classify_weak(a, coeff), classify_weak(b, coeff)
    if not all(w.ordinary and w.locally_weakly_direct for w in (wa, wb)):
        return TheoremReport("weak", "whm", coeff.name, False)
    pr, jn = classify_weak(product(a, b), coeff), classify_weak(join(a, b), coeff)
    clauses: dict = {
        "product-whm": (pr.whm, wa.whm and wb.whm),
        "product-never-whsp": None,
        "join-whm": (jn.whm, wa.jwhm and wb.jwhm),
        "join-jwhm": (jn.jwhm, wa.jwhm and wb.jwhm),
        "join-whsp": (jn.whsp, wa.whsp and wb.whsp),
        "product-jwhm": None,
    }
    na, nb = _n(a), _n(b)
    # both clauses need each factor of positive dimension; point x two points is a whsp
    if na + nb > na and na + nb > nb:
        clauses["product-jwhm"] = (pr.jwhm, wa.jwhm and wb.jwhm and wa.acyclic and wb.acyclic)
        clauses["product-never-whsp"] = (pr.whsp, False)
    return TheoremReport("weak", "whm", coeff.name, True, clauses)


__all__ = [
    "BoundaryNotClosed", "ManifoldConsistencyError", "PseudoResult", "WeakReport",
    "ManifoldReport", "TheoremReport", "ridge_cofaces", "is_pseudomanifold",
    "pseudo_boundary", "links_are_pseudomanifolds", "is_quasi_manifold", "is_connected",
    "is_homology_manifold", "is_joinable_hm", "is_homology_sphere", "boundary_faces",
    "boundary", "is_orientable", "boundary_components", "is_whm", "is_jwhm", "is_whsp",
    "costs_vanish", "classify_weak", "classify", "is_manifold", "manifold_boundary",
    "predicted_boundary", "check_manifold_theorem", "check_weak_theorem", "link_homology",
]
