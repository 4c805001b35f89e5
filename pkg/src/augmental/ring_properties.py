"""Cohen-Macaulay, Buchsbaum, 2-CM and Gorenstein complexes via link homology.

Each property is decided by a homological criterion on links and, where a
second classical criterion exists, by that one too.  Gorenstein disagreement
between routes raises; the other route results are returned for callers to
compare.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .binary_ops import join, product
from .complex import Complex, dim, is_pure, reduced_euler
from .groups import Z
from .homology import as_coeff, homology, require_nonvoid
from .local import cost
from .manifolds import _link, is_pseudomanifold, link_homology, pseudo_boundary


class GorensteinRouteMismatch(AssertionError):
    """The Gorenstein criteria gave different answers; an engine bug."""


def _n(cx: Complex):
    d = dim(cx)
    return d if isinstance(d, int) else None


def cone_points(cx: Complex) -> list:
    """Vertices lying in every facet."""
    if cx.is_void or cx.is_irrelevant:
        return []
    common = set(next(iter(cx.facets)))
    for f in cx.facets:
        common &= set(f)
    return sorted(common)


def core(cx: Complex) -> Complex:
    cps = set(cone_points(cx))
    if not cps:
        return cx
    return Complex(frozenset(s for s in cx.faces if cps.isdisjoint(s)))


@dataclass(frozen=True)
class RingClassReport:
    coeff: str
    CM: bool
    Bbm: bool
    twoCM: bool
    Gorenstein: bool
    cone_points: list = field(default_factory=list)
    core: Complex | None = None
    witnesses: dict = field(default_factory=dict)  # flag -> (face, degree) where it first fails
    routes: dict = field(default_factory=dict)


# Cohen-Macaulay and Buchsbaum

def reisner_witness(cx: Complex, coeff=None, with_empty: bool = True):
    """First (face, degree) with nonzero link homology below the link dimension, or None."""
    coeff = as_coeff(coeff)
    for s in sorted(cx.faces, key=lambda f: (len(f), f)):
        if not s and not with_empty:
            continue
        lk = _link(cx, s)
        d = _n(lk)
        for q in link_homology(cx, s, coeff).degrees():
            if q < d:
                return s, q
    return None


def is_CM(cx: Complex, coeff=None) -> bool:
    """Reisner: every link (including the complex itself) has homology only in its top degree."""
    if cx.is_void:
        return True
    return reisner_witness(cx, coeff) is None


def is_Bbm(cx: Complex, coeff=None) -> bool:
    """Pure and the Reisner condition at every nonempty face.

    The purity requirement is explicit: the link condition alone accepts a
    triangle plus an isolated vertex, which is not Buchsbaum.
    """
    if cx.is_void:
        return True
    return is_pure(cx) and reisner_witness(cx, coeff, with_empty=False) is None


def bbm_via_links(cx: Complex, coeff=None) -> bool:
    """Pure and the link of every nonempty face is Cohen-Macaulay."""
    if cx.is_void:
        return True
    return is_pure(cx) and all(is_CM(_link(cx, s), coeff) for s in cx.faces if s)


def bbm_via_vertex_links(cx: Complex, coeff=None) -> bool:
    """Pure and every vertex link is Cohen-Macaulay."""
    if cx.is_void:
        return True
    return is_pure(cx) and all(is_CM(_link(cx, (v,)), coeff) for v in cx.vertices)


# 2-CM

def is_2CM(cx: Complex, coeff=None) -> bool:
    """CM with vanishing homology of every contrastar one below the top degree."""
    coeff = as_coeff(coeff)
    if cx.is_void:
        return True
    if not is_CM(cx, coeff):
        return False
    n = _n(cx)
    return all(homology(cost(cx, s), coeff)[n - 1].is_zero for s in cx.faces)


def two_cm_via_deletion(cx: Complex, coeff=None) -> bool:
    """CM, and deleting any single vertex leaves a CM complex of the same dimension."""
    coeff = as_coeff(coeff)
    if cx.is_void:
        return True
    if not is_CM(cx, coeff):
        return False
    n = _n(cx)
    for v in cx.vertices:
        rest = cost(cx, (v,))
        if _n(rest) != n or not is_CM(rest, coeff):
            return False
    return True


# Gorenstein

def gorenstein_via_core_links(cx: Complex, coeff=None) -> bool:
    """Every link in the core has the coefficient ring in its top degree and nothing below."""
    coeff = as_coeff(coeff)
    g = core(cx)
    for s in g.faces:
        lk = _link(g, s)
        d = _n(lk)
        h = link_homology(g, s, coeff)
        if h[d] != Z or any(q < d for q in h.degrees()):
            return False
    return True


def gorenstein_via_pseudomanifold(cx: Complex, coeff=None) -> bool:
    """CM, and the core is an orientable pseudomanifold without boundary."""
    coeff = as_coeff(coeff)
    if not is_CM(cx, coeff):
        return False
    g = core(cx)
    if not is_pseudomanifold(g).ok or not pseudo_boundary(g).is_void:
        return False
    return homology(g, coeff)[_n(g)] == Z


def _is_cycle_or_short_path(lk: Complex) -> bool:
    if not is_pure(lk) or _n(lk) != 1:
        return False
    deg: dict = {}
    for a, b in lk.facets:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    nv, ne = len(lk.vertices), len(lk.facets)
    connected = homology(lk, "Z")[0].is_zero
    if not connected:
        return False
    if all(d == 2 for d in deg.values()):
        return nv >= 3
    # a path: two ends, the rest of degree two, and two or three vertices
    return ne == nv - 1 and nv in (2, 3) and max(deg.values()) <= 2


def gorenstein_via_small_links(cx: Complex, coeff=None) -> bool:
    """Low-dimensional list, or CM with circle/short-path codimension-two links
    and the core's reduced Euler characteristic equal to (-1)^dim."""
    coeff = as_coeff(coeff)
    if cx.is_irrelevant or (_n(cx) == 0 and len(cx.vertices) <= 2):
        return True
    n = _n(cx)
    if n is None or n < 1 or not is_CM(cx, coeff):
        return False
    for s in cx.faces_of_dim(n - 2):
        if not _is_cycle_or_short_path(_link(cx, s)):
            return False
    g = core(cx)
    return reduced_euler(g) == (-1) ** _n(g)


GORENSTEIN_ROUTES = {
    "core-links": gorenstein_via_core_links,
    "pseudomanifold": gorenstein_via_pseudomanifold,
    "small-links": gorenstein_via_small_links,
}


def gorenstein_routes(cx: Complex, coeff=None) -> dict:
    return {name: fn(cx, coeff) for name, fn in GORENSTEIN_ROUTES.items()}


def is_Gorenstein(cx: Complex, coeff=None) -> bool:
    """Decided by three criteria that must agree; disagreement raises."""
    require_nonvoid(cx, "Gorensteinness")
    routes = gorenstein_routes(cx, coeff)
    if len(set(routes.values())) != 1:
        raise GorensteinRouteMismatch(f"{cx!r} over {as_coeff(coeff)}: {routes}")
    return routes["core-links"]


def classify_ring(cx: Complex, coeff=None) -> RingClassReport:
    coeff = as_coeff(coeff)
    require_nonvoid(cx, "ring classification")
    witnesses = {}
    w = reisner_witness(cx, coeff)
    if w is not None:
        witnesses["CM"] = w
    wb = reisner_witness(cx, coeff, with_empty=False)
    if wb is not None:
        witnesses["Bbm"] = wb
    routes = {
        "Bbm": {"criterion": is_Bbm(cx, coeff), "nonempty-links-CM": bbm_via_links(cx, coeff),
                "vertex-links-CM": bbm_via_vertex_links(cx, coeff)},
        "twoCM": {"contrastar": is_2CM(cx, coeff), "deletion": two_cm_via_deletion(cx, coeff)},
        "Gorenstein": gorenstein_routes(cx, coeff),
    }
    return RingClassReport(
        coeff=coeff.name,
        CM=is_CM(cx, coeff),
        Bbm=routes["Bbm"]["criterion"],
        twoCM=routes["twoCM"]["contrastar"],
        Gorenstein=is_Gorenstein(cx, coeff),
        cone_points=cone_points(cx),
        core=core(cx),
        witnesses=witnesses,
        routes=routes,
    )


# join and product laws

def gorenstein_join_law(a: Complex, b: Complex, coeff=None) -> tuple:
    """(join is Gorenstein, both factors are); the law says these agree."""
    return is_Gorenstein(join(a, b), coeff), is_Gorenstein(a, coeff) and is_Gorenstein(b, coeff)


def _product_clause(cx: Complex, coeff) -> str | None:
    """For a Gorenstein factor: 'min' or 'max' for a single cone point at that
    end of the vertex order, 'both' for exactly the two extreme vertices as
    cone points, None otherwise."""
    if not is_Gorenstein(cx, coeff):
        return None
    cps = cone_points(cx)
    lo, hi = cx.vertices[0], cx.vertices[-1]
    if cps == [lo]:
        return "min"
    if cps == [hi]:
        return "max"
    if cps == [lo, hi]:
        return "both"
    return None


def gorenstein_product_law(a: Complex, b: Complex, coeff=None):
    """(product is Gorenstein, factor-side prediction), or None if a factor has dim < 1.

    The prediction holds when both factors are Gorenstein with one cone
    point each, both at the minimum or both at the maximum of the vertex
    order, or when both have exactly the two extreme vertices as cone points.
    """
    if any(_n(x) is None or _n(x) < 1 for x in (a, b)):
        return None
    ca, cb = _product_clause(a, coeff), _product_clause(b, coeff)
    predicted = ca is not None and ca == cb
    return is_Gorenstein(product(a, b), coeff), predicted
