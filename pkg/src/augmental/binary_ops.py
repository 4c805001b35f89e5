"""Join and ordered Cartesian product of complexes and of pairs."""

from __future__ import annotations

import enum
import itertools
import math

from .complex import (
    VOID,
    IRRELEVANT,
    Complex,
    SimplicialPair,
    _subsets,
    as_pair,
    union,
)


class Variant(enum.Enum):
    CUP = "cup"
    CAP = "cap"


# join

def join_offset(a: Complex, b: Complex) -> int:
    """Shift applied to the right factor's ids so the two vertex sets are disjoint.

    Zero when they already are, which keeps ``a * {()} == a`` literally.
    """
    va, vb = set(a.vertices), set(b.vertices)
    if va.isdisjoint(vb):
        return 0
    return max(va) + 1


def join(a: Complex, b: Complex, offset: int | None = None) -> Complex:
    """Simplicial join ``{s | t : s in a, t in b}``.

    The void complex absorbs, the irrelevant complex is the unit.
    """
    if offset is None:
        offset = join_offset(a, b)
    if a.is_void or b.is_void:
        return VOID
    shifted = [tuple(v + offset for v in t) for t in b.faces]
    faces = frozenset(tuple(sorted(s + t)) for s in a.faces for t in shifted)
    facets = frozenset(tuple(sorted(s + tuple(v + offset for v in t)))
                       for s in a.facets for t in b.facets)
    labels = dict(a.labels)
    labels.update({v + offset: lab for v, lab in b.labels.items()})
    return Complex(faces, facets, labels)


def join_origin(a: Complex, b: Complex, offset: int | None = None) -> dict:
    """Map each vertex of ``join(a, b)`` back to ``("L", v)`` or ``("R", v)``."""
    if offset is None:
        offset = join_offset(a, b)
    origin = {v: ("L", v) for v in a.vertices}
    origin.update({v + offset: ("R", v) for v in b.vertices})
    return origin


# product

def pair_id(i: int, j: int) -> int:
    """Cantor pairing; monotone in both arguments, so ascending id order
    extends the componentwise product order."""
    s = i + j
    return s * (s + 1) // 2 + j


def unpair_id(n: int) -> tuple:
    s = (math.isqrt(8 * n + 1) - 1) // 2
    j = n - s * (s + 1) // 2
    return s - j, j


def staircases(f: tuple, g: tuple):
    """Maximal monotone chains in the grid ``f x g`` (lattice-path shuffles)."""
    m, n = len(f), len(g)
    steps = m + n - 2
    for right in itertools.combinations(range(steps), n - 1):
        i = j = 0
        chain = [(f[0], g[0])]
        rset = set(right)
        for k in range(steps):
            if k in rset:
                j += 1
            else:
                i += 1
            chain.append((f[i], g[j]))
        yield chain


def product(a: Complex, b: Complex) -> Complex:
    """Ordered simplicial Cartesian product, vertex order ascending ids.

    Product vertex ``(v, w)`` gets id ``pair_id(v, w)``; the label records
    the pair.
    """
    if a.is_void or b.is_void:
        return VOID
    if a.is_irrelevant or b.is_irrelevant:
        return IRRELEVANT
    faces = set()
    facets = set()
    for f in a.facets:
        for g in b.facets:
            for chain in staircases(f, g):
                ids = tuple(pair_id(v, w) for v, w in chain)
                facets.add(tuple(sorted(ids)))
                faces.update(tuple(sorted(s)) for s in _subsets(ids))
    faces = frozenset(faces)
    labels = {pair_id(v, w): f"({a.labels.get(v, v)},{b.labels.get(w, w)})"
              for v in a.vertices for w in b.vertices}
    return Complex(faces, labels=labels)


def product_origin(a: Complex, b: Complex) -> dict:
    return {pair_id(v, w): (v, w) for v in a.vertices for w in b.vertices}


def is_product_chain(pairs, a: Complex, b: Complex) -> bool:
    """Direct membership test for the product: a set of vertex pairs is a
    simplex iff it is a chain for the componentwise order and both
    projections are simplices of the factors."""
    pts = sorted(set(pairs))
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        if not (x1 <= x2 and y1 <= y2):
            return False
    return (tuple(sorted({x for x, _ in pts})) in a.faces
            and tuple(sorted({y for _, y in pts})) in b.faces)


# pairs

def pair_join(p, q, variant: Variant | str = Variant.CUP) -> SimplicialPair:
    p, q = as_pair(p), as_pair(q)
    variant = Variant(variant)
    off = join_offset(p.total, q.total)
    total = join(p.total, q.total, off)
    if variant is Variant.CUP:
        sub = union(join(p.total, q.sub, off), join(p.sub, q.total, off))
    else:
        sub = join(p.sub, q.sub, off)
    return SimplicialPair(total, sub)


def pair_product(p, q, variant: Variant | str = Variant.CUP) -> SimplicialPair:
    p, q = as_pair(p), as_pair(q)
    variant = Variant(variant)
    total = product(p.total, q.total)
    if variant is Variant.CUP:
        sub = union(product(p.total, q.sub), product(p.sub, q.total))
    else:
        sub = product(p.sub, q.sub)
    return SimplicialPair(total, sub)
