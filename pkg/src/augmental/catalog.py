"""Named example complexes.

The facet lists for the surfaces are standard vertex-minimal triangulations.
Nothing here is trusted: the test suite recomputes the certified properties
of every entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import IRRELEVANT, VOID, Complex, ComplexError, from_facets, full_complex, simplex_boundary

MOEBIUS_FACETS = [(1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5)]

RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]

# annulus: outer triangle 1,2,3 and inner triangle 4,5,6
CYLINDER_FACETS = [
    (1, 2, 4), (2, 4, 5), (2, 3, 5), (3, 5, 6), (1, 3, 6), (1, 4, 6),
]

# the 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
TORUS_FACETS = [tuple(sorted({i % 7, (i + a) % 7, (i + 3) % 7})) for i in range(7) for a in (1, 2)]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    complex: Complex
    certified: dict = field(default_factory=dict)  # property -> expected value, rechecked by tests


def ball(n: int) -> Complex:
    """Full simplex on n + 1 vertices, 0 <= n <= 4."""
    if not 0 <= n <= 4:
        raise ComplexError("ball(n) is available for 0 <= n <= 4")
    return full_complex(range(n + 1))


def sphere(n: int) -> Complex:
    """Boundary of the (n+1)-simplex, -1 <= n <= 4; sphere(-1) is {()}."""
    if not -1 <= n <= 4:
        raise ComplexError("sphere(n) is available for -1 <= n <= 4")
    return simplex_boundary(range(n + 2))


def _entries() -> dict:
    e = {
        "void": CatalogEntry("void", VOID, {"homology_Z": {}}),
        "irrelevant": CatalogEntry("irrelevant", IRRELEVANT, {"homology_Z": {-1: (1, ())}}),
        "point": CatalogEntry("point", from_facets([(0,)]), {"homology_Z": {}}),
        "two_points": CatalogEntry("two_points", from_facets([(0,), (1,)]), {"homology_Z": {0: (1, ())}}),
        "moebius": CatalogEntry("moebius", from_facets(MOEBIUS_FACETS),
                                {"homology_Z": {1: (1, ())}, "pseudo": True, "boundary_components": 1}),
        "rp2": CatalogEntry("rp2", from_facets(RP2_FACETS), {"homology_Z": {1: (0, (2,))}, "pseudo": True}),
        "cylinder": CatalogEntry("cylinder", from_facets(CYLINDER_FACETS),
                                 {"homology_Z": {1: (1, ())}, "pseudo": True, "boundary_components": 2}),
        "torus": CatalogEntry("torus", from_facets(TORUS_FACETS),
                              {"homology_Z": {1: (2, ()), 2: (1, ())}, "pseudo": True}),
    }
    for n in range(0, 5):
        e[f"ball{n}"] = CatalogEntry(f"ball{n}", ball(n), {"homology_Z": {}})
    for n in range(-1, 5):
        e[f"sphere{n}"] = CatalogEntry(f"sphere{n}", sphere(n), {"homology_Z": {n: (1, ())}})
    return e


_CATALOG = _entries()


def names() -> list:
    return sorted(_CATALOG)


def entry(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise ComplexError(f"unknown catalog entry {name!r}; known: {', '.join(names())}") from None


def get(name: str) -> Complex:
    return entry(name).complex


def entries() -> list:
    return [_CATALOG[n] for n in names()]
