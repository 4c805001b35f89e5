"""Non-simplices and square-free monomial (Stanley-Reisner) ideals.

A square-free monomial is represented by its support, a sorted tuple of
vertex ids; the empty tuple is the unit monomial 1.  Ideals are kept as
minimal generator sets, so equality of generator sets is ideal equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .binary_ops import join, pair_id, product
from .complex import EMPTY_SIMPLEX, Complex, ComplexError, simplex


def minimalize(monomials) -> frozenset:
    """Drop every monomial divisible by another one."""
    ms = sorted({tuple(sorted(m)) for m in monomials}, key=len)
    kept: list = []
    for m in ms:
        ms_set = set(m)
        if not any(ms_set.issuperset(k) for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    universe: tuple
    generators: frozenset

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(sorted(set(self.universe))))
        gens = minimalize(self.generators)
        u = set(self.universe)
        for g in gens:
            if not u.issuperset(g):
                raise ComplexError(f"generator {g} is not supported on the universe")
        object.__setattr__(self, "generators", gens)

    @property
    def is_unit(self) -> bool:
        return EMPTY_SIMPLEX in self.generators

    def sorted_generators(self) -> list:
        return sorted(self.generators, key=lambda g: (len(g), g))

    def contains(self, monomial) -> bool:
        m = set(monomial)
        return any(m.issuperset(g) for g in self.generators)

    def format(self, var=lambda v: f"v{v}") -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join("*".join(var(v) for v in g) if g else "1" for g in self.sorted_generators()) + ")"

    def __str__(self):
        return self.format()

    def to_json(self) -> dict:
        return {"universe": list(self.universe), "generators": [list(g) for g in self.sorted_generators()]}

    def cas_block(self, base: str = "QQ", var=lambda v: f"v{v}") -> str:
        """Ring declaration plus ideal, in a syntax most CAS accept with light edits."""
        gens = self.format(var)[1:-1]
        ring_vars = ", ".join(var(v) for v in self.universe)
        return f"R = {base}[{ring_vars}];\nI = ideal({gens});\n"


def _check_universe(cx: Complex, universe) -> tuple:
    if universe is None:
        return cx.vertices
    w = tuple(sorted(set(universe)))
    if not set(w).issuperset(cx.vertices):
        raise ComplexError("the universe must contain every vertex of the complex")
    return w


def non_simplices(cx: Complex, universe=None) -> frozenset:
    """Sets not in ``cx`` all of whose proper subsets are in ``cx``."""
    w = _check_universe(cx, universe)
    if cx.is_void:
        return frozenset({EMPTY_SIMPLEX})
    faces = cx.faces
    out = set()
    for f in faces:
        fs = set(f)
        for v in w:
            if v in fs:
                continue
            s = tuple(sorted(f + (v,)))
            if s in faces or s in out:
                continue
            if all(s[:i] + s[i + 1:] in faces for i in range(len(s))):
                out.add(s)
    return frozenset(out)


def is_non_simplex(s, cx: Complex) -> bool:
    s = simplex(s)
    return s not in cx.faces and all(s[:i] + s[i + 1:] in cx.faces for i in range(len(s)))


def ideal(cx: Complex, universe=None) -> MonomialIdeal:
    w = _check_universe(cx, universe)
    return MonomialIdeal(w, non_simplices(cx, w))


def _same_universe(a: MonomialIdeal, b: MonomialIdeal):
    if a.universe != b.universe:
        raise ComplexError("ideals live over different universes")


def ideal_of_union(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Ideal of the union of two complexes: intersection of ideals, generated by lcms."""
    _same_universe(a, b)
    return MonomialIdeal(a.universe, {tuple(sorted(set(g) | set(h))) for g in a.generators for h in b.generators})


def ideal_of_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Ideal of the intersection of two complexes: the ideal sum."""
    _same_universe(a, b)
    return MonomialIdeal(a.universe, a.generators | b.generators)


def _weak_sequences(face: tuple, k: int):
    """Weakly increasing length-k sequences whose set of values is exactly ``face``."""
    if not face:
        return
    for extra in itertools.combinations_with_replacement(face, k - len(face)):
        seq = sorted(face + extra)
        yield tuple(seq)


def product_basis(a: Complex, b: Complex) -> MonomialIdeal:
    """Generators of the face ideal of ``product(a, b)`` from the factors alone.

    The union of the incomparable pairs with three families of chains whose
    projections are non-simplices (strictly increasing on that side) and
    simplices or non-simplices on the other.
    """
    universe = [pair_id(v, w) for v in a.vertices for w in b.vertices]
    if a.is_void or b.is_void:
        return MonomialIdeal(universe, {EMPTY_SIMPLEX})
    if a.is_irrelevant or b.is_irrelevant:
        return ideal(product(a, b), universe)
    va, vb = a.vertices, b.vertices
    gens = set()
    # incomparable pairs: lambda < nu and mu > xi
    for lam, nu in itertools.combinations(va, 2):
        for xi, mu in itertools.combinations(vb, 2):
            gens.add(tuple(sorted((pair_id(lam, mu), pair_id(nu, xi)))))
    na, nb = non_simplices(a), non_simplices(b)
    # strict on the left, weak on the right, right projection a simplex
    for d in na:
        k = len(d)
        for g in b.faces:
            if 0 < len(g) <= k:
                for mus in _weak_sequences(g, k):
                    gens.add(tuple(sorted(pair_id(x, y) for x, y in zip(d, mus))))
    # weak on the left, strict on the right, left projection a simplex
    for d in nb:
        k = len(d)
        for g in a.faces:
            if 0 < len(g) <= k:
                for lams in _weak_sequences(g, k):
                    gens.add(tuple(sorted(pair_id(x, y) for x, y in zip(lams, d))))
    # strict on both sides, both projections non-simplices
    for d in na:
        for e in nb:
            if len(d) == len(e):
                gens.add(tuple(sorted(pair_id(x, y) for x, y in zip(d, e))))
    return MonomialIdeal(universe, gens)


def join_ideal_check(a: Complex, b: Complex, universe_a=None, universe_b=None) -> bool:
    """Compare the face ideal of the join with the ideal generated by the
    factors' non-simplices that are not faces of the join."""
    wa = _check_universe(a, universe_a)
    wb = _check_universe(b, universe_b)
    # same rule as join_offset, applied to the universes
    off = 0 if set(wa).isdisjoint(wb) else max(wa) + 1
    wb_shift = tuple(v + off for v in wb)
    b_shift = Complex(frozenset(tuple(v + off for v in t) for t in b.faces))
    j = join(a, b, off)
    w = wa + wb_shift
    lhs = ideal(j, w)
    candidates = non_simplices(a, w) | non_simplices(b_shift, w)
    rhs = MonomialIdeal(w, {d for d in candidates if d not in j.faces})
    return lhs == rhs
