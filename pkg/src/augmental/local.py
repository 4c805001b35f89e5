"""Links, contrastars and local homology."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import Complex, ComplexError, SimplicialPair, simplex
from .groups import GradedGroups
from .homology import as_coeff, homology, require_nonvoid


class LocalHomologyMismatch(AssertionError):
    """Link and contrastar computations disagree; an engine bug, never valid output."""


def link(cx: Complex, s) -> Complex:
    """Faces disjoint from ``s`` whose union with ``s`` is a face.

    The link of the empty simplex is the complex itself.
    """
    s = simplex(s)
    if s not in cx.faces:
        raise ComplexError(f"{s} is not a simplex of the complex")
    ss = set(s)
    faces = frozenset(t for t in cx.faces if ss.isdisjoint(t) and tuple(sorted(s + t)) in cx.faces)
    return Complex(faces)


def cost(cx: Complex, s) -> Complex:
    """Contrastar: faces not containing ``s``.  Equals ``cx`` iff ``s`` is not a face."""
    ss = set(simplex(s))
    return Complex(frozenset(t for t in cx.faces if not ss.issubset(t)))


def star(cx: Complex, s) -> Complex:
    """Closed star: faces whose union with ``s`` is still a face."""
    s = simplex(s)
    if s not in cx.faces:
        raise ComplexError(f"{s} is not a simplex of the complex")
    return Complex(frozenset(f for f in cx.faces if tuple(sorted(set(f).union(s))) in cx.faces))


@dataclass(frozen=True)
class LocalHomologyReport:
    simplex: tuple
    via_link: GradedGroups  # link homology shifted up by #simplex
    via_cost: GradedGroups

    @property
    def consistent(self) -> bool:
        return self.via_link == self.via_cost


def local_homology(cx: Complex, s, coeff=None) -> LocalHomologyReport:
    """Homology of (cx, cost s), computed twice: directly and from the link.

    Raises LocalHomologyMismatch if the shifted link homology disagrees.
    """
    s = simplex(s)
    coeff = as_coeff(coeff)
    lk = link(cx, s)
    via_link = homology(lk, coeff).shift(len(s))
    via_cost = homology(SimplicialPair(cx, cost(cx, s)), coeff)
    report = LocalHomologyReport(s, via_link, via_cost)
    if not report.consistent:
        raise LocalHomologyMismatch(f"local homology at {s}: link gives {via_link}, contrastar gives {via_cost}")
    return report


def beta(cx: Complex, coeff=None):
    """Least degree in which some local homology group is nonzero.

    Ranges over every face including the empty one.  For a finite complex
    this equals the depth of the face ring minus one; that identity is not
    computed here.
    """
    require_nonvoid(cx, "beta")
    coeff = as_coeff(coeff)
    best = None
    for s in cx.faces:
        h = homology(link(cx, s), coeff).shift(len(s))
        degs = h.degrees()
        if degs and (best is None or degs[0] < best):
            best = degs[0]
    return best
