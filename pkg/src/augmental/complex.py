"""Augmented simplicial complexes.

A complex is one of three things: the void complex (no simplices at all,
dimension minus infinity), the irrelevant complex containing only the empty
simplex (dimension -1), or a general complex containing the empty simplex and
at least one vertex.  Simplices are strictly ascending tuples of non-negative
integer vertex ids; the empty tuple is the empty simplex.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import deque
from typing import Iterable, Mapping

Simplex = tuple  # strictly ascending tuple of ints; () is the empty simplex

EMPTY_SIMPLEX: Simplex = ()


class ComplexError(ValueError):
    """Invalid input to a complex operation."""


class PurityError(ComplexError):
    pass


class _NegativeInfinity:
    """Dimension of the void complex.

    Compares below every integer.  Arithmetic is refused on purpose.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def _refuse(self, *args):
        raise TypeError("arithmetic with the dimension of the void complex is undefined")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = __neg__ = _refuse


NEG_INF = _NegativeInfinity()


class State(enum.Enum):
    VOID = "void"
    IRRELEVANT = "irrelevant"
    GENERAL = "general"


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of vertex ids into a simplex."""
    s = tuple(sorted(set(vertices)))
    if s and (not all(isinstance(v, int) for v in s) or s[0] < 0):
        raise ComplexError(f"vertex ids must be non-negative integers, got {s}")
    return s


def _subsets(s: Simplex):
    for k in range(len(s) + 1):
        yield from itertools.combinations(s, k)


def _maximal(faces: Iterable[Simplex]) -> frozenset:
    by_size = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    out = []
    for f in by_size:
        fs = frozenset(f)
        if not any(fs < k for k in kept):
            kept.append(fs)
            out.append(f)
    return frozenset(out)


def _closed_maximal(faces: frozenset) -> frozenset:
    covered = {f[:i] + f[i + 1:] for f in faces for i in range(len(f))}
    return faces - covered


class Complex:
    """An immutable augmented simplicial complex.

    Build one with :func:`from_facets` (or the helpers below) rather than
    calling the constructor directly.
    """

    __slots__ = ("state", "facets", "faces", "labels", "_hash", "_vertices", "__weakref__")

    def __init__(self, faces: frozenset, facets: frozenset | None = None, labels: Mapping | None = None):
        faces = frozenset(faces)
        if not faces:
            state = State.VOID
        elif faces == {EMPTY_SIMPLEX}:
            state = State.IRRELEVANT
        else:
            state = State.GENERAL
        if faces and EMPTY_SIMPLEX not in faces:
            raise ComplexError("a nonempty complex must contain the empty simplex")
        object.__setattr__(self, "state", state)
        object.__setattr__(self, "faces", faces)
        if facets is None:
            facets = _closed_maximal(faces) if state is State.GENERAL else frozenset(faces)
        object.__setattr__(self, "facets", frozenset(facets))
        object.__setattr__(self, "labels", dict(labels) if labels else {})
        object.__setattr__(self, "_hash", hash(faces))
        object.__setattr__(self, "_vertices", None)

    def __setattr__(self, name, value):
        raise AttributeError("Complex is immutable")

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self._hash == other._hash and self.faces == other.faces

    def __hash__(self):
        return self._hash

    def __contains__(self, s) -> bool:
        return tuple(s) in self.faces

    def __iter__(self):
        return iter(sorted(self.faces, key=lambda f: (len(f), f)))

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        if self.state is not State.GENERAL:
            return f"Complex({self.state.value})"
        return f"Complex(facets={sorted_facets(self)})"

    @property
    def vertices(self) -> tuple:
        if self._vertices is None:
            object.__setattr__(self, "_vertices", tuple(sorted({v for f in self.facets for v in f})))
        return self._vertices

    @property
    def is_void(self) -> bool:
        return self.state is State.VOID

    @property
    def is_irrelevant(self) -> bool:
        return self.state is State.IRRELEVANT

    def faces_of_dim(self, q: int) -> list:
        return sorted(f for f in self.faces if len(f) == q + 1)


VOID = Complex(frozenset())
IRRELEVANT = Complex(frozenset({EMPTY_SIMPLEX}))


def from_facets(facets: Iterable[Iterable[int]], state: State | str | None = None,
                labels: Mapping | None = None) -> Complex:
    """Subset-closure of ``facets``.

    An empty facet list is ambiguous (void or irrelevant?) and needs ``state``.
    """
    if isinstance(state, str):
        state = State(state)
    facets = [simplex(f) for f in facets]
    if not facets:
        if state is State.VOID:
            return VOID
        if state is State.IRRELEVANT:
            return IRRELEVANT
        raise ComplexError("empty facet list is ambiguous: pass state=VOID or state=IRRELEVANT")
    if state is State.VOID:
        raise ComplexError("state 'void' given with a nonempty facet list")
    top = _maximal(facets)
    faces = frozenset(s for f in top for s in _subsets(f))
    cx = Complex(faces, top, labels)
    if state is not None and cx.state is not state:
        raise ComplexError(f"facets describe a {cx.state.value} complex, not {state.value}")
    return cx


def from_faces(faces: Iterable[Iterable[int]], labels: Mapping | None = None) -> Complex:
    """Complex from a set of simplices that is already subset-closed."""
    faces = frozenset(simplex(f) for f in faces)
    if faces and EMPTY_SIMPLEX not in faces:
        raise ComplexError("a nonempty complex must contain the empty simplex")
    for f in faces:
        for i in range(len(f)):
            if f[:i] + f[i + 1:] not in faces:
                raise ComplexError(f"face set is not subset-closed at {f}")
    return Complex(faces, labels=labels)


def sorted_facets(cx: Complex) -> list:
    return [list(f) for f in sorted(cx.facets, key=lambda f: (len(f), f))]


def dim(cx: Complex):
    if cx.is_void:
        return NEG_INF
    return max(len(f) for f in cx.facets) - 1


def f_vector(cx: Complex) -> list:
    """Face counts indexed from degree -1."""
    if cx.is_void:
        return []
    counts = [0] * (dim(cx) + 2)
    for f in cx.faces:
        counts[len(f)] += 1
    return counts


def reduced_euler(cx: Complex) -> int:
    if cx.is_void:
        raise ComplexError("reduced Euler characteristic of the void complex is undefined")
    return sum((-1) ** (i - 1) * c for i, c in enumerate(f_vector(cx)))


def full_complex(vertices: Iterable[int]) -> Complex:
    """All subsets of ``vertices`` (the closed simplex)."""
    s = simplex(vertices)
    return from_facets([s])


def simplex_boundary(s: Iterable[int]) -> Complex:
    """All proper subsets of ``s``; the boundary of the empty simplex is void."""
    s = simplex(s)
    if not s:
        return VOID
    return Complex(frozenset(_subsets(s)) - {s})


def union(a: Complex, b: Complex) -> Complex:
    return Complex(a.faces | b.faces, labels={**a.labels, **b.labels})


def intersection(a: Complex, b: Complex) -> Complex:
    return Complex(a.faces & b.faces, labels={**a.labels, **b.labels})


def is_subcomplex(sub: Complex, total: Complex) -> bool:
    return sub.faces <= total.faces


def is_pure(cx: Complex) -> bool:
    if cx.state is not State.GENERAL:
        return True
    return len({len(f) for f in cx.facets}) == 1


def is_strongly_connected(cx: Complex) -> bool:
    """Connectivity of the facet graph, facets adjacent when sharing a ridge.

    Two isolated vertices are strongly connected: they share the empty
    simplex, which is their common (-1)-face.
    """
    if not is_pure(cx):
        raise PurityError("strong connectivity is defined for pure complexes only")
    return len(strong_components(cx)) <= 1


def strong_components(cx: Complex) -> list:
    """Facet classes of a pure complex under ridge adjacency, as closed complexes."""
    if cx.is_void:
        return []
    if cx.is_irrelevant:
        return [IRRELEVANT]
    if not is_pure(cx):
        raise PurityError("strong components are defined for pure complexes only")
    facets = sorted(cx.facets)
    by_ridge: dict = {}
    for idx, f in enumerate(facets):
        for i in range(len(f)):
            by_ridge.setdefault(f[:i] + f[i + 1:], []).append(idx)
    seen = [False] * len(facets)
    comps = []
    for start in range(len(facets)):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = []
        while queue:
            idx = queue.popleft()
            members.append(facets[idx])
            f = facets[idx]
            for i in range(len(f)):
                for nb in by_ridge[f[:i] + f[i + 1:]]:
                    if not seen[nb]:
                        seen[nb] = True
                        queue.append(nb)
        comps.append(from_facets(members))
    return comps


def skeleton(cx: Complex, k: int) -> Complex:
    if k < -1:
        raise ComplexError("skeleton degree must be >= -1")
    return Complex(frozenset(f for f in cx.faces if len(f) <= k + 1), labels=cx.labels)


def induced(cx: Complex, vertices: Iterable[int]) -> Complex:
    """Induced subcomplex on ``vertices`` (void stays void)."""
    vs = set(vertices)
    return Complex(frozenset(f for f in cx.faces if vs.issuperset(f)))


def relabel(cx: Complex, mapping: Mapping[int, int]) -> Complex:
    faces = frozenset(simplex(mapping[v] for v in f) for f in cx.faces)
    return Complex(faces)


def is_isomorphic(a: Complex, b: Complex) -> bool:
    """Brute-force isomorphism test up to vertex relabeling (small complexes only)."""
    if a.state is not b.state or f_vector(a) != f_vector(b):
        return False
    va, vb = a.vertices, b.vertices
    if len(va) != len(vb):
        return False

    def degree_profile(cx, v):
        return sorted(len(f) for f in cx.faces if v in f)

    pa = {v: degree_profile(a, v) for v in va}
    pb = {v: degree_profile(b, v) for v in vb}
    if sorted(map(tuple, pa.values())) != sorted(map(tuple, pb.values())):
        return False
    target = b.facets
    candidates = {v: [w for w in vb if pb[w] == pa[v]] for v in va}
    order = sorted(va, key=lambda v: len(candidates[v]))

    def extend(i, mapping, used):
        if i == len(order):
            return frozenset(simplex(mapping[v] for v in f) for f in a.facets) == target
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            mapping[v] = w
            ok = all(simplex(mapping[x] for x in f) in b.faces
                     for f in a.faces if v in f and all(x in mapping for x in f))
            if ok and extend(i + 1, mapping, used | {w}):
                return True
            del mapping[v]
        return False

    return extend(0, {}, frozenset())


# JSON interchange

def to_dict(cx: Complex) -> dict:
    out = {"state": cx.state.value, "facets": sorted_facets(cx) if cx.state is State.GENERAL else []}
    if cx.labels:
        out["labels"] = {str(k): v for k, v in sorted(cx.labels.items())}
    return out


def from_dict(data: Mapping) -> Complex:
    try:
        state = State(data["state"])
    except (KeyError, ValueError) as exc:
        raise ComplexError(f"bad or missing 'state' field: {exc}") from None
    facets = data.get("facets", [])
    labels = {int(k): str(v) for k, v in (data.get("labels") or {}).items()}
    if state is State.GENERAL:
        return from_facets(facets, state, labels)
    if any(len(f) for f in facets):
        raise ComplexError(f"state '{state.value}' cannot carry nonempty facets")
    return VOID if state is State.VOID else IRRELEVANT


def dumps(cx: Complex) -> str:
    return json.dumps(to_dict(cx), sort_keys=True)


def loads(text: str) -> Complex:
    return from_dict(json.loads(text))


class SimplicialPair:
    """A complex together with a subcomplex (possibly void)."""

    __slots__ = ("total", "sub")

    def __init__(self, total: Complex, sub: Complex = VOID):
        if not is_subcomplex(sub, total):
            raise ComplexError("pair is invalid: sub is not a subcomplex of total")
        object.__setattr__(self, "total", total)
        object.__setattr__(self, "sub", sub)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialPair is immutable")

    def __eq__(self, other):
        if not isinstance(other, SimplicialPair):
            return NotImplemented
        return self.total == other.total and self.sub == other.sub

    def __hash__(self):
        return hash((self.total, self.sub))

    def __iter__(self):
        return iter((self.total, self.sub))

    def __repr__(self):
        return f"SimplicialPair({self.total!r}, {self.sub!r})"


def as_pair(x) -> SimplicialPair:
    if isinstance(x, SimplicialPair):
        return x
    if isinstance(x, Complex):
        return SimplicialPair(x, VOID)
    total, sub = x
    return SimplicialPair(total, sub)
