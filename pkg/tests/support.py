"""Test-only helpers: random complexes and a classical homology oracle.

The oracle shares no code with the engine.  It builds the unaugmented
simplicial chain complex as dense sympy matrices and reads homology off
sympy's Smith normal form (over Z) or a plain dense elimination (over F_p).
"""

import itertools
import random

from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from augmental.complex import IRRELEVANT, VOID, Complex, from_facets


# random complexes

def random_complex(rng: random.Random, max_vertices: int = 6, max_facets: int = 6) -> Complex:
    """Closure of a few random vertex sets; occasionally void or {()}."""
    roll = rng.random()
    if roll < 0.03:
        return VOID
    if roll < 0.06:
        return IRRELEVANT
    n = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        k = rng.randint(1, n)
        facets.append(tuple(sorted(rng.sample(range(n), k))))
    return from_facets(facets)


@st.composite
def complexes(draw, max_vertices=5, max_facets=5, allow_degenerate=True):
    if allow_degenerate:
        kind = draw(st.sampled_from(["general"] * 8 + ["void", "irrelevant"]))
        if kind == "void":
            return VOID
        if kind == "irrelevant":
            return IRRELEVANT
    n = draw(st.integers(1, max_vertices))
    facets = draw(st.lists(
        st.sets(st.integers(0, n - 1), min_size=1, max_size=n).map(lambda s: tuple(sorted(s))),
        min_size=1, max_size=max_facets))
    return from_facets(facets)


@st.composite
def pairs(draw, max_vertices=5, max_facets=5):
    """(total, sub) with sub the closure of some of total's facets, or void / {()}."""
    total = draw(complexes(max_vertices, max_facets, allow_degenerate=False))
    facets = sorted(total.facets)
    choice = draw(st.sampled_from(["void", "irrelevant", "some"]))
    if choice == "void":
        return total, VOID
    if choice == "irrelevant":
        return total, IRRELEVANT
    picked = draw(st.lists(st.sampled_from(facets), min_size=1, max_size=len(facets)))
    faces = set()
    for f in picked:
        for r in range(len(f) + 1):
            faces.update(itertools.combinations(f, r))
    return total, Complex(frozenset(faces))


def all_complexes_on(k: int) -> list:
    """Every complex whose vertex set is exactly range(k)."""
    verts = list(range(k))
    higher = [s for r in range(2, k + 1) for s in itertools.combinations(verts, r)]
    out = []
    for mask in range(1 << len(higher)):
        chosen = {higher[i] for i in range(len(higher)) if mask >> i & 1}
        closed = all(len(s) == 2 or s[:i] + s[i + 1:] in chosen for s in chosen for i in range(len(s)))
        if closed:
            out.append(Complex(frozenset({()} | {(v,) for v in verts} | chosen)))
    return out


# classical homology oracle

def _classical_chains(faces, sub_faces):
    """Nonempty faces of total not in sub, by dimension."""
    by_dim = {}
    for f in faces:
        if f and f not in sub_faces:
            by_dim.setdefault(len(f) - 1, []).append(f)
    return {q: sorted(fs) for q, fs in by_dim.items()}


def _matrix(chains, q):
    rows, cols = chains.get(q - 1, []), chains.get(q, [])
    index = {f: i for i, f in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        for i in range(len(f)):
            face = f[:i] + f[i + 1:]
            if face in index:
                m[index[face]][j] = (-1) ** i
    return m


def _smith_entries(m):
    if not m or not m[0]:
        return []
    d = smith_normal_form(Matrix(m), domain=ZZ)
    return [abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0]


def _rank_mod(m, p):
    a = [[x % p for x in row] for row in m]
    rank, col_count = 0, len(a[0]) if a else 0
    for c in range(col_count):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def classical_homology(total: Complex, sub: Complex = VOID, p: int | None = None) -> dict:
    """Unreduced classical H_q(total, sub) for q >= 0 as {q: (rank, torsion)}.

    p None means integer coefficients; otherwise F_p dimensions with empty torsion.
    """
    chains = _classical_chains(total.faces, sub.faces)
    out = {}
    for q in sorted(chains):
        n = len(chains[q])
        d_out, d_in = _matrix(chains, q), _matrix(chains, q + 1)
        if p is None:
            s_out, s_in = _smith_entries(d_out), _smith_entries(d_in)
            rank = n - len(s_out) - len(s_in)
            tors = tuple(sorted(x for x in s_in if x > 1))
        else:
            r_out = _rank_mod(d_out, p) if d_out and d_out[0] else 0
            r_in = _rank_mod(d_in, p) if d_in and d_in[0] else 0
            rank, tors = n - r_out - r_in, ()
        if rank or tors:
            out[q] = (rank, tors)
    return out


def reduce_classical(h: dict) -> dict:
    """Classical reduced homology from unreduced, for a nonempty space."""
    out = dict(h)
    rank, tors = out.get(0, (0, ()))
    if rank <= 1 and not tors:
        out.pop(0, None)
    else:
        out[0] = (rank - 1, tors)
    return out


def as_table(graded) -> dict:
    """Engine GradedGroups as {q: (rank, torsion)}."""
    return {q: (graded[q].rank, tuple(sorted(graded[q].torsion))) for q in graded.degrees()}
