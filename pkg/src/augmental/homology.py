"""Augmental chain complexes and their homology.

The chain complex of a nonempty complex is the classical simplicial one
plus a single generator in degree -1 (the empty simplex), with every vertex
mapping onto it.  The void complex has the zero chain complex.  Relative
chains keep the degree -1 generator exactly when the subcomplex is void.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field

from .complex import VOID, Complex, ComplexError, SimplicialPair, as_pair, dim
from .groups import FgAbGroup, GradedGroups
from .snf import rank_mod_p, smith_diagonal


@dataclass(frozen=True)
class CoeffRing:
    kind: str  # "Z", "Q" or "F"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F"):
            raise ValueError(f"unknown coefficient ring {self.kind!r}")
        if self.kind == "F":
            from sympy import isprime

            if self.p is None or not isprime(self.p):
                raise ValueError(f"F_p needs a prime p, got {self.p}")
        elif self.p is not None:
            raise ValueError("only F takes a characteristic")

    @classmethod
    def parse(cls, text: str) -> "CoeffRing":
        t = text.strip().upper()
        if t in ("Z", "ZZ"):
            return cls("Z")
        if t in ("Q", "QQ"):
            return cls("Q")
        m = re.fullmatch(r"(?:F|Z/|Z_)(\d+)", t)
        if m is None:
            raise ValueError(f"cannot parse coefficient ring {text!r}; use Z, Q or F<p>")
        try:
            return cls("F", int(m.group(1)))
        except ValueError:
            raise ValueError(f"coefficient {text!r}: only Z, Q and prime fields are supported") from None

    @property
    def name(self) -> str:
        return f"F{self.p}" if self.kind == "F" else self.kind

    @property
    def is_integral(self) -> bool:
        return self.kind == "Z"

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def __str__(self):
        return self.name


ZZ = CoeffRing("Z")
QQ = CoeffRing("Q")
F2 = CoeffRing("F", 2)
F3 = CoeffRing("F", 3)


def as_coeff(c) -> CoeffRing:
    if c is None:
        return ZZ
    if isinstance(c, CoeffRing):
        return c
    return CoeffRing.parse(str(c))


@dataclass
class ChainComplex:
    """Bases per degree and sparse boundary matrices.

    ``boundary[q]`` maps degree q to q - 1 and is stored as
    ``{row (index in basis[q-1]): {col (index in basis[q]): coefficient}}``.
    """

    basis: dict = field(default_factory=dict)
    boundary: dict = field(default_factory=dict)

    def size(self, q: int) -> int:
        return len(self.basis.get(q, ()))

    @property
    def degrees(self) -> list:
        return sorted(q for q, b in self.basis.items() if b)

    def check_square_zero(self) -> bool:
        for q in self.degrees:
            outer, inner = self.boundary.get(q - 1, {}), self.boundary.get(q, {})
            # (d_{q-1} d_q)[r][c] = sum_k outer[r][k] inner[k][c]
            for r, orow in outer.items():
                acc: dict = {}
                for k, a in orow.items():
                    for c, b in inner.get(k, {}).items():
                        acc[c] = acc.get(c, 0) + a * b
                if any(acc.values()):
                    return False
        return True


def _boundary_matrix(faces_q, index_lower) -> dict:
    mat: dict = {}
    for col, f in enumerate(faces_q):
        for i in range(len(f)):
            row = index_lower.get(f[:i] + f[i + 1:])
            if row is not None:
                mat.setdefault(row, {})[col] = -1 if i % 2 else 1
    return mat


def relative_chain_complex(pair) -> ChainComplex:
    pair = as_pair(pair)
    total, sub = pair.total, pair.sub
    by_deg: dict = {}
    for f in total.faces:
        if f not in sub.faces:
            by_deg.setdefault(len(f) - 1, []).append(f)
    cc = ChainComplex()
    for q in sorted(by_deg):
        cc.basis[q] = sorted(by_deg[q])
    index = {q: {f: i for i, f in enumerate(b)} for q, b in cc.basis.items()}
    for q in cc.basis:
        if q - 1 in index:
            cc.boundary[q] = _boundary_matrix(cc.basis[q], index[q - 1])
    return cc


def chain_complex(cx: Complex) -> ChainComplex:
    return relative_chain_complex(SimplicialPair(cx, VOID))


def _rank(mat: dict, coeff: CoeffRing) -> int:
    if not mat:
        return 0
    if coeff.kind == "F":
        return rank_mod_p(mat, coeff.p)
    return len(smith_diagonal(mat))


def chain_homology(cc: ChainComplex, coeff=None, top: int | None = None) -> GradedGroups:
    """Homology of an explicit chain complex."""
    coeff = as_coeff(coeff)
    out = {}
    snf_cache: dict = {}

    def diag(q):
        if q not in snf_cache:
            snf_cache[q] = smith_diagonal(cc.boundary.get(q, {}))
        return snf_cache[q]

    for q in cc.degrees:
        n = cc.size(q)
        if coeff.is_integral:
            r_out = len(diag(q))
            d_in = diag(q + 1)
            out[q] = FgAbGroup(n - r_out - len(d_in), tuple(d for d in d_in if d > 1))
        else:
            r_out = _rank(cc.boundary.get(q, {}), coeff)
            r_in = _rank(cc.boundary.get(q + 1, {}), coeff)
            out[q] = FgAbGroup(n - r_out - r_in)
    if top is None:
        top = max(cc.degrees, default=-1)
    return GradedGroups(out, top)


@functools.lru_cache(maxsize=65536)
def _homology_cached(pair: SimplicialPair, coeff: CoeffRing) -> GradedGroups:
    d = dim(pair.total)
    top = d if isinstance(d, int) else -1
    return chain_homology(relative_chain_complex(pair), coeff, top)


def homology(x, coeff=None) -> GradedGroups:
    """Augmental homology of a complex (pair with void sub) or a pair.

    Over Z the result carries ranks and torsion; over a field, dimensions.
    """
    return _homology_cached(as_pair(x), as_coeff(coeff))


def betti(x, q: int, coeff=None) -> FgAbGroup:
    return homology(x, coeff)[q]


def is_acyclic(x, coeff=None) -> bool:
    return homology(x, coeff).is_zero


def require_nonvoid(cx: Complex, what: str):
    if cx.is_void:
        raise ComplexError(f"{what} is undefined for the void complex")
