"""Predict-then-verify checks relating homology of joins, products and factors.

Every prediction is assembled from the factors' homology groups alone and
compared with a direct computation as isomorphism classes (rank plus
torsion multiset).  No maps are compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .binary_ops import pair_join, pair_product
from .complex import IRRELEVANT, SimplicialPair, as_pair, dim
from .groups import ZERO, FgAbGroup, GradedGroups, direct_sum, tensor_fg, tor_fg
from .homology import ChainComplex, as_coeff, chain_homology, homology, relative_chain_complex


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    applicable: bool = True
    witnesses: tuple = ()  # (degree, predicted, actual) triples that disagree
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _top(pair: SimplicialPair) -> int:
    d = dim(pair.total)
    return d if isinstance(d, int) else -1


def _compare(name, predicted: GradedGroups, actual: GradedGroups, degrees, **notes) -> CheckResult:
    bad = tuple((q, predicted[q], actual[q]) for q in degrees if predicted[q] != actual[q])
    return CheckResult(name, not bad, True, bad, notes)


# joins

def predict_join_homology(p, q, coeff=None) -> GradedGroups:
    """Homology of the pair join from the factors, degree by degree:
    tensor terms over i + j = q and Tor terms over i + j = q - 1, shifted up one."""
    coeff = as_coeff(coeff)
    p, q = as_pair(p), as_pair(q)
    hp, hq = homology(p, coeff), homology(q, coeff)
    out = {}
    for i in hp.degrees():
        for j in hq.degrees():
            # i + j = q contributes to degree q + 1, Tor(i, j) to degree q + 2
            out[i + j + 1] = out.get(i + j + 1, ZERO) + tensor_fg(hp[i], hq[j])
            if coeff.is_integral:
                out[i + j + 2] = out.get(i + j + 2, ZERO) + tor_fg(hp[i], hq[j])
    return GradedGroups(out, hp.top + hq.top + 1)


def check_join_kunneth(p, q, coeff=None) -> CheckResult:
    coeff = as_coeff(coeff)
    pj = pair_join(p, q)
    predicted = predict_join_homology(p, q, coeff)
    actual = homology(pj, coeff)
    hi = max(predicted.top, actual.top)
    return _compare("kunneth-join", predicted, actual, range(-1, hi + 1), coeff=coeff.name)


def tensor_chain_complex(a: ChainComplex, b: ChainComplex, shift: int = 0) -> ChainComplex:
    """Tensor product of two chain complexes, degrees moved up by ``shift``.

    Sign rule: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
    """
    basis: dict = {}
    for i in a.degrees:
        for j in b.degrees:
            for x in range(a.size(i)):
                for y in range(b.size(j)):
                    basis.setdefault(i + j + shift, []).append((i, x, j, y))
    index = {q: {g: k for k, g in enumerate(gs)} for q, gs in basis.items()}
    bounds: dict = {}
    for q, gens in basis.items():
        lower = index.get(q - 1)
        if lower is None:
            continue
        mat: dict = {}
        for col, (i, x, j, y) in enumerate(gens):
            # column x of a.boundary[i] lists rows r with coefficient c
            for r, row in a.boundary.get(i, {}).items():
                c = row.get(x)
                if c:
                    k = lower[(i - 1, r, j, y)]
                    mat.setdefault(k, {})[col] = mat.get(k, {}).get(col, 0) + c
            sign = -1 if i % 2 else 1
            for r, row in b.boundary.get(j, {}).items():
                c = row.get(y)
                if c:
                    k = lower[(i, x, j - 1, r)]
                    mat.setdefault(k, {})[col] = mat.get(k, {}).get(col, 0) + sign * c
        bounds[q] = {r: {c: v for c, v in row.items() if v} for r, row in mat.items()}
    return ChainComplex(basis, bounds)


def suspended_tensor_homology(p, q, coeff=None) -> GradedGroups:
    """Homology of the suspended tensor product of the two augmented chain complexes."""
    p, q = as_pair(p), as_pair(q)
    cc = tensor_chain_complex(relative_chain_complex(p), relative_chain_complex(q), shift=1)
    return chain_homology(cc, coeff, _top(p) + _top(q) + 1)


def check_suspended_tensor(p, q, coeff=None) -> CheckResult:
    lhs = suspended_tensor_homology(p, q, coeff)
    rhs = homology(pair_join(p, q), coeff)
    return _compare("suspended-tensor", lhs, rhs, range(-1, max(lhs.top, rhs.top) + 1))


# products

def product_case(p, q) -> int:
    """Which of the four cases of the product formula applies (1..4)."""
    p, q = as_pair(p), as_pair(q)
    x1, x2, y1, y2 = p.total, p.sub, q.total, q.sub
    degenerate = x1.is_void or y1.is_void or x1.is_irrelevant or y1.is_irrelevant
    if degenerate or (not x2.is_void and not y2.is_void):
        return 4
    if x2.is_void and y2.is_void:
        return 1
    return 2 if x2.is_void else 3


def _bracket(ha: GradedGroups, hb: GradedGroups, functor, total: int) -> FgAbGroup:
    # sum over i + j = total with i, j >= 0
    return direct_sum(functor(ha[i], hb[total - i]) for i in range(0, total + 1))


def predict_product_homology(p, q, coeff=None) -> GradedGroups:
    """Product homology in degrees >= 0 from the factors, with coefficients
    the ring itself on both sides (so the coefficient Tor vanishes)."""
    coeff = as_coeff(coeff)
    p, q = as_pair(p), as_pair(q)
    case = product_case(p, q)
    x1, y1 = SimplicialPair(p.total), SimplicialPair(q.total)
    a = homology(x1 if case in (1, 2) else p, coeff)
    b = homology(y1 if case in (1, 3) else q, coeff)
    top = max(_top(p) + _top(q), 0)
    tor = tor_fg if coeff.is_integral else (lambda u, v: ZERO)
    out = {}
    for deg in range(0, top + 1):
        g = _bracket(a, b, tensor_fg, deg)
        if deg >= 1:
            g = g + _bracket(a, b, tor, deg - 1)
        # the side terms are the degree-q groups of the factors not carrying a sub
        if case in (1, 3):
            g = g + a[deg]
        if case in (1, 2):
            g = g + b[deg]
        out[deg] = g
    return GradedGroups(out, top)


def check_product_kunneth(p, q, coeff=None) -> CheckResult:
    coeff = as_coeff(coeff)
    predicted = predict_product_homology(p, q, coeff)
    actual = homology(pair_product(p, q), coeff)
    top = max(predicted.top, actual.top)
    return _compare("kunneth-product", predicted, actual, range(0, top + 1),
                    case=product_case(p, q), coeff=coeff.name)


# splitting of product homology through the join

def _is_unit_pair(pair: SimplicialPair) -> bool:
    return pair.total == IRRELEVANT and pair.sub.is_void


def predict_split_product(p, q, coeff=None) -> GradedGroups:
    """Right-hand side of the splitting: join homology shifted down plus side terms."""
    coeff = as_coeff(coeff)
    p, q = as_pair(p), as_pair(q)
    case = product_case(p, q)
    if case == 1:
        rhs = homology(pair_join(p.total, q.total), coeff).shift(-1)
        rhs = rhs + homology(p.total, coeff) + homology(q.total, coeff)
    elif case == 2:
        rhs = homology(pair_join(SimplicialPair(p.total), q), coeff).shift(-1) + homology(q, coeff)
    elif case == 3:
        rhs = homology(pair_join(p, SimplicialPair(q.total)), coeff).shift(-1) + homology(p, coeff)
    else:
        rhs = homology(pair_join(p, q), coeff).shift(-1)
    return rhs


def splitting_check(p, q, coeff=None) -> CheckResult:
    """Product homology against the shifted join homology plus side terms.

    Not applicable when either pair is the unit pair ({()}, void).  Degrees
    >= 0 decide the result; degree -1 is reported in ``notes`` only.
    """
    p, q = as_pair(p), as_pair(q)
    if _is_unit_pair(p) or _is_unit_pair(q):
        return CheckResult("splitting", True, applicable=False)
    coeff = as_coeff(coeff)
    lhs = homology(pair_product(p, q), coeff)
    rhs = predict_split_product(p, q, coeff)
    top = max(lhs.top, rhs.top, 0)
    res = _compare("splitting", rhs, lhs, range(0, top + 1), case=product_case(p, q))
    res.notes["degree_minus_one_agrees"] = lhs[-1] == rhs[-1]
    return res


# universal coefficients

def predict_mod_p(pair, p: int) -> GradedGroups:
    """F_p homology dimensions from integral homology."""
    hz = homology(pair, "Z")
    degs = set(hz.degrees()) | {q + 1 for q in hz.degrees()}
    out = {q: FgAbGroup(hz[q].rank + hz[q].p_torsion_count(p) + hz[q - 1].p_torsion_count(p)) for q in degs}
    return GradedGroups(out, hz.top)


def uct_check(pair, p: int) -> CheckResult:
    predicted = predict_mod_p(pair, p)
    actual = homology(pair, f"F{p}")
    return _compare("uct", predicted, actual, range(-1, max(predicted.top, actual.top) + 1), p=p)


__all__ = [
    "CheckResult", "predict_join_homology", "check_join_kunneth",
    "tensor_chain_complex", "suspended_tensor_homology", "check_suspended_tensor",
    "product_case", "predict_product_homology", "check_product_kunneth",
    "predict_split_product", "splitting_check", "predict_mod_p", "uct_check",
]
