"""Exact integer Smith normal form and ranks over prime fields.

Matrices are sparse: a dict mapping row index to a dict of column index to
nonzero int.  Dense lists of lists are accepted by the public helpers.
Python ints are arbitrary precision, so no entry can overflow.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple


class SmithForm(NamedTuple):
    diagonal: list  # invariant factors d1 | d2 | ..., all positive
    shape: tuple

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> list:
        return [d for d in self.diagonal if d > 1]


def to_sparse(matrix) -> dict:
    if isinstance(matrix, dict):
        return {r: {c: v for c, v in row.items() if v} for r, row in matrix.items() if any(row.values())}
    return {r: {c: v for c, v in enumerate(row) if v} for r, row in enumerate(matrix) if any(row)}


def _shape(matrix) -> tuple:
    if isinstance(matrix, dict):
        nrows = max(matrix, default=-1) + 1
        ncols = max((c for row in matrix.values() for c in row), default=-1) + 1
        return nrows, ncols
    return len(matrix), (len(matrix[0]) if matrix else 0)


def invariant_factors(diagonal) -> list:
    """Normalize a diagonal into a divisibility chain (gcd/lcm exchange)."""
    d = sorted(abs(x) for x in diagonal if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


def _pick_pivot(rows: dict) -> tuple:
    # smallest |entry|; ties go to the lowest row, then lowest column
    best = None
    for r in sorted(rows):
        row = rows[r]
        for c in sorted(row):
            a = abs(row[c])
            if best is None or a < best[0]:
                best = (a, r, c)
                if a == 1:
                    return r, c
    return best[1], best[2]


def _axpy_row(rows, cols, dst, src, q):
    """rows[dst] -= q * rows[src]"""
    target = rows[dst]
    for c, v in rows[src].items():
        nv = target.get(c, 0) - q * v
        if nv:
            if c not in target:
                cols.setdefault(c, set()).add(dst)
            target[c] = nv
        elif c in target:
            del target[c]
            cols[c].discard(dst)
    if not target:
        del rows[dst]


def smith_diagonal(matrix) -> list:
    """Invariant factors of an integer matrix (destroys nothing; copies input)."""
    rows = to_sparse(matrix)
    cols: dict = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    diag = []
    while rows:
        r, c = _pick_pivot(rows)
        p = rows[r][c]
        clean = True
        for r2 in sorted(cols[c] - {r}):
            q = rows[r2][c] // p
            _axpy_row(rows, cols, r2, r, q)
            if c in rows.get(r2, {}):
                clean = False
        if not clean:
            continue
        # column c now holds only the pivot, so column operations touch row r only
        row = rows[r]
        for c2 in sorted(set(row) - {c}):
            nv = row[c2] - (row[c2] // p) * p
            if nv:
                row[c2] = nv
                clean = False
            else:
                del row[c2]
                cols[c2].discard(r)
        if not clean:
            continue
        diag.append(abs(p))
        del rows[r]
        del cols[c]
    return invariant_factors(diag)


def smith_normal_form(matrix) -> SmithForm:
    return SmithForm(smith_diagonal(matrix), _shape(matrix))


def rank_mod_p(matrix, p: int) -> int:
    """Rank over the prime field F_p by sparse Gaussian elimination."""
    rows = []
    for row in to_sparse(matrix).values():
        reduced = {c: v % p for c, v in row.items() if v % p}
        if reduced:
            rows.append(reduced)
    pivots: dict = {}  # column -> normalized pivot row
    rank = 0
    for row in rows:
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                rank += 1
                break
            f = row[c]
            for k, v in pivots[c].items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def rank_over_q(matrix) -> int:
    return smith_normal_form(matrix).rank
