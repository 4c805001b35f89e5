"""Finitely generated abelian groups and graded collections of them.

Over a field only the rank is used, so the same type doubles as a vector
space dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

from .snf import invariant_factors


@dataclass(frozen=True)
class FgAbGroup:
    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        object.__setattr__(self, "torsion", tuple(d for d in invariant_factors(self.torsion) if d > 1))

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup(self.rank + other.rank, self.torsion + other.torsion)

    def p_torsion_count(self, p: int) -> int:
        """Number of cyclic summands whose order is divisible by ``p``."""
        return sum(1 for d in self.torsion if d % p == 0)

    def format(self, coeff=None) -> str:
        if self.is_zero:
            return "0"
        base = "Z" if coeff is None or coeff.is_integral else coeff.name
        parts = []
        if self.rank:
            parts.append(base if self.rank == 1 else f"{base}^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts)

    def __str__(self):
        return self.format()

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


ZERO = FgAbGroup()
Z = FgAbGroup(1)


def cyclic(n: int) -> FgAbGroup:
    """Z/n, with n = 0 meaning Z."""
    return Z if n == 0 else FgAbGroup(0, (n,))


def direct_sum(groups: Iterable[FgAbGroup]) -> FgAbGroup:
    out = ZERO
    for g in groups:
        out = out + g
    return out


def tensor_fg(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """A (x)_Z B: ranks multiply; Z/d (x) Z/e = Z/gcd(d, e)."""
    torsion = [e for e in b.torsion for _ in range(a.rank)]
    torsion += [d for d in a.torsion for _ in range(b.rank)]
    torsion += [gcd(d, e) for d in a.torsion for e in b.torsion]
    return FgAbGroup(a.rank * b.rank, tuple(torsion))


def tor_fg(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """Tor_1^Z(A, B) = sum of Z/gcd(d, e) over torsion summands."""
    return FgAbGroup(0, tuple(gcd(d, e) for d in a.torsion for e in b.torsion))


@dataclass(frozen=True)
class GradedGroups:
    """Degree (>= -1) to group; absent degrees are zero.

    ``top`` only controls how many degrees get printed.
    """

    groups: Mapping = field(default_factory=dict)
    top: int = -1

    def __post_init__(self):
        clean = {int(q): g for q, g in dict(self.groups).items() if not g.is_zero}
        object.__setattr__(self, "groups", clean)
        top = max([self.top, *clean]) if clean else self.top
        object.__setattr__(self, "top", top)

    def __getitem__(self, q: int) -> FgAbGroup:
        return self.groups.get(q, ZERO)

    def __eq__(self, other):
        if not isinstance(other, GradedGroups):
            return NotImplemented
        return self.groups == other.groups

    def __hash__(self):
        return hash(tuple(sorted(self.groups.items())))

    @property
    def is_zero(self) -> bool:
        return not self.groups

    def degrees(self) -> list:
        return sorted(self.groups)

    def shift(self, k: int) -> "GradedGroups":
        return GradedGroups({q + k: g for q, g in self.groups.items()}, self.top + k)

    def __add__(self, other: "GradedGroups") -> "GradedGroups":
        qs = set(self.groups) | set(other.groups)
        return GradedGroups({q: self[q] + other[q] for q in qs}, max(self.top, other.top))

    def format(self, coeff=None, lo: int = -1) -> str:
        return " ".join(f"H_{q}={self[q].format(coeff)}" for q in range(lo, self.top + 1))

    def __str__(self):
        return self.format()

    def to_json(self) -> dict:
        return {str(q): self[q].to_json() for q in range(-1, self.top + 1)}
