"""Divisor and curve classes with their exact combinatorial invariants.

All classes are immutable coordinate vectors on the blow-up: a degree
(or bidegree) together with an ordered tuple of point multiplicities.
Every operation here is a pure function on exact integers; Python's
arbitrary-precision ints are the overflow fallback, so no magnitude
limit applies in practice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) with C(n, k) = 0 for n < 0 or n < k.

    k must be a non-negative integer.
    """
    if k < 0:
        raise ValueError(f"binom: k must be non-negative, got {k}")
    if n < 0 or n < k:
        return 0
    return math.comb(n, k)


def _as_mults(mults) -> tuple[int, ...]:
    return tuple(int(m) for m in mults)


def _sorted_clamped(mults) -> tuple[int, ...]:
    """Sort descending, clamp negatives to 0, drop zeros."""
    out = sorted((m for m in mults if m > 0), reverse=True)
    return tuple(out)


def _pad(mults: tuple[int, ...], n: int) -> tuple[int, ...]:
    if len(mults) >= n:
        return mults
    return mults + (0,) * (n - len(mults))


@dataclass(frozen=True)
class SystemP3:
    """Linear system of degree-`degree` surfaces of P^3 with assigned
    multiplicities at general points: the class (d; m1, ..., mr)."""

    degree: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mults", _as_mults(self.mults))

    @property
    def npoints(self) -> int:
        return len(self.mults)

    def padded(self, n: int) -> "SystemP3":
        """Same class with the multiplicity list zero-padded to length n."""
        return SystemP3(self.degree, _pad(self.mults, n))

    def __add__(self, other: "SystemP3") -> "SystemP3":
        n = max(len(self.mults), len(other.mults))
        a, b = _pad(self.mults, n), _pad(other.mults, n)
        return SystemP3(self.degree + other.degree,
                        tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "SystemP3") -> "SystemP3":
        n = max(len(self.mults), len(other.mults))
        a, b = _pad(self.mults, n), _pad(other.mults, n)
        return SystemP3(self.degree - other.degree,
                        tuple(x - y for x, y in zip(a, b)))

    def __rmul__(self, c: int) -> "SystemP3":
        return SystemP3(c * self.degree, tuple(c * m for m in self.mults))

    def __str__(self):
        return f"({self.degree}; {','.join(map(str, self.mults))})"


@dataclass(frozen=True)
class CurveClassP3:
    """Curve class (delta; mu1, ..., mur) on the blow-up of P^3.

    Raw classes may carry negative entries (flipped classes produced by
    Cremona reflections)."""

    degree: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mults", _as_mults(self.mults))

    def padded(self, n: int) -> "CurveClassP3":
        return CurveClassP3(self.degree, _pad(self.mults, n))

    def __str__(self):
        return f"({self.degree}; {','.join(map(str, self.mults))})"


@dataclass(frozen=True)
class PlaneSystem:
    """Plane system of degree-`degree` curves with assigned multiplicities."""

    degree: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mults", _as_mults(self.mults))

    @property
    def npoints(self) -> int:
        return len(self.mults)

    def __str__(self):
        return f"({self.degree}; {','.join(map(str, self.mults))})"


@dataclass(frozen=True)
class QuadricSystem:
    """System of curves of bidegree (a, b) on a smooth quadric with
    assigned multiplicities at general points."""

    bidegree: tuple[int, int]
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bidegree",
                           (int(self.bidegree[0]), int(self.bidegree[1])))
        object.__setattr__(self, "mults", _as_mults(self.mults))

    @property
    def npoints(self) -> int:
        return len(self.mults)

    def __str__(self):
        a, b = self.bidegree
        return f"({a},{b}; {','.join(map(str, self.mults))})"


def vdim_p3(s: SystemP3) -> int:
    """Virtual dimension C(d+3,3) - sum C(mi+2,3) - 1.  May be < -1."""
    return (binom(s.degree + 3, 3)
            - sum(binom(m + 2, 3) for m in s.mults) - 1)


def vdim_p2(s: PlaneSystem) -> int:
    """Virtual dimension C(d+2,2) - sum C(mi+1,2) - 1."""
    return (binom(s.degree + 2, 2)
            - sum(binom(m + 1, 2) for m in s.mults) - 1)


def vdim_quadric(s: QuadricSystem) -> int:
    """Virtual dimension (a+1)(b+1) - sum C(mi+1,2) - 1.

    Only meaningful for a, b >= -1; defined so that the plane
    correspondence of the quadric module preserves it.
    """
    a, b = s.bidegree
    return (a + 1) * (b + 1) - sum(binom(m + 1, 2) for m in s.mults) - 1


def pair(c: CurveClassP3, s: SystemP3) -> int:
    """Intersection product delta*d - sum mu_i*m_i on the blow-up.

    The shorter multiplicity list is zero-padded.
    """
    n = max(len(c.mults), len(s.mults))
    return (c.degree * s.degree
            - sum(mu * m for mu, m in
                  zip(_pad(c.mults, n), _pad(s.mults, n))))


def normalize(s: SystemP3) -> SystemP3:
    """Sort multiplicities descending, clamp negatives to 0, drop zeros.

    A point condition of multiplicity <= 0 is vacuous, so the member
    surfaces (hence the dimension) are unchanged.  Degree is untouched.
    """
    return SystemP3(s.degree, _sorted_clamped(s.mults))


def sort_permutation(mults) -> tuple[int, ...]:
    """Stable permutation p with mults[p[0]] >= mults[p[1]] >= ...

    Indices are 0-based positions into the input list; used by traces
    to keep track of original point labels through sorting.
    """
    return tuple(sorted(range(len(mults)), key=lambda i: -mults[i]))
