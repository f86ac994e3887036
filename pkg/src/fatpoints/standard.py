"""Standard form: predicate, decomposition into standard classes, and
the emptiness criterion for systems through at most three points."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotStandardForm, TooManyPoints
from .systems import SystemP3


def standard_class(i: int) -> SystemP3:
    """The quadric system (2; 1^i) through i simple points."""
    return SystemP3(2, (1,) * i)


def is_standard(s: SystemP3) -> bool:
    """True iff the multiplicities are sorted descending and
    2d >= m1+m2+m3+m4 (zero-padded when r < 4)."""
    m = s.padded(4).mults
    if any(m[i] < m[i + 1] for i in range(len(m) - 1)):
        return False
    return 2 * s.degree >= m[0] + m[1] + m[2] + m[3]


@dataclass(frozen=True)
class StandardDecomposition:
    """Decomposition of a standard-form system as a base system through
    at most three points plus non-negative multiples of the standard
    classes (2; 1^i), i = 4..a."""

    base: SystemP3
    coefficients: dict[int, int]  # i -> c_i, keys 4..a

    def recompose(self) -> SystemP3:
        total = self.base
        for i, c in self.coefficients.items():
            total = total + c * standard_class(i)
        return total


def decompose(s: SystemP3) -> StandardDecomposition:
    """Write a normalized standard-form system as base + sum c_i*(2;1^i).

    With a = max{i : m_i > 0}: c_a = m_a, c_i = m_i - m_{i+1} for
    4 <= i < a, and base = (d - 2*m4; m1-m4, m2-m4, m3-m4).  For a <= 3
    the decomposition is trivial (base = s, no coefficients).
    """
    if not is_standard(s):
        raise NotStandardForm(f"{s} is not in standard form")
    m = s.mults
    a = 0
    for i, mi in enumerate(m, start=1):
        if mi > 0:
            a = i
    if a <= 3:
        return StandardDecomposition(base=s, coefficients={})
    coeffs = {}
    for i in range(4, a):
        coeffs[i] = m[i - 1] - m[i]
    coeffs[a] = m[a - 1]
    mp = s.padded(4).mults
    base = SystemP3(s.degree - 2 * mp[3],
                    (mp[0] - mp[3], mp[1] - mp[3], mp[2] - mp[3]))
    return StandardDecomposition(base=base, coefficients=coeffs)


def empty_three(s: SystemP3) -> bool:
    """Emptiness of a system through at most three points: empty iff
    some multiplicity exceeds the degree."""
    if s.npoints > 3:
        raise TooManyPoints(f"empty_three needs <= 3 points, got {s.npoints}")
    return any(s.degree < m for m in s.mults)
