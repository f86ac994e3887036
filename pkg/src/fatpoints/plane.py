"""Minimal plane-system support: the quadratic Cremona transformation,
a standardization loop, and the two classical facts consumed by the
restriction argument (standard form implies non-empty; non-positive
canonical pairing implies non-special).

This is deliberately not a full dimension algorithm for the plane;
anything beyond these facts goes through the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotStandardForm, TooManyPoints
from .systems import PlaneSystem, _pad, _sorted_clamped

MAX_PLANE_POINTS = 10


def p2_normalize(s: PlaneSystem) -> PlaneSystem:
    """Sort descending, clamp negatives to 0, drop zeros."""
    return PlaneSystem(s.degree, _sorted_clamped(s.mults))


def p2_is_standard(s: PlaneSystem) -> bool:
    """Sorted descending with d >= m1+m2+m3 (zero-padded)."""
    m = _pad(s.mults, 3)
    if any(m[i] < m[i + 1] for i in range(len(m) - 1)):
        return False
    return s.degree >= m[0] + m[1] + m[2]


def p2_cremona(s: PlaneSystem) -> PlaneSystem:
    """Standard quadratic transformation based at the first three
    points: with k = d - (m1+m2+m3), the image is
    (d+k; m1+k, m2+k, m3+k, rest).  Raw class, not normalized."""
    m = _pad(s.mults, 3)
    k = s.degree - (m[0] + m[1] + m[2])
    return PlaneSystem(s.degree + k,
                       tuple(mi + k for mi in m[:3]) + m[3:])


@dataclass(frozen=True)
class PlaneReduction:
    """Replayable log of the plane standardization loop.  terminal is
    None exactly when the system was declared empty."""

    steps: tuple[tuple, ...]  # (kind, before, after, detail)
    terminal: Optional[PlaneSystem]

    @property
    def empty(self) -> bool:
        return self.terminal is None


def p2_standardize(s: PlaneSystem) -> PlaneReduction:
    """Iterate sort + quadratic Cremona while d < m1+m2+m3; declare
    empty when the degree goes negative."""
    if s.npoints > MAX_PLANE_POINTS:
        raise TooManyPoints(f"p2_standardize supports <= {MAX_PLANE_POINTS} "
                            f"points, got {s.npoints}")
    steps = []
    cur = s
    while True:
        normalized = p2_normalize(cur)
        if normalized != cur:
            steps.append(("sort", cur, normalized, None))
            cur = normalized
        if cur.degree < 0:
            steps.append(("declare_empty", cur, cur, "negative degree"))
            return PlaneReduction(steps=tuple(steps), terminal=None)
        m = _pad(cur.mults, 3)
        if cur.degree >= m[0] + m[1] + m[2]:
            if m[0] > cur.degree:
                steps.append(("declare_empty", cur, cur,
                              "multiplicity exceeds degree"))
                return PlaneReduction(steps=tuple(steps), terminal=None)
            return PlaneReduction(steps=tuple(steps), terminal=cur)
        k = cur.degree - (m[0] + m[1] + m[2])
        image = p2_cremona(cur)
        steps.append(("cremona", cur, image, k))
        cur = image


def p2_nonspecial_facts(s: PlaneSystem):
    """For a standard-form plane system: (nonempty, h1_zero).

    nonempty is always True (the classical fact for standard form);
    h1_zero is True when sum(m_i) <= 3d, i.e. the pairing with the
    canonical class on the blow-up is non-positive, and None (unknown)
    otherwise, since the converse is not asserted.
    """
    if not p2_is_standard(s):
        raise NotStandardForm(f"{s} is not in standard plane form")
    h1_zero = True if sum(s.mults) <= 3 * s.degree else None
    return True, h1_zero
