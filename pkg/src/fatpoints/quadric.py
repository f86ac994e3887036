"""Restriction of a space system to a quadric of the standard class,
and the birational correspondence between quadric and plane systems
(blow up a point, contract the two rulings through it)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadIndex, HypothesisViolated
from .systems import PlaneSystem, QuadricSystem, SystemP3, vdim_quadric


def restrict_to_quadric(s: SystemP3, a: int) -> QuadricSystem:
    """Restriction of (d; m1..mr) to a quadric through the first a
    points: the class (d, d; m1, ..., ma).  Requires 4 <= a <= min(r, 9)."""
    if not 4 <= a <= min(s.npoints, 9):
        raise BadIndex(f"a={a} outside 4..min(r,9) for {s}")
    return QuadricSystem((s.degree, s.degree), s.mults[:a])


def quadric_to_plane(q: QuadricSystem, point_index: int = 0) -> PlaneSystem:
    """Plane system corresponding to a quadric system under the blow
    up / contract map at the distinguished point:
    (a, b; m, rest) -> (a+b-m; b-m, a-m, rest).

    The distinguished point defaults to the first (largest) one.  A
    system with no points uses a phantom m = 0.  The image is returned
    raw: entries may be negative when m exceeds a or b, signalling
    fixed ruling components.
    """
    a, b = q.bidegree
    if not q.mults:
        m, rest = 0, ()
    else:
        if not 0 <= point_index < q.npoints:
            raise BadIndex(f"point_index={point_index} outside 0..{q.npoints - 1}")
        m = q.mults[point_index]
        rest = q.mults[:point_index] + q.mults[point_index + 1:]
    return PlaneSystem(a + b - m, (b - m, a - m) + rest)


@dataclass(frozen=True)
class RestrictionResult:
    quadric: QuadricSystem
    plane_image: PlaneSystem
    point_used: int


def restrict_with_image(s: SystemP3, a: int,
                        point_index: int = 0) -> RestrictionResult:
    q = restrict_to_quadric(s, a)
    return RestrictionResult(quadric=q,
                             plane_image=quadric_to_plane(q, point_index),
                             point_used=point_index)


def restricted_nonspecial_check(s: SystemP3, a: int, cfg=None) -> bool:
    """Empirically certify that the restricted system is non-empty and
    non-special: its oracle dimension equals its virtual dimension and
    that value is >= 0.  Hypotheses: s normalized, d >= m1, 4 <= a <= r <= 8.
    """
    from .oracle import OracleConfig, oracle_dim_quadric

    if s.mults and s.degree < s.mults[0]:
        raise HypothesisViolated(f"restricted_nonspecial_check needs d >= m1: {s}")
    if not 4 <= a <= s.npoints <= 8:
        raise BadIndex(f"a={a} outside 4..r for {s}")
    q = restrict_to_quadric(s, a)
    v = vdim_quadric(q)
    return oracle_dim_quadric(q, cfg or OracleConfig()) == v and v >= 0
