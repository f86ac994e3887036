"""The cubic Cremona involution of P^3 based at four general points.

Acts on coordinates by inverting them, on divisor classes by the
reflection (d; m1..m4, rest) -> (d+k; m1+k..m4+k, rest) with
k = 2d - (m1+m2+m3+m4), and on curve classes by the dual reflection.
The base points are always the first four entries of the multiplicity
list (zero-padded when fewer points are present); callers wanting other
base points permute first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import HypothesisViolated, IndeterminatePoint
from .systems import CurveClassP3, SystemP3, binom, vdim_p3


@dataclass(frozen=True)
class CremonaStep:
    """One divisor-level Cremona step: the increment k = 2d - sum of the
    four base multiplicities, and which original points were used."""

    k: int
    base_indices: tuple[int, int, int, int]


def cremona_point(x):
    """Image of a point under coordinate inversion, denominators cleared.

    (x0:x1:x2:x3) -> (x1x2x3 : x0x2x3 : x0x1x3 : x0x1x2).  Points with
    two or more vanishing coordinates are indeterminate.
    """
    x = tuple(x)
    if len(x) != 4:
        raise ValueError("cremona_point expects 4 homogeneous coordinates")
    if sum(1 for c in x if c == 0) >= 2:
        raise IndeterminatePoint(f"point {x} lies on two coordinate planes")
    x0, x1, x2, x3 = x
    return (x1 * x2 * x3, x0 * x2 * x3, x0 * x1 * x3, x0 * x1 * x2)


def cremona_divisor(s: SystemP3) -> SystemP3:
    """Reflection on divisor classes; returns the raw (unnormalized)
    class, whose multiplicity list has length max(r, 4)."""
    s = s.padded(4)
    m = s.mults
    k = 2 * s.degree - (m[0] + m[1] + m[2] + m[3])
    return SystemP3(s.degree + k,
                    tuple(mi + k for mi in m[:4]) + m[4:])


def cremona_curve(c: CurveClassP3) -> CurveClassP3:
    """Dual reflection on curve classes, determined by preservation of
    the intersection pairing: with w = delta - (mu1+..+mu4), the image
    is (delta + 2w; mu1+w, .., mu4+w, rest)."""
    c = c.padded(4)
    mu = c.mults
    w = c.degree - (mu[0] + mu[1] + mu[2] + mu[3])
    return CurveClassP3(c.degree + 2 * w,
                        tuple(mi + w for mi in mu[:4]) + mu[4:])


def _check_hypothesis(s: SystemP3):
    m = s.padded(4).mults
    d = s.degree
    for i, j, k in combinations(range(4), 3):
        if 2 * d < m[i] + m[j] + m[k]:
            raise HypothesisViolated(
                f"2d >= m_i+m_j+m_k fails for points {(i+1, j+1, k+1)} of {s}")


def vdim_change(s: SystemP3) -> int:
    """Change of virtual dimension under the reflection:
    sum_{t_ij >= 2} C(1+t_ij, 3) - sum_{t_ij <= -2} C(1-t_ij, 3)
    over the six pairs among the four base points, t_ij = m_i+m_j-d.

    Only valid (and only asserted) when 2d >= m_i+m_j+m_k for every
    3-subset of the base points; raises HypothesisViolated otherwise.
    """
    _check_hypothesis(s)
    m = s.padded(4).mults
    d = s.degree
    total = 0
    for i, j in combinations(range(4), 2):
        t = m[i] + m[j] - d
        if t >= 2:
            total += binom(1 + t, 3)
        elif t <= -2:
            total -= binom(1 - t, 3)
    return total


def corollary_monotone(s: SystemP3) -> bool:
    """True iff a degree drop under the reflection implies the virtual
    dimension does not decrease.  Same hypothesis as vdim_change."""
    _check_hypothesis(s)
    image = cremona_divisor(s)
    if image.degree >= s.degree:
        return True
    return vdim_p3(image) >= vdim_p3(s)
