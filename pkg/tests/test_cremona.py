import random
from fractions import Fraction

import pytest

from fatpoints.cremona import (corollary_monotone, cremona_curve,
                               cremona_divisor, cremona_point, vdim_change)
from fatpoints.errors import HypothesisViolated, IndeterminatePoint
from fatpoints.systems import CurveClassP3, SystemP3, pair, vdim_p3


def proj_eq(x, y):
    """Projective equality of nonzero coordinate vectors."""
    for i in range(4):
        if x[i] != 0:
            return all(x[j] * y[i] == y[j] * x[i] for j in range(4))
    return False


def test_cremona_point_examples():
    assert proj_eq(cremona_point((1, 1, 1, 1)), (1, 1, 1, 1))
    assert proj_eq(cremona_point((1, 2, 2, 2)), (2, 1, 1, 1))
    assert proj_eq(cremona_point((1, 1, 1, 0)), (0, 0, 0, 1))
    with pytest.raises(IndeterminatePoint):
        cremona_point((1, 0, 0, 1))


def test_cremona_point_involution():
    rng = random.Random(1)
    for _ in range(200):
        x = tuple(Fraction(rng.randint(1, 40), rng.randint(1, 7))
                  for _ in range(4))
        assert proj_eq(cremona_point(cremona_point(x)), x)


def test_cremona_divisor_examples():
    assert cremona_divisor(SystemP3(3, (2, 2, 2, 2))) == SystemP3(1, (0, 0, 0, 0))
    assert cremona_divisor(SystemP3(2, (1, 1, 1, 1))) == SystemP3(2, (1, 1, 1, 1))
    assert cremona_divisor(SystemP3(4, (3, 3, 2, 2))) == SystemP3(2, (1, 1, 0, 0))


def test_cremona_curve_examples():
    assert cremona_curve(CurveClassP3(1, (0, 0, 0, 0, 1, 1))) == \
        CurveClassP3(3, (1, 1, 1, 1, 1, 1))
    assert cremona_curve(CurveClassP3(1, (1, 1, 0, 0))) == \
        CurveClassP3(-1, (0, 0, -1, -1))
    assert cremona_curve(CurveClassP3(0, ())) == CurveClassP3(0, (0, 0, 0, 0))


def _random_system(rng, lo=-20, hi=20, r=8):
    return SystemP3(rng.randint(lo, hi),
                    tuple(rng.randint(lo, hi) for _ in range(r)))


def _random_curve(rng, lo=-20, hi=20, r=8):
    return CurveClassP3(rng.randint(lo, hi),
                        tuple(rng.randint(lo, hi) for _ in range(r)))


def test_involutions_and_pairing():
    rng = random.Random(2)
    for _ in range(3000):
        s = _random_system(rng, r=rng.randint(0, 8))
        c = _random_curve(rng, r=rng.randint(0, 8))
        assert cremona_divisor(cremona_divisor(s)) == s.padded(4)
        assert cremona_curve(cremona_curve(c)) == c.padded(4)
        assert pair(cremona_curve(c), cremona_divisor(s)) == pair(c, s)
        # anticanonical pairing -4*delta + 2*sum(mu) is preserved
        cc = cremona_curve(c)
        assert -4 * cc.degree + 2 * sum(cc.mults) == \
            -4 * c.degree + 2 * sum(c.mults)


def random_hypothesis_system(rng, mmax=10, extra=5, rest=4):
    """Random system satisfying 2d >= m_i+m_j+m_k on the base points."""
    m4 = sorted((rng.randint(0, mmax) for _ in range(4)), reverse=True)
    d = -(-(m4[0] + m4[1] + m4[2]) // 2) + rng.randint(0, extra)
    tail = tuple(rng.randint(0, mmax) for _ in range(rng.randint(0, rest)))
    return SystemP3(d, tuple(m4) + tail)


def test_vdim_change_examples():
    assert vdim_change(SystemP3(4, (3, 3, 2, 2))) == 1
    assert vdim_change(SystemP3(2, (1, 1, 1, 1))) == 0
    # k = 0 case: the reflection fixes the system, so the change is 0
    assert vdim_change(SystemP3(6, (4, 4, 4, 0))) == 0
    with pytest.raises(HypothesisViolated):
        vdim_change(SystemP3(3, (3, 3, 3)))


def test_vdim_change_identity():
    rng = random.Random(3)
    for _ in range(3000):
        s = random_hypothesis_system(rng)
        assert vdim_p3(cremona_divisor(s)) - vdim_p3(s) == vdim_change(s)
        assert corollary_monotone(s)


def test_corollary_examples():
    assert corollary_monotone(SystemP3(4, (3, 3, 2, 2)))
    assert corollary_monotone(SystemP3(2, (1, 1, 1, 1)))
    assert corollary_monotone(SystemP3(3, (2, 2, 2, 2)))
