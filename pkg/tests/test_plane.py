import random
from itertools import combinations_with_replacement

import pytest

from fatpoints.errors import NotStandardForm
from fatpoints.oracle import OracleConfig, oracle_dim_p2
from fatpoints.plane import (p2_cremona, p2_is_standard, p2_nonspecial_facts,
                             p2_normalize, p2_standardize)
from fatpoints.systems import PlaneSystem, vdim_p2

CFG = OracleConfig(seed=11)


def test_p2_cremona_examples():
    assert p2_cremona(PlaneSystem(7, (3, 3, 2, 2))) == PlaneSystem(6, (2, 2, 1, 2))
    assert p2_cremona(PlaneSystem(3, (1, 1, 1))) == PlaneSystem(3, (1, 1, 1))
    assert p2_cremona(PlaneSystem(2, (1, 1, 1))) == PlaneSystem(1, (0, 0, 0))


def test_p2_cremona_involution():
    rng = random.Random(8)
    for _ in range(2000):
        s = PlaneSystem(rng.randint(-10, 10),
                        tuple(rng.randint(-10, 10)
                              for _ in range(rng.randint(0, 9))))
        padded = PlaneSystem(s.degree, s.mults + (0,) * (3 - len(s.mults))
                             if len(s.mults) < 3 else s.mults)
        assert p2_cremona(p2_cremona(s)) == padded


def test_p2_standardize_examples():
    red = p2_standardize(PlaneSystem(7, (3, 3, 2, 2)))
    assert red.terminal == PlaneSystem(6, (2, 2, 2, 1))
    assert [k for k, *_ in red.steps] == ["cremona", "sort"]

    red = p2_standardize(PlaneSystem(3, (1,) * 9))
    assert red.terminal == PlaneSystem(3, (1,) * 9)
    assert red.steps == ()

    # (2; 2,2): the reduction terminates at the constants; the double
    # line through the two points is the single member, so dim 0
    red = p2_standardize(PlaneSystem(2, (2, 2)))
    assert red.terminal == PlaneSystem(0, ())
    assert oracle_dim_p2(PlaneSystem(2, (2, 2)), CFG) == 0

    assert p2_standardize(PlaneSystem(1, (2,))).empty


def test_p2_nonspecial_facts():
    assert p2_nonspecial_facts(PlaneSystem(6, (2, 2, 2, 1))) == (True, True)
    assert p2_nonspecial_facts(PlaneSystem(3, (1,) * 9)) == (True, True)
    assert p2_nonspecial_facts(PlaneSystem(12, (4,) * 6)) == (True, True)
    assert p2_nonspecial_facts(PlaneSystem(6, (2,) * 10)) == (True, None)
    with pytest.raises(NotStandardForm):
        p2_nonspecial_facts(PlaneSystem(2, (1, 1, 1)))


def plane_sweep(dmax, mmax, rmax):
    for d in range(dmax + 1):
        for r in range(rmax + 1):
            for mults in combinations_with_replacement(range(mmax, 0, -1), r):
                yield PlaneSystem(d, mults)


def test_standard_form_systems_are_nonspecial():
    # standard plane systems with non-positive canonical pairing have
    # the expected dimension: the classical fact behind the restriction
    # argument, cross-checked with the oracle
    for s in plane_sweep(8, 4, 9):
        if p2_is_standard(s) and sum(s.mults) <= 3 * s.degree:
            assert oracle_dim_p2(s, CFG) == vdim_p2(s)


def test_p2_cremona_preserves_dimension():
    rng = random.Random(9)
    checked = 0
    while checked < 150:
        s = p2_normalize(PlaneSystem(rng.randint(0, 8),
                                     tuple(rng.randint(0, 4)
                                           for _ in range(rng.randint(0, 6)))))
        image = p2_cremona(s)
        if image.degree < 0 or min(image.mults, default=0) < 0:
            continue
        if s.mults and s.mults[0] > s.degree:
            continue
        img = p2_normalize(image)
        if img.mults and img.mults[0] > img.degree:
            continue
        checked += 1
        assert oracle_dim_p2(s, CFG) == oracle_dim_p2(img, CFG)


def test_p2_standardize_preserves_oracle_dimension():
    rng = random.Random(10)
    for _ in range(80):
        s = PlaneSystem(rng.randint(0, 8),
                        tuple(rng.randint(0, 4)
                              for _ in range(rng.randint(0, 8))))
        red = p2_standardize(s)
        dims = [oracle_dim_p2(p2_normalize(step[1]), CFG)
                for step in red.steps] + \
               ([oracle_dim_p2(red.terminal, CFG)] if red.terminal else [-1])
        start = oracle_dim_p2(p2_normalize(s), CFG)
        assert all(dim == start for dim in dims)
