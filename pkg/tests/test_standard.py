from itertools import combinations_with_replacement

import pytest

from fatpoints.errors import NotStandardForm, TooManyPoints
from fatpoints.oracle import OracleConfig, oracle_dim_p3
from fatpoints.standard import (decompose, empty_three, is_standard,
                                standard_class)
from fatpoints.systems import SystemP3


def test_is_standard():
    assert is_standard(SystemP3(4, (3, 3, 2)))
    assert not is_standard(SystemP3(3, (3, 3, 3)))
    assert is_standard(SystemP3(0, ()))
    assert not is_standard(SystemP3(5, (1, 2)))  # unsorted


def test_decompose_examples():
    dec = decompose(SystemP3(4, (2, 2, 2, 2, 1)))
    assert dec.base == SystemP3(0, (0, 0, 0))
    assert dec.coefficients == {4: 1, 5: 1}
    assert dec.recompose() == SystemP3(4, (2, 2, 2, 2, 1))

    dec = decompose(SystemP3(2, (1,) * 8))
    assert dec.base == SystemP3(0, (0, 0, 0))
    assert dec.coefficients == {i: 0 for i in range(4, 8)} | {8: 1}
    assert dec.recompose() == SystemP3(2, (1,) * 8)

    dec = decompose(SystemP3(5, (2, 1)))
    assert dec.base == SystemP3(5, (2, 1))
    assert dec.coefficients == {}


def test_decompose_rejects_non_standard():
    with pytest.raises(NotStandardForm):
        decompose(SystemP3(3, (3, 3, 3)))


def standard_sweep(dmax, mmax, rmax):
    for d in range(dmax + 1):
        for r in range(rmax + 1):
            for mults in combinations_with_replacement(
                    range(mmax, 0, -1), r):
                s = SystemP3(d, mults)
                if is_standard(s):
                    yield s


def test_decompose_roundtrip_sweep():
    for s in standard_sweep(12, 6, 8):
        dec = decompose(s)
        assert all(c >= 0 for c in dec.coefficients.values())
        n = max(3, s.npoints)
        assert dec.recompose().padded(n) == s.padded(n)
        # every partial sum of the decomposition stays in standard form
        partial = s
        for i in sorted(dec.coefficients, reverse=True):
            partial = partial - dec.coefficients[i] * standard_class(i)
            assert is_standard(SystemP3(partial.degree,
                                        tuple(m for m in partial.mults
                                              if m > 0)))


def test_empty_three():
    assert empty_three(SystemP3(2, (3, 1, 1)))
    assert not empty_three(SystemP3(3, (3, 3, 3)))
    assert not empty_three(SystemP3(0, ()))
    with pytest.raises(TooManyPoints):
        empty_three(SystemP3(3, (1, 1, 1, 1)))


def test_empty_three_vs_oracle_small():
    cfg = OracleConfig(seed=5)
    for d in range(5):
        for mults in combinations_with_replacement(range(5, 0, -1), 3):
            s = SystemP3(d, mults)
            assert empty_three(s) == (oracle_dim_p3(s, cfg) == -1)
