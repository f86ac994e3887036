import random

import pytest

from fatpoints.cremona import CremonaStep, cremona_divisor
from fatpoints.dimension import (claim_c1_identity, full_dim, standard_dim,
                                 theorem_terms)
from fatpoints.errors import (NotStandardForm, PreconditionFailed,
                              TooManyPoints)
from fatpoints.standard import is_standard
from fatpoints.systems import SystemP3, normalize


def test_standard_dim_examples():
    assert standard_dim(SystemP3(4, (3, 3))) == (15, 1)
    assert standard_dim(SystemP3(2, (2, 2))) == (2, 1)
    assert standard_dim(SystemP3(6, (4, 4, 4))) == (26, 3)
    assert standard_dim(SystemP3(2, (1,) * 8)) == (1, 0)


def test_standard_dim_preconditions():
    with pytest.raises(NotStandardForm):
        standard_dim(SystemP3(3, (3, 3, 3)))
    with pytest.raises(PreconditionFailed):
        standard_dim(SystemP3(1, (2,)))  # standard but m1 > d
    with pytest.raises(TooManyPoints):
        standard_dim(SystemP3(9, (1,) * 9))


def test_full_dim_triple_plane():
    rep = full_dim(SystemP3(3, (3, 3, 3)))
    assert rep.dim == 0
    assert rep.vdim == -11
    assert rep.speciality == 11
    assert rep.special
    assert [st.kind for st in rep.trace] == ["remove_plane"] * 3
    assert rep.terminal == SystemP3(0, ())


def test_full_dim_examples():
    assert full_dim(SystemP3(1, (1, 1, 1, 1))).dim == -1
    assert full_dim(SystemP3(4, (3, 3, 3, 3, 3))).dim == -1
    rep = full_dim(SystemP3(6, (3, 3, 3, 3, 3)))
    assert rep.dim == 33 and rep.speciality == 0 and not rep.special


def test_full_dim_cremona_branch():
    # 2d >= m1+m2+m3 but 2d < sum of four: one Cremona step
    rep = full_dim(SystemP3(4, (3, 3, 2, 2)))
    kinds = [st.kind for st in rep.trace]
    assert "cremona" in kinds
    step = next(st for st in rep.trace if st.kind == "cremona")
    assert isinstance(step.detail, CremonaStep)
    assert step.detail.k == 2 * step.before.degree - sum(step.before.mults[:4])
    # no clamping ever needed right after a Cremona step
    for st in rep.trace:
        if st.kind == "cremona":
            assert min(st.after.mults[:4]) >= 0


def test_full_dim_termination_bound():
    rng = random.Random(4)
    for _ in range(500):
        s = SystemP3(rng.randint(-2, 12),
                     tuple(rng.randint(-3, 9)
                           for _ in range(rng.randint(0, 8))))
        rep = full_dim(s)
        assert len(rep.trace) <= 2 * max(s.degree, 0) + 10
        assert rep.dim >= max(rep.vdim, -1) or rep.dim == -1
        assert rep.special == (rep.dim > max(rep.vdim, -1))


def test_full_dim_cremona_invariance():
    # when the plane-removal condition already fails, the dimension is
    # invariant under a divisor-level Cremona transformation
    rng = random.Random(5)
    count = 0
    while count < 200:
        s = normalize(SystemP3(rng.randint(0, 10),
                               tuple(rng.randint(0, 6) for _ in range(8))))
        m = s.padded(4).mults
        if 2 * s.degree < m[0] + m[1] + m[2]:
            continue
        count += 1
        image = normalize(cremona_divisor(s))
        assert full_dim(s).dim == full_dim(image).dim


def test_too_many_points():
    with pytest.raises(TooManyPoints):
        full_dim(SystemP3(5, (1,) * 9))


def test_theorem_terms_t1():
    # (6; 4,4,4): t1 = m2+m3-d = 2 contributes alongside t2 = t3 = 2
    terms = theorem_terms(SystemP3(6, (4, 4, 4)))
    assert terms == [(1, 2, 1), (2, 2, 1), (3, 2, 1)]


def test_claim_c1():
    assert claim_c1_identity(SystemP3(4, (3, 3, 2, 2)))
    assert claim_c1_identity(SystemP3(6, (4, 4, 2, 2)))
    with pytest.raises(PreconditionFailed):
        claim_c1_identity(SystemP3(2, (1, 1, 1, 1)))


def test_claim_c1_standard_sweep():
    rng = random.Random(6)
    checked = 0
    while checked < 300:
        s = normalize(SystemP3(rng.randint(0, 12),
                               tuple(rng.randint(0, 6) for _ in range(8))))
        if not is_standard(s) or s.npoints < 4:
            continue
        m, d = s.mults, s.degree
        bs = [i for i in range(2, s.npoints + 1) if m[0] + m[i - 1] - d >= 1]
        if not bs or max(bs) < 4:
            continue
        checked += 1
        assert claim_c1_identity(s)
