"""Exact dimension of a fat-point system through at most eight points.

The fast path is the closed formula for standard-form systems
(virtual dimension plus the binomial correction over the excess
parameters t_i); arbitrary systems are first driven into standard form
by the sort / remove-plane / Cremona reduction loop, logging every step
so a trace can be replayed and audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .cremona import CremonaStep, cremona_divisor
from .errors import NotStandardForm, PreconditionFailed, TooManyPoints
from .standard import is_standard
from .systems import SystemP3, binom, normalize, sort_permutation, vdim_p3

MAX_POINTS = 8


@dataclass(frozen=True)
class ReductionStep:
    """One step of the reduction loop.

    kind is one of "sort", "clamp", "remove_plane", "cremona",
    "declare_empty"; detail carries the permutation, the original point
    labels touched, the CremonaStep, or the emptiness reason.
    """

    kind: str
    before: SystemP3
    after: SystemP3
    detail: Any = None


@dataclass(frozen=True)
class DimReport:
    """Result of full_dim.  dim = -1 means the system is empty; vdim and
    speciality always refer to the original input system."""

    dim: int
    vdim: int
    speciality: int
    special: bool
    trace: tuple[ReductionStep, ...]
    terminal: SystemP3
    correction_terms: tuple[tuple[int, int, int], ...] = field(default=())


def theorem_terms(s: SystemP3) -> list[tuple[int, int, int]]:
    """The correction terms (i, t_i, C(t_i+1, 3)) with t_i >= 2, where
    t_1 = m2+m3-d and t_i = m1+m_i-d for i >= 2 (phantom zeros for
    missing points)."""
    m = s.padded(3).mults
    d = s.degree
    terms = []
    t1 = m[1] + m[2] - d
    if t1 >= 2:
        terms.append((1, t1, binom(t1 + 1, 3)))
    for i in range(2, s.npoints + 1):
        ti = m[0] + m[i - 1] - d
        if ti >= 2:
            terms.append((i, ti, binom(ti + 1, 3)))
    return terms


def standard_dim(s: SystemP3) -> tuple[int, int]:
    """Dimension of a standard-form system with d >= m1 and r <= 8:
    returns (vdim + correction, correction).

    The value is the actual projective dimension; callers that bypass
    the emptiness pre-checks of full_dim get the raw formula value.
    """
    if s.npoints > MAX_POINTS:
        raise TooManyPoints(f"standard_dim supports <= 8 points, got {s.npoints}")
    if not is_standard(s):
        raise NotStandardForm(f"{s} is not in standard form")
    if s.mults and s.degree < s.mults[0]:
        raise PreconditionFailed(
            f"standard_dim needs d >= m1; route {s} through full_dim")
    correction = sum(c for _, _, c in theorem_terms(s))
    return vdim_p3(s) + correction, correction


def _normalize_steps(d, mults, labels, trace):
    """Sort descending (stable), clamp negatives, drop zeros; append the
    corresponding trace steps.  Returns the new (mults, labels)."""
    before = SystemP3(d, tuple(mults))
    perm = sort_permutation(mults)
    if perm != tuple(range(len(mults))):
        mults = [mults[i] for i in perm]
        labels = [labels[i] for i in perm]
        trace.append(ReductionStep("sort", before, SystemP3(d, tuple(mults)),
                                   detail={"permutation": perm}))
    clamped = [labels[i] for i, m in enumerate(mults) if m < 0]
    if clamped:
        before_clamp = SystemP3(d, tuple(mults))
        mults = [max(m, 0) for m in mults]
        trace.append(ReductionStep("clamp", before_clamp,
                                   SystemP3(d, tuple(mults)),
                                   detail={"points": tuple(clamped)}))
    keep = [i for i, m in enumerate(mults) if m > 0]
    return [mults[i] for i in keep], [labels[i] for i in keep]


def full_dim(s: SystemP3) -> DimReport:
    """Dimension, speciality and full reduction trace of any system
    through at most eight points.

    Loop: normalize; declare empty if d < 0 or m1 > d; remove the plane
    through the three biggest points while 2d < m1+m2+m3; apply a cubic
    Cremona transformation while 2d < m1+m2+m3+m4; finish with the
    standard-form formula.
    """
    if normalize(s).npoints > MAX_POINTS:
        raise TooManyPoints(f"full_dim supports <= 8 points, got {s}")
    vd = vdim_p3(s)
    trace: list[ReductionStep] = []
    d = s.degree
    mults = list(s.mults)
    labels = list(range(1, len(mults) + 1))

    def report(dim, terminal, terms=()):
        speciality = dim - vd if dim > vd else 0
        return DimReport(dim=dim, vdim=vd, speciality=speciality,
                         special=dim > max(vd, -1),
                         trace=tuple(trace), terminal=terminal,
                         correction_terms=tuple(terms))

    max_steps = 2 * max(d, 0) + 10
    while True:
        assert len(trace) <= max_steps, f"reduction of {s} did not terminate"
        mults, labels = _normalize_steps(d, mults, labels, trace)
        cur = SystemP3(d, tuple(mults))
        if d < 0:
            trace.append(ReductionStep("declare_empty", cur, cur,
                                       detail={"reason": "negative degree"}))
            return report(-1, cur)
        if mults and mults[0] > d:
            trace.append(ReductionStep(
                "declare_empty", cur, cur,
                detail={"reason": "multiplicity exceeds degree"}))
            return report(-1, cur)
        m = (mults + [0, 0, 0, 0])[:4]
        if 2 * d < m[0] + m[1] + m[2]:
            # the plane through the three biggest points is a fixed component
            touched = tuple(labels[:3])
            d -= 1
            for i in range(min(3, len(mults))):
                mults[i] -= 1
            trace.append(ReductionStep("remove_plane", cur,
                                       SystemP3(d, tuple(mults)),
                                       detail={"points": touched}))
            continue
        if 2 * d < m[0] + m[1] + m[2] + m[3]:
            k = 2 * d - (m[0] + m[1] + m[2] + m[3])
            image = cremona_divisor(cur)
            # step-2 guard makes all transformed base multiplicities >= 0
            assert min(image.mults[:4]) >= 0, (cur, image)
            trace.append(ReductionStep(
                "cremona", cur, image,
                detail=CremonaStep(k=k, base_indices=tuple(labels[:4]))))
            d = image.degree
            mults = list(image.mults)
            labels = labels + list(range(len(labels) + 1, len(mults) + 1))
            continue
        dim, _ = standard_dim(cur)
        terms = theorem_terms(cur)
        return report(max(dim, -1), cur, terms)


def claim_c1_identity(s: SystemP3) -> bool:
    """Arithmetic self-test of the obstruction-system construction.

    For a sorted system through >= 4 points with t_i = m1+m_i-d and
    b = max{i >= 2 : t_i >= 1}, builds
    N_b = (d-2m_b+2t_b-2; m1-m_b+t_b-1, ..., m_{b-1}-m_b+t_b-1, t_b-1)
    and checks that (i) its degree is one less than its first
    multiplicity and (ii) vdim(N_b) + 1 = -sum_{i=2..b} C(t_i+1, 3).
    """
    if any(s.mults[i] < s.mults[i + 1] for i in range(s.npoints - 1)):
        raise NotStandardForm(f"{s} must have sorted multiplicities")
    if s.npoints < 4:
        raise PreconditionFailed(f"claim_c1_identity needs >= 4 points: {s}")
    m = s.mults
    d = s.degree
    t = {i: m[0] + m[i - 1] - d for i in range(2, s.npoints + 1)}
    bs = [i for i, ti in t.items() if ti >= 1]
    if not bs:
        raise PreconditionFailed(f"no index with t_i >= 1 for {s}")
    b = max(bs)
    tb = t[b]
    nb = SystemP3(d - 2 * m[b - 1] + 2 * tb - 2,
                  tuple(m[i - 1] - m[b - 1] + tb - 1 for i in range(1, b))
                  + (tb - 1,))
    if nb.degree != nb.mults[0] - 1:
        return False
    rhs = -sum(binom(t[i] + 1, 3) for i in range(2, b + 1))
    return vdim_p3(nb) + 1 == rhs
