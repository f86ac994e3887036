"""(-1)-curve calculus: membership, bounded orbit enumeration, and the
speciality contribution of curves meeting a system negatively.

A (-1)-curve class is anything reachable from a line through two points
by Cremona reflections and point permutations.  Membership is decided
by the canonical reduction (sort, then reflect while the degree drops);
the orbit is generated breadth-first and pruned at a degree bound,
since for eight points it is not known to be finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .cremona import cremona_curve
from .systems import CurveClassP3, SystemP3, binom, pair

DEFAULT_DEGREE_BOUND = 6

_SEED = (1, 1)  # nonzero multiplicities of a line through two points


@dataclass(frozen=True)
class NegativeCurveRecord:
    """A (-1)-curve meeting the system in -t <= -2, contributing
    C(t+1, 3) to the speciality bound."""

    curve: CurveClassP3
    t: int
    contribution: int


def _trimmed(mults):
    mults = list(mults)
    while mults and mults[-1] == 0:
        mults.pop()
    return tuple(mults)


def is_minus_one_curve(c: CurveClassP3) -> bool:
    """Canonical reduction test: sort descending and reflect while the
    degree strictly drops; accept iff the class (1; 1,1) is reached."""
    cur = c
    for _ in range(4 * max(abs(c.degree), 1) + 4):
        mults = tuple(sorted(cur.mults, reverse=True))
        if cur.degree == 1 and _trimmed(mults) == _SEED:
            return True
        if any(mu < 0 for mu in mults):
            return False
        cur = CurveClassP3(cur.degree, mults).padded(4)
        w = cur.degree - sum(cur.mults[:4])
        if w >= 0:
            return False
        cur = cremona_curve(cur)
        if cur.degree < 1:
            return False
    return False


def enumerate_minus_one(r: int, degree_bound: int = DEFAULT_DEGREE_BOUND):
    """All distinct sorted representatives of (-1)-curve classes on r
    points with degree between 1 and degree_bound.

    Breadth-first orbit generation from the line through two points,
    applying the Cremona reflection at every 4-subset of base points.
    Pruning at degree_bound is safe because the canonical reduction is
    degree-monotone: any orbit class reduces to the seed through classes
    of smaller degree.
    """
    if not 1 <= r <= 8:
        raise ValueError(f"r must be in 1..8, got {r}")
    if degree_bound < 1:
        raise ValueError(f"degree_bound must be >= 1, got {degree_bound}")
    if r < 2:
        return []
    seed = (1, tuple(sorted((1, 1) + (0,) * (r - 2), reverse=True)))
    seen = {seed}
    queue = [seed]
    while queue:
        delta, mults = queue.pop()
        if r < 4:
            continue
        for idx in combinations(range(r), 4):
            w = delta - sum(mults[i] for i in idx)
            nd = delta + 2 * w
            if not 1 <= nd <= degree_bound:
                continue
            nm = list(mults)
            for i in idx:
                nm[i] += w
            if min(nm) < 0:
                continue
            state = (nd, tuple(sorted(nm, reverse=True)))
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return [CurveClassP3(delta, _trimmed(mults))
            for delta, mults in sorted(seen)]


def negative_curves(s: SystemP3, degree_bound: int = DEFAULT_DEGREE_BOUND):
    """All orbit classes up to degree_bound, over every assignment of
    points (not just sorted representatives), meeting s in <= -2."""
    r = s.npoints
    records = []
    for rep in enumerate_minus_one(max(r, 2), degree_bound):
        padded = rep.padded(r).mults[:r] if r >= 2 else ()
        if r < 2:
            break
        for assignment in sorted(set(permutations(padded))):
            curve = CurveClassP3(rep.degree, assignment)
            t = -pair(curve, s)
            if t >= 2:
                records.append(NegativeCurveRecord(
                    curve=curve, t=t, contribution=binom(t + 1, 3)))
    records.sort(key=lambda rec: (rec.curve.degree, rec.curve.mults))
    return records


def speciality_lower_bound(s: SystemP3, curves) -> int:
    """Sum of the binomial contributions of the given records.

    This is the curve part of the speciality bound; it is exact only
    when the h^2 correction of the underlying inequality vanishes (it
    does for standard-form systems, where it reproduces the dimension
    formula's correction).
    """
    return sum(rec.contribution for rec in curves)
