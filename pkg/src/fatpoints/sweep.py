"""Cross-validation sweeps: the reduction algorithm against the oracle."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from multiprocessing import Pool

from .dimension import full_dim
from .oracle import OracleConfig, oracle_dim_p3
from .systems import SystemP3, normalize


@dataclass(frozen=True)
class SweepRow:
    system: SystemP3
    fast_dim: int
    oracle_dim: int

    @property
    def match(self) -> bool:
        return self.fast_dim == self.oracle_dim


def enumerate_systems(dmax: int, mmax: int, rmax: int):
    """All canonical (sorted, positive-multiplicity) systems with
    d <= dmax, r <= rmax, m_i <= mmax."""
    values = list(range(mmax, 0, -1))
    for d in range(dmax + 1):
        for r in range(rmax + 1):
            for mults in combinations_with_replacement(values, r):
                yield SystemP3(d, mults)


def random_systems(n: int, dmax: int, mmax: int, rmax: int, seed: int):
    """n seeded random normalized systems (duplicates allowed)."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        r = rng.randint(0, rmax)
        s = SystemP3(rng.randint(0, dmax),
                     tuple(rng.randint(0, mmax) for _ in range(r)))
        out.append(normalize(s))
    return out


_WORKER_CFG: OracleConfig | None = None


def _init_worker(cfg):
    global _WORKER_CFG
    _WORKER_CFG = cfg


def _compare(args):
    degree, mults = args
    s = SystemP3(degree, mults)
    return (degree, mults, full_dim(s).dim, oracle_dim_p3(s, _WORKER_CFG))


def compare_systems(systems, cfg: OracleConfig, jobs: int | None = None):
    """Evaluate fast and oracle dimensions for every system; returns
    SweepRows in canonical (sorted-by-instance) order regardless of
    scheduling."""
    items = sorted({(s.degree, s.mults) for s in systems})
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(items) > 1:
        with Pool(jobs, initializer=_init_worker, initargs=(cfg,)) as pool:
            raw = pool.map(_compare, items, chunksize=16)
    else:
        _init_worker(cfg)
        raw = [_compare(it) for it in items]
    return [SweepRow(SystemP3(d, m), fast, orc) for d, m, fast, orc in raw]


def mismatches(rows):
    return [row for row in rows if not row.match]
