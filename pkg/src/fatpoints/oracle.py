"""Ground-truth dimensions by exact interpolation rank over prime fields.

For a system with assigned base multiplicities, the matrix of all
partial-derivative vanishing conditions (order < m_i at the i-th point)
is evaluated at pseudo-random points over a large prime field; the
actual projective dimension is #monomials - 1 - rank.  Generic position
holds with probability >= 1 - rows*cols/p per sample, and the rank is
maximized over several samples with distinct primes, so silent
under-ranking is negligible at sweep scale.

Primes below 2**52 take a JIT-compiled elimination whose modular
product uses the float-assisted trick (exact for p < 2**52); larger
primes fall back to big-integer elimination.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from .errors import DegenerateSample, SizeLimitExceeded
from .systems import PlaneSystem, QuadricSystem, SystemP3, binom

_FAST_PRIME_LIMIT = 1 << 52


@dataclass(frozen=True)
class OracleConfig:
    """Prime size, sample count and seed of the randomized rank engine."""

    prime_bits: int = 51
    samples: int = 2
    seed: int = 0
    max_side: int = 20000

    def __post_init__(self):
        if self.prime_bits < 50:
            raise ValueError("prime_bits must be >= 50")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")


@dataclass(frozen=True)
class ConditionMatrix:
    """Interpolation condition matrix with entries reduced mod prime."""

    entries: np.ndarray  # shape (rows, cols), dtype uint64 (or object)
    prime: int

    @property
    def nrows(self) -> int:
        return self.entries.shape[0]

    @property
    def ncols(self) -> int:
        return self.entries.shape[1]


@lru_cache(maxsize=None)
def primes_for(prime_bits: int, samples: int) -> tuple[int, ...]:
    """The `samples` largest primes below 2**prime_bits (descending)."""
    ps = []
    p = 1 << prime_bits
    for _ in range(samples):
        p = sympy.prevprime(p)
        ps.append(int(p))
    return tuple(ps)


# --- modular arithmetic kernels -------------------------------------------

def _mm(a, b, p):
    """Vectorized a*b mod p on uint64 arrays, exact for p < 2**52.

    q = trunc(float(a)*float(b)/p) is within 1 of the true quotient, so
    the wrapped remainder a*b - q*p needs at most one +-p correction.
    """
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    q = (a.astype(np.float64) * b.astype(np.float64) / p).astype(np.uint64)
    r = a * b - q * np.uint64(p)
    r = np.where(r >= np.uint64(1) << np.uint64(63), r + np.uint64(p), r)
    r = np.where(r >= np.uint64(p), r - np.uint64(p), r)
    return r


try:
    import numba

    @numba.njit(cache=True)
    def _mulmod_jit(a, b, p, pf):
        q = np.uint64(np.float64(a) * np.float64(b) / pf)
        r = a * b - q * p
        if r >= np.uint64(1) << np.uint64(63):
            r += p
        if r >= p:
            r -= p
        return r

    @numba.njit(cache=True)
    def _invmod_jit(a, p):
        t, newt = np.int64(0), np.int64(1)
        r, newr = np.int64(p), np.int64(a)
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += np.int64(p)
        return np.uint64(t)

    @numba.njit(cache=True)
    def _rank_kernel(A, p):
        rows, cols = A.shape
        pf = np.float64(p)
        rank = 0
        for c in range(cols):
            if rank == rows:
                break
            piv = -1
            for i in range(rank, rows):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv == -1:
                continue
            if piv != rank:
                for j in range(c, cols):
                    tmp = A[rank, j]
                    A[rank, j] = A[piv, j]
                    A[piv, j] = tmp
            inv = _invmod_jit(A[rank, c], p)
            for j in range(c, cols):
                A[rank, j] = _mulmod_jit(A[rank, j], inv, p, pf)
            for i in range(rank + 1, rows):
                f = A[i, c]
                if f == 0:
                    continue
                for j in range(c, cols):
                    s = _mulmod_jit(f, A[rank, j], p, pf)
                    if A[i, j] >= s:
                        A[i, j] -= s
                    else:
                        A[i, j] += p - s
            rank += 1
        return rank

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def _rank_numpy(A, p):
    """Vectorized elimination; used when numba is unavailable."""
    A = A.astype(np.uint64).copy()
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank, c:] = _mm(A[rank, c:], np.uint64(inv), p)
        f = A[rank + 1:, c]
        sub = _mm(f[:, None], A[rank, c:][None, :], p)
        block = A[rank + 1:, c:]
        A[rank + 1:, c:] = np.where(block >= sub, block - sub,
                                    block + np.uint64(p) - sub)
        rank += 1
    return rank


def _rank_bigint(rows, p):
    """Reference elimination over Python ints; works for any prime."""
    rows = [list(map(int, row)) for row in rows]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c] % p
            if f:
                ref = rows[rank]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], ref)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_mod_p(m, p: int | None = None) -> int:
    """Exact rank over F_p of a ConditionMatrix or a (matrix, p) pair."""
    if isinstance(m, ConditionMatrix):
        entries, p = m.entries, m.prime
    else:
        entries = m
    entries = np.asarray(entries)
    if entries.size == 0:
        return 0
    if p < _FAST_PRIME_LIMIT and entries.dtype != object:
        A = (entries.astype(np.uint64) % np.uint64(p)).copy()
        if _HAVE_NUMBA:
            return int(_rank_kernel(A, np.uint64(p)))
        return _rank_numpy(A, p)
    return _rank_bigint(entries.tolist(), p)


# --- condition-matrix construction ----------------------------------------

def _monomials(nvars: int, degree: int):
    """Exponent vectors of total degree <= degree, graded lex order."""
    if nvars == 2:
        return [(i, j) for t in range(degree + 1)
                for i in range(t, -1, -1) for j in (t - i,)]
    return [(i, j, t - i - j) for t in range(degree + 1)
            for i in range(t, -1, -1) for j in range(t - i, -1, -1)]


def _box_monomials(a: int, b: int):
    return [(i, j) for i in range(a + 1) for j in range(b + 1)]


def _falling_factorials(maxk: int, maxdeg: int, p: int) -> np.ndarray:
    """fftab[k][e] = e*(e-1)*...*(e-k+1) mod p (0 when e < k).

    All values are far below 2**50 < p, so no coefficient vanishes mod
    p and characteristic anomalies cannot occur.
    """
    tab = np.zeros((maxk + 1, maxdeg + 1), dtype=np.uint64)
    tab[0, :] = 1
    for k in range(1, maxk + 1):
        for e in range(k, maxdeg + 1):
            tab[k, e] = (int(tab[k - 1, e]) * (e - k + 1)) % p
    return tab


def _power_table(x: int, maxdeg: int, p: int) -> np.ndarray:
    out = np.empty(maxdeg + 1, dtype=np.uint64)
    acc = 1
    for e in range(maxdeg + 1):
        out[e] = acc
        acc = (acc * x) % p
    return out


def _build_rows(E, pts, mults, p):
    """Condition rows for all points: one row per derivative multi-index
    of order < m_i, entries = derivative of each monomial at the point."""
    E = np.asarray(E, dtype=np.int64)
    ncols, nvars = E.shape
    maxdeg = int(E.max(initial=0))
    maxk = max((m - 1 for m in mults if m >= 1), default=0)
    exact = p >= _FAST_PRIME_LIMIT  # float-trick mulmod would round off
    fftab = _falling_factorials(maxk, maxdeg, p)
    rows = []
    for q, m in zip(pts, mults):
        if m < 1:
            continue
        pows = [_power_table(q[v], maxdeg, p) for v in range(nvars)]
        for alpha in _monomials(nvars, m - 1):
            if exact:
                row = np.empty(ncols, dtype=object)
                for j in range(ncols):
                    acc = 1
                    for v in range(nvars):
                        e = int(E[j, v])
                        acc = acc * int(fftab[alpha[v], e]) % p
                        acc = acc * int(pows[v][max(e - alpha[v], 0)]) % p
                    row[j] = acc
            else:
                row = np.ones(ncols, dtype=np.uint64)
                for v in range(nvars):
                    e = E[:, v]
                    row = _mm(row, fftab[alpha[v]][e], p)
                    row = _mm(row, pows[v][np.maximum(e - alpha[v], 0)], p)
            rows.append(row)
    if not rows:
        return np.zeros((0, ncols), dtype=np.uint64)
    return np.vstack(rows)


def _instance_rng(cfg: OracleConfig, tag: str, sample: int) -> random.Random:
    key = f"{cfg.seed}|{tag}|{sample}".encode()
    h = hashlib.blake2b(key, digest_size=8).digest()
    return random.Random(int.from_bytes(h, "big"))


def _sample_points(rng: random.Random, npoints: int, nvars: int, p: int):
    """Distinct affine points with all coordinates nonzero."""
    pts, seen = [], set()
    for _ in range(npoints):
        for _attempt in range(100):
            q = tuple(rng.randrange(1, p) for _ in range(nvars))
            if q not in seen:
                seen.add(q)
                pts.append(q)
                break
        else:
            raise DegenerateSample("could not sample distinct points")
    return pts


def _check_size(rows: int, cols: int, cfg: OracleConfig):
    if rows > cfg.max_side or cols > cfg.max_side:
        raise SizeLimitExceeded(f"matrix {rows}x{cols} exceeds {cfg.max_side}")


def condition_counts_p3(s: SystemP3) -> tuple[int, int]:
    """(row count, column count) of the interpolation matrix: these
    satisfy cols - 1 - rows = virtual dimension, independent of rank."""
    return (sum(binom(m + 2, 3) for m in s.mults), binom(s.degree + 3, 3))


def condition_counts_p2(s: PlaneSystem) -> tuple[int, int]:
    return (sum(binom(m + 1, 2) for m in s.mults), binom(s.degree + 2, 2))


def condition_counts_quadric(s: QuadricSystem) -> tuple[int, int]:
    a, b = s.bidegree
    return (sum(binom(m + 1, 2) for m in s.mults), (a + 1) * (b + 1))


def build_matrix_p3(s: SystemP3, points, p: int) -> ConditionMatrix:
    E = _monomials(3, max(s.degree, 0))
    mults = list(s.mults)
    return ConditionMatrix(_build_rows(E, points, mults, p), p)


def build_matrix_p2(s: PlaneSystem, points, p: int) -> ConditionMatrix:
    E = _monomials(2, max(s.degree, 0))
    return ConditionMatrix(_build_rows(E, points, list(s.mults), p), p)


def build_matrix_quadric(s: QuadricSystem, points, p: int) -> ConditionMatrix:
    a, b = s.bidegree
    E = _box_monomials(max(a, 0), max(b, 0))
    return ConditionMatrix(_build_rows(E, points, list(s.mults), p), p)


def _oracle_dim(tag, cols, counts, build, nvars, npoints, cfg):
    _check_size(counts, cols, cfg)
    best = 0
    for sample, p in enumerate(primes_for(cfg.prime_bits, cfg.samples)):
        rng = _instance_rng(cfg, tag, sample)
        pts = _sample_points(rng, npoints, nvars, p)
        best = max(best, rank_mod_p(build(pts, p)))
        if best == min(counts, cols):
            break  # rank already maximal
    return cols - 1 - best


def oracle_dim_p3(s: SystemP3, cfg: OracleConfig = OracleConfig()) -> int:
    """Actual projective dimension of (d; m1..mr); -1 means empty."""
    if s.degree < 0:
        return -1
    rows, cols = condition_counts_p3(s)
    active = [m for m in s.mults if m >= 1]
    tag = f"p3:{s.degree}:{','.join(map(str, active))}"
    return _oracle_dim(tag, cols, rows,
                       lambda pts, p: build_matrix_p3(
                           SystemP3(s.degree, active), pts, p),
                       3, len(active), cfg)


def oracle_dim_p2(s: PlaneSystem, cfg: OracleConfig = OracleConfig()) -> int:
    if s.degree < 0:
        return -1
    rows, cols = condition_counts_p2(s)
    active = [m for m in s.mults if m >= 1]
    tag = f"p2:{s.degree}:{','.join(map(str, active))}"
    return _oracle_dim(tag, cols, rows,
                       lambda pts, p: build_matrix_p2(
                           PlaneSystem(s.degree, active), pts, p),
                       2, len(active), cfg)


def oracle_dim_quadric(s: QuadricSystem,
                       cfg: OracleConfig = OracleConfig()) -> int:
    a, b = s.bidegree
    if a < 0 or b < 0:
        return -1
    rows, cols = condition_counts_quadric(s)
    active = [m for m in s.mults if m >= 1]
    tag = f"q:{a},{b}:{','.join(map(str, active))}"
    return _oracle_dim(tag, cols, rows,
                       lambda pts, p: build_matrix_quadric(
                           QuadricSystem((a, b), active), pts, p),
                       2, len(active), cfg)
