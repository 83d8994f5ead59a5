"""Submatrix vertex enumeration with branch & bound pruning and exactness certification.

Boundary points of the eigenvalue sets are eigenvalues of vertex matrices of
principal submatrices D, with an eigenvector y such that ``C y = 0`` for some
C in the off-diagonal block. Candidates are generated by enumerating index
sets J depth-first: the root is {0..n-1} and a child removes one index larger
than the last one removed, so every nonempty subset is reached exactly once.
In branch & bound mode each node first asks whether the interval system

    C y = 0,  (D - lambda I) y = 0,  ||y||_inf = 1,  lambda in window

can possibly be solved; if not, the node and all its descendants are skipped.
Direct mode visits the same nodes in the same order without the test, so both
modes produce bit-identical endpoints whenever the test is sound.
"""

from __future__ import annotations

import enum
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from numba import njit

from .bands import Band, BandSet
from .eig import eigh_kernel
from .errors import DimensionCapError, ValidationError
from .intervals import (IntervalMatrix, Side, SymmetricIntervalMatrix, decompose,
                        sign_vector)
from .local import enforce_interlacing, local_improvement
from .parallel import thread_count
from .simplex import FEAS_TOL, INFEASIBLE, box_feasibility
from .vertex import gray_signs

DEFAULT_SUBMATRIX_CAP = 20
_CACHE_BUDGET = 50_000_000  # floats kept in the per-run eigenpair cache


class Mode(enum.Enum):
    DIRECT = "direct"
    BRANCH_BOUND = "bb"


class FeasibilityVerdict(enum.Enum):
    CERTIFIED_INFEASIBLE = "certified_infeasible"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------- helpers


def select_matrix_with_zero_product(c: IntervalMatrix, y) -> np.ndarray:
    """A member C* of ``c`` with ``C* y = 0``, assuming 0 lies in ``[C] y``.

    Row r moves from the midpoint by ``t_r * sgn(y) * C_Delta`` with
    ``t_r = (C_c y)_r / (C_Delta |y|)_r``; ``|t_r| <= 1`` keeps it inside.
    """
    y = np.asarray(y, dtype=float)
    rows, cols = c.shape
    if y.shape != (cols,):
        raise ValidationError(f"vector length {y.size} does not match {cols} columns")
    if rows == 0:
        return np.zeros((0, cols))
    num = c.mid @ y
    den = c.rad @ np.abs(y)
    tau = 1e-12 * (1.0 + np.max(np.abs(c.mid).sum(axis=1)) * np.max(np.abs(y), initial=0.0))
    bad = np.abs(num) > den + tau
    if np.any(bad):
        r = int(np.argmax(bad))
        raise ValidationError(
            f"0 is not in row {r} of [C]y: |{num[r]}| > {den[r]} (+{tau:.1e})")
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(den > 0, num / den, 0.0)
    t = np.clip(t, -1.0, 1.0)
    return c.mid - t[:, None] * (sign_vector(y)[None, :] * c.rad)


def feasibility_certificate(d: SymmetricIntervalMatrix, c: IntervalMatrix, window,
                            tol: float = FEAS_TOL) -> FeasibilityVerdict:
    """Necessary-condition test for an eigenvalue in ``window`` supported on J.

    Relaxes the interval system (dependencies forgotten, ``|y| <= e``) to

        |(D_c - l_c I) y| <= (D_Delta + l_Delta I) e,  |C_c y| <= C_Delta e,
        -e <= y <= e,  y_i = 1,

    one linear feasibility problem per i. Returns ``CERTIFIED_INFEASIBLE`` only
    when every one of them is infeasible with a verified Farkas certificate.
    """
    lo, hi = (window.lo, window.hi) if isinstance(window, Band) else window
    if lo > hi:
        raise ValidationError(f"empty eigenvalue window [{lo}, {hi}]")
    k = d.n
    if c.shape[1] != k:
        raise ValidationError("C and D column counts differ")
    lam_c, lam_r = 0.5 * (lo + hi), 0.5 * (hi - lo)
    m_c = d.mid - lam_c * np.eye(k)
    m_r = d.rad + lam_r * np.eye(k)
    P = np.vstack([m_c, -m_c, c.mid, -c.mid])
    q = np.concatenate([m_r.sum(axis=1)] * 2 + [c.rad.sum(axis=1)] * 2)
    scale = 1.0 + max(np.max(np.abs(P), initial=0.0), np.max(q, initial=0.0))
    slack = tol * scale
    cols = np.arange(k)
    for i in range(k):
        rest = cols[cols != i]
        G = P[:, rest]
        # y_i = 1 fixed, remaining y_j = x_j - 1 with x_j in [0, 2]
        h = q - P[:, i] + G.sum(axis=1) + slack
        if rest.size == 0:
            if np.all(h >= -slack):
                return FeasibilityVerdict.UNKNOWN
            continue
        verdict, _ = box_feasibility(G, h, 2.0, tol)
        if verdict != INFEASIBLE:
            return FeasibilityVerdict.UNKNOWN
    return FeasibilityVerdict.CERTIFIED_INFEASIBLE


def certify_exact(outer: BandSet, hertz: tuple[bool, bool] = (True, True)):
    """Endpoint exactness implied by gaps between consecutive outer bands.

    An upper endpoint i >= 2 found by submatrix enumeration is exact when the
    outer band i lies strictly below the lower end of outer band i-1; lower
    endpoints mirror this against band i+1. The top upper and bottom lower
    endpoints are always exact (extremes over all vertex matrices).
    """
    n = len(outer)
    exact_hi = np.zeros(n, dtype=bool)
    exact_lo = np.zeros(n, dtype=bool)
    exact_hi[1:] = outer.hi[1:] < outer.lo[:-1]
    exact_lo[:-1] = outer.lo[:-1] > outer.hi[1:]
    if n:
        exact_hi[0] = hertz[0]
        exact_lo[-1] = hertz[1]
    return exact_lo, exact_hi


def restrict_to_gap_indices(outer: BandSet) -> list[int]:
    """0-based indices p with p = 0 or the upper end of band p below the lower end of band p-1."""
    return [p for p in range(len(outer)) if p == 0 or outer.hi[p] < outer.lo[p - 1]]


# ---------------------------------------------------------------- node data


@njit(cache=True, nogil=True)
def _node_eigs(dc, dr, sign):
    k = dc.shape[0]
    nz = 1 << (k - 1)
    vals = np.empty((nz, k))
    vecs = np.empty((nz, k, k))
    signs = np.empty((nz, k))
    d = np.empty((k, k))
    for t in range(nz):
        z = gray_signs(t, k)
        for i in range(k):
            for j in range(k):
                d[i, j] = dc[i, j] + sign * ((z[i] * z[j]) * dr[i, j])
        w, v = eigh_kernel(d)
        vals[t] = w
        vecs[t] = v
        signs[t] = z
    return vals, vecs, signs


@dataclass
class _Node:
    index: np.ndarray          # J
    comp: np.ndarray           # complement of J
    values: np.ndarray         # (2^(k-1), k)
    vectors: np.ndarray        # (2^(k-1), k, k)
    signs: np.ndarray          # (2^(k-1), k)
    zero_ok: np.ndarray        # (2^(k-1), k): 0 in [C] y for each eigenvector


class _NodeCache:
    """Eigenpairs of all vertex matrices of each visited block, per side."""

    def __init__(self, a: SymmetricIntervalMatrix, side: Side):
        self.a = a
        self.side = side
        self._store: dict[tuple, _Node] = {}
        self._size = 0
        self._lock = threading.Lock()
        self.computed = 0

    def get(self, J: tuple) -> _Node:
        node = self._store.get(J)
        if node is not None:
            return node
        node = self._build(J)
        with self._lock:
            self.computed += len(node.values)
            floats = node.vectors.size + node.values.size
            if self._size + floats <= _CACHE_BUDGET:
                self._store[J] = node
                self._size += floats
        return node

    def _build(self, J: tuple) -> _Node:
        a = self.a
        idx = np.array(J, dtype=np.int64)
        comp = np.setdiff1d(np.arange(a.n), idx)
        dc = np.ascontiguousarray(a.mid[np.ix_(idx, idx)])
        dr = np.ascontiguousarray(a.rad[np.ix_(idx, idx)])
        vals, vecs, signs = _node_eigs(dc, dr, self.side.sign)
        if comp.size:
            cc = a.mid[np.ix_(comp, idx)]
            cr = a.rad[np.ix_(comp, idx)]
            center = np.einsum("rj,zji->zri", cc, vecs)
            spread = np.einsum("rj,zji->zri", cr, np.abs(vecs))
            ymax = np.abs(vecs).max(axis=1)  # (nz, k)
            tau = 1e-12 * (1.0 + np.max(np.abs(cc).sum(axis=1)) * ymax)
            zero_ok = np.all(np.abs(center) <= spread + tau[:, None, :], axis=1)
        else:
            zero_ok = np.ones(vals.shape, dtype=bool)
        return _Node(idx, comp, vals, vecs, signs, zero_ok)


# ---------------------------------------------------------------- search


@dataclass
class SearchStats:
    nodes_visited: int = 0
    nodes_pruned: int = 0
    certificates: int = 0
    lp_solved: int = 0
    candidates: int = 0
    improvements: int = 0


@dataclass
class Improvement:
    J: tuple
    z: tuple
    i: int
    lam: float
    endpoint: float
    direct: bool


@dataclass
class SubmatrixResult:
    p: int
    side: Side
    endpoint: float
    witness: np.ndarray = field(repr=False)
    stats: SearchStats
    log: list[Improvement]
    pruned: list[tuple[tuple, int, float]]  # (J, last removed index, endpoint when pruned)


def _check_outer(outer: BandSet, seed: BandSet, tol: float = 1e-9):
    if len(outer) != len(seed):
        raise ValidationError(f"{len(outer)} outer bands for {len(seed)} eigenvalues")
    scale = tol * (1.0 + np.max(np.abs(np.concatenate([outer.lo, outer.hi]))))
    bad = (seed.hi > outer.hi + scale) | (seed.lo < outer.lo - scale)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise ValidationError(
            f"outer band {i + 1} [{outer.lo[i]}, {outer.hi[i]}] does not contain "
            f"inner band [{seed.lo[i]}, {seed.hi[i]}]: outer bounds are invalid")


def _assemble(a: SymmetricIntervalMatrix, node: _Node, c_star: np.ndarray, d: np.ndarray) -> np.ndarray:
    out = np.array(a.mid)  # B := B_c
    J, comp = node.index, node.comp
    out[np.ix_(J, J)] = d
    if comp.size:
        out[np.ix_(comp, J)] = c_star
        out[np.ix_(J, comp)] = c_star.T
    return out


def _eig_p(m: np.ndarray, p: int) -> float:
    return float(eigh_kernel(np.ascontiguousarray(m))[0][p])


def _bisect_witness(w0: np.ndarray, w1: np.ndarray, p: int, target: float) -> np.ndarray:
    """Point on the segment [w0, w1] whose p-th eigenvalue equals ``target``.

    Both ends are members of the (convex) symmetric interval matrix and
    ``lambda_p`` is continuous along the segment.
    """
    f0 = _eig_p(w0, p) - target
    f1 = _eig_p(w1, p) - target
    if f0 == 0:
        return w0
    if f1 == 0 or np.sign(f0) == np.sign(f1):
        return w1
    lo, hi = 0.0, 1.0
    for _ in range(80):
        t = 0.5 * (lo + hi)
        ft = _eig_p((1 - t) * w0 + t * w1, p) - target
        if ft == 0:
            lo = hi = t
            break
        if np.sign(ft) == np.sign(f0):
            lo = t
        else:
            hi = t
    return (1 - hi) * w0 + hi * w1


def _window_open(mu: float, outer: BandSet, p: int, side: Side) -> bool:
    return mu < outer.hi[p] if side is Side.UPPER else mu > outer.lo[p]


def _window(mu: float, outer: BandSet, p: int, side: Side):
    return (mu, float(outer.hi[p])) if side is Side.UPPER else (float(outer.lo[p]), mu)


def _search(a: SymmetricIntervalMatrix, outer: BandSet, p: int, side: Side, mode: Mode,
            mu: float, witness: np.ndarray, cache: _NodeCache) -> SubmatrixResult:
    n = a.n
    stats = SearchStats()
    log: list[Improvement] = []
    pruned: list[tuple[tuple, int, float]] = []
    upper = side is Side.UPPER
    w_hi, w_lo = float(outer.hi[p]), float(outer.lo[p])
    stack = [(tuple(range(n)), -1)]
    while stack:
        if not _window_open(mu, outer, p, side):
            break
        J, last = stack.pop()
        stats.nodes_visited += 1
        node_c = node_d = None
        if mode is Mode.BRANCH_BOUND:
            _, node_c, node_d = decompose(a, J)
            stats.certificates += 1
            stats.lp_solved += len(J)
            verdict = feasibility_certificate(node_d, node_c, _window(mu, outer, p, side))
            if verdict is FeasibilityVerdict.CERTIFIED_INFEASIBLE:
                stats.nodes_pruned += 1
                pruned.append((J, last, mu))
                continue
        node = cache.get(J)
        vals, ok = node.values, node.zero_ok
        if upper:
            hits = (vals > mu) & (vals <= w_hi) & ok
        else:
            hits = (vals < mu) & (vals >= w_lo) & ok
        if hits.any():
            for t, i in zip(*np.nonzero(hits)):
                lam = float(vals[t, i])
                # mu may have moved since the vectorized screen
                if (upper and not lam > mu) or (not upper and not lam < mu):
                    continue
                stats.candidates += 1
                y = node.vectors[t][:, i]
                if node_c is None:
                    _, node_c, _ = decompose(a, J)
                c_star = select_matrix_with_zero_product(node_c, y)
                d = a.mid[np.ix_(node.index, node.index)] + side.sign * (
                    np.outer(node.signs[t], node.signs[t]) * a.rad[np.ix_(node.index, node.index)])
                full = _assemble(a, node, c_star, d)
                direct = (p == 0 or lam < outer.lo[p - 1]) if upper else (p == n - 1 or lam > outer.hi[p + 1])
                if direct:
                    new = lam
                    if abs(_eig_p(full, p) - lam) > 1e-12 * (1.0 + abs(lam)):
                        full = _bisect_witness(witness, full, p, lam)
                else:
                    new = _eig_p(full, p)
                    if (upper and not new > mu) or (not upper and not new < mu):
                        continue
                mu, witness = new, full
                stats.improvements += 1
                log.append(Improvement(J, tuple(node.signs[t].tolist()), int(i), lam, new, direct))
        # children remove one index greater than the last removed; pushed in
        # reverse so they pop in increasing order
        if len(J) > 1:
            for r in reversed([r for r in J if r > last]):
                stack.append((tuple(x for x in J if x != r), r))
    return SubmatrixResult(p, side, mu, witness, stats, log, pruned)


def submatrix_enum(a: SymmetricIntervalMatrix, outer: BandSet, p: int, seed: BandSet,
                   mode: Mode = Mode.BRANCH_BOUND, side: Side = Side.UPPER,
                   cap: int = DEFAULT_SUBMATRIX_CAP, _cache: Optional[_NodeCache] = None) -> SubmatrixResult:
    """Improve one endpoint (band ``p``, 0-based) of the seed inner bands.

    ``outer`` must enclose the true eigenvalue sets; ``seed`` supplies the
    starting endpoint and its witness (local improvement in the standard flow).
    """
    if a.n > cap:
        raise DimensionCapError("submatrix enumeration", a.n, cap)
    if not 0 <= p < a.n:
        raise ValidationError(f"band index {p + 1} out of range 1..{a.n}")
    _check_outer(outer, seed)
    upper = side is Side.UPPER
    mu = float(seed.hi[p] if upper else seed.lo[p])
    wits = seed.witness_hi if upper else seed.witness_lo
    witness = np.array(wits[p]) if wits is not None else None
    if witness is None:
        raise ValidationError("seed bands must carry witness matrices")
    cache = _cache or _NodeCache(a, side)
    return _search(a, outer, p, side, mode, mu, witness, cache)


@dataclass
class SubmatrixRun:
    bands: BandSet
    results: list[SubmatrixResult]

    @property
    def stats(self) -> SearchStats:
        total = SearchStats()
        for r in self.results:
            for f in total.__dataclass_fields__:
                setattr(total, f, getattr(total, f) + getattr(r.stats, f))
        return total


def submatrix_bounds(a: SymmetricIntervalMatrix, outer: BandSet, seed: Optional[BandSet] = None,
                     mode: Mode = Mode.BRANCH_BOUND, indices: Optional[Iterable[int]] = None,
                     sides: Sequence[Side] = (Side.UPPER, Side.LOWER), gaps_only: bool = False,
                     cap: int = DEFAULT_SUBMATRIX_CAP) -> SubmatrixRun:
    """Run submatrix enumeration for every requested (band, side) and certify endpoints.

    Endpoints not searched keep their seed values and are not flagged exact.
    """
    if a.n > cap:
        raise DimensionCapError("submatrix enumeration", a.n, cap)
    if seed is None:
        seed = local_improvement(a).bands
    _check_outer(outer, seed)
    n = a.n
    todo = list(range(n)) if indices is None else sorted(set(indices))
    if gaps_only:
        gaps = set(restrict_to_gap_indices(outer))
        todo = [p for p in todo if p in gaps]
    caches = {s: _NodeCache(a, s) for s in sides}
    tasks = [(p, s) for s in sides for p in todo]

    def run(task):
        p, s = task
        return submatrix_enum(a, outer, p, seed, mode, s, cap, caches[s])

    threads = min(thread_count(), len(tasks))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]

    hi, lo = np.array(seed.hi), np.array(seed.lo)
    wit_hi, wit_lo = list(seed.witness_hi), list(seed.witness_lo)
    searched_hi = np.zeros(n, dtype=bool)
    searched_lo = np.zeros(n, dtype=bool)
    for r in results:
        if r.side is Side.UPPER:
            hi[r.p], wit_hi[r.p], searched_hi[r.p] = r.endpoint, r.witness, True
        else:
            lo[r.p], wit_lo[r.p], searched_lo[r.p] = r.endpoint, r.witness, True
    hi, wit_hi = enforce_interlacing(hi, wit_hi, Side.UPPER)
    lo, wit_lo = enforce_interlacing(lo, wit_lo, Side.LOWER)
    exact_lo, exact_hi = certify_exact(outer)
    bands = BandSet(lo, hi, exact_lo & searched_lo, exact_hi & searched_hi,
                    witness_lo=wit_lo, witness_hi=wit_hi)
    return SubmatrixRun(bands, results)
