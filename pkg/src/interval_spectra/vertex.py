"""Exhaustive vertex enumeration over sign vectors with z_1 = +1."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit

from .bands import BandSet
from .eig import eigh_kernel
from .errors import DimensionCapError
from .intervals import Side, SymmetricIntervalMatrix, _vertex
from .parallel import thread_count

DEFAULT_VERTEX_CAP = 25


@njit(cache=True, nogil=True)
def gray_signs(k, n):
    """Sign vector number ``k`` in Gray-code order; component 0 is always +1."""
    g = k ^ (k >> 1)
    z = np.ones(n)
    for j in range(1, n):
        if (g >> (j - 1)) & 1:
            z[j] = -1.0
    return z


@njit(cache=True, nogil=True)
def _extremes_chunk(mid, rad, sign, start, stop):
    n = mid.shape[0]
    best = np.empty(n)
    arg = np.full(n, -1, dtype=np.int64)
    first = True
    a = np.empty((n, n))
    for k in range(start, stop):
        z = gray_signs(k, n)
        for i in range(n):
            for j in range(n):
                a[i, j] = mid[i, j] + sign * ((z[i] * z[j]) * rad[i, j])
        w, _ = eigh_kernel(a)
        for i in range(n):
            if first or (sign > 0 and w[i] > best[i]) or (sign < 0 and w[i] < best[i]):
                best[i] = w[i]
                arg[i] = k
        first = False
    return best, arg


def vertex_side(a: SymmetricIntervalMatrix, side: Side, cap: int = DEFAULT_VERTEX_CAP):
    """Extreme i-th eigenvalue over all 2^(n-1) vertex matrices on one side.

    Returns ``(endpoints, sign_vectors)`` where ``sign_vectors[i]`` attains
    ``endpoints[i]``; ``None`` means the midpoint was never beaten.
    """
    n = a.n
    if n > cap:
        raise DimensionCapError("vertex enumeration", n, cap)
    mid = np.ascontiguousarray(a.mid)
    rad = np.ascontiguousarray(a.rad)
    total = 1 << (n - 1)
    threads = min(thread_count(), max(1, total // 256))
    bounds = np.linspace(0, total, threads + 1).astype(np.int64)
    chunks = list(zip(bounds[:-1], bounds[1:]))
    if threads == 1:
        results = [_extremes_chunk(mid, rad, side.sign, int(s), int(e)) for s, e in chunks]
    else:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(lambda se: _extremes_chunk(mid, rad, side.sign, int(se[0]), int(se[1])), chunks))
    # the search starts from the midpoint eigenvalues; strict comparisons in a
    # fixed chunk order make the reduction independent of the thread count.
    best = eigh_kernel(mid)[0].copy()
    arg = np.full(n, -1, dtype=np.int64)
    better = np.greater if side is Side.UPPER else np.less
    for vals, idx in results:
        upd = better(vals, best)
        best[upd] = vals[upd]
        arg[upd] = idx[upd]
    signs = [None if k < 0 else gray_signs(int(k), n) for k in arg]
    return best, signs


def vertex_enum_bounds(a: SymmetricIntervalMatrix, cap: int = DEFAULT_VERTEX_CAP) -> BandSet:
    """Inner bands from full vertex enumeration.

    The largest upper endpoint and the smallest lower endpoint are the exact
    extremes of the whole eigenvalue set and are flagged as such.
    """
    hi, z_hi = vertex_side(a, Side.UPPER, cap)
    lo, z_lo = vertex_side(a, Side.LOWER, cap)

    def witness(z, side):
        return np.array(a.mid) if z is None else _vertex(a.mid, a.rad, z, side.sign)

    n = a.n
    exact_lo = np.zeros(n, dtype=bool)
    exact_hi = np.zeros(n, dtype=bool)
    exact_lo[-1] = exact_hi[0] = True
    return BandSet(lo, hi, exact_lo, exact_hi,
                   witness_lo=[witness(z, Side.LOWER) for z in z_lo],
                   witness_hi=[witness(z, Side.UPPER) for z in z_hi])
