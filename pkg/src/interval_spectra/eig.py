"""Dense symmetric eigendecomposition by cyclic Jacobi rotations.

Jacobi is slow asymptotically but deterministic, simple, and accurate on the
small dense matrices the inner-approximation algorithms produce by the
thousands. Kernels are compiled with numba; ``fastmath`` stays off so the
same input bits always give the same output bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import ValidationError

EPS_EIG = 1e-12
MAX_SWEEPS = 100


@njit(cache=True, nogil=True)
def _jacobi(a, eps, max_sweeps):
    n = a.shape[0]
    A = a.copy()
    V = np.eye(n)
    fro2 = 0.0
    for i in range(n):
        for j in range(n):
            fro2 += A[i, j] * A[i, j]
    thresh = eps * np.sqrt(fro2)
    for _ in range(max_sweeps):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off2 += 2.0 * A[p, q] * A[p, q]
        if np.sqrt(off2) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = c * akp - s * akq
                    A[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk - s * aqk
                    A[q, k] = s * apk + c * aqk
                A[p, q] = 0.0
                A[q, p] = 0.0
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = c * vkp - s * vkq
                    V[k, q] = s * vkp + c * vkq
    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i]
    return w, V


@njit(cache=True, nogil=True)
def _sorted_eigh(a, eps, max_sweeps):
    """Eigenpairs sorted nonincreasing, ties in Jacobi order, signs normalized."""
    w, V = _jacobi(a, eps, max_sweeps)
    n = w.shape[0]
    order = np.argsort(-w, kind="mergesort")
    ws = np.empty(n)
    Vs = np.empty((n, n))
    for col in range(n):
        src = order[col]
        ws[col] = w[src]
        flip = 1.0
        for k in range(n):
            if abs(V[k, src]) > eps:
                if V[k, src] < 0.0:
                    flip = -1.0
                break
        for k in range(n):
            Vs[k, col] = flip * V[k, src]
    return ws, Vs


@njit(cache=True, nogil=True)
def eigh_kernel(a):
    """Numba-callable entry point used by the enumeration kernels."""
    if a.shape[0] == 1:
        return a[0:1, 0].copy(), np.ones((1, 1))
    return _sorted_eigh(a, EPS_EIG, MAX_SWEEPS)


@dataclass(frozen=True, eq=False)
class EigenPairs:
    values: np.ndarray
    vectors: np.ndarray

    def __iter__(self):
        yield self.values
        yield self.vectors


def _check_symmetric(a) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix contains non-finite values")
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12 * max(1.0, np.max(np.abs(a), initial=0.0)):
        raise ValidationError("matrix is not symmetric")
    return a


def sym_eigen(a) -> EigenPairs:
    """Eigenvalues (nonincreasing) and orthonormal eigenvectors of a symmetric matrix.

    Column ``i`` of ``vectors`` belongs to ``values[i]``. The first component
    of each vector exceeding 1e-12 in magnitude is made positive.
    """
    a = _check_symmetric(a)
    if a.shape[0] == 0:
        return EigenPairs(np.empty(0), np.empty((0, 0)))
    w, v = eigh_kernel(a)
    return EigenPairs(w, v)


def sym_eigvals(a) -> np.ndarray:
    return sym_eigen(a).values


def spectral_radius_nonneg(r) -> float:
    """Perron root of a symmetric entrywise nonnegative matrix."""
    r = _check_symmetric(r)
    if np.any(r < 0):
        raise ValidationError("spectral_radius_nonneg requires a nonnegative matrix")
    if r.size == 0:
        return 0.0
    return float(max(eigh_kernel(r)[0][0], 0.0))
