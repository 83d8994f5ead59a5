"""Phase-one simplex (Bland's rule) for ``G x <= h, x >= 0`` with Farkas certificates.

Infeasibility is only reported once the dual vector read off the final
tableau has been re-checked as a Farkas certificate in plain arithmetic, so
a claim of infeasibility never rests on pivoting round-off alone.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FEAS_TOL = 1e-9

FEASIBLE = 0
INFEASIBLE = 1
STALLED = 2


@njit(cache=True, nogil=True)
def _phase_one(G, h, tol, max_iter):
    m, k = G.shape
    art_rows = np.zeros(m, dtype=np.int64)
    n_art = 0
    for r in range(m):
        if h[r] < 0.0:
            art_rows[r] = 1
            n_art += 1
    ncol = k + m + n_art
    T = np.zeros((m, ncol + 1))
    basis = np.empty(m, dtype=np.int64)
    a = 0
    for r in range(m):
        sgn = -1.0 if art_rows[r] else 1.0
        for j in range(k):
            T[r, j] = sgn * G[r, j]
        T[r, k + r] = sgn
        T[r, ncol] = sgn * h[r]
        if art_rows[r]:
            T[r, k + m + a] = 1.0
            basis[r] = k + m + a
            a += 1
        else:
            basis[r] = k + r
    # reduced costs of the phase-one objective (sum of artificials)
    d = np.zeros(ncol + 1)
    for j in range(k + m, ncol):
        d[j] = 1.0
    for r in range(m):
        if art_rows[r]:
            for j in range(ncol + 1):
                d[j] -= T[r, j]
    status = STALLED
    for _ in range(max_iter):
        enter = -1
        for j in range(ncol):
            if d[j] < -tol:
                enter = j
                break
        if enter < 0:
            status = INFEASIBLE if -d[ncol] > tol else FEASIBLE
            break
        leave = -1
        best_ratio = 0.0
        for r in range(m):
            if T[r, enter] > tol:
                ratio = T[r, ncol] / T[r, enter]
                if leave < 0 or ratio < best_ratio or (ratio == best_ratio and basis[r] < basis[leave]):
                    leave = r
                    best_ratio = ratio
        if leave < 0:
            # unbounded direction in a phase-one problem means numerical trouble
            break
        piv = T[leave, enter]
        for j in range(ncol + 1):
            T[leave, j] /= piv
        for r in range(m):
            if r != leave:
                f = T[r, enter]
                if f != 0.0:
                    for j in range(ncol + 1):
                        T[r, j] -= f * T[leave, j]
        f = d[enter]
        for j in range(ncol + 1):
            d[j] -= f * T[leave, j]
        basis[leave] = enter
    u = np.empty(m)
    for r in range(m):
        u[r] = d[k + r]
    return status, u


def farkas_holds(G: np.ndarray, h: np.ndarray, u: np.ndarray, box: float) -> bool:
    """True if ``u`` proves ``G x <= h`` has no solution with ``0 <= x <= box``.

    For any such x, ``u^T G x >= sum(min(0, box * (u^T G)_j))``; infeasibility
    follows when that lower bound exceeds ``u^T h`` by more than the
    round-off slack of the check itself.
    """
    u = np.maximum(u, 0.0)
    if not np.any(u > 0):
        return False
    r = u @ G
    lower = np.minimum(0.0, box * r).sum()
    rhs = u @ h
    slack = 1e-10 * (u @ (np.abs(h) + box * np.abs(G).sum(axis=1) + 1.0))
    return bool(lower > rhs + slack)


def box_feasibility(G, h, box: float, tol: float = FEAS_TOL):
    """Decide feasibility of ``G x <= h`` over ``[0, box]^k``.

    Returns ``(verdict, certificate)``: ``verdict`` is ``INFEASIBLE`` only with
    a verified Farkas vector, ``FEASIBLE`` when phase one reaches zero, and
    ``STALLED`` on numerical trouble.
    """
    G = np.ascontiguousarray(G, dtype=float)
    h = np.ascontiguousarray(h, dtype=float)
    m, k = G.shape
    G_full = np.vstack([G, np.eye(k)])
    h_full = np.concatenate([h, np.full(k, float(box))])
    status, u = _phase_one(G_full, h_full, tol, 50 * (G_full.shape[0] + k) + 100)
    if status == INFEASIBLE:
        if farkas_holds(G_full, h_full, u, box):
            return INFEASIBLE, u
        return STALLED, None
    return status, None
