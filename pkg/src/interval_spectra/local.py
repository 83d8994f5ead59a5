"""Local improvement: walk from the midpoint to vertex matrices chosen by eigenvector signs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bands import BandSet
from .eig import eigh_kernel
from .errors import IterationLimitError
from .intervals import Side, SymmetricIntervalMatrix, _vertex, sign_vector


@dataclass(frozen=True)
class LocalResult:
    bands: BandSet
    iterations_lo: tuple[int, ...]
    iterations_hi: tuple[int, ...]
    # lambda_i values accepted along each search path, midpoint value first
    trace_lo: tuple[tuple[float, ...], ...]
    trace_hi: tuple[tuple[float, ...], ...]


def _improves(new: float, best: float, side: Side) -> bool:
    eps = 1e-10 * (1.0 + abs(best))
    return new > best + eps if side is Side.UPPER else new < best - eps


def local_bounds(a: SymmetricIntervalMatrix, side: Side):
    """One side of the local improvement search for every eigenvalue index.

    Returns ``(endpoints, witnesses, iterations, traces)``. Each endpoint is
    the i-th eigenvalue of its witness, a member of ``a``.
    """
    n = a.n
    mid = np.ascontiguousarray(a.mid)
    w_mid, v_mid = eigh_kernel(mid)
    cap = 2 ** n
    endpoints = np.empty(n)
    witnesses = []
    iterations = []
    traces = []
    for i in range(n):
        best = w_mid[i]
        current, vec = mid, v_mid[:, i]
        trace = [float(best)]
        count = 0
        while True:
            count += 1
            if count > cap:
                raise IterationLimitError(f"local improvement for index {i + 1} exceeded {cap} iterations")
            z = sign_vector(vec)
            cand = _vertex(a.mid, a.rad, z, side.sign)
            w, v = eigh_kernel(cand)
            if not _improves(w[i], best, side):
                break
            best, current, vec = w[i], cand, v[:, i]
            trace.append(float(best))
        endpoints[i] = best
        witnesses.append(current)
        iterations.append(count)
        traces.append(tuple(trace))
    endpoints, witnesses = enforce_interlacing(endpoints, witnesses, side)
    return endpoints, witnesses, tuple(iterations), tuple(traces)


def enforce_interlacing(endpoints: np.ndarray, witnesses: list, side: Side):
    """Repair ordering between neighbouring endpoints using their witnesses.

    If the upper endpoint of band i falls below that of band i+1, the witness
    W of band i+1 has ``lambda_i(W) >= lambda_{i+1}(W)``, so ``lambda_i(W)``
    is an attainable, larger value for band i. Lower endpoints mirror this.
    """
    endpoints = np.array(endpoints, dtype=float)
    witnesses = list(witnesses)
    n = endpoints.size
    if side is Side.UPPER:
        for i in range(n - 2, -1, -1):
            if endpoints[i] < endpoints[i + 1]:
                endpoints[i] = eigh_kernel(witnesses[i + 1])[0][i]
                witnesses[i] = witnesses[i + 1]
    else:
        for i in range(1, n):
            if endpoints[i] > endpoints[i - 1]:
                endpoints[i] = eigh_kernel(witnesses[i - 1])[0][i]
                witnesses[i] = witnesses[i - 1]
    return endpoints, witnesses


def local_improvement(a: SymmetricIntervalMatrix) -> LocalResult:
    """Inner bands from local improvement on both sides."""
    hi, wit_hi, it_hi, tr_hi = local_bounds(a, Side.UPPER)
    lo, wit_lo, it_lo, tr_lo = local_bounds(a, Side.LOWER)
    bands = BandSet(lo, hi, witness_lo=wit_lo, witness_hi=wit_hi)
    return LocalResult(bands, it_lo, it_hi, tr_lo, tr_hi)
