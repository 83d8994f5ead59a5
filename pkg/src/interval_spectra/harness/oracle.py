"""Random instances, the sharpness metric, and Monte Carlo oracles.

The oracles use LAPACK (``numpy.linalg``) rather than the Jacobi kernel so
they stay independent of the code paths they are used to check.
"""

from __future__ import annotations

import numpy as np

from ..bands import BandSet
from ..errors import ValidationError
from ..intervals import IntervalMatrix, SymmetricIntervalMatrix, gram_product


def sharpness(inner: BandSet, outer: BandSet, tol: float = 1e-9) -> float:
    """``1 - sum(inner radii) / sum(outer radii)``; 0 means inner and outer coincide."""
    if len(inner) != len(outer):
        raise ValidationError(f"{len(inner)} inner bands against {len(outer)} outer bands")
    if not inner.within(outer, tol * (1.0 + np.max(np.abs(outer.hi), initial=0.0))):
        raise ValidationError("inner bands are not contained in outer bands")
    total = float(outer.radii.sum())
    if total <= 0.0:
        raise ValidationError("sharpness undefined: every outer band is a point")
    return float(np.clip(1.0 - inner.radii.sum() / total, 0.0, 1.0))


def random_interval_matrix(m: int, n: int, radius: float, seed) -> IntervalMatrix:
    """Midpoints uniform in [-20, 20], radii uniform in [0, radius]."""
    if m < 1 or n < 1:
        raise ValidationError("dimensions must be positive")
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    rng = np.random.default_rng(seed)
    mid = rng.uniform(-20.0, 20.0, size=(m, n))
    rad = rng.uniform(0.0, radius, size=(m, n))
    return IntervalMatrix(mid, rad)


def random_instance(n: int, radius: float, seed) -> SymmetricIntervalMatrix:
    """Enclosure of ``A^T A`` for a random n x n interval matrix A."""
    return gram_product(random_interval_matrix(n, n, radius, seed))


def _batched_members(a: SymmetricIntervalMatrix, count: int, rng, boundary_fraction: float):
    n = a.n
    lo, hi = a.lo, a.hi
    n_edge = int(round(count * boundary_fraction))
    u = rng.uniform(-1.0, 1.0, size=(count - n_edge, n, n))
    u = np.triu(u) + np.swapaxes(np.triu(u, 1), 1, 2)
    interior = a.mid + u * a.rad
    if n_edge == 0:
        return interior
    # extreme members: every entry at an endpoint, chosen by a random sign
    # pattern and direction
    z = rng.choice([-1.0, 1.0], size=(n_edge, n))
    s = rng.choice([-1.0, 1.0], size=(n_edge, 1, 1))
    pattern = s * z[:, :, None] * z[:, None, :]
    edge = np.where(pattern > 0, hi, lo)
    return np.concatenate([interior, edge])


def monte_carlo_inner(a: SymmetricIntervalMatrix, samples: int, seed, boundary_fraction: float = 0.0,
                      batch: int = 20_000) -> BandSet:
    """Bandwise min/max of eigenvalues over random symmetric members.

    Every sample is a member, so the result is contained in the true
    eigenvalue sets. ``boundary_fraction`` of the samples are drawn with all
    entries at interval endpoints (a random sign pattern); the rest are
    uniform in the box.
    """
    if samples < 1:
        raise ValidationError("need at least one sample")
    if not 0.0 <= boundary_fraction <= 1.0:
        raise ValidationError("boundary_fraction must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    n = a.n
    lo = np.full(n, np.inf)
    hi = np.full(n, -np.inf)
    done = 0
    while done < samples:
        count = min(batch, samples - done)
        mats = _batched_members(a, count, rng, boundary_fraction)
        w = np.linalg.eigvalsh(mats)[:, ::-1]
        lo = np.minimum(lo, w.min(axis=0))
        hi = np.maximum(hi, w.max(axis=0))
        done += count
    return BandSet(lo, hi)


def nonsymmetric_real_eigenvalues(a: IntervalMatrix, samples: int, seed, imag_tol: float = 1e-9) -> np.ndarray:
    """Real eigenvalues of uniformly sampled, generally nonsymmetric members of ``a``."""
    rng = np.random.default_rng(seed)
    u = rng.uniform(-1.0, 1.0, size=(samples,) + a.shape)
    mats = a.mid + u * a.rad
    w = np.linalg.eigvals(mats).ravel()
    scale = 1.0 + np.max(np.abs(w), initial=0.0)
    return np.sort(w[np.abs(w.imag) <= imag_tol * scale].real)
