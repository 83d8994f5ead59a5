"""Baseline outer bands ``lambda_i(A_c) +/- rho(A_Delta)`` and their tightening."""

from __future__ import annotations

import numpy as np

from .bands import BandSet
from .eig import spectral_radius_nonneg, sym_eigvals
from .errors import ValidationError
from .intervals import SymmetricIntervalMatrix


def outer_bounds(a: SymmetricIntervalMatrix) -> BandSet:
    """Weyl-type enclosure: every member differs from A_c by E with ||E||_2 <= rho(A_Delta)."""
    centers = sym_eigvals(a.mid)
    rho = spectral_radius_nonneg(a.rad)
    if rho > 0.0:
        # absorb eigensolver round-off so vertex eigenvalues on the Weyl bound stay inside
        rho += 1e-12 * (rho + np.max(np.abs(centers)))
    return BandSet(centers - rho, centers + rho)


def tighten_outer(outer: BandSet, vertex_inner: BandSet, tol: float = 1e-9) -> BandSet:
    """Replace the top and bottom outer endpoints by the exact vertex-enumeration values.

    ``vertex_inner`` must come from full vertex enumeration, whose largest upper
    and smallest lower endpoints are exact. Other endpoints are clipped to the
    new extremes, which only ever narrows them.
    """
    if len(outer) != len(vertex_inner):
        raise ValidationError("outer and inner band counts differ")
    top = float(vertex_inner.hi[0])
    bottom = float(vertex_inner.lo[-1])
    scale = tol * (1.0 + max(abs(top), abs(bottom)))
    if top > outer.hi[0] + scale or bottom < outer.lo[-1] - scale:
        raise ValidationError(
            f"vertex bounds [{bottom}, {top}] escape outer bounds "
            f"[{outer.lo[-1]}, {outer.hi[0]}]: inconsistent input")
    top = min(top, float(outer.hi[0]))
    bottom = max(bottom, float(outer.lo[-1]))
    hi = np.minimum(outer.hi, top)
    lo = np.maximum(outer.lo, bottom)
    lo = np.minimum(lo, hi)
    return BandSet(lo, hi, outer.exact_lo, outer.exact_hi)


def clamp_singular(outer: BandSet, q: int) -> BandSet:
    """Use the +/-sigma structure of a Jordan-Wielandt spectrum to narrow outer bands.

    The top ``q`` bands hold singular values (nonnegative), the middle
    ``N - 2q`` are identically zero, and the bottom ``q`` mirror the top.
    """
    size = len(outer)
    lo = outer.lo.copy()
    hi = outer.hi.copy()
    for i in range(q):
        j = size - 1 - i
        top_lo = max(lo[i], -hi[j], 0.0)
        top_hi = min(hi[i], -lo[j])
        top_lo = min(top_lo, top_hi)
        lo[i], hi[i] = top_lo, top_hi
        lo[j], hi[j] = -top_hi, -top_lo
    lo[q:size - q] = 0.0
    hi[q:size - q] = 0.0
    return BandSet(lo, hi)


def complete_singular(top: BandSet, size: int) -> BandSet:
    """Extend outer bands for the q singular values to the whole Jordan-Wielandt spectrum."""
    q = len(top)
    if q == size:
        return top
    if 2 * q > size:
        raise ValidationError(f"{q} singular-value bands do not fit a spectrum of size {size}")
    if np.any(top.lo < 0):
        raise ValidationError("singular-value outer bands must be nonnegative")
    lo = np.concatenate([top.lo, np.zeros(size - 2 * q), -top.hi[::-1]])
    hi = np.concatenate([top.hi, np.zeros(size - 2 * q), -top.lo[::-1]])
    return BandSet(lo, hi)
