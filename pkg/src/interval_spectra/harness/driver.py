"""Method dispatch shared by the CLI and the benchmark runner."""

from __future__ import annotations

from dataclasses import asdict
from typing import Optional, Sequence

from ..bands import BandSet
from ..errors import ValidationError
from ..intervals import IntervalMatrix, Side, SymmetricIntervalMatrix, jordan_wielandt
from ..local import local_improvement
from ..outer import clamp_singular, complete_singular, outer_bounds, tighten_outer
from ..submatrix import DEFAULT_SUBMATRIX_CAP, Mode, submatrix_bounds
from ..vertex import DEFAULT_VERTEX_CAP, vertex_enum_bounds

METHODS = ("local", "vertex", "submatrix")


def default_outer(a: SymmetricIntervalMatrix, tighten: bool = True, vertex: Optional[BandSet] = None,
                  vertex_cap: int = DEFAULT_VERTEX_CAP) -> BandSet:
    """Baseline outer bands, tightened by vertex enumeration when affordable."""
    outer = outer_bounds(a)
    if tighten and (vertex is not None or a.n <= vertex_cap):
        vertex = vertex if vertex is not None else vertex_enum_bounds(a, vertex_cap)
        outer = tighten_outer(outer, vertex)
    return outer


def inner_bands(a: SymmetricIntervalMatrix, method: str, outer: Optional[BandSet] = None, *,
                mode: Mode = Mode.BRANCH_BOUND, sides: Sequence[Side] = (Side.UPPER, Side.LOWER),
                indices=None, gaps_only: bool = False, cap: Optional[int] = None,
                seed: Optional[BandSet] = None):
    """Inner bands by one method. Returns ``(bands, counters)``."""
    if method == "local":
        res = local_improvement(a)
        return res.bands, {"iterations_max": max(res.iterations_lo + res.iterations_hi, default=0),
                           "iterations_total": sum(res.iterations_lo + res.iterations_hi)}
    if method == "vertex":
        bands = vertex_enum_bounds(a, DEFAULT_VERTEX_CAP if cap is None else cap)
        return bands, {"vertices": 2 * (1 << (a.n - 1))}
    if method == "submatrix":
        if outer is None:
            raise ValidationError("submatrix enumeration needs outer bands")
        run = submatrix_bounds(a, outer, seed=seed, mode=mode, indices=indices, sides=sides,
                               gaps_only=gaps_only,
                               cap=DEFAULT_SUBMATRIX_CAP if cap is None else cap)
        return run.bands, asdict(run.stats)
    raise ValidationError(f"unknown method {method!r}; expected one of {METHODS}")


def singular_outer(a: IntervalMatrix, outer: Optional[BandSet] = None, tighten: bool = True,
                   vertex: Optional[BandSet] = None) -> BandSet:
    """Outer bands for the whole Jordan-Wielandt spectrum of ``a``.

    Supplied bands may cover the q singular values or the full spectrum.
    """
    m, n = a.shape
    q = min(m, n)
    if outer is not None:
        if len(outer) == q:
            return complete_singular(outer, m + n)
        if len(outer) == m + n:
            return outer
        raise ValidationError(f"expected {q} or {m + n} outer bands, got {len(outer)}")
    jw = jordan_wielandt(a)
    return clamp_singular(default_outer(jw, tighten, vertex), q)


def singular_bounds(a: IntervalMatrix, method: str, outer: Optional[BandSet] = None, *,
                    mode: Mode = Mode.BRANCH_BOUND, cap: Optional[int] = None, tighten: bool = True):
    """Inner bands for the q = min(m, n) singular value sets of ``a``.

    Runs ``method`` on the Jordan-Wielandt embedding; for submatrix
    enumeration only the q largest bands are searched. Returns
    ``(bands, full_outer, counters)``.
    """
    m, n = a.shape
    q = min(m, n)
    jw = jordan_wielandt(a)
    full_outer = None
    if method == "submatrix":
        full_outer = singular_outer(a, outer, tighten)
    elif outer is not None:
        full_outer = singular_outer(a, outer)
    bands, counters = inner_bands(jw, method, full_outer, mode=mode, indices=range(q), cap=cap)
    return bands.head(q), full_outer, counters
