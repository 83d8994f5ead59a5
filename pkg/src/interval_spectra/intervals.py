"""Interval scalars and matrices in midpoint/radius form.

Everything here is plain round-to-nearest floating point. Results are
enclosures in exact arithmetic only; no outward rounding is attempted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ValidationError


class Side(enum.Enum):
    """Which endpoint of the eigenvalue sets is being pushed outward.

    The value doubles as the sign in ``A_c + value * D_z A_Delta D_z``.
    """

    UPPER = 1
    LOWER = -1

    @property
    def sign(self) -> float:
        return float(self.value)


def _frozen(a, ndim: int, name: str) -> np.ndarray:
    arr = np.array(a, dtype=float)
    if arr.ndim != ndim:
        raise ValidationError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains non-finite values")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class IntervalScalar:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValidationError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def rad(self) -> float:
        return 0.5 * (self.hi - self.lo)

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True, eq=False)
class IntervalMatrix:
    """Rectangular interval matrix ``[mid - rad, mid + rad]``."""

    mid: np.ndarray
    rad: np.ndarray

    def __post_init__(self):
        mid = _frozen(self.mid, 2, "midpoint")
        rad = _frozen(self.rad, 2, "radius")
        if mid.shape != rad.shape:
            raise ValidationError(f"midpoint {mid.shape} and radius {rad.shape} shapes differ")
        if np.any(rad < 0):
            raise ValidationError("radius has negative entries")
        object.__setattr__(self, "mid", mid)
        object.__setattr__(self, "rad", rad)

    @classmethod
    def from_bounds(cls, lo, hi) -> "IntervalMatrix":
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        if lo.shape != hi.shape:
            raise ValidationError(f"lower {lo.shape} and upper {hi.shape} shapes differ")
        if np.any(lo > hi):
            raise ValidationError("lower bound exceeds upper bound")
        return cls(0.5 * (lo + hi), 0.5 * (hi - lo))

    @classmethod
    def point(cls, a) -> "IntervalMatrix":
        a = np.asarray(a, dtype=float)
        return cls(a, np.zeros_like(a))

    @property
    def shape(self) -> tuple[int, int]:
        return self.mid.shape

    @property
    def lo(self) -> np.ndarray:
        return self.mid - self.rad

    @property
    def hi(self) -> np.ndarray:
        return self.mid + self.rad

    def entry(self, i: int, j: int) -> IntervalScalar:
        return IntervalScalar(float(self.lo[i, j]), float(self.hi[i, j]))

    def contains(self, a, tol: float = 0.0) -> bool:
        a = np.asarray(a, dtype=float)
        return a.shape == self.shape and bool(np.all(np.abs(a - self.mid) <= self.rad + tol))

    def __eq__(self, other):
        if not isinstance(other, IntervalMatrix) or type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self.mid, other.mid) and np.array_equal(self.rad, other.rad)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class SymmetricIntervalMatrix(IntervalMatrix):
    """The symmetric members of an interval matrix with symmetric mid and rad."""

    def __post_init__(self):
        super().__post_init__()
        mid, rad = self.mid, self.rad
        if mid.shape[0] != mid.shape[1]:
            raise ValidationError(f"symmetric interval matrix must be square, got {mid.shape}")
        scale = 1.0 + np.max(np.abs(mid), initial=0.0)
        if np.max(np.abs(mid - mid.T), initial=0.0) > 1e-12 * scale:
            raise ValidationError("midpoint matrix is not symmetric")
        if np.max(np.abs(rad - rad.T), initial=0.0) > 1e-12 * scale:
            raise ValidationError("radius matrix is not symmetric")
        # Exact symmetry from here on; the algorithms rely on it bitwise.
        for name, a in (("mid", mid), ("rad", rad)):
            sym = np.triu(a) + np.triu(a, 1).T
            sym.setflags(write=False)
            object.__setattr__(self, name, sym)

    @property
    def n(self) -> int:
        return self.mid.shape[0]

    @classmethod
    def from_interval(cls, a: IntervalMatrix) -> "SymmetricIntervalMatrix":
        return cls(a.mid, a.rad)


def vertex_matrix(a: SymmetricIntervalMatrix, z: Sequence[float], side: Side = Side.UPPER) -> np.ndarray:
    """``A_c + D_z A_Delta D_z`` for ``Side.UPPER``, ``A_c - D_z A_Delta D_z`` for ``LOWER``."""
    z = np.asarray(z, dtype=float)
    if z.shape != (a.n,):
        raise ValidationError(f"sign vector has length {z.size}, matrix dimension is {a.n}")
    if not np.all(np.abs(z) == 1.0):
        raise ValidationError("sign vector entries must be +1 or -1")
    return _vertex(a.mid, a.rad, z, side.sign)


def _vertex(mid: np.ndarray, rad: np.ndarray, z: np.ndarray, sign: float) -> np.ndarray:
    # Shared by every algorithm so identical sign vectors give bit-identical matrices.
    return mid + sign * (np.outer(z, z) * rad)


def sign_vector(v: np.ndarray) -> np.ndarray:
    """Componentwise sign with sgn(0) = +1."""
    return np.where(np.asarray(v) >= 0.0, 1.0, -1.0)


def canonical_signs(z: np.ndarray) -> np.ndarray:
    """Flip ``z`` so its first component is +1; the vertex matrix is unchanged."""
    z = np.asarray(z, dtype=float)
    return -z if z.size and z[0] < 0 else z.copy()


def interval_matvec(c: IntervalMatrix, y) -> tuple[np.ndarray, np.ndarray, bool]:
    """Hull of ``{C y : C in [C]}`` for a point vector ``y``.

    Returns ``(lo, hi, contains_zero)``. The hull is exact (each entry of C
    occurs once). ``contains_zero`` is tested with tolerance
    ``1e-12 * (1 + ||C_c||_inf ||y||_inf)``.
    """
    y = np.asarray(y, dtype=float)
    rows, cols = c.shape
    if y.shape != (cols,):
        raise ValidationError(f"vector length {y.size} does not match {cols} columns")
    center = c.mid @ y
    spread = c.rad @ np.abs(y)
    if rows == 0:
        return center, center, True
    tau = 1e-12 * (1.0 + np.max(np.abs(c.mid).sum(axis=1)) * np.max(np.abs(y), initial=0.0))
    contains = bool(np.all(np.abs(center) <= spread + tau))
    return center - spread, center + spread, contains


def decompose(a: SymmetricIntervalMatrix, index_set: Sequence[int]):
    """Split ``a`` by a nonempty 0-based index set J.

    Returns ``(B, C, D)``: B on the complement, C with complement rows and J
    columns, D on J.
    """
    idx = np.asarray(sorted(set(int(i) for i in index_set)), dtype=int)
    if idx.size == 0:
        raise ValidationError("index set must be nonempty")
    if idx[0] < 0 or idx[-1] >= a.n:
        raise ValidationError(f"index set {idx.tolist()} out of range for dimension {a.n}")
    comp = np.setdiff1d(np.arange(a.n), idx)
    b = SymmetricIntervalMatrix(a.mid[np.ix_(comp, comp)], a.rad[np.ix_(comp, comp)])
    c = IntervalMatrix(a.mid[np.ix_(comp, idx)], a.rad[np.ix_(comp, idx)])
    d = SymmetricIntervalMatrix(a.mid[np.ix_(idx, idx)], a.rad[np.ix_(idx, idx)])
    return b, c, d


def jordan_wielandt(a: IntervalMatrix) -> SymmetricIntervalMatrix:
    """Symmetric embedding ``[[0, A^T], [A, 0]]`` of an m x n interval matrix.

    Its min(m, n) largest eigenvalue sets are the singular value sets of ``a``.
    """
    m, n = a.shape
    mid = np.zeros((m + n, m + n))
    rad = np.zeros((m + n, m + n))
    mid[:n, n:] = a.mid.T
    mid[n:, :n] = a.mid
    rad[:n, n:] = a.rad.T
    rad[n:, :n] = a.rad
    return SymmetricIntervalMatrix(mid, rad)


def _interval_products(alo, ahi, blo, bhi):
    cands = np.stack([alo * blo, alo * bhi, ahi * blo, ahi * bhi])
    return cands.min(axis=0), cands.max(axis=0)


def gram_product(a: IntervalMatrix) -> SymmetricIntervalMatrix:
    """Enclosure of ``{A^T A : A in [A]}`` by interval sums of products.

    Diagonal entries use the dependent square ``[min x^2, max x^2]`` of each
    factor, which is tighter than the naive product and still an enclosure.
    """
    lo, hi = a.lo, a.hi
    _, n = a.shape
    glo = np.zeros((n, n))
    ghi = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                sq_hi = np.maximum(lo[:, i] ** 2, hi[:, i] ** 2)
                sq_lo = np.where((lo[:, i] <= 0) & (hi[:, i] >= 0), 0.0,
                                 np.minimum(lo[:, i] ** 2, hi[:, i] ** 2))
                glo[i, i] = sq_lo.sum()
                ghi[i, i] = sq_hi.sum()
            else:
                plo, phi = _interval_products(lo[:, i], hi[:, i], lo[:, j], hi[:, j])
                glo[i, j] = glo[j, i] = plo.sum()
                ghi[i, j] = ghi[j, i] = phi.sum()
    return SymmetricIntervalMatrix(0.5 * (glo + ghi), 0.5 * (ghi - glo))


def sample_member(a: SymmetricIntervalMatrix, rng) -> np.ndarray:
    """Uniformly random symmetric member of ``a``.

    ``rng`` is a seed or a ``numpy.random.Generator``; the same seed always
    yields the same matrix.
    """
    rng = np.random.default_rng(rng)
    u = rng.uniform(-1.0, 1.0, size=a.mid.shape)
    u = np.triu(u) + np.triu(u, 1).T
    return a.mid + u * a.rad
