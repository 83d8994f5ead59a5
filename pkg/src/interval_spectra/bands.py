"""Vectors of eigenvalue bands with per-endpoint exactness flags."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .errors import ValidationError
from .intervals import IntervalScalar


Band = IntervalScalar


def _ro(a, dtype=float) -> np.ndarray:
    arr = np.array(a, dtype=dtype).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BandSet:
    """n closed bands ordered so that both endpoint sequences are nonincreasing.

    ``witness_lo[i]`` / ``witness_hi[i]``, when present, is a member of the
    interval matrix whose i-th eigenvalue equals the corresponding endpoint.
    """

    lo: np.ndarray
    hi: np.ndarray
    exact_lo: Optional[np.ndarray] = None
    exact_hi: Optional[np.ndarray] = None
    witness_lo: Optional[tuple] = field(default=None, repr=False)
    witness_hi: Optional[tuple] = field(default=None, repr=False)

    def __post_init__(self):
        lo, hi = _ro(self.lo), _ro(self.hi)
        n = lo.size
        if hi.size != n:
            raise ValidationError("band endpoint vectors differ in length")
        if not np.all(np.isfinite(lo)) or not np.all(np.isfinite(hi)):
            raise ValidationError("band endpoints must be finite")
        if np.any(lo > hi):
            i = int(np.argmax(lo > hi))
            raise ValidationError(f"band {i + 1} is empty: [{lo[i]}, {hi[i]}]")
        if np.any(np.diff(lo) > 0) or np.any(np.diff(hi) > 0):
            raise ValidationError("band endpoints must be nonincreasing in the band index")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        for name in ("exact_lo", "exact_hi"):
            flags = getattr(self, name)
            flags = np.zeros(n, dtype=bool) if flags is None else _ro(flags, bool)
            if flags.size != n:
                raise ValidationError(f"{name} has wrong length")
            object.__setattr__(self, name, flags)
        for name in ("witness_lo", "witness_hi"):
            w = getattr(self, name)
            if w is not None:
                if len(w) != n:
                    raise ValidationError(f"{name} has wrong length")
                object.__setattr__(self, name, tuple(w))

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]], **kw) -> "BandSet":
        arr = np.asarray(pairs, dtype=float).reshape(-1, 2)
        return cls(arr[:, 0], arr[:, 1], **kw)

    def __len__(self) -> int:
        return self.lo.size

    def band(self, i: int) -> Band:
        return Band(float(self.lo[i]), float(self.hi[i]))

    def pairs(self) -> list[list[float]]:
        return [[float(a), float(b)] for a, b in zip(self.lo, self.hi)]

    @property
    def radii(self) -> np.ndarray:
        return 0.5 * (self.hi - self.lo)

    def within(self, other: "BandSet", tol: float = 0.0) -> bool:
        """True if every band of ``self`` lies inside the matching band of ``other``."""
        return len(self) == len(other) and bool(
            np.all(self.lo >= other.lo - tol) and np.all(self.hi <= other.hi + tol))

    def head(self, q: int) -> "BandSet":
        cut = lambda w: None if w is None else w[:q]
        return BandSet(self.lo[:q], self.hi[:q], self.exact_lo[:q], self.exact_hi[:q],
                       cut(self.witness_lo), cut(self.witness_hi))

    def with_flags(self, exact_lo, exact_hi) -> "BandSet":
        return replace(self, exact_lo=exact_lo, exact_hi=exact_hi)

    def without_witnesses(self) -> "BandSet":
        return replace(self, witness_lo=None, witness_hi=None)

    def __eq__(self, other):
        if not isinstance(other, BandSet):
            return NotImplemented
        return (np.array_equal(self.lo, other.lo) and np.array_equal(self.hi, other.hi)
                and np.array_equal(self.exact_lo, other.exact_lo)
                and np.array_equal(self.exact_hi, other.exact_hi))

    __hash__ = None
