"""JSON problem files and report records.

A problem file is one JSON document::

    {"kind": "symmetric", "lower": [[...]], "upper": [[...]],
     "outer": [[lo, hi], ...]}            # "outer" optional

``kind`` is ``"symmetric"`` (square, symmetric bounds) or ``"rectangular"``.
For rectangular problems ``outer`` may list either the q = min(m, n)
singular-value bands or all m + n Jordan-Wielandt bands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from ..bands import BandSet
from ..errors import ValidationError
from ..intervals import IntervalMatrix, SymmetricIntervalMatrix

KINDS = ("symmetric", "rectangular")


@dataclass(frozen=True, eq=False)
class ProblemFile:
    kind: str
    lower: np.ndarray
    upper: np.ndarray
    outer: Optional[BandSet] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown problem kind {self.kind!r}; expected one of {KINDS}")
        lo = np.array(self.lower, dtype=float)
        hi = np.array(self.upper, dtype=float)
        if lo.ndim != 2 or lo.shape != hi.shape:
            raise ValidationError(f"lower {lo.shape} and upper {hi.shape} must be matrices of one shape")
        if np.any(lo > hi):
            raise ValidationError("lower bound exceeds upper bound")
        if self.kind == "symmetric":
            if lo.shape[0] != lo.shape[1]:
                raise ValidationError("symmetric problem needs a square matrix")
            if not (np.array_equal(lo, lo.T) and np.array_equal(hi, hi.T)):
                raise ValidationError("symmetric problem needs symmetric lower and upper matrices")
        for a in (lo, hi):
            a.setflags(write=False)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def shape(self) -> tuple[int, int]:
        return self.lower.shape

    def matrix(self):
        a = IntervalMatrix.from_bounds(self.lower, self.upper)
        return SymmetricIntervalMatrix.from_interval(a) if self.kind == "symmetric" else a

    @classmethod
    def from_matrix(cls, a: IntervalMatrix, outer: Optional[BandSet] = None) -> "ProblemFile":
        kind = "symmetric" if isinstance(a, SymmetricIntervalMatrix) else "rectangular"
        return cls(kind, a.lo, a.hi, outer)

    def to_dict(self) -> dict:
        doc = {"kind": self.kind, "lower": self.lower.tolist(), "upper": self.upper.tolist()}
        if self.outer is not None:
            doc["outer"] = self.outer.pairs()
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "ProblemFile":
        if not isinstance(doc, dict):
            raise ValidationError("problem document must be a JSON object")
        missing = {"kind", "lower", "upper"} - doc.keys()
        if missing:
            raise ValidationError(f"problem document lacks {sorted(missing)}")
        outer = doc.get("outer")
        return cls(doc["kind"], doc["lower"], doc["upper"],
                   None if outer is None else parse_bands(outer))

    def __eq__(self, other):
        if not isinstance(other, ProblemFile):
            return NotImplemented
        return (self.kind == other.kind and np.array_equal(self.lower, other.lower)
                and np.array_equal(self.upper, other.upper) and self.outer == other.outer)

    __hash__ = None


def parse_bands(obj) -> BandSet:
    """Bands from ``[[lo, hi], ...]`` or ``{"outer": [[lo, hi], ...]}``."""
    if isinstance(obj, dict):
        if "outer" not in obj:
            raise ValidationError("band document lacks an 'outer' array")
        obj = obj["outer"]
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bands must be [lo, hi] pairs: {exc}") from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValidationError("bands must be a list of [lo, hi] pairs")
    return BandSet.from_pairs(arr)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) == 1:
            raise ValidationError("file is not valid JSON") from None
        try:
            return [json.loads(ln) for ln in lines]
        except json.JSONDecodeError as exc:
            raise ValidationError(f"file is not valid JSON: {exc}") from None


def loads_problems(text: str) -> list[ProblemFile]:
    """All problems in a JSON document, a JSON array, or JSON lines."""
    doc = _load_json(text)
    docs = doc if isinstance(doc, list) else [doc]
    return [ProblemFile.from_dict(d) for d in docs]


def load_problem(path) -> ProblemFile:
    problems = loads_problems(Path(path).read_text())
    if len(problems) != 1:
        raise ValidationError(f"{path}: expected one problem, found {len(problems)}")
    return problems[0]


def load_bands(path) -> BandSet:
    return parse_bands(_load_json(Path(path).read_text()))


def dumps_problem(problem: ProblemFile) -> str:
    return json.dumps(problem.to_dict())


# ---------------------------------------------------------------- reports


def bands_to_dict(b: BandSet) -> dict:
    return {"bands": b.pairs(), "exact_lo": b.exact_lo.tolist(), "exact_hi": b.exact_hi.tolist()}


def bands_from_dict(doc: dict) -> BandSet:
    return BandSet.from_pairs(doc["bands"], exact_lo=doc["exact_lo"], exact_hi=doc["exact_hi"])


@dataclass(eq=False)
class ReportRecord:
    """One benchmark row: an instance, its outer bands and every method's result."""

    n: int
    radius: float
    trial: int
    seed: int
    m: Optional[int] = None
    outer: Optional[BandSet] = None
    inner: dict = field(default_factory=dict)       # method -> BandSet
    sharpness: dict = field(default_factory=dict)   # method -> float
    seconds: dict = field(default_factory=dict)     # method -> float
    counters: dict = field(default_factory=dict)    # method -> {name: int}

    def __post_init__(self):
        for method, s in self.sharpness.items():
            if not 0.0 <= s <= 1.0:
                raise ValidationError(f"sharpness of {method} outside [0, 1]: {s}")

    def to_dict(self) -> dict:
        return {
            "n": self.n, "m": self.m, "radius": self.radius, "trial": self.trial, "seed": self.seed,
            "outer": None if self.outer is None else bands_to_dict(self.outer),
            "inner": {k: bands_to_dict(v) for k, v in self.inner.items()},
            "sharpness": dict(self.sharpness),
            "seconds": dict(self.seconds),
            "counters": {k: dict(v) for k, v in self.counters.items()},
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "ReportRecord":
        return cls(
            n=doc["n"], m=doc.get("m"), radius=doc["radius"], trial=doc["trial"], seed=doc["seed"],
            outer=None if doc.get("outer") is None else bands_from_dict(doc["outer"]),
            inner={k: bands_from_dict(v) for k, v in doc.get("inner", {}).items()},
            sharpness=dict(doc.get("sharpness", {})),
            seconds=dict(doc.get("seconds", {})),
            counters={k: dict(v) for k, v in doc.get("counters", {}).items()},
        )

    def numeric_key(self) -> dict:
        """Everything except timings; equal for identical seeds and flags."""
        d = self.to_dict()
        d.pop("seconds")
        return d

    def __eq__(self, other):
        if not isinstance(other, ReportRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    __hash__ = None


def dumps_records(records) -> str:
    return "\n".join(json.dumps(r.to_dict()) for r in records)


def loads_records(text: str) -> list[ReportRecord]:
    return [ReportRecord.from_dict(json.loads(ln)) for ln in text.splitlines() if ln.strip()]
