"""Random-instance benchmark in the layout of the sharpness/time tables."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import numpy as np

from ..errors import ValidationError
from ..intervals import jordan_wielandt
from ..local import local_improvement
from ..parallel import thread_count
from ..submatrix import Mode
from ..vertex import DEFAULT_VERTEX_CAP, vertex_enum_bounds
from .driver import METHODS, default_outer, inner_bands, singular_outer
from .oracle import random_instance, random_interval_matrix, sharpness
from .problem import ReportRecord


def instance_seed(seed: int, n: int, m: Optional[int], r_index: int, trial: int) -> int:
    ss = np.random.SeedSequence([seed, n, 0 if m is None else m, r_index, trial])
    return int(ss.generate_state(1)[0])


def _cell(n: int, m: Optional[int], radius: float, r_index: int, trial: int, seed: int,
          methods: Sequence[str], mode: Mode, vertex_cap: int) -> ReportRecord:
    inst_seed = instance_seed(seed, n, m, r_index, trial)
    if m is None:
        a = random_instance(n, radius, inst_seed)
        q = a.n
    else:
        rect = random_interval_matrix(m, n, radius, inst_seed)
        a = jordan_wielandt(rect)
        q = min(m, n)
    record = ReportRecord(n=n, m=m, radius=radius, trial=trial, seed=inst_seed)

    vertex = None
    if a.n <= vertex_cap:
        t0 = time.perf_counter()
        vertex = vertex_enum_bounds(a, vertex_cap)
        vertex_seconds = time.perf_counter() - t0
    outer = default_outer(a, vertex=vertex) if m is None else singular_outer(rect, vertex=vertex)
    record.outer = outer.head(q)

    seed_bands = None
    for method in methods:
        if method not in METHODS:
            raise ValidationError(f"unknown method {method!r}")
        t0 = time.perf_counter()
        if method == "vertex" and vertex is not None:
            bands, counters = vertex, {"vertices": 2 * (1 << (a.n - 1))}
            elapsed = vertex_seconds
        elif method == "submatrix":
            if seed_bands is None:
                seed_bands = local_improvement(a).bands
            bands, counters = inner_bands(a, method, outer, mode=mode, indices=range(q),
                                          seed=seed_bands)
            elapsed = time.perf_counter() - t0
        else:
            bands, counters = inner_bands(a, method, cap=vertex_cap)
            if method == "local":
                seed_bands = bands
            elapsed = time.perf_counter() - t0
        bands = bands.head(q).without_witnesses()
        record.inner[method] = bands
        record.sharpness[method] = sharpness(bands, record.outer)
        record.seconds[method] = elapsed
        record.counters[method] = counters
    return record


def run_benchmark(n_list: Sequence[int], r_list: Sequence[float], trials: int = 1, seed: int = 0,
                  methods: Sequence[str] = METHODS, mode: Mode = Mode.BRANCH_BOUND,
                  m_list: Optional[Sequence[int]] = None,
                  vertex_cap: int = DEFAULT_VERTEX_CAP) -> list[ReportRecord]:
    """One record per (n, R, trial), or per (m, n, R, trial) for singular values.

    With ``m_list`` the instances are random m x n interval matrices and the
    bands are their singular value sets; otherwise they are ``A^T A``
    enclosures for random n x n interval matrices.
    """
    cells = []
    for m in (m_list or [None]):
        for n in n_list:
            for r_index, radius in enumerate(r_list):
                for trial in range(trials):
                    cells.append((n, m, radius, r_index, trial))

    def work(cell):
        n, m, radius, r_index, trial = cell
        return _cell(n, m, radius, r_index, trial, seed, methods, mode, vertex_cap)

    threads = min(thread_count(), len(cells))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(work, cells))
    return [work(c) for c in cells]


def format_table(records: Sequence[ReportRecord], methods: Sequence[str] = METHODS) -> str:
    """Human table: per-trial rows plus a mean row per cell, 4 decimal places."""
    head = ["m", "n", "R", "trial"] if any(r.m is not None for r in records) else ["n", "R", "trial"]
    for meth in methods:
        head += [f"{meth} sharpness", f"{meth} time"]
    rows = [head]

    def fmt_row(prefix, recs):
        row = list(prefix)
        for meth in methods:
            s = [r.sharpness[meth] for r in recs if meth in r.sharpness]
            t = [r.seconds[meth] for r in recs if meth in r.seconds]
            row += ([f"{np.mean(s):.4f}", f"{np.mean(t):.2f} s"] if s else ["", ""])
        return row

    groups: dict = {}
    for r in records:
        groups.setdefault((r.m, r.n, r.radius), []).append(r)
    for (m, n, radius), recs in groups.items():
        lead = [str(m)] if "m" in head else []
        for r in recs:
            rows.append(fmt_row(lead + [str(n), f"{radius:g}", str(r.trial)], [r]))
        if len(recs) > 1:
            rows.append(fmt_row(lead + [str(n), f"{radius:g}", "mean"], recs))
    widths = [max(len(row[i]) for row in rows) for i in range(len(head))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows)
