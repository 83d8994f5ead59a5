"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (visible under ``pytest -v``)
and then asserts the same condition. Runtimes are measured after a warm-up
call so that one-off JIT compilation is not charged to any criterion.
"""

import contextlib
import io
import json
import time
from pathlib import Path

import numpy as np
import pytest

from conftest import E1_MID, E1_OUTER, E1_RAD, E2_OUTER, E3A_OUTER, E3B_OUTER
from interval_spectra import (
    BandSet,
    IntervalMatrix,
    Mode,
    SymmetricIntervalMatrix,
    local_improvement,
    submatrix_bounds,
    vertex_enum_bounds,
)
from interval_spectra.harness import (
    default_outer,
    monte_carlo_inner,
    random_instance,
    run_benchmark,
    sharpness,
    singular_bounds,
)
from interval_spectra.harness.cli import main as cli_main
from interval_spectra.harness.oracle import nonsymmetric_real_eigenvalues

DATA = Path(__file__).parent / "data"

E1_MU = [(3.7321, 6.7843), (0.0888, 0.3230), (-4.1072, -1.0000)]
E1_MU_SUB = [(3.7321, 6.7843), (0.0000, 0.3230), (-4.1072, -1.0000)]
E2_MU = [(12560.8377, 12720.2273), (7002.2828, 7126.8283), (3337.0785, 3443.3127), (842.9251, 967.1082)]


@pytest.fixture(scope="module", autouse=True)
def warm_up():
    a = SymmetricIntervalMatrix(E1_MID, E1_RAD)
    local_improvement(a)
    vertex_enum_bounds(a)
    for mode in Mode:
        submatrix_bounds(a, BandSet.from_pairs(E1_OUTER), mode=mode)


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
    assert ok, detail


def max_dev(bands, expected):
    return float(np.max(np.abs(np.asarray(bands.pairs()) - np.asarray(expected))))


def test_criterion_01_small_3x3_local_and_vertex(capsys, e1):
    t0 = time.perf_counter()
    loc = local_improvement(e1).bands
    vert = vertex_enum_bounds(e1)
    elapsed = time.perf_counter() - t0
    dev = max(max_dev(loc, E1_MU), max_dev(vert, E1_MU))
    ok = dev <= 5e-4 and elapsed < 1.0
    report(capsys, 1, ok, f"max deviation {dev:.2e} (tol 5e-4), {elapsed:.3f} s (< 1 s)")


def test_criterion_02_small_3x3_submatrix(capsys):
    devs, flags = [], []
    t0 = time.perf_counter()
    for mode in ("direct", "bb"):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(["inner", "--method", "submatrix", "--mode", mode,
                             "--outer", str(DATA / "e1_outer.json"), str(DATA / "e1.json")])
        assert code == 0
        doc = json.loads(buf.getvalue())
        devs.append(float(np.max(np.abs(np.asarray(doc["bands"]) - np.asarray(E1_MU_SUB)))))
        flags.append(all(doc["exact_lo"]) and all(doc["exact_hi"]))
    elapsed = time.perf_counter() - t0
    ok = max(devs) <= 5e-4 and all(flags) and elapsed < 5.0
    report(capsys, 2, ok, f"direct/bb deviation {devs[0]:.2e}/{devs[1]:.2e}, all six exact: {flags}, {elapsed:.3f} s (< 5 s)")


def test_criterion_03_tridiagonal_4x4(capsys, e2):
    outer = BandSet.from_pairs(E2_OUTER)
    t0 = time.perf_counter()
    loc = local_improvement(e2).bands
    vert = vertex_enum_bounds(e2)
    sub = {mode: submatrix_bounds(e2, outer, mode=mode).bands for mode in Mode}
    elapsed = time.perf_counter() - t0
    dev = max([max_dev(loc, E2_MU), max_dev(vert, E2_MU)] + [max_dev(b, E2_MU) for b in sub.values()])
    exact = all(b.exact_lo.all() and b.exact_hi.all() for b in sub.values())
    ok = dev <= 5e-3 and exact and elapsed < 5.0
    report(capsys, 3, ok, f"max deviation {dev:.2e} (tol 5e-3), all endpoints exact: {exact}, {elapsed:.3f} s (< 5 s)")


def test_criterion_04_singular_3x2(capsys, e3a):
    t0 = time.perf_counter()
    vert, _, _ = singular_bounds(e3a, "vertex")
    sub, _, _ = singular_bounds(e3a, "submatrix", BandSet.from_pairs(E3A_OUTER))
    elapsed = time.perf_counter() - t0
    dev_v = max_dev(vert, [(2.5616, 4.5431), (1.2120, 2.8541)])
    dev_s = max_dev(sub, [(2.5616, 4.5431), (1.0000, 2.8541)])
    ok = dev_v <= 5e-4 and dev_s <= 5e-4 and bool(sub.exact_lo[1]) and elapsed < 10.0
    report(capsys, 4, ok, f"vertex deviation {dev_v:.2e}, submatrix deviation {dev_s:.2e}, "
                          f"lower end of band 2 = {sub.lo[1]:.6f} certified {bool(sub.exact_lo[1])}, {elapsed:.3f} s (< 10 s)")


def test_criterion_05_singular_3x3_lower_extreme(capsys, e3b):
    t0 = time.perf_counter()
    sub, _, _ = singular_bounds(e3b, "submatrix", BandSet.from_pairs(E3B_OUTER))
    vert, _, _ = singular_bounds(e3b, "vertex")
    elapsed = time.perf_counter() - t0
    dev = max(max_dev(sub.head(1), [(4.5548, 13.9371)]),
              abs(sub.lo[2] - 0.1296), abs(sub.hi[2] - 2.9517))
    ok = (dev <= 5e-4 and abs(vert.lo[0] - 4.6611) <= 5e-4 and sub.lo[0] < vert.lo[0]
          and elapsed < 60.0)
    report(capsys, 5, ok, f"deviation {dev:.2e}, band 1 lower end {sub.lo[0]:.4f} < vertex {vert.lo[0]:.4f}, "
                          f"{elapsed:.3f} s (< 60 s)")


def test_criterion_06_property_suite(capsys):
    t0 = time.perf_counter()
    records = run_benchmark([5, 8], [0.01, 0.1, 1.0], trials=20, seed=2024)
    failures = []
    for r in records:
        s = r.sharpness
        if not all(0.0 <= v <= 1.0 for v in s.values()):
            failures.append((r.n, r.radius, r.trial, "range"))
        if not s["local"] >= s["vertex"] >= s["submatrix"]:
            failures.append((r.n, r.radius, r.trial, "sharpness order"))
        if not (r.inner["local"].within(r.inner["vertex"]) and r.inner["vertex"].within(r.inner["submatrix"])):
            failures.append((r.n, r.radius, r.trial, "dominance"))
        a = random_instance(r.n, r.radius, r.seed)
        oracle = monte_carlo_inner(a, 10 ** 4, r.seed)
        if not oracle.within(r.outer, 1e-9 * (1 + np.abs(r.outer.hi).max())):
            failures.append((r.n, r.radius, r.trial, "oracle outside outer"))
        for method in ("vertex", "submatrix"):
            b = r.inner[method]
            if np.any(oracle.hi[b.exact_hi] > b.hi[b.exact_hi] + 1e-9) or \
                    np.any(oracle.lo[b.exact_lo] < b.lo[b.exact_lo] - 1e-9):
                failures.append((r.n, r.radius, r.trial, f"oracle beyond exact {method} endpoint"))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300.0
    report(capsys, 6, ok, f"{len(records)} instances, {len(failures)} violations {failures[:3]}, "
                          f"{elapsed:.1f} s (< 300 s)")


def test_criterion_07_vertex_extremes_exact(capsys):
    t0 = time.perf_counter()
    worst_over, worst_gap = -np.inf, 0.0
    for seed in range(10):
        a = random_instance(6, 1.0, 700 + seed)
        vert = vertex_enum_bounds(a)
        oracle = monte_carlo_inner(a, 10 ** 5, seed, boundary_fraction=0.5)
        worst_over = max(worst_over, oracle.hi[0] - vert.hi[0], vert.lo[-1] - oracle.lo[-1])
        worst_gap = max(worst_gap, vert.hi[0] - oracle.hi[0], oracle.lo[-1] - vert.lo[-1])
    elapsed = time.perf_counter() - t0
    ok = worst_over <= 1e-9 and worst_gap <= 1e-2 and elapsed < 120.0
    report(capsys, 7, ok, f"largest overshoot {worst_over:.2e} (<= 1e-9), largest gap {worst_gap:.2e} (<= 1e-2), "
                          f"{elapsed:.1f} s (< 120 s)")


def test_criterion_08_nonsymmetric_members(capsys, e1):
    t0 = time.perf_counter()
    outside = 0
    count = 0
    instances = [random_instance(5, 1.0, 800 + seed) for seed in range(10)]
    for seed, a in enumerate(instances):
        vert = vertex_enum_bounds(a)
        w = nonsymmetric_real_eigenvalues(IntervalMatrix(a.mid, a.rad), 10 ** 4, seed)
        count += w.size
        outside += int(np.sum((w < vert.lo[-1] - 1e-9) | (w > vert.hi[0] + 1e-9)))
    # a nonsymmetric member of the 3x3 matrix with a real eigenvalue outside the symmetric sets
    w = np.linalg.eigvals(np.array([[1.0, 2, 1], [2, 1, 1], [5, 1, 1]])).real
    vert = vertex_enum_bounds(e1)
    outside += int(np.sum((w < vert.lo[-1] - 1e-9) | (w > vert.hi[0] + 1e-9)))
    elapsed = time.perf_counter() - t0
    ok = outside == 0 and count > 0 and elapsed < 120.0
    report(capsys, 8, ok, f"{count} real eigenvalues sampled, {outside} outside the vertex range, "
                          f"{elapsed:.1f} s (< 120 s)")


def _subtree(J, last):
    yield J
    if len(J) > 1:
        for r in J:
            if r > last:
                yield from _subtree(tuple(x for x in J if x != r), r)


def test_criterion_09_mode_equivalence(capsys):
    t0 = time.perf_counter()
    mismatches, unsound, pruned_total = 0, 0, 0
    for seed in range(20):
        a = random_instance(5, [0.1, 1.0][seed % 2], 900 + seed)
        outer = default_outer(a)
        seed_bands = local_improvement(a).bands
        direct = submatrix_bounds(a, outer, seed=seed_bands, mode=Mode.DIRECT)
        bb = submatrix_bounds(a, outer, seed=seed_bands, mode=Mode.BRANCH_BOUND)
        if not (np.array_equal(direct.bands.lo, bb.bands.lo) and np.array_equal(direct.bands.hi, bb.bands.hi)):
            mismatches += 1
        improving = {(r.p, r.side): {imp.J for imp in r.log} for r in direct.results}
        for r in bb.results:
            for J, last, _ in r.pruned:
                pruned_total += 1
                if improving[(r.p, r.side)] & set(_subtree(J, last)):
                    unsound += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and unsound == 0 and pruned_total > 0 and elapsed < 300.0
    report(capsys, 9, ok, f"{mismatches} endpoint mismatches, {unsound} of {pruned_total} pruned subtrees "
                          f"held an improving candidate, {elapsed:.1f} s (< 300 s)")


def test_criterion_10_scale(capsys):
    a = random_instance(10, 0.001, 1010)
    t0 = time.perf_counter()
    vert = vertex_enum_bounds(a)
    t_vertex = time.perf_counter() - t0
    outer = default_outer(a, vertex=vert)
    t0 = time.perf_counter()
    sub = submatrix_bounds(a, outer, mode=Mode.BRANCH_BOUND).bands
    t_sub = time.perf_counter() - t0
    s_vert, s_sub = sharpness(vert, outer), sharpness(sub, outer)
    ok = t_vertex < 10.0 and t_sub < 300.0 and s_sub <= s_vert
    report(capsys, 10, ok, f"vertex {t_vertex:.2f} s (< 10 s), submatrix bb {t_sub:.2f} s (< 300 s), "
                           f"sharpness {s_sub:.5f} <= {s_vert:.5f}")
