import numpy as np
import pytest

from conftest import members
from interval_spectra import (
    IntervalMatrix,
    IntervalScalar,
    Side,
    SymmetricIntervalMatrix,
    ValidationError,
    decompose,
    gram_product,
    interval_matvec,
    jordan_wielandt,
    vertex_matrix,
)
from interval_spectra.intervals import canonical_signs, sample_member, sign_vector


def test_scalar_rejects_empty():
    with pytest.raises(ValidationError):
        IntervalScalar(2.0, 1.0)
    s = IntervalScalar(-1.0, 3.0)
    assert s.mid == 1.0 and s.rad == 2.0 and 0.0 in s and 4.0 not in s


def test_bounds_roundtrip():
    rng = np.random.default_rng(1)
    lo = rng.uniform(-10, 10, (4, 3))
    hi = lo + rng.uniform(0, 3, (4, 3))
    a = IntervalMatrix.from_bounds(lo, hi)
    np.testing.assert_allclose(a.lo, lo, rtol=0, atol=1e-14)
    np.testing.assert_allclose(a.hi, hi, rtol=0, atol=1e-14)
    with pytest.raises(ValidationError):
        IntervalMatrix.from_bounds(hi, lo)
    with pytest.raises(ValidationError):
        IntervalMatrix(np.zeros((2, 2)), -np.ones((2, 2)))


def test_symmetric_validation():
    with pytest.raises(ValidationError):
        SymmetricIntervalMatrix([[1, 2], [0, 1]], np.zeros((2, 2)))
    with pytest.raises(ValidationError):
        SymmetricIntervalMatrix(np.eye(2), [[0, 1], [0, 0]])
    with pytest.raises(ValidationError):
        SymmetricIntervalMatrix(np.zeros((2, 3)), np.zeros((2, 3)))


def test_arrays_are_read_only(e1):
    with pytest.raises(ValueError):
        e1.mid[0, 0] = 5.0


def test_vertex_examples(e1):
    np.testing.assert_array_equal(vertex_matrix(e1, [1, 1, 1]), [[1, 2, 5], [2, 1, 1], [5, 1, 1]])
    np.testing.assert_array_equal(vertex_matrix(e1, [1, 1, -1]), [[1, 2, 1], [2, 1, 1], [1, 1, 1]])
    np.testing.assert_array_equal(vertex_matrix(e1, [1, 1, 1], Side.LOWER), [[1, 2, 1], [2, 1, 1], [1, 1, 1]])
    with pytest.raises(ValidationError):
        vertex_matrix(e1, [1, 1])
    with pytest.raises(ValidationError):
        vertex_matrix(e1, [1, 0, 1])


def test_vertex_sign_invariance_and_membership():
    rng = np.random.default_rng(3)
    mid = rng.normal(size=(5, 5))
    rad = rng.uniform(0, 1, (5, 5))
    a = SymmetricIntervalMatrix(mid + mid.T, rad + rad.T)
    for _ in range(50):
        z = rng.choice([-1.0, 1.0], 5)
        for side in Side:
            v = vertex_matrix(a, z, side)
            np.testing.assert_array_equal(v, vertex_matrix(a, -z, side))
            np.testing.assert_array_equal(v, v.T)
            assert a.contains(v, tol=1e-12)
        assert canonical_signs(z)[0] == 1.0
        assert np.array_equal(vertex_matrix(a, canonical_signs(z)), vertex_matrix(a, z))


def test_sign_vector_zero_is_positive():
    np.testing.assert_array_equal(sign_vector([0.0, -0.5, 2.0, -0.0]), [1, -1, 1, 1])


def test_matvec_examples():
    lo, hi, zero = interval_matvec(IntervalMatrix.from_bounds([[1]], [[5]]), [1])
    assert (lo[0], hi[0], zero) == (1, 5, False)
    lo, hi, zero = interval_matvec(IntervalMatrix.from_bounds([[-1]], [[1]]), [1])
    assert (lo[0], hi[0], zero) == (-1, 1, True)
    lo, hi, zero = interval_matvec(IntervalMatrix.from_bounds([[1, -4]], [[3, -2]]), [2, 1])
    assert (lo[0], hi[0], zero) == (-2, 4, True)
    with pytest.raises(ValidationError):
        interval_matvec(IntervalMatrix.from_bounds([[1, -4]], [[3, -2]]), [2])


def test_matvec_encloses_samples():
    rng = np.random.default_rng(7)
    c = IntervalMatrix(rng.normal(size=(3, 4)), rng.uniform(0, 1, (3, 4)))
    y = rng.normal(size=4)
    lo, hi, _ = interval_matvec(c, y)
    for _ in range(1000):
        cy = (c.mid + rng.uniform(-1, 1, c.shape) * c.rad) @ y
        assert np.all(cy >= lo - 1e-12) and np.all(cy <= hi + 1e-12)


def test_decompose_examples(e1):
    b, c, d = decompose(e1, [2])
    assert d.lo.tolist() == [[1]] and d.hi.tolist() == [[1]]
    assert c.lo.tolist() == [[1], [1]] and c.hi.tolist() == [[5], [1]]
    assert b.lo.tolist() == [[1, 2], [2, 1]] and not b.rad.any()
    b, c, d = decompose(e1, [0, 1, 2])
    assert d == e1 and b.shape == (0, 0) and c.shape == (0, 3)
    b, c, d = decompose(e1, [1, 2])
    assert d.hi.tolist() == [[1, 1], [1, 1]] and not d.rad.any()
    assert c.lo.tolist() == [[2, 1]] and c.hi.tolist() == [[2, 5]]
    with pytest.raises(ValidationError):
        decompose(e1, [])
    with pytest.raises(ValidationError):
        decompose(e1, [3])


def test_decompose_reassembles():
    rng = np.random.default_rng(2)
    mid = rng.normal(size=(5, 5))
    a = SymmetricIntervalMatrix(mid + mid.T, np.ones((5, 5)))
    J = [0, 3]
    comp = [1, 2, 4]
    b, c, d = decompose(a, J)
    full = np.empty((5, 5))
    full[np.ix_(comp, comp)] = b.mid
    full[np.ix_(comp, J)] = c.mid
    full[np.ix_(J, comp)] = c.mid.T
    full[np.ix_(J, J)] = d.mid
    np.testing.assert_array_equal(full, a.mid)


def test_jordan_wielandt_examples():
    jw = jordan_wielandt(IntervalMatrix.point([[1.0]]))
    np.testing.assert_array_equal(jw.mid, [[0, 1], [1, 0]])
    np.testing.assert_allclose(np.linalg.eigvalsh(jw.mid), [-1, 1])
    jw = jordan_wielandt(IntervalMatrix.point(np.zeros((2, 3))))
    assert not jw.mid.any() and jw.n == 5


def test_jordan_wielandt_matches_svd():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = rng.normal(size=(3, 2))
        w = np.sort(np.linalg.eigvalsh(jordan_wielandt(IntervalMatrix.point(a)).mid))[::-1]
        s = np.linalg.svd(a, compute_uv=False)
        np.testing.assert_allclose(w, np.concatenate([s, [0.0], -s[::-1]]), atol=1e-9)


def test_gram_examples():
    a = np.array([[1.0, 2.0], [3.0, -1.0]])
    g = gram_product(IntervalMatrix.point(a))
    np.testing.assert_allclose(g.mid, a.T @ a)
    assert not g.rad.any()
    g = gram_product(IntervalMatrix.from_bounds([[-1]], [[2]]))
    assert g.lo.tolist() == [[0]] and g.hi.tolist() == [[4]]
    g = gram_product(IntervalMatrix.from_bounds([[0], [1]], [[1], [1]]))
    assert g.lo.tolist() == [[1]] and g.hi.tolist() == [[2]]


def test_gram_encloses_samples():
    rng = np.random.default_rng(5)
    a = IntervalMatrix(rng.uniform(-3, 3, (4, 3)), rng.uniform(0, 1, (4, 3)))
    g = gram_product(a)
    for _ in range(1000):
        m = a.mid + rng.uniform(-1, 1, a.shape) * a.rad
        assert g.contains(m.T @ m, tol=1e-12)


def test_sample_member(e1):
    assert np.array_equal(sample_member(SymmetricIntervalMatrix.from_interval(IntervalMatrix.point(e1.mid)), 0), e1.mid)
    np.testing.assert_array_equal(sample_member(e1, 4), sample_member(e1, 4))
    for seed in range(100):
        m = sample_member(e1, seed)
        assert e1.contains(m) and np.array_equal(m, m.T)


def test_members_helper_is_inside(e1):
    assert all(e1.contains(m) for m in members(e1, 50, 0))
