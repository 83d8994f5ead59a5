import numpy as np
import pytest

from interval_spectra import BandSet, IntervalMatrix, SymmetricIntervalMatrix
from interval_spectra.outer import complete_singular

E1_MID = [[1.0, 2.0, 3.0], [2.0, 1.0, 1.0], [3.0, 1.0, 1.0]]
E1_RAD = [[0.0, 0.0, 2.0], [0.0, 0.0, 0.0], [2.0, 0.0, 0.0]]
E1_OUTER = [(3.5230, 6.7843), (0.0, 1.0519), (-4.1214, -0.2019)]

E2_LO = [[2975, -2015, 0, 0], [-2015, 4965, -3020, 0], [0, -3020, 6955, -4025], [0, 0, -4025, 8945]]
E2_HI = [[3025, -1985, 0, 0], [-1985, 5035, -2980, 0], [0, -2980, 7045, -3975], [0, 0, -3975, 9055]]
E2_OUTER = [(12560.6296, 12720.2273), (6990.7616, 7138.1800), (3320.2863, 3459.4322), (837.0637, 973.1993)]

E3A_LO = [[2, 1], [0, 0], [0, 2]]
E3A_HI = [[3, 1], [2, 1], [1, 3]]
E3A_OUTER = [(2.0489, 4.5431), (0.4239, 3.1817)]

E3B_LO = [[0.75, -0.015, 1.7], [3.55, -5.1, -1.95], [1.05, 0.005, -10.5]]
E3B_HI = [[2.25, -0.005, 5.1], [10.65, -1.7, -0.65], [3.15, 0.015, -3.5]]
E3B_OUTER = [(4.3308, 14.0115), (1.9305, 11.6111), (0.0, 5.1)]


@pytest.fixture
def e1():
    return SymmetricIntervalMatrix(E1_MID, E1_RAD)


@pytest.fixture
def e1_outer():
    return BandSet.from_pairs(E1_OUTER)


@pytest.fixture
def e2():
    return SymmetricIntervalMatrix.from_interval(IntervalMatrix.from_bounds(E2_LO, E2_HI))


@pytest.fixture
def e2_outer():
    return BandSet.from_pairs(E2_OUTER)


@pytest.fixture
def e3a():
    return IntervalMatrix.from_bounds(E3A_LO, E3A_HI)


@pytest.fixture
def e3b():
    return IntervalMatrix.from_bounds(E3B_LO, E3B_HI)


def jw_outer(pairs, size):
    return complete_singular(BandSet.from_pairs(pairs), size)


def random_symmetric(n, radius, seed):
    rng = np.random.default_rng(seed)
    mid = rng.uniform(-5, 5, (n, n))
    rad = rng.uniform(0, radius, (n, n))
    return SymmetricIntervalMatrix(mid + mid.T, rad + rad.T)


def members(a, count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        u = rng.uniform(-1, 1, a.mid.shape)
        yield a.mid + (np.triu(u) + np.triu(u, 1).T) * a.rad
