from itertools import combinations
from math import comb

import pytest

from cherednik.catalan import DyckPath, NotCoprime, enumerate_paths, qt_catalan, rational_catalan, statistics
from cherednik.qt import QtPolynomial


def brute_force_paths(m, n):
    out = []
    for norths in combinations(range(m + n), n):
        steps = "".join("N" if i in norths else "E" for i in range(m + n))
        if DyckPath(m, n, steps).is_valid():
            out.append(steps)
    return sorted(out)


def poly(*terms):
    return QtPolynomial({(q, t, 0): 1 for q, t in terms})


@pytest.mark.parametrize("m,n", [(3, 2), (4, 3), (5, 3), (5, 4), (7, 3), (7, 5), (8, 5)])
def test_enumeration_matches_brute_force_and_count(m, n):
    got = sorted(p.steps for p in enumerate_paths(m, n))
    assert got == brute_force_paths(m, n)
    assert len(got) == rational_catalan(m, n) == comb(m + n, n) // (m + n)


def test_frozen_polynomials():
    assert qt_catalan(3, 2) == poly((1, 0), (0, 1))
    assert qt_catalan(4, 3) == poly((0, 3), (1, 1), (1, 2), (2, 1), (3, 0))
    assert qt_catalan(5, 3) == poly((0, 4), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (4, 0))


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3), (7, 4), (5, 4)])
def test_symmetries(m, n):
    C = qt_catalan(m, n)
    assert C == C.swap_qt() == qt_catalan(n, m)


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3), (7, 4)])
def test_statistic_ranges(m, n):
    delta = (m - 1) * (n - 1) // 2
    for path in enumerate_paths(m, n):
        area, dinv = statistics(path)
        assert 0 <= area <= delta and 0 <= dinv <= delta
        assert area + dinv <= delta


def test_classical_catalan_is_the_slope_n_plus_one_case():
    # C_{n+1,n}(1,1) is the n-th Catalan number
    for n in range(1, 7):
        assert qt_catalan(n + 1, n).specialize() == comb(2 * n, n) // (n + 1)


def test_not_coprime():
    with pytest.raises(NotCoprime):
        enumerate_paths(4, 2)
