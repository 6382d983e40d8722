from fractions import Fraction
from math import factorial

import pytest

from cherednik.linalg import identity
from cherednik.poly import Poly, power_sum
from cherednik.symgroup import (
    GroupAction,
    Partition,
    Permutation,
    act,
    all_permutations,
    character,
    character_table,
    multiplicity,
    newton_convert,
    partitions,
)


def hook_length_dimension(lam):
    parts = lam.parts
    conj = lam.conjugate().parts
    prod = 1
    for i, row in enumerate(parts):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(parts)) // prod


def test_permutation_basics():
    w = Permutation.from_cycles(4, [[1, 2, 3]])
    assert w.images == (2, 3, 1, 4)
    assert w.cycle_type() == Partition((3, 1))
    assert w.sign() == 1
    assert w * w.inverse() == Permutation.identity(4)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_reduced_word_reconstructs_permutation():
    for w in all_permutations(4):
        acc = Permutation.identity(4)
        for k in w.reduced_word():
            acc = acc * Permutation.transposition(4, k, k + 1)
        assert acc == w


def test_action_is_a_left_action():
    x = Poly.gens(3)
    f = x[0] * x[1] ** 2 + 5 * x[2]
    for u in all_permutations(3):
        for v in all_permutations(3):
            assert act(u * v, f) == act(u, act(v, f))
    assert all(act(w, power_sum(3, 3)) == power_sum(3, 3) for w in all_permutations(3))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_character_table_orthogonality(n):
    tab = character_table(n)
    for a, row_a in zip(tab.irreps, tab.values):
        for b, row_b in zip(tab.irreps, tab.values):
            inner = sum(s * x * y for s, x, y in zip(tab.class_sizes, row_a, row_b))
            assert inner == (factorial(n) if a == b else 0)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_identity_column_is_hook_length(n):
    for lam in partitions(n):
        assert character(lam, Partition((1,) * n)) == hook_length_dimension(lam) == lam.dimension()


def test_known_values():
    assert character_table(4).row(Partition((2, 1, 1))) == (1, 0, -1, -1, 3)
    assert Partition.hook(4, 1) == Partition((3, 1))
    assert Partition((2, 1, 1)).hook_index() == 2
    assert Partition((2, 2)).is_hook() is False
    assert sum(p.class_size() for p in partitions(5)) == 120


def test_multiplicity_of_permutation_representation():
    # S_3 on C^3 by permuting coordinates: trivial + standard
    def swap(k):
        m = identity(3)
        m[k - 1], m[k] = m[k], m[k - 1]
        return m

    action = GroupAction(3, 3, {1: swap(1), 2: swap(2)})
    assert multiplicity(Partition((3,)), action) == 1
    assert multiplicity(Partition((2, 1)), action) == 1
    assert multiplicity(Partition((1, 1, 1)), action) == 0


def test_newton_round_trip():
    p_in_u, u_in_p = newton_convert(3, 3)
    # p1 = -u1 and u2 = (p1^2 - p2)/2
    u1 = Poly.var(0, 3)
    assert p_in_u[1] == -u1
    p1, p2 = Poly.var(0, 3), Poly.var(1, 3)
    assert u_in_p[2] == (p1 * p1 - p2).scale(Fraction(1, 2))
