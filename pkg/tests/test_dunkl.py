from fractions import Fraction

import pytest

from cherednik.dunkl import (
    CherednikParam,
    NotCoprime,
    cartan_pairing,
    divided_difference,
    dunkl_apply,
    embed,
    gram_matrix,
    is_translation_invariant,
    monomials,
    pairing,
    pairing_recursion,
    project,
    retract,
    vandermonde,
)
from cherednik.linalg import rank
from cherednik.poly import Poly
from cherednik.symgroup import act, all_permutations


def test_parameter_validation():
    p = CherednikParam(5, 3)
    assert p.c == Fraction(5, 3) and p.mu == 4
    with pytest.raises(NotCoprime):
        CherednikParam(4, 2)


def test_dunkl_on_linear_forms():
    # y_i x_i = 1 - c(n-1), y_i x_j = c for i != j
    p = CherednikParam(4, 3)
    x = Poly.gens(3)
    assert dunkl_apply(p, 1, x[0]) == Poly.const(1 - 2 * p.c, 3)
    assert dunkl_apply(p, 1, x[1]) == Poly.const(p.c, 3)


def test_divided_difference():
    x = Poly.gens(2)
    assert divided_difference(x[0] ** 3, 1, 2) == x[0] ** 2 + x[0] * x[1] + x[1] ** 2


@pytest.mark.parametrize("m,n", [(4, 3), (2, 3), (3, 4)])
def test_dunkl_operators_commute(m, n):
    p = CherednikParam(m, n)
    x = Poly.gens(n)
    f = x[0] ** 3 * x[1] + 2 * x[1] * x[2] ** 2 - x[0] * x[1] * x[2]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert dunkl_apply(p, i, dunkl_apply(p, j, f)) == dunkl_apply(p, j, dunkl_apply(p, i, f))


def test_pairing_is_symmetric_invariant_and_adjoint():
    p = CherednikParam(4, 3)
    x = Poly.gens(3)
    f = x[0] * x[1] + 3 * x[2] ** 2
    g = x[0] ** 3 - x[1] * x[2] ** 2
    assert pairing(p, x[2] * f, g) == pairing(p, f, dunkl_apply(p, 3, g))
    assert pairing(p, x[0] * f, g) == pairing(p, g, x[0] * f)
    base = pairing(p, x[0] * f, g)
    assert all(pairing(p, act(w, x[0] * f), act(w, g)) == base for w in all_permutations(3))


def test_three_halves_kernel_starts_in_degree_three():
    p = CherednikParam(3, 2)
    z = Poly.var(0, 1)
    assert [cartan_pairing(p, z ** k, z ** k) for k in range(1, 5)] == [-4, -16, 0, 0]


def test_kernel_of_gram_matrix_has_expected_size():
    # L_{4/3} has dimension 16 with graded dims 1,2,3,4,3,2,1; degree 4 has 5 monomials, 2 in the kernel
    p = CherednikParam(4, 3)
    basis = [embed(Poly.monomial(a)) for a in monomials(2, 4)]
    assert len(basis) - rank(gram_matrix(p, basis), len(basis)) == 2


def test_cartan_coordinates_round_trip():
    x = Poly.gens(3)
    f = (x[0] - x[1]) * (x[1] - x[2]) + (x[0] - x[2]) ** 2
    assert is_translation_invariant(f)
    assert embed(retract(f)) == f
    assert not is_translation_invariant(x[0])
    assert project(f) == retract(f)
    assert is_translation_invariant(embed(project(x[0] ** 2)))


def test_delta_pairing_values():
    # frozen from direct computation
    for (m, n), expected in (((4, 3), -60), ((5, 3), -168)):
        p = CherednikParam(m, n)
        d = project(vandermonde(n))
        assert cartan_pairing(p, d, d) == expected


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3)])
def test_pairing_recursion(m, n):
    p = CherednikParam(m, n)
    assert all(pairing_recursion(p, d) for d in range(5))


def test_pairing_recursion_needs_c_above_one():
    with pytest.raises(ValueError):
        pairing_recursion(CherednikParam(2, 3), 2)
