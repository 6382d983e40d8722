from math import factorial

import pytest

from cherednik import coinvariant as co
from cherednik.poly import Poly, elementary_symmetric, power_sum
from cherednik.verify import coinvariant_cases

CASES = coinvariant_cases((3, 4))


def q_factorial_coeffs(n):
    out = [1]
    for k in range(1, n + 1):
        nxt = [0] * (len(out) + k - 1)
        for i, c in enumerate(out):
            for j in range(k):
                nxt[i + j] += c
        out = nxt
    return out


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_artin_basis_has_q_factorial_hilbert_series(n):
    alg = co.coinvariant_algebra(n)
    assert alg.dim == factorial(n)
    counts = [0] * (alg.top_degree + 1)
    for a in alg.basis:
        counts[sum(a)] += 1
    assert counts == q_factorial_coeffs(n)


@pytest.mark.parametrize("n", [3, 4])
def test_invariants_reduce_to_zero(n):
    alg = co.coinvariant_algebra(n)
    for k in range(1, n + 1):
        assert not any(alg.normal_form(power_sum(k, n)))
        assert not any(alg.normal_form(elementary_symmetric(k, n)))
    x = Poly.gens(n)
    assert any(alg.normal_form(x[0] ** (n - 1)))


def test_multiplication_is_commutative_and_associative():
    alg = co.coinvariant_algebra(4)
    x = Poly.gens(4)
    f, g, h = x[0] + 2 * x[2], x[1] * x[3] - x[0], x[2] ** 2
    F, G, H = (alg.normal_form(p) for p in (f, g, h))
    assert alg.multiply(F, G) == alg.multiply(G, F)
    assert alg.multiply(alg.multiply(F, G), H) == alg.multiply(F, alg.multiply(G, H))
    assert alg.multiply(F, G) == alg.normal_form(f * g)


def test_vandermonde_spans_top_degree():
    alg = co.coinvariant_algebra(3)
    top = alg.top_vector()
    assert any(top)
    assert all(v == 0 for a, v in zip(alg.basis, top) if sum(a) != alg.top_degree)


@pytest.mark.parametrize("m,n", CASES)
def test_exactness(m, n):
    rep = co.ab_report(m, n)
    assert rep["AB = 0"] and rep["Im A = Ker B"]
    assert rep["rank A"] == rep["rank B"] == rep["expected"] == (2 * n - m) * factorial(n) // 2


def test_frozen_ranks():
    assert [co.ab_report(m, n)["rank A"] for m, n in CASES] == [6, 3, 36, 12]


def test_out_of_range():
    with pytest.raises(co.ParameterOutOfRange):
        co.matrix_AB(7, 3)
    with pytest.raises(co.ParameterOutOfRange):
        co.ab_report(6, 4)


@pytest.mark.parametrize("m,n", CASES)
def test_dimension_identities(m, n):
    rep = co.lattice_check(m, n)
    assert not rep.failing("dim")


def test_v1_lies_in_the_sum_of_the_others_at_five_thirds():
    # x1^2 = -(x2^2 + x3^2) in R_3, so V1 sits inside V2 + V3
    rep = co.lattice_check(5, 3)
    bad = rep.failing("V1 n (V2 + ... + V3)")
    assert bad == [{"identity": "V1 n (V2 + ... + V3) = sum of V1 n Vj", "lhs": 2, "rhs": 1, "holds": False}]
    assert rep.distributive is False


@pytest.mark.parametrize("m,n", CASES)
def test_image_of_A_is_lagrangian(m, n):
    rep = co.isotropy_report(m, n)
    assert rep["isotropic"] and rep["lagrangian"]


def test_diagonal_pairing_only_isotropic_for_one_block():
    assert co.poincare_isotropy(5, 3, pairing="diagonal")
    assert not co.poincare_isotropy(4, 3, pairing="diagonal")


def test_springer_dimensions():
    assert [co.springer_min_dim(n) for n in (2, 3, 4, 5)] == [1, 3, 12, 60]


@pytest.mark.parametrize("n", [3, 4])
def test_kernel_of_difference(n):
    x = Poly.gens(n)
    K = co.multiplication_kernel(n, x[0] - x[1])
    assert K == co.ker_difference(n)
    assert K.rank == factorial(n - 1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_power_and_pair_identities(n):
    assert co.power_identity(n) and co.pair_identity(n)


def test_dunkl_bridge():
    assert co.dunkl_bridge(5, 3)["equal"]
    with pytest.raises(ValueError):
        co.dunkl_bridge(4, 3)
