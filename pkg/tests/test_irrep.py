from math import factorial

import pytest

from cherednik.catalan import rational_catalan
from cherednik.dunkl import CherednikParam
from cherednik.filtration import a_power
from cherednik.irrep import (
    IndexOutOfRange,
    IrrepModel,
    arc_identity_check,
    build_irrep,
    character_q,
    harmonics,
    hook_character,
    kernel_degree,
    top_degree_vanishing,
)
from cherednik.linalg import identity, matadd, matmul, matscale, zeros
from cherednik.qt import QtPolynomial

SMALL = [(3, 2), (5, 2), (7, 2), (4, 3), (5, 3), (2, 3), (3, 4)]


@pytest.mark.parametrize("m,n", SMALL)
def test_dimension_law(m, n):
    assert build_irrep((m, n)).dim == m ** (n - 1)


def test_frozen_graded_dimensions():
    assert build_irrep((4, 3)).dims == {0: 1, 1: 2, 2: 3, 3: 4, 4: 3, 5: 2, 6: 1}
    assert build_irrep((3, 2)).dims == {0: 1, 1: 1, 2: 1}
    assert list(build_irrep((5, 3)).weight_profile().values()) == [1, 2, 3, 4, 5, 4, 3, 2, 1]


@pytest.mark.parametrize("m,n", SMALL)
def test_weights_are_symmetric_about_zero(m, n):
    model = build_irrep((m, n))
    prof = model.weight_profile()
    assert min(prof) == -model.mu and max(prof) == model.mu
    assert all(prof[k] == prof[-k] for k in prof)


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3), (3, 4)])
def test_sl2_relation(m, n):
    model = build_irrep((m, n))
    for d in model.degrees:
        k = model.dim_at(d)
        ef = matmul(model.e_matrix(d - 2), model.f_matrix(d)) if d >= 2 and model.dim_at(d - 2) else zeros(k, k)
        fe = matmul(model.f_matrix(d + 2), model.e_matrix(d)) if model.dim_at(d + 2) else zeros(k, k)
        assert matadd(ef, matscale(fe, -1)) == matscale(identity(k), model.h_scalar(d))


@pytest.mark.parametrize("m,n", [(3, 2), (4, 3), (5, 3)])
def test_kernel_two_methods(m, n):
    p = CherednikParam(m, n)
    top = build_irrep(p).top
    for d in range(top + 2):
        assert kernel_degree(p, d, "gram") == kernel_degree(p, d, "generators")


@pytest.mark.parametrize("m,n", [(3, 2), (4, 3)])
def test_arc_identity(m, n):
    p = CherednikParam(m, n)
    assert all(arc_identity_check(p, l) for l in range(n + 1))


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3), (5, 4)])
def test_harmonic_complement(m, n):
    model = build_irrep((m, n))
    H = harmonics(model)
    a = a_power(model, 1)
    assert H.dim == factorial(n)
    assert a.intersect(H).dim == 0 and (a + H).dim == model.dim


def test_top_degree_vanishing_only_on_staircase():
    vals = top_degree_vanishing(build_irrep((4, 3)))
    alive = {b for b, v in vals.items() if v}
    assert alive and all(tuple(sorted(b)) == (1, 2) for b in alive)


@pytest.mark.parametrize("m,n", [(3, 2), (4, 3), (5, 3), (3, 4)])
def test_invariants_count_dyck_paths(m, n):
    assert build_irrep((m, n)).invariants().dim == rational_catalan(m, n)


def test_hook_characters():
    model = build_irrep((4, 3))
    q = lambda k: QtPolynomial.monomial(q=k)
    assert hook_character(model, 0) == q(-3) + q(-1) + q(0) + q(1) + q(3)
    assert hook_character(model, 2) == q(0)
    assert character_q(model).specialize() == 16
    with pytest.raises(IndexOutOfRange):
        hook_character(model, 3)


def test_json_round_trip():
    model = build_irrep((4, 3))
    again = IrrepModel.from_json(model.to_json())
    assert again.same_as(model)
    assert not build_irrep((5, 3)).same_as(model)
