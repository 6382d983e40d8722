import pytest

from cherednik import filtration as fl
from cherednik.catalan import qt_catalan
from cherednik.irrep import build_irrep
from cherednik.qt import QtPolynomial

MAIN = [(4, 3), (5, 3), (5, 2), (7, 2)]


def level_dims(filt):
    return [filt.level(i).dim for i in filt.indices()]


def test_frozen_power_filtration_dims():
    assert level_dims(fl.filtration_a(build_irrep((4, 3)))) == [6, 12, 15, 16]
    assert level_dims(fl.filtration_a(build_irrep((5, 3)))) == [6, 15, 21, 24, 25]
    assert level_dims(fl.filtration_a(build_irrep((7, 2)))) == [2, 4, 6, 7]
    assert fl.nilpotence_index(build_irrep((4, 3))) == 4


@pytest.mark.parametrize("m,n", MAIN)
def test_power_filtration_is_ascending_and_exhaustive(m, n):
    F = fl.filtration_a(build_irrep((m, n)))
    assert F.is_ascending() and F.is_exhaustive()


@pytest.mark.parametrize("m,n", MAIN)
def test_inductive_equals_power(m, n):
    model = build_irrep((m, n))
    assert fl.compare(fl.filtration(model, "ind"), fl.filtration(model, "a"))["equal"]


@pytest.mark.parametrize("m,n", MAIN)
def test_algebraic_filtrations_agree(m, n):
    model = build_irrep((m, n))
    assert fl.compare(fl.filtration(model, "alg"), fl.filtration(model, "alg-prime"))["equal"]


def test_compare_reports_first_discrepancy():
    F = fl.filtration_a(build_irrep((4, 3)))
    rep = fl.compare(F, fl.shifted(F))
    assert not rep["equal"] and rep["first_discrepancy"][0] == 0


def test_inductive_filtration_needs_c_above_one():
    with pytest.raises(fl.FiltrationUndefined):
        fl.filtration(build_irrep((3, 4)), "ind")
    with pytest.raises(ValueError):
        fl.filtration(build_irrep((4, 3)), "bogus")


def test_fraction_chain():
    assert [(p.m, p.n) for p in fl.fraction_chain((7, 3))] == [(7, 3), (4, 3), (1, 3)]


def test_late_highest_weight_vector_is_p3():
    model = build_irrep((4, 3))
    late = fl.late_highest_weight_vectors(model)
    assert late["outside"] == {3: 1}
    assert late["power_sums"][3] == (3, 1, True, True)
    assert fl.invariant_alg_levels(model) == {0: [3], 2: [3], 3: [2], 4: [3], 6: [3]}


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3), (7, 2)])
def test_sl2_compatibilities(m, n):
    model = build_irrep((m, n))
    assert all(fl.ef_shift_check(model).values())
    assert fl.highest_weight_tracking(model)
    assert fl.dunkl_lowers_invariant_levels(model)


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3), (7, 3)])
def test_delta_stability_with_shifted_parameter(m, n):
    assert fl.delta_stability(build_irrep((m, n)))["shifted_parameter"] == []


def test_delta_stability_same_parameter_breaks_at_seven_thirds():
    assert fl.delta_stability(build_irrep((4, 3)))["same_parameter"] == []
    assert fl.delta_stability(build_irrep((7, 3)))["same_parameter"] != []


def test_below_one():
    assert fl.c_less_one_levels(build_irrep((2, 3)))["holds"]
    rep = fl.c_less_one_levels(build_irrep((3, 4)))
    assert not rep["holds"]
    assert rep["criterion_holds"] and all(rep["invariant_levels"].values())


def test_flip_between_swapped_parameters():
    f = fl.flip(build_irrep((3, 2)), build_irrep((2, 3)))
    assert f.consistent
    with pytest.raises(fl.ModelMismatch):
        fl.flip(build_irrep((4, 3)), build_irrep((3, 2)))


@pytest.mark.parametrize("m,n", [(4, 3), (5, 3), (5, 2)])
def test_catalan_character_kazhdan_convention(m, n):
    model = build_irrep((m, n))
    target = qt_catalan(m, n)
    hits = [c for c in fl.CATALAN_CONVENTIONS if fl.catalan_character(model, c) == target]
    assert hits == ["kazhdan", "kazhdan-swapped"]


def test_superpolynomial():
    model = build_irrep((3, 2))
    a = lambda q, t, k: QtPolynomial.monomial(q=q, t=t, a=k)
    assert fl.superpolynomial(model, fl.filtration_a(model), "kazhdan") == a(1, 0, 2) + a(0, 1, 2) + a(0, 0, 4)
    model = build_irrep((5, 3))
    sp = fl.superpolynomial(model, fl.filtration_a(model), "kazhdan")
    bottom = QtPolynomial({(q, t, 0): c for (q, t, k), c in sp.terms.items() if k == 8})
    assert bottom == qt_catalan(5, 3)
    # hook multiplicities weighted by hook dimensions 1, 2, 1 recover dim L
    hook_dim = {8: 1, 10: 2, 12: 1}
    assert sum(c * hook_dim[k] for (_, _, k), c in sp.terms.items()) == 25


def test_gr_character_rejects_foreign_filtration():
    with pytest.raises(fl.ModelMismatch):
        fl.gr_character(build_irrep((5, 3)), fl.filtration_a(build_irrep((4, 3))))
