"""Modular form spaces, extremal forms, modularity and extremality checks."""
from fractions import Fraction

import pytest

from modlattice.enumeration import theta_series
from modlattice.errors import EmptyBasisError, LevelError
from modlattice.lattice import Lattice, direct_sum, rescale, zn
from modlattice.modular import (ModularityVerdict, base_lattice,
                                check_extremal, check_extremal_odd,
                                check_modular, extremal_form,
                                extremal_min_bound, modform_basis, theta_base,
                                transformation_check)
from modlattice.qseries import ADMISSIBLE_LEVELS
from modlattice.report import FAIL, INCONCLUSIVE, PASS


def test_theta_base_matches_enumeration(catalog):
    for n in ADMISSIBLE_LEVELS:
        tb = theta_base(n, 8)
        th = theta_series(base_lattice(n, catalog), 8)
        assert tb.agree(th)[0], "level %d" % n


def test_base_lattice_dimensions():
    # dim = 2 d_N
    want = {1: 8, 2: 4, 3: 2, 5: 4, 6: 4, 7: 2, 11: 2, 14: 4, 15: 4, 23: 2}
    for n, d in want.items():
        assert base_lattice(n).dim == d


def test_modform_basis_is_unitriangular():
    for n, k in ((1, 12), (2, 8), (3, 6), (1, 24)):
        basis = modform_basis(n, k, 14)
        assert basis, (n, k)
        for i, f in enumerate(basis):
            assert f.coefficient_q(2 * i) == 1
            for r in range(i):
                assert f.coefficient_q(2 * r) == 0


def test_modform_basis_level_one_window():
    basis = modform_basis(1, 12, 8)
    assert len(basis) == 2
    assert [basis[0].coefficient_q(j) for j in (0, 2, 4)] == [1, 720, 179280]
    assert [basis[1].coefficient_q(j) for j in (0, 2, 4)] == [0, 1, -24]


def test_weights_missing_from_the_ring():
    for k in (2, 10, 14):
        assert modform_basis(1, k, 8) == []
        with pytest.raises(EmptyBasisError):
            extremal_form(1, k, 8)


def test_extremal_form_frozen_windows():
    cases = {
        (1, 12): [1, 0, 196560, 16773120, 398034000],
        (2, 8): [1, 0, 4320, 61440, 522720],
        (3, 6): [1, 0, 756, 4032, 20412],
    }
    for (n, k), want in cases.items():
        form = extremal_form(n, k, 10)
        got = [form.series.coefficient_q(j) for j in range(0, 10, 2)]
        assert got == want, (n, k)
        assert form.jump == 4


def test_extremal_form_weight_below_first_jump(catalog):
    # weight 8 at level 1: no coefficients to clear, the form is theta(E8)^2
    form = extremal_form(1, 8, 6)
    e8 = catalog.lattice("E8")
    th = theta_series(direct_sum(e8, e8), 6)
    assert form.series.agree(th)[0]
    assert form.jump == 2


def test_extremal_form_precision_guard():
    with pytest.raises(ValueError):
        extremal_form(1, 12, 4)


def test_extremal_min_bound_values():
    assert extremal_min_bound(1, 12) == 4
    assert extremal_min_bound(1, 4) == 2
    assert extremal_min_bound(1, 36) == 8
    assert extremal_min_bound(2, 8) == 4
    assert extremal_min_bound(3, 6) == 4
    assert extremal_min_bound(23, 1) == 4


def test_check_modular_d4_exact(catalog):
    v = check_modular(catalog.lattice("D4"))
    assert isinstance(v, ModularityVerdict)
    assert v.level == 2 and v.verdict == PASS and v.exact_pass
    assert [r.m for r in v.results] == [1, 2]
    assert v.results[0].detail == "identical gram"


def test_check_modular_formal_only(catalog):
    v = check_modular(catalog.lattice("D4"), exact=False)
    assert v.verdict == PASS
    assert [r.exact for r in v.results] == ["pass", "skipped"]


def test_check_modular_level_outside_theta_ring():
    # 2 I_2 is strongly 4-modular; modularity needs no Delta_N machinery
    v = check_modular(Lattice([[2, 0], [0, 2]]))
    assert v.level == 4 and v.verdict == PASS
    assert [r.m for r in v.results] == [1, 4]


def test_check_modular_detects_failure(catalog):
    bad = direct_sum(catalog.lattice("E8"), catalog.lattice("A2"))
    v = check_modular(bad, precision=8)
    assert v.level == 3 and v.verdict == FAIL
    fails = [r for r in v.results if r.formal == FAIL]
    assert [r.m for r in fails] == [3]


def test_check_modular_divisor_diagonal_family():
    for n in (6, 15):
        from modlattice.lattice import c_n_lattice
        v = check_modular(c_n_lattice(n))
        assert v.verdict == PASS and v.exact_pass, n


def test_render_mentions_every_divisor(catalog):
    v = check_modular(catalog.lattice("D4"))
    text = v.render()
    assert text.splitlines()[0].startswith("[pass] strong modularity at level 2")
    assert len(text.splitlines()) == 3


def test_check_extremal_positives(catalog):
    for name in ("E8", "A2", "D4", "K12", "BW16", "D16plus", "N5base"):
        rep = check_extremal(catalog.lattice(name))
        assert rep.verdict == PASS, name
        assert rep.details["minimum"] == rep.details["bound"]


def test_check_extremal_rescaled_determinant_fails(catalog):
    rep = check_extremal(rescale(catalog.lattice("K12"), 2))
    assert rep.verdict == FAIL
    assert "determinant" in rep.details["reason"]


def test_check_extremal_e6_determinant_fails(catalog):
    rep = check_extremal(catalog.lattice("E6"))
    assert rep.verdict == FAIL
    assert "determinant" in rep.details["reason"]


def test_check_extremal_minimum_below_bound(catalog):
    rep = check_extremal(catalog.lattice("N23base"))
    assert rep.verdict == FAIL
    assert rep.witnesses == [{"minimum": 2, "bound": 4}]


def test_check_extremal_rejects_odd_lattice():
    rep = check_extremal(zn(4))
    assert rep.verdict == FAIL
    assert rep.details["reason"] == "lattice is not even"


def test_check_extremal_non_admissible_level_raises():
    with pytest.raises(LevelError):
        check_extremal(rescale(zn(2), 2))    # level 4


def test_check_extremal_odd_cases(catalog):
    rep = check_extremal_odd(catalog.lattice("D12plus"))
    assert rep.verdict == PASS
    assert rep.details == {**rep.details, "minimum": 2, "bound": 2}
    rep = check_extremal_odd(zn(12))
    assert rep.verdict == FAIL
    assert (rep.details["minimum"], rep.details["bound"]) == (1, 2)


def test_transformation_formula_positives(catalog):
    for lat, t in ((catalog.lattice("A2"), 2), (zn(1), 1),
                   (catalog.lattice("E8"), 1)):
        rep = transformation_check(lat, t)
        assert rep.verdict == PASS
        assert rep.details["difference"] <= (rep.details["tail_bounds"]
                                             + rep.details["tolerance"])


def test_transformation_formula_tail_too_slow_is_inconclusive():
    rep = transformation_check(zn(1), Fraction(1, 10 ** 6))
    assert rep.verdict == INCONCLUSIVE
    assert "tail" in rep.details["hint"]
