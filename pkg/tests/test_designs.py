"""Design strength, perfection, eutaxy and harmonic theta series."""
from fractions import Fraction

import pytest

from modlattice.designs import (DesignTestConfig, EUTACTIC_CERT,
                                NOT_EUTACTIC, STRONGLY_EUTACTIC,
                                check_design, coxeter_identity_check,
                                coxeter_number, default_witnesses,
                                design_constant, double_factorial_odd,
                                eutaxy_check, even_min_lower_bound,
                                exact_power_sums, harmonic_theta_truncation,
                                is_perfect, is_strongly_perfect,
                                min_product_check, moment_tensor_test,
                                perfection_rank, power_sum_design_test,
                                predicted_design_strength, zonal_harmonic)
from modlattice.enumeration import VectorLayer, min_layer, theta_series
from modlattice.errors import ModLatticeError
from modlattice.lattice import Lattice, direct_sum, rescale, zn
from modlattice.qseries import delta_level
from modlattice.report import FAIL, PASS

import numpy as np


def test_double_factorial_and_design_constant():
    assert [double_factorial_odd(k) for k in range(1, 6)] == [1, 3, 15, 105, 945]
    # 240 roots of norm 2 in dim 8
    assert design_constant(8, 1, 240, 2) == 60
    assert design_constant(8, 2, 240, 2) == 36


def test_exact_power_sums_against_direct_loop():
    dots = np.array([3, -1, -1, 0, 2, 3, -4])
    want = {d: sum(int(x) ** d for x in dots) for d in (1, 2, 3, 6)}
    assert exact_power_sums(dots, (1, 2, 3, 6)) == want


def test_default_witnesses_are_distinct_nonzero_and_stable():
    w = default_witnesses(5, 40, 123)
    assert len(set(w)) == 40
    assert all(any(a) for a in w)
    assert all(max(map(abs, a)) <= 9 for a in w)
    assert w == default_witnesses(5, 40, 123)
    assert w != default_witnesses(5, 40, 124)


def test_square_vertices_are_a_3_design_not_4():
    lay = min_layer(zn(2))
    assert power_sum_design_test(lay, [2]).verdict == PASS
    rep = power_sum_design_test(lay, [4])
    assert rep.verdict == FAIL
    w = rep.witnesses
    # recompute the failing moment from the witness direction
    a = w["direction"]
    lhs = sum((v[0] * a[0] + v[1] * a[1]) ** 4 for v in lay.vectors)
    assert lhs == w["lhs"] and lhs != w["rhs"]


def test_layer_guards():
    lay = min_layer(zn(2))
    with pytest.raises(ModLatticeError):
        power_sum_design_test(VectorLayer(lay.norm, lay.vectors, True, None), [2])
    with pytest.raises(ModLatticeError):
        power_sum_design_test(
            VectorLayer(lay.norm, lay.vectors, False, lay.lattice), [2])
    with pytest.raises(ModLatticeError):
        moment_tensor_test(
            VectorLayer(1, ((1, 0), (0, 1)), True, zn(2)), 2)


def test_moment_tensor_e8_roots(catalog):
    lay = min_layer(catalog.lattice("E8"))
    for two_k in (2, 4, 6):
        rep = moment_tensor_test(lay, two_k)
        assert rep.verdict == PASS and rep.details["proof"]
    assert moment_tensor_test(lay, 2).details["entries"] == 36   # C(9,2)


def test_moment_tensor_d4_roots_fail_at_degree_six(catalog):
    lay = min_layer(catalog.lattice("D4"))
    assert moment_tensor_test(lay, 4).verdict == PASS
    rep = moment_tensor_test(lay, 6)
    assert rep.verdict == FAIL
    w = rep.witnesses
    assert w["monomial"] == [0, 0, 0, 0, 0, 0]
    # moment in y = Gx coordinates; denominator n(n+2)(n+4) = 192
    g = lay.lattice.gram
    lhs = sum(sum(v[i] * g[i][0] for i in range(4)) ** 6
              for v in lay.vectors)
    assert w["lhs_times_denominator"] == lhs * 192
    assert w["lhs_times_denominator"] != w["rhs_times_denominator"]


def test_moment_tensor_block_size_does_not_matter(catalog):
    lay = min_layer(catalog.lattice("D4"))
    a = moment_tensor_test(lay, 4, block_columns=3)
    b = moment_tensor_test(lay, 4)
    assert (a.verdict, a.details["entries"]) == (b.verdict, b.details["entries"])


def test_check_design_e8_seven_not_eight(catalog):
    lay = min_layer(catalog.lattice("E8"))
    rep = check_design(lay, 7)
    assert rep.verdict == PASS and rep.details["proof"]
    assert {int(d) for d in rep.details["degrees"]} == {2, 4, 6}
    rep8 = check_design(lay, 8)
    assert rep8.verdict == FAIL
    assert rep8.details["degrees"][8]["strategy"] == "witness"
    assert rep8.witnesses["degree"] == 8
    assert rep8.seed == 41651


def test_design_config_strategy_split():
    cfg = DesignTestConfig()
    assert [cfg.strategy(d) for d in (2, 4, 6, 8, 10)] == [
        "tensor", "tensor", "tensor", "witness", "witness"]
    low = DesignTestConfig(tensor_max=2)
    assert low.strategy(4) == "witness"


def test_strongly_perfect_small_cases(catalog):
    for name in ("A2", "D4"):
        rep = is_strongly_perfect(catalog.lattice(name))
        assert rep.verdict == PASS and rep.details["proof"], name
    rep = is_strongly_perfect(zn(3))
    assert rep.verdict == FAIL
    assert rep.details["failed_degree"] == 4
    assert rep.witnesses["lhs_times_denominator"] == 30
    assert rep.witnesses["rhs_times_denominator"] == 18


def test_perfection_ranks(catalog):
    assert perfection_rank(catalog.lattice("E8")) == 36
    assert perfection_rank(catalog.lattice("A2")) == 3
    assert perfection_rank(catalog.lattice("D4")) == 10
    assert perfection_rank(zn(2)) == 2


def test_is_perfect(catalog):
    assert is_perfect(catalog.lattice("E8"))
    assert is_perfect(catalog.lattice("A2"))
    assert is_perfect(catalog.lattice("D4"))
    assert not is_perfect(zn(2))
    assert not is_perfect(zn(3))


def test_eutaxy_strong_cases(catalog):
    rep = eutaxy_check(catalog.lattice("E8"))
    assert rep.verdict == PASS
    assert rep.details["kind"] == STRONGLY_EUTACTIC
    assert rep.details["coefficient"] == Fraction(1, 60)
    rep = eutaxy_check(zn(4))
    assert rep.details["kind"] == STRONGLY_EUTACTIC
    assert rep.details["coefficient"] == Fraction(1, 2)


def test_eutaxy_certificate_without_strong_eutaxy(catalog):
    lat = direct_sum(catalog.lattice("A2"), rescale(zn(1), 2))
    rep = eutaxy_check(lat)
    assert rep.verdict == PASS
    assert rep.details["kind"] == EUTACTIC_CERT
    coeffs = rep.witnesses["coefficients"]
    assert sorted(coeffs) == [Fraction(1, 6)] * 3 + [Fraction(1, 4)]
    assert all(c > 0 for c in coeffs)


def test_eutaxy_disproof():
    rep = eutaxy_check(Lattice([[1, 0], [0, 3]]))
    assert rep.verdict == FAIL
    assert rep.details["kind"] == NOT_EUTACTIC


def test_min_product_bounds(catalog):
    rep = min_product_check(catalog.lattice("A2"))
    assert rep.verdict == PASS
    assert rep.details["product"] == rep.details["bound"] == Fraction(4, 3)
    rep = min_product_check(catalog.lattice("D4"))
    assert rep.verdict == PASS and rep.details["product"] == 2
    rep = min_product_check(zn(5))
    assert rep.verdict == FAIL
    assert rep.details == {**rep.details,
                           "product": 1, "bound": Fraction(7, 3)}


def test_even_min_lower_bound():
    assert even_min_lower_bound(8) == 2
    assert even_min_lower_bound(24) == 4
    assert even_min_lower_bound(80) == 6
    assert even_min_lower_bound(248) == 10
    # smallest even m with m*m >= (dim+2)/3
    for dim in (8, 24, 80, 248):
        m = even_min_lower_bound(dim)
        assert m % 2 == 0 and m * m * 3 >= dim + 2 > (m - 2) * (m - 2) * 3


def test_coxeter_numbers(catalog):
    assert coxeter_number(catalog.lattice("E8")) == 30
    assert coxeter_number(catalog.lattice("A2")) == 3
    assert coxeter_number(catalog.lattice("D4")) == 6


def test_coxeter_identity(catalog):
    for name, h in (("E8", 30), ("A2", 3), ("D4", 6)):
        rep = coxeter_identity_check(catalog.lattice(name))
        assert rep.verdict == PASS
        assert rep.details["coxeter_number"] == h
    # unbalanced norm-2 layer breaks the identity; no roots at all is
    # reported as inconclusive rather than a disproof
    assert coxeter_identity_check(Lattice([[2, 0], [0, 6]])).verdict == FAIL
    rep = coxeter_identity_check(Lattice([[1, 0], [0, 3]]))
    assert rep.verdict == "inconclusive"


def test_predicted_design_strength():
    assert predicted_design_strength(1, 12) == 11
    assert predicted_design_strength(1, 4) == 7
    assert predicted_design_strength(2, 8) == 7
    assert predicted_design_strength(2, 2) == 5
    assert predicted_design_strength(3, 6) == 5
    assert predicted_design_strength(3, 1) == 5
    assert predicted_design_strength(5, 2) is None


def test_zonal_coefficient_tables():
    tables = {
        2: [(2, -1), (4, -3), (8, -8, 1), (16, -20, 5), (32, -48, 18, -1)],
        3: [(3, -1), (5, -3), (35, -30, 3), (63, -70, 15),
            (231, -315, 105, -5)],
        4: [(4, -1), (2, -1), (16, -12, 1), (16, -16, 3), (64, -80, 24, -1)],
        5: [(5, -1), (7, -3), (21, -14, 1), (33, -30, 5),
            (429, -495, 135, -5)],
        8: [(8, -1), (10, -3), (40, -20, 1), (56, -40, 5),
            (896, -840, 180, -5)],
    }
    for n, rows in tables.items():
        got = [tuple(zonal_harmonic(n, t).coefficients) for t in range(2, 7)]
        assert got == rows, "dim %d" % n
    assert tuple(zonal_harmonic(4, 0).coefficients) == (1,)
    assert tuple(zonal_harmonic(6, 1).coefficients) == (1,)


def test_zonal_harmonics_are_annihilated_by_the_laplacian():
    import sympy
    for n in (2, 3, 4):
        xs = sympy.symbols("x0:%d" % n)
        axis = tuple(range(1, n + 1))
        for t in range(2, 6):
            z = zonal_harmonic(n, t)
            u = sum(x * a for x, a in zip(xs, axis))
            w = sum(x * x for x in xs) * sum(a * a for a in axis)
            poly = sympy.expand(z.eval_invariants(u, w))
            lap = sum(sympy.diff(poly, x, 2) for x in xs)
            assert sympy.simplify(lap) == 0, (n, t)


def test_zonal_eval_agrees_with_invariants():
    z = zonal_harmonic(3, 4)
    g = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    x, a = (1, -2, 2), (3, 0, 1)
    u = sum(p * q for p, q in zip(x, a))
    w = sum(p * p for p in x) * sum(q * q for q in a)
    assert z.eval(g, x, a) == z.eval_invariants(u, w)


def test_harmonic_theta_degree_zero_is_theta(catalog):
    e8 = catalog.lattice("E8")
    alpha = [1, 0, 0, 0, 0, 0, 0, 0]
    assert harmonic_theta_truncation(e8, alpha, 0, 6) == theta_series(e8, 6)


def test_harmonic_theta_e8_vanishes_through_degree_seven(catalog):
    e8 = catalog.lattice("E8")
    alpha = [1, 0, 0, 0, 0, 0, 0, 0]
    for t in range(1, 8):
        qs = harmonic_theta_truncation(e8, alpha, t, 6)
        assert qs.coeffs == {}, "degree %d" % t


def test_harmonic_theta_e8_degree_eight_is_a_cusp_form(catalog):
    e8 = catalog.lattice("E8")
    qs = harmonic_theta_truncation(e8, [1, 0, 0, 0, 0, 0, 0, 0], 8, 8)
    got = {e // 12: int(c) for e, c in sorted(qs.coeffs.items())}
    assert got == {2: 552960, 4: -13271040, 6: 139345920}
    # weight 4 + 8 = 12 at level 1 forces a multiple of the cusp form
    cusp = delta_level(1, 12 * 8)
    assert qs.agree(552960 * cusp)[0]


def test_harmonic_theta_z2_frozen_window():
    qs = harmonic_theta_truncation(zn(2), [1, 0], 4, 6)
    got = {e // 12: int(c) for e, c in sorted(qs.coeffs.items())}
    assert got == {1: 4, 2: -16, 4: 64, 5: -56}


def test_harmonic_theta_odd_degrees_vanish(catalog):
    for t in (1, 3, 5):
        assert harmonic_theta_truncation(zn(2), [2, 1], t, 5).coeffs == {}
        assert harmonic_theta_truncation(
            catalog.lattice("A2"), [1, 1], t, 5).coeffs == {}
