"""Satake data, power L-factors, Sato-Tate statistics, integrality test."""

import math

import numpy as np
import pytest

from lflab.langlands import (
    SatakeData,
    delta_ap,
    delta_ap_integer,
    ext_power_local,
    histogram_discrepancy,
    integrality_polynomial,
    ramanujan_kim_sarnak_check,
    rankin_selberg_local,
    sarnak_integrality_test,
    sato_tate_report,
    satake_from_ap,
    semicircle_moment,
    sym_power_local,
    sym_power_local_gln,
)
from lflab.modular_forms import tau_coefficients
from lflab.primes import primes

CATALAN = (1.0, 1.0, 2.0, 5.0, 14.0)


class TestSatake:
    def test_double_root(self):
        d = satake_from_ap(2.0, 2)
        assert d.alphas == (1 + 0j, 1 + 0j)

    def test_tie_break(self):
        d = satake_from_ap(0.0, 2)
        assert d.alphas[0] == 1j and d.alphas[1] == -1j

    def test_delta_p2_back_substitution(self):
        a2 = -24.0 / 2.0**5.5
        d = satake_from_ap(a2, 2)
        alpha = d.alphas[0]
        assert abs(alpha + 1.0 / alpha - a2) < 1e-12
        assert abs(alpha * d.alphas[1] - 1.0) < 1e-14

    def test_outside_unit_circle(self):
        d = satake_from_ap(2.5, 2)
        assert abs(d.alphas[0]) >= 1.0


class TestPowerFactors:
    def test_sym1_is_standard(self):
        d = satake_from_ap(-24.0 / 2.0**5.5, 2)
        s = 2.0 + 0.5j
        a, b = d.alphas
        std = 1.0 / ((1 - a * 2**-s) * (1 - b * 2**-s))
        assert abs(sym_power_local(d, 1, s) - std) < 1e-14

    def test_sym2_alpha_i(self):
        d = satake_from_ap(0.0, 3)  # alpha = i, beta = -i
        got = sym_power_local(d, 2, 2.0)
        expect = 1.0 / ((1 - (-1) * 3**-2.0) * (1 - 3**-2.0) * (1 - (-1) * 3**-2.0))
        assert abs(got - expect) < 1e-14

    def test_sym2_has_three_linear_terms(self):
        # degree check via polynomial reconstruction in u = p^{-s}
        d = satake_from_ap(0.7, 5)
        a, b = d.alphas
        roots = [a * a, a * b, b * b]
        s = 1.5
        u = 5.0**-s
        prod = 1.0
        for r in roots:
            prod *= 1 - r * u
        assert abs(1.0 / sym_power_local(d, 2, s) - prod) < 1e-14

    def test_gln_matches_gl2(self):
        d = satake_from_ap(-24.0 / 2.0**5.5, 2)
        s = 2.0 + 0.5j
        assert abs(sym_power_local_gln(d, 2, s) - sym_power_local(d, 2, s)) < 1e-13

    def test_ext_top_degree_single_factor(self):
        d = SatakeData(3, (0.5 + 0.1j, 2.0, -1.0 + 0j))
        s = 2.5
        det = np.prod(d.alphas)
        expect = 1.0 / (1 - det * 3.0**-s)
        assert abs(ext_power_local(d, 3, s) - expect) < 1e-13

    def test_ext2_gl2_is_zeta_factor(self):
        d = satake_from_ap(1.1, 7)
        s = 2.0
        assert abs(ext_power_local(d, 2, s) - 1.0 / (1 - 7.0**-s)) < 1e-14

    def test_ext_degree_guard(self):
        d = satake_from_ap(0.5, 2)
        with pytest.raises(ValueError):
            ext_power_local(d, 3, 2.0)

    def test_rankin_selberg_with_trivial(self):
        d = satake_from_ap(0.3, 2)
        triv = SatakeData(2, (1 + 0j,))
        s = 2.2
        a, b = d.alphas
        std = 1.0 / ((1 - a * 2**-s) * (1 - b * 2**-s))
        assert abs(rankin_selberg_local(d, triv, s) - std) < 1e-14

    def test_rankin_selberg_degree_count(self):
        d2 = satake_from_ap(0.3, 2)
        d3 = SatakeData(2, (1j, -1j, 1 + 0j))
        s = 3.0
        u = 2.0**-s
        prod = 1.0
        for a in d2.alphas:
            for b in d3.alphas:
                prod *= 1 - a * b * u
        assert abs(1.0 / rankin_selberg_local(d2, d3, s) - prod) < 1e-13

    def test_prime_mismatch(self):
        with pytest.raises(ValueError):
            rankin_selberg_local(satake_from_ap(0.1, 2), satake_from_ap(0.1, 3), 2.0)

    def test_factorization_identity_all_p(self):
        # standard x standard = Sym^2 x zeta-factor for Delta, p <= 100
        tau = tau_coefficients(100)
        s = 3.0
        for p in primes(100):
            p = int(p)
            d = satake_from_ap(tau[p] / p**5.5, p)
            lhs = rankin_selberg_local(d, d, s)
            rhs = sym_power_local(d, 2, s) / (1 - float(p) ** -s)
            assert abs(lhs - rhs) < 1e-12


class TestSemicircleMoments:
    def test_probability_measure(self):
        assert abs(semicircle_moment(0) - 1.0) < 1e-12

    def test_odd_vanish(self):
        for m in (1, 3, 5, 7):
            assert abs(semicircle_moment(m)) < 1e-12

    def test_sixth_is_five(self):
        assert abs(semicircle_moment(6) - 5.0) < 1e-10

    def test_catalan(self):
        for k in range(5):
            assert abs(semicircle_moment(2 * k) - CATALAN[k]) < 1e-10


class TestSatoTate:
    def test_moment_zero_exact(self):
        _, ap = delta_ap(10**4)
        moments, _, _ = sato_tate_report(ap, 10**4, m_max=0)
        assert moments[0][1] == 1.0

    def test_first_and_second_moments(self):
        _, ap = delta_ap(10**5)
        moments, hist, rep = sato_tate_report(ap, 10**5, m_max=4)
        by_m = {m: (emp, target) for m, emp, target in moments}
        assert abs(by_m[1][0]) < 0.05
        assert abs(by_m[2][0] - 1.0) < 0.1
        assert abs(by_m[3][0]) < 0.3
        assert abs(by_m[4][0] - 2.0) < 0.3
        assert rep.passed

    def test_histogram_shape_and_mass(self):
        _, ap = delta_ap(10**4)
        _, hist, _ = sato_tate_report(ap, 10**4, bins=40)
        assert hist.shape == (40, 3)
        width = math.pi / 40
        assert abs(hist[:, 1].sum() * width - 1.0) < 1e-12

    def test_discrepancy_decreases(self):
        d4 = histogram_discrepancy(delta_ap(10**4)[1])
        d5 = histogram_discrepancy(delta_ap(10**5)[1])
        assert d5 < d4


class TestRamanujanKimSarnak:
    def test_delta_no_violations(self):
        ps, ap = delta_ap(10**4)
        rep = ramanujan_kim_sarnak_check(ps, ap, 10**4)
        assert rep.passed
        max_ap = [v for k, v in rep.details if k.startswith("max |a_p|")][0]
        assert max_ap < 2.0
        margin = [v for k, v in rep.details if "margin" in k][0]
        assert margin > 0.0

    def test_window_slack_positive(self):
        # for |alpha| = 1 the log-margin is (7/64) log p > 0 for all p >= 2
        for p in (2, 3, 97):
            assert 7.0 / 64.0 * math.log(p) > 0

    def test_injected_violation(self):
        ps, ap = delta_ap(10**3)
        bad = np.concatenate([ap, [2.5]])
        rep = ramanujan_kim_sarnak_check(np.concatenate([ps, [997]]), bad, 10**3)
        assert not rep.passed
        assert rep.max_abs_error == 1.0  # exactly one violation


class TestSarnakIntegrality:
    def test_polynomial_zeros(self):
        for x in (-2, -1, 0, 1, 2):
            assert integrality_polynomial(float(x)) == 0.0

    def test_outside_negative(self):
        assert integrality_polynomial(3.0) == 9.0 * (4 - 9) * (9 - 1) == -360.0

    def test_semicircle_value_one(self):
        # expand P = -x^6 + 5 x^4 - 4 x^2 and combine quadrature moments
        target = -semicircle_moment(6) + 5 * semicircle_moment(4) - 4 * semicircle_moment(2)
        assert abs(target - 1.0) < 1e-10

    def test_report_contradiction(self):
        _, taus = delta_ap_integer(10**3)
        rep = sarnak_integrality_test(taus, 10**3)
        assert rep.passed  # the quadrature side reproduces 1
        emp = [v for k, v in rep.details if k.startswith("empirical")][0]
        assert emp <= 0.0  # integer data cannot reach the semicircle value
