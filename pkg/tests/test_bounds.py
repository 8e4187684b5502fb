"""Bound formulas, window location, and the comparison theorem."""

import math
from fractions import Fraction

import numpy as np
import pytest

from spectral_moore.bounds import (
    OutOfRange,
    b_upper,
    c_from_theta,
    compare,
    girth_threshold,
    hj_bound_t4,
    hj_bound_t5,
    locate_t,
    m_bound,
    mu_j,
    n_bound,
    r_j,
    ty_improved,
    v_upper,
)
from spectral_moore.orthopoly import calg_poly, f_poly, g_poly, lambda_j
from spectral_moore.spectra import InvalidC


class TestMBound:
    def test_paper_values(self):
        assert m_bound(3, 4, 2) == 8
        assert m_bound(3, 5, 1) == 30
        assert m_bound(3, 7, 1) == 126
        assert m_bound(6, 5, 2) == 162
        assert m_bound(3, 4, 1) == 14
        assert m_bound(2, 4, 1) == 6
        assert m_bound(3, 3, 1) == 6  # empty sum at t = 3

    def test_exactness(self):
        v = m_bound(5, 6, Fraction(3, 2))
        assert isinstance(v, Fraction)
        assert v == 2 * (1 + 4 + 16 + (64 + 256) * Fraction(2, 3))

    def test_rejects(self):
        with pytest.raises(InvalidC):
            m_bound(3, 4, 0)
        with pytest.raises(ValueError):
            m_bound(3, 2, 1)


class TestLocate:
    def test_examples(self):
        assert locate_t(3, 1.0) == 4
        assert locate_t(3, 2.0) == 5
        assert locate_t(3, 1e-9) == 4
        assert locate_t(3, 0.0) == 4

    def test_exact_boundaries(self):
        # theta = lambda^(j) exactly must choose the smaller t
        assert locate_t(3, math.sqrt(2), Fraction(2)) == 4
        assert locate_t(3, 2.0, Fraction(4)) == 5
        assert locate_t(3, math.sqrt(6), Fraction(6)) == 7
        assert locate_t(6, math.sqrt(5), Fraction(5)) == 4

    def test_just_above_boundary(self):
        assert locate_t(3, 2.0, Fraction(4 * 10001, 10000)) == 6

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            locate_t(3, 2 * math.sqrt(2))
        with pytest.raises(OutOfRange):
            locate_t(3, -0.5)

    @pytest.mark.parametrize("k", (3, 5, 8))
    def test_window_consistency(self, k):
        edge = 2 * math.sqrt(k - 1)
        for frac in np.linspace(0.02, 0.98, 29):
            theta = float(frac * edge)
            t = locate_t(k, theta)
            assert lambda_j(k, t - 3) < theta + 1e-12
            assert theta <= lambda_j(k, t - 2) + 1e-12


class TestCFromTheta:
    def test_examples(self):
        assert c_from_theta(3, 4, 1.0, Fraction(1)) == 2
        assert c_from_theta(3, 4, math.sqrt(2), Fraction(2)) == 1
        for k in (3, 5, 9):
            for ssq in (Fraction(1, 2), Fraction(1), Fraction(2)):
                got = c_from_theta(k, 4, math.sqrt(ssq), ssq)
                assert got == k - ssq

    def test_t5_closed_form(self):
        # c = 2k - 1 - theta^2 in the second window
        for k in (3, 4, 7):
            ssq = Fraction(k)  # sqrt(k) sits in (sqrt(k-1), sqrt(2(k-1))] for k >= 2
            got = c_from_theta(k, 5, math.sqrt(ssq), ssq)
            assert got == 2 * k - 1 - ssq

    def test_kc_identity(self):
        # k/c = 1 - theta * G_{t-3}(theta) / F_{t-2}(theta)
        for k in (3, 5):
            edge = 2 * math.sqrt(k - 1)
            for frac in np.linspace(0.05, 0.95, 21):
                theta = float(frac * edge)
                t = locate_t(k, theta)
                c = c_from_theta(k, t, theta)
                lhs = k / c
                rhs = 1 - theta * g_poly(k, t - 3)(theta) / f_poly(k, t - 2)(theta)
                assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(rhs))


class TestBUpper:
    def test_extremal_instances(self):
        r = b_upper(3, 1)
        assert (r.t, r.c, r.value, r.exact) == (4, 2, 8, True)
        assert r.attained_by == "cube"
        r = b_upper(3, math.sqrt(2), theta_sq=2)
        assert (r.t, r.c, r.value) == (4, 1, 14)
        assert r.attained_by == "heawood"
        assert r.alternate == (5, 3)
        r = b_upper(6, 3)
        assert (r.t, r.c, r.value) == (5, 2, 162)
        assert r.attained_by == "pg(6,6,2)"

    def test_theta_zero(self):
        r = b_upper(4, 0)
        assert (r.t, r.c, r.value) == (4, 4, 8)
        assert r.attained_by == "K_4,4"

    def test_heawood_scale_families(self):
        assert b_upper(3, 2).value == 30
        assert b_upper(3, math.sqrt(6), theta_sq=6).value == 126
        assert b_upper(3, math.sqrt(3), theta_sq=3).value == 18
        assert b_upper(5, math.sqrt(3), theta_sq=3).value == 22

    def test_monotone_in_theta(self):
        for k in (3, 6):
            edge = 2 * math.sqrt(k - 1)
            prev = 0.0
            for frac in np.linspace(0.02, 0.99, 60):
                val = float(b_upper(k, float(frac * edge)).value)
                assert val >= prev - 1e-9
                prev = val

    def test_boundary_gives_c_one(self):
        for k in (3, 4, 6):
            for j in (2, 3):
                sq = {2: Fraction(k - 1), 3: Fraction(2 * (k - 1))}[j]
                r = b_upper(k, math.sqrt(sq), theta_sq=sq)
                assert r.c == 1
                assert r.t == j + 2


class TestVUpper:
    def test_petersen_companion(self):
        r = v_upper(3, 1)
        assert (r.t, r.c, r.value, r.exact) == (3, 1, 10, True)

    def test_tutte_coxeter_theta(self):
        # the spec sheet sketched (t=4, c=1, N=22) here; exact arithmetic
        # puts theta=2 in the t=5 window with c=3, N=30
        r = v_upper(3, 2)
        assert (r.t, r.c, r.value) == (5, 3, 30)

    def test_r_examples(self):
        assert r_j(3, 1) == -1.0
        assert r_j(3, 2) == pytest.approx(1.0, abs=1e-11)
        assert r_j(3, 3) == pytest.approx(1.8136065, abs=1e-6)

    def test_r_matches_numpy(self):
        for k in (3, 5):
            for j in (2, 3, 4, 5, 6):
                coeffs = [float(c) for c in calg_poly(k, j).coeffs][::-1]
                top = max(np.roots(coeffs).real)
                assert r_j(k, j) == pytest.approx(top, abs=1e-8)

    def test_r_interlaces_lambda(self):
        for k in (3, 4, 7):
            for j in (2, 3, 4, 5):
                assert lambda_j(k, j - 1) < r_j(k, j) < lambda_j(k, j)

    def test_negative_theta_window(self):
        r = v_upper(4, -0.5)
        assert r.t == 3

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            v_upper(3, -1.0)


class TestCompare:
    def test_example_values(self):
        cr = compare(3, 1)
        assert (cr.m.value, cr.n.value) == (8, 10)
        assert cr.m_le_n and not cr.equality

    def test_boundary_equality(self):
        cr = compare(3, 2)
        assert cr.m.value == cr.n.value == 30
        assert cr.equality and cr.boundary
        cr = compare(3, math.sqrt(2), theta_sq=2)
        assert cr.equality and cr.boundary

    @pytest.mark.parametrize("k", range(3, 9))
    def test_sweep(self, k):
        edge = 2 * math.sqrt(k - 1)
        for i in range(1, 51):
            theta = float(i * edge / 51)
            cr = compare(k, theta)
            assert cr.m_le_n
            assert cr.equality == cr.boundary or not cr.equality


class TestCorollaries:
    def test_hj_values(self):
        assert hj_bound_t4(3, math.sqrt(2)) == pytest.approx(7.0, abs=1e-9)
        assert hj_bound_t4(5, 0) == pytest.approx(5.0)  # K_{5,5} half-order
        assert hj_bound_t5(3, 2) == pytest.approx(9.0, abs=1e-9)

    def test_hj_matches_m(self):
        # half of M at the matching window
        for k in (3, 5, 8):
            for frac in (0.3, 0.7):
                theta = frac * math.sqrt(k - 1)
                assert hj_bound_t4(k, theta) == pytest.approx(float(b_upper(k, theta).value) / 2, rel=1e-9)

    def test_hj_domains(self):
        with pytest.raises(OutOfRange):
            hj_bound_t4(3, 1.5)
        with pytest.raises(OutOfRange):
            hj_bound_t5(3, 1.0)

    def test_ty_boundary_equality(self):
        new, old = ty_improved(3, math.sqrt(2), theta_sq=2)
        assert new == old == 14

    def test_ty_strict_inside(self):
        new, old = ty_improved(17, 2.5)
        assert new < old
        new, old = ty_improved(10, 2.0)
        assert new < old

    def test_ty_domain(self):
        with pytest.raises(OutOfRange):
            ty_improved(3, 1.0)

    def test_girth_threshold(self):
        theta, m = girth_threshold(3, 6)
        assert theta == pytest.approx(1.0) and m == 14
        theta, m = girth_threshold(3, 8)
        assert theta == pytest.approx(math.sqrt(2)) and m == 30
        theta, m = girth_threshold(4, 4)
        assert theta == 0.0 and m == 8


class TestWindowPropositions:
    """Sampled versions of the two window-shift inequalities."""

    @pytest.mark.parametrize("k", (3, 4, 6))
    @pytest.mark.parametrize("t", (4, 5, 6))
    def test_shrinking_t_wins_low_c(self, k, t):
        # theta between lambda^(t-2) and mu^(t-2): the (t, c1<1) form beats (t+2, c2)
        lo, hi = lambda_j(k, t - 2), mu_j(k, t - 2)
        for frac in (0.25, 0.5, 0.75, 0.98):
            theta = lo + frac * (hi - lo)
            c1 = -f_poly(k, t - 2)(theta) / g_poly(k, t - 4)(theta)
            c2 = -f_poly(k, t)(theta) / g_poly(k, t - 2)(theta)
            assert 0 < c1 < 1
            assert c2 > 0
            assert m_bound(k, t, c1) > m_bound(k, t + 2, c2)

    @pytest.mark.parametrize("k", (3, 4, 6))
    @pytest.mark.parametrize("t", (5, 6, 7))
    def test_large_c_collapses_to_smaller_t(self, k, t):
        # theta in (lambda^(t-4), lambda^(t-3)]: M(k,t,c1>=k) >= M(k,t-1,c2)
        lo = lambda_j(k, t - 4) if t >= 6 else 0.0
        hi = lambda_j(k, t - 3)
        for frac in (0.3, 0.6, 0.9):
            theta = lo + frac * (hi - lo)
            c1 = -f_poly(k, t - 2)(theta) / g_poly(k, t - 4)(theta)
            c2 = -f_poly(k, t - 3)(theta) / g_poly(k, t - 5)(theta)
            assert c1 >= k - 1e-9
            assert 1 - 1e-9 <= c2
            assert m_bound(k, t, c1) >= m_bound(k, t - 1, c2) - 1e-9

    def test_collapse_equality_case(self):
        # rational boundary: k=3, t=6, theta = lambda^(3) = 2
        c1 = c_from_theta(3, 6, 2.0, Fraction(4))
        c2 = c_from_theta(3, 5, 2.0, Fraction(4))
        assert (c1, c2) == (3, 1)
        assert m_bound(3, 6, c1) == m_bound(3, 5, c2) == 30
