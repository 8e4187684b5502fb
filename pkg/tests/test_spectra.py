"""Quotient matrix construction, characteristic factors, second eigenvalues."""

import math
from fractions import Fraction

import numpy as np
import pytest

from spectral_moore.orthopoly import Poly, g_poly, lambda_j, scrg_poly
from spectral_moore.spectra import (
    InvalidC,
    InvalidShape,
    build_quotient,
    char_factor_b,
    charpoly_B,
    charpoly_dense,
    second_eigenvalue_B,
    spectrum_B,
    spectrum_dense,
)


class TestBuild:
    def test_b_3_4_1(self):
        m = build_quotient("B", 3, 4, 1)
        assert [[int(v) for v in row] for row in m.rows] == [
            [0, 3, 0, 0],
            [1, 0, 2, 0],
            [0, 1, 0, 2],
            [0, 0, 3, 0],
        ]

    def test_b_explicit_t3(self):
        for k in (3, 4, 7):
            m = build_quotient("B", k, 3, 1)
            assert [[int(v) for v in row] for row in m.rows] == [
                [0, k, 0],
                [1, 0, k - 1],
                [0, k, 0],
            ]

    def test_t_3_3_1(self):
        m = build_quotient("T", 3, 3, 1)
        assert [[int(v) for v in row] for row in m.rows] == [
            [0, 3, 0],
            [1, 0, 2],
            [0, 1, 2],
        ]

    @pytest.mark.parametrize("kind", ("B", "T"))
    def test_row_sums(self, kind):
        for k in (3, 5):
            for t in (4, 5, 7):
                for c in (1, 2, Fraction(5, 2)):
                    if c > k:
                        continue
                    m = build_quotient(kind, k, t, c)
                    assert all(s == k for s in m.row_sums())

    def test_rejects(self):
        with pytest.raises(InvalidShape):
            build_quotient("B", 3, 2, 1)
        with pytest.raises(InvalidC):
            build_quotient("B", 3, 4, 0)
        with pytest.raises(InvalidC):
            build_quotient("B", 3, 4, 4)
        with pytest.raises(InvalidShape):
            build_quotient("B", 3, 3, 2)


class TestCharpoly:
    def test_examples(self):
        quad, s = charpoly_B(3, 4, 1)
        assert quad == Poly((-9, 0, 1))
        assert s == Poly((-2, 0, 1))
        _, s = charpoly_B(3, 4, 2)
        assert s == Poly((-1, 0, 1))
        _, s = charpoly_B(3, 5, 1)
        assert s == Poly((0, -4, 0, 1))

    @pytest.mark.parametrize("k", (3, 4, 6))
    def test_matches_cofactor_expansion(self, k):
        for t in range(4, 9):
            for c in (1, 2, Fraction(3, 2), k):
                if c > k:
                    continue
                quad, s = charpoly_B(k, t, c)
                assert quad * s == charpoly_dense(build_quotient("B", k, t, c))

    def test_t3_special_case_charpoly(self):
        # det(xI - B(k,3,1)) = x (x^2 - k^2)
        for k in (3, 5):
            m = build_quotient("B", k, 3, 1)
            assert charpoly_dense(m) == Poly((0, -k * k, 0, 1))


class TestSecondEigenvalue:
    def test_examples(self):
        assert second_eigenvalue_B(3, 4, 1) == pytest.approx(math.sqrt(2), abs=1e-10)
        assert second_eigenvalue_B(3, 5, 1) == pytest.approx(2.0, abs=1e-10)
        assert second_eigenvalue_B(3, 4, 2) == pytest.approx(1.0, abs=1e-10)
        assert second_eigenvalue_B(6, 5, 2) == pytest.approx(3.0, abs=1e-10)

    @pytest.mark.parametrize("k", (3, 4, 6))
    @pytest.mark.parametrize("t", (4, 5, 6, 8))
    def test_monotone_decreasing_in_c(self, k, t):
        grid = [Fraction(1, 4) * i for i in range(1, 4 * k + 1)]
        vals = [second_eigenvalue_B(k, t, c) for c in grid]
        assert all(a > b + 1e-9 for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("k", (3, 5))
    @pytest.mark.parametrize("t", (4, 5, 7))
    def test_c_equal_one_boundary(self, k, t):
        assert second_eigenvalue_B(k, t, 1) == pytest.approx(lambda_j(k, t - 2), abs=1e-9)

    def test_scrg_zero_identity_at_c_k(self):
        # at c = k the smallest squared eigenvalue hits zero:
        # (k-1) scrg_{0,s-1}(0) + scrg_{0,s}(0) == 0.  For odd t the zero
        # eigenvalue is carried by the x-prefactor instead, so only the even
        # half satisfies this in the squared variable.
        for k in (3, 4, 7):
            for t in (4, 6, 8, 10):
                s = (t - 2) // 2
                val = (k - 1) * scrg_poly(k, 0, s - 1)(0) + scrg_poly(k, 0, s)(0)
                assert val == 0

    def test_c_equal_k_closed_form(self):
        assert second_eigenvalue_B(4, 4, 4) == 0.0
        assert second_eigenvalue_B(3, 5, 3) == pytest.approx(math.sqrt(2), abs=1e-12)
        assert second_eigenvalue_B(3, 6, 3) == pytest.approx(lambda_j(3, 3), abs=1e-12)


class TestSpectra:
    @pytest.mark.parametrize("k", (3, 4, 6))
    def test_dense_matches_factored_roots(self, k):
        for t in range(4, 9):
            for c in range(1, k + 1):
                got = spectrum_dense(build_quotient("B", k, t, c)).eigenvalues
                want = spectrum_B(k, t, c).eigenvalues
                assert len(got) == len(want) == t
                assert max(abs(a - b) for a, b in zip(got, want)) < 1e-8

    def test_symmetric_with_extremes(self):
        eig = spectrum_B(3, 6, 2).eigenvalues
        assert eig[0] == 3.0 and eig[-1] == -3.0
        assert max(abs(a + b) for a, b in zip(eig, reversed(eig))) < 1e-10

    @pytest.mark.parametrize("k", (3, 5))
    def test_nonzero_eigenvalues_simple(self, k):
        for t in (4, 5, 6, 7):
            for c in range(1, k + 1):
                eig = [v for v in spectrum_B(k, t, c).eigenvalues if abs(v) > 1e-9]
                gaps = [a - b for a, b in zip(eig, eig[1:])]
                assert all(g > 1e-8 for g in gaps)

    def test_spectrum_heawood_quotient(self):
        eig = spectrum_B(3, 4, 1).eigenvalues
        want = (3.0, math.sqrt(2), -math.sqrt(2), -3.0)
        assert max(abs(a - b) for a, b in zip(eig, want)) < 1e-10


def test_char_factor_requires_t4():
    with pytest.raises(InvalidShape):
        char_factor_b(3, 3, 1)


def test_numpy_available():
    assert np.__version__
