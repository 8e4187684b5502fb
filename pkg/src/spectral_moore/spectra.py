"""Tridiagonal quotient matrices, their factored characteristic polynomials,
and second-largest eigenvalues.

Two kinds are supported.  The bipartite kind ("B") is t x t with lower
diagonal (1,...,1,c,k) and upper diagonal (k,k-1,...,k-1,k-c); the general
kind ("T") has lower diagonal (1,...,1,c) and upper diagonal (k,...,k-1).
Both have constant row sum k.  The nontrivial spectrum of the B kind is
carried by (c-1)*G_{t-4} + G_{t-2}, which factors out of det(xI - B)
together with x^2 - k^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .orthopoly import Poly, bisect_root, g_poly, g_zero, sign_at


class InvalidShape(ValueError):
    """Matrix size below the supported minimum."""


class InvalidC(ValueError):
    """Branching parameter c outside its admissible range."""


@dataclass(frozen=True)
class QuotientMatrix:
    kind: str
    k: int
    t: int
    c: Fraction
    rows: tuple[tuple[Fraction, ...], ...]

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(r) for r in self.rows)


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: tuple[float, ...]          # sorted descending
    exact_squares: tuple[Fraction, ...] | None = None


def build_quotient(kind: str, k: int, t: int, c) -> QuotientMatrix:
    if kind not in ("B", "T"):
        raise ValueError(f"kind must be 'B' or 'T', got {kind!r}")
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    if t < 3:
        raise InvalidShape(f"need t >= 3, got {t}")
    c = Fraction(c)
    if not 0 < c <= k:
        raise InvalidC(f"need 0 < c <= k, got c={c}")
    if kind == "B" and t == 3 and c != 1:
        raise InvalidShape("the 3 x 3 bipartite quotient is only defined for c = 1")

    rows = [[Fraction(0)] * t for _ in range(t)]
    if kind == "B":
        lower = [Fraction(1)] * (t - 3) + [c, Fraction(k)]
        upper = [Fraction(k)] + [Fraction(k - 1)] * (t - 3) + [k - c]
    else:
        lower = [Fraction(1)] * (t - 2) + [c]
        upper = [Fraction(k)] + [Fraction(k - 1)] * (t - 2)
    for i, v in enumerate(lower):
        rows[i + 1][i] = v
    for i, v in enumerate(upper):
        rows[i][i + 1] = v
    for i in range(t):
        rows[i][i] = k - sum(rows[i])
    return QuotientMatrix(kind, k, t, c, tuple(tuple(r) for r in rows))


def char_factor_b(k: int, t: int, c) -> Poly:
    """The nontrivial factor (c-1)*G_{t-4} + G_{t-2} of det(xI - B(k,t,c))."""
    if t < 4:
        raise InvalidShape(f"need t >= 4, got {t}")
    c = Fraction(c)
    return (c - 1) * g_poly(k, t - 4) + g_poly(k, t - 2)


def charpoly_B(k: int, t: int, c) -> tuple[Poly, Poly]:
    """Factored characteristic polynomial of B(k,t,c): (x^2 - k^2, S)."""
    c = Fraction(c)
    if c <= 0 or c > k:
        raise InvalidC(f"need 0 < c <= k, got c={c}")
    return Poly((-k * k, 0, 1)), char_factor_b(k, t, c)


def charpoly_dense(m: QuotientMatrix) -> Poly:
    """det(xI - M) by exact fraction-free-ish cofactor recursion (small t only)."""
    t = m.t
    rows = m.rows

    def minor_det(cols: tuple[int, ...], row: int) -> Poly:
        # expansion over polynomial entries: diag -> x - a, else -> -a
        if row == t:
            return Poly((1,))
        out = Poly(())
        sign = 1
        for idx, col in enumerate(cols):
            entry = Poly((-rows[row][col], 1)) if col == row else Poly((-rows[row][col],))
            if not entry.is_zero():
                rest = tuple(cc for cc in cols if cc != col)
                out = out + sign * entry * minor_det(rest, row + 1)
            sign = -sign
        return out

    return minor_det(tuple(range(t)), 0)


def second_eigenvalue_B(k: int, t: int, c, tol: float = 1e-12) -> float:
    """Largest zero of the nontrivial factor of B(k,t,c).

    For c >= 1 the zero sits in the angle window between the top zeros of
    G_{t-3} and G_{t-2}; for 0 < c < 1 it moves above the top zero of
    G_{t-2} but stays below 2*sqrt(k-1).
    """
    c = Fraction(c)
    if c <= 0 or c > k:
        raise InvalidC(f"need 0 < c <= k, got c={c}")
    if c == k:
        # the factor collapses to x * G_{t-3}
        return g_zero(k, t - 3, 1) if t >= 5 else 0.0
    s = char_factor_b(k, t, c)
    edge = 2.0 * math.sqrt(k - 1)
    if c >= 1:
        lo = g_zero(k, t - 3, 1) if t >= 5 else 0.0
        hi = g_zero(k, t - 2, 1)
    else:
        lo = g_zero(k, t - 2, 1)  # root escapes above the c=1 position
        hi = edge
    return _bisect_top(s, lo, hi, tol)


def _root_window(k: int, t: int, i: int) -> tuple[float, float]:
    """Certified bracket for the i-th positive root when c >= 1: between the
    i-th largest zeros of G_{t-3} and G_{t-2}."""
    lo = g_zero(k, t - 3, i) if i <= t - 3 else 0.0
    hi = g_zero(k, t - 2, i)
    return lo, hi


def _bisect_top(s: Poly, lo: float, hi: float, tol: float) -> float:
    span = max(hi - lo, 1e-9)
    for widen in (1e-9, 1e-7, 1e-5, 1e-3):
        a, b = lo - widen * span, hi + widen * span
        if sign_at(s, a) * sign_at(s, b) < 0:
            return bisect_root(s, a, b, tol)
    raise ValueError(f"could not certify a sign-change bracket near [{lo}, {hi}]")


def spectrum_B(k: int, t: int, c, tol: float = 1e-12) -> SpectrumResult:
    """Full eigenvalue list of B(k,t,c) for c in [1, k], sorted descending.

    Each positive root of the nontrivial factor is isolated in its own
    interlacing window, so bisection is certified per root.  The symmetric
    partners and the middle zero (t even) complete the list.
    """
    c = Fraction(c)
    if c < 1:
        raise InvalidC("full spectrum isolation is only certified for c >= 1")
    if c > k:
        raise InvalidC("c > k yields non-real eigenvalues")
    if c == k:
        # the factor degenerates to x * G_{t-3}; zeros in closed form
        positive = [g_zero(k, t - 3, i) for i in range(1, (t - 3) // 2 + 1)]
        middles = (t - 2) - 2 * len(positive)
    else:
        s = char_factor_b(k, t, c)
        npos = (t - 2) // 2
        positive = [_bisect_top(s, *_root_window(k, t, i), tol=tol) for i in range(1, npos + 1)]
        middles = 1 if (t - 2) % 2 == 1 else 0
    eig = [float(k)] + positive + [0.0] * middles
    eig += [-v for v in positive] + [-float(k)]
    return SpectrumResult(tuple(sorted(eig, reverse=True)))


def spectrum_dense(m: QuotientMatrix) -> SpectrumResult:
    """Numerical spectrum of the quotient matrix itself (floats, descending)."""
    import numpy as np

    arr = np.array([[float(v) for v in row] for row in m.rows])
    vals = np.linalg.eigvals(arr)
    if max(abs(vals.imag)) > 1e-8:
        raise ValueError("matrix has non-real eigenvalues")
    return SpectrumResult(tuple(sorted((float(v) for v in vals.real), reverse=True)))
