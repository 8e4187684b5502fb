"""Order bounds for regular graphs with a prescribed second eigenvalue.

``b_upper`` bounds connected *bipartite* k-regular graphs: it locates the
unique window lambda^(t-3) < theta <= lambda^(t-2) between largest zeros of
the G family, derives c = -F_{t-2}(theta)/G_{t-4}(theta), and evaluates

    M(k,t,c) = 2 * (sum_{i<=t-4} (k-1)^i + ((k-1)^{t-3} + (k-1)^{t-2}) / c).

``v_upper`` is the analogous bound for all k-regular graphs, driven by the
running-sum family and N(k,t,c).  When theta^2 is rational the M path is
exact end to end (both polynomials in the c ratio share parity, so the ratio
is a rational function of theta^2); the N path is exact for rational theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .orthopoly import calg_poly, f_poly, g_poly, lambda_j, sign_at
from .spectra import InvalidC
from . import table1


class OutOfRange(ValueError):
    """theta outside the window the requested bound covers."""


@dataclass(frozen=True)
class BoundResult:
    kind: str                       # "M" (bipartite) or "N" (general)
    k: int
    theta: float
    t: int
    c: Fraction | float
    value: Fraction | float
    exact: bool
    attained_by: str | None = None
    alternate: tuple[int, int] | None = None   # equal-value (t+1, c=k) form


@dataclass(frozen=True)
class ComparisonResult:
    m: BoundResult
    n: BoundResult
    m_le_n: bool
    equality: bool
    boundary: bool                  # theta at a lambda boundary with c1=1, c2=k


def _edge(k: int) -> float:
    return 2.0 * math.sqrt(k - 1)


def exact_sqrt(s: Fraction) -> Fraction | None:
    """Rational square root of s, or None."""
    if s < 0:
        return None
    rn, rd = isqrt(s.numerator), isqrt(s.denominator)
    if rn * rn == s.numerator and rd * rd == s.denominator:
        return Fraction(rn, rd)
    return None


def _parity_value(p, theta_sq: Fraction, parity: int) -> Fraction:
    """Value of the pure-parity polynomial p at theta, divided by theta^parity."""
    part = p.even_part() if parity == 0 else p.odd_part()
    return part(theta_sq)


def _above_lambda(k: int, j: int, theta_sq: Fraction) -> bool:
    """Exact test theta > lambda^(j) for theta = +sqrt(theta_sq) > 0.

    theta exceeds the largest zero of G_j iff every G_i (i <= j) is positive
    at theta; with the chain checked incrementally a single new sign decides
    each step.
    """
    for i in range(1, j + 1):
        if _parity_value(g_poly(k, i), theta_sq, i % 2) <= 0:
            return False
    return True


def locate_t(k: int, theta: float, theta_sq: Fraction | None = None) -> int:
    """Unique t >= 4 with lambda^(t-3) < theta <= lambda^(t-2); theta=0 -> 4."""
    if theta < 0 or theta >= _edge(k):
        raise OutOfRange(f"need 0 <= theta < 2*sqrt(k-1), got theta={theta}")
    if theta == 0 or theta_sq == 0:
        return 4
    if theta_sq is not None:
        s = Fraction(theta_sq)
        j = 2
        while _above_lambda(k, j, s):
            j += 1
        return j + 2
    gamma = math.acos(theta / _edge(k))
    j = max(2, math.ceil(math.pi / gamma) - 2)
    while theta > lambda_j(k, j) + 1e-12:
        j += 1
    while j > 2 and theta <= lambda_j(k, j - 1) + 1e-12:
        j -= 1
    return j + 2


def c_from_theta(k: int, t: int, theta: float, theta_sq: Fraction | None = None):
    """c = -F_{t-2}(theta) / G_{t-4}(theta); exact Fraction when theta^2 is."""
    if theta_sq is not None:
        s = Fraction(theta_sq)
        par = t % 2  # t-2 and t-4 share this parity
        num = _parity_value(f_poly(k, t - 2), s, par)
        den = _parity_value(g_poly(k, t - 4), s, par)
        if den == 0:
            raise OutOfRange(f"theta is a zero of G_{t - 4}; t is misplaced")
        c = -num / den
    else:
        den = g_poly(k, t - 4)(theta)
        if den == 0:
            raise OutOfRange(f"theta is a zero of G_{t - 4}; t is misplaced")
        c = -f_poly(k, t - 2)(theta) / den
    if not 0 < c <= k:
        raise OutOfRange(f"derived c={c} outside (0, k]; theta not in the t={t} window")
    return c


def m_bound(k: int, t: int, c):
    """M(k,t,c); exact when c is rational.  t >= 3 (empty sum at t=3)."""
    if t < 3:
        raise ValueError(f"need t >= 3, got {t}")
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
    if c <= 0:
        raise InvalidC(f"need c > 0, got {c}")
    q = k - 1
    geo = sum(q**i for i in range(t - 3))
    return 2 * (geo + (q ** (t - 3) + q ** (t - 2)) / c)


def n_bound(k: int, t: int, c):
    """N(k,t,c); exact when c is rational.  t >= 3."""
    if t < 3:
        raise ValueError(f"need t >= 3, got {t}")
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
    if c <= 0:
        raise InvalidC(f"need c > 0, got {c}")
    q = k - 1
    return 1 + sum(k * q**i for i in range(t - 2)) + k * q ** (t - 2) / c


def _coerce_theta(theta, theta_sq):
    """Promote integer-valued float theta to an exact square; normalize types."""
    theta = float(theta)
    if theta_sq is not None:
        theta_sq = Fraction(theta_sq)
    elif theta == int(theta):
        theta_sq = Fraction(int(theta)) ** 2
    return theta, theta_sq


def b_upper(k: int, theta, theta_sq=None) -> BoundResult:
    """Bipartite bound at theta, with the attaining family when one is known."""
    theta, theta_sq = _coerce_theta(theta, theta_sq)
    t = locate_t(k, theta, theta_sq)
    c = c_from_theta(k, t, theta, theta_sq)
    value = m_bound(k, t, c)
    exact = isinstance(c, Fraction)
    alternate = (t + 1, k) if exact and c == 1 else None
    name = table1.attained_by(k, t, c) if exact else None
    return BoundResult("M", k, theta, t, c, value, exact, name, alternate)


# ---------------------------------------------------------------------------
# general (not necessarily bipartite) side


def r_j(k: int, j: int, tol: float = 1e-12) -> float:
    """Largest zero of the running-sum polynomial calg_j.

    r^(1) = -1 exactly; beyond that r^(j) = 2 sqrt(k-1) cos(alpha) with
    pi/(j+1) < alpha < pi/j, which brackets it between lambda^(j-1) and
    lambda^(j).
    """
    if j < 1:
        raise ValueError("need j >= 1")
    if j == 1:
        return -1.0
    from .orthopoly import bisect_root

    lo, hi = lambda_j(k, j - 1), lambda_j(k, j)
    span = hi - lo
    return bisect_root(calg_poly(k, j), lo + 1e-12 * span, hi + 1e-9 * span, tol)


def _above_r(k: int, j: int, theta: Fraction) -> bool:
    """Exact test theta > r^(j) for rational theta (same chain argument)."""
    for i in range(1, j + 1):
        if calg_poly(k, i)(theta) <= 0:
            return False
    return True


def v_upper(k: int, theta, theta_sq=None) -> BoundResult:
    """General-graph bound: locate r^(t-2) < theta <= r^(t-1), then N(k,t,c)
    with c = -F_{t-1}(theta) / calg_{t-2}(theta)."""
    theta, theta_sq = _coerce_theta(theta, theta_sq)
    if not -1 < theta < _edge(k):
        raise OutOfRange(f"need -1 < theta < 2*sqrt(k-1), got {theta}")
    theta_rat = exact_sqrt(theta_sq) if theta_sq is not None else None
    if theta < 0 and theta_rat is not None:
        theta_rat = -theta_rat
    if theta_rat is not None:
        j = 2
        while _above_r(k, j, theta_rat):
            j += 1
        t = j + 1
        den = calg_poly(k, t - 2)(theta_rat)
        c = -f_poly(k, t - 1)(theta_rat) / den
        exact = True
    else:
        j = 2
        while theta > r_j(k, j) + 1e-12:
            j += 1
        t = j + 1
        c = -f_poly(k, t - 1)(theta) / calg_poly(k, t - 2)(theta)
        exact = False
    if c <= 0:
        raise OutOfRange(f"derived c={c} <= 0; theta not in the t={t} window")
    return BoundResult("N", k, theta, t, c, n_bound(k, t, c), exact)


def compare(k: int, theta, theta_sq=None, tol: float = 1e-9) -> ComparisonResult:
    """M versus N at the same theta.  M <= N always; equality exactly at
    theta = lambda^(t-1) where (t1, c1) = (t+1, 1) and (t2, c2) = (t+1, k)."""
    mres = b_upper(k, theta, theta_sq)
    nres = v_upper(k, theta, theta_sq)
    mv, nv = float(mres.value), float(nres.value)
    if mres.exact and nres.exact:
        equality = mres.value == nres.value
        m_le_n = mres.value <= nres.value
    else:
        equality = abs(mv - nv) <= tol * max(1.0, abs(nv))
        m_le_n = mv <= nv + tol * max(1.0, abs(nv))
    boundary = (
        mres.t == nres.t
        and abs(float(mres.c) - 1.0) <= tol
        and abs(float(nres.c) - k) <= tol * k
    )
    return ComparisonResult(mres, nres, m_le_n, equality, boundary)


# ---------------------------------------------------------------------------
# corollaries


def hj_bound_t4(n_degree: int, lambda2: float) -> float:
    """Half-order bound 1 + n(n-1)/(n - lambda2^2) for lambda2 <= sqrt(n-1)."""
    if lambda2 < 0 or lambda2 * lambda2 > n_degree - 1 + 1e-12:
        raise OutOfRange("need 0 <= lambda2 <= sqrt(n-1)")
    return 1 + n_degree * (n_degree - 1) / (n_degree - lambda2 * lambda2)


def hj_bound_t5(n_degree: int, lambda2: float) -> float:
    """Half-order bound n + n(n-1)/(2n - lambda2^2 - 1) on the middle window."""
    lo, hi = n_degree - 1, 2 * (n_degree - 1)
    if not lo - 1e-12 <= lambda2 * lambda2 <= hi + 1e-12:
        raise OutOfRange("need sqrt(n-1) <= lambda2 <= sqrt(2(n-1))")
    return n_degree + n_degree * (n_degree - 1) / (2 * n_degree - lambda2 * lambda2 - 1)


def ty_improved(k: int, theta, theta_sq=None):
    """Both sides of the quartic-order improvement on k^(1/4) < theta <= sqrt(k-1).

    Returns (new_bound, old_bound).  The new bound never exceeds the old one
    and is strictly smaller except at theta = sqrt(k-1), where both collapse
    to 2((k-1)^2 + (k-1) + 1).
    """
    theta, theta_sq = _coerce_theta(theta, theta_sq)
    s = theta_sq if theta_sq is not None else theta * theta
    if not k ** 0.25 < theta or float(s) > k - 1 + 1e-12:
        raise OutOfRange("need k^(1/4) < theta <= sqrt(k-1)")
    new = 2 * (1 + ((k - 1) + (k - 1) ** 2) / (k - s))
    old = 2 * (s * s + s + 1)
    assert new <= old, "quartic comparison violated"
    if float(s) < k - 1 - 1e-12:
        assert new < old
    return new, old


def girth_threshold(k: int, g: int):
    """For girth g = 2l: the eigenvalue threshold 2 cos(pi/l) paired with the
    order floor M(k, l+1, 1) that forces lambda2 above it."""
    if g < 4 or g % 2:
        raise ValueError(f"need even girth >= 4, got {g}")
    l = g // 2
    threshold = 0.0 if l == 2 else 2.0 * math.cos(math.pi / l)
    return threshold, m_bound(k, l + 1, 1)


def mu_j(k: int, j: int, tol: float = 1e-12) -> float:
    """Largest zero of F_j, bracketed above lambda^(j)."""
    from .orthopoly import bisect_root

    if j < 1:
        raise ValueError("need j >= 1")
    if j == 1:
        return 0.0
    lo = lambda_j(k, j)
    hi = _edge(k)
    return bisect_root(f_poly(k, j), lo, hi * (1 + 1e-12) + 1e-12, tol)
