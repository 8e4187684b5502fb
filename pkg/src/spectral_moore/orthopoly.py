"""Exact recurrence polynomial families and rigorous root localization.

Coefficient arithmetic is exact (arbitrary-precision rationals); floating
point enters only through root localization and display.  Sign queries used
by the bisection are evaluated at rational points, so every reported bracket
is certified, not heuristic.

Families (all memoized per degree parameter ``k``):

* ``f_poly``    three-term family F_i, the non-backtracking-walk counts
* ``g_poly``    G_i = sum of F_{i-2j}, the Chebyshev-like family
* ``calg_poly`` running sums of F_i
* ``scrf_poly`` even/odd halves of F in the squared variable
* ``scrg_poly`` running sums of scrf
* ``p_poly``    the k-independent monic integer family in z
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class NoSignChange(ValueError):
    """The bracket endpoints do not straddle a sign change."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Dense univariate polynomial over Q, lowest-degree coefficient first.

    Canonical form trims trailing zeros; the zero polynomial is ``Poly(())``
    with degree -1.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return Poly((other,)) + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly(())
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly(out)
        f = _frac(other)
        return Poly(tuple(c * f for c in self.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Exact polynomial division with remainder over Q."""
        if not isinstance(other, Poly):
            other = Poly((other,))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(()), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(quo), Poly(rem)

    def __call__(self, x):
        """Horner evaluation: exact at int/Fraction, compensated at float."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0.0
        err = 0.0  # Neumaier compensation on the additions
        for c in reversed(self.coeffs):
            acc *= x
            t = acc + float(c)
            if abs(acc) >= abs(c):
                err += (acc - t) + float(c)
            else:
                err += (float(c) - t) + acc
            acc = t
        return acc + err

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def compose(self, inner: "Poly") -> "Poly":
        out = Poly(())
        for c in reversed(self.coeffs):
            out = out * inner + Poly((c,))
        return out

    def even_part(self) -> "Poly":
        """E with p(x) = E(x^2) + x*O(x^2)."""
        return Poly(self.coeffs[0::2])

    def odd_part(self) -> "Poly":
        return Poly(self.coeffs[1::2])

    def render(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if i == 0:
                body = coef
            else:
                pw = var if i == 1 else f"{var}^{i}"
                body = pw if mag == 1 else f"{coef}*{pw}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.render()})"


ZERO = Poly(())
ONE = Poly((1,))
X = Poly((0, 1))


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"degree parameter k must be an integer >= 2, got {k!r}")


def _check_index(i: int) -> None:
    if not isinstance(i, int) or i < 0:
        raise ValueError(f"family index must be a non-negative integer, got {i!r}")


def _check_eps(epsilon: int) -> None:
    if epsilon not in (0, 1):
        raise ValueError(f"parity flag must be 0 or 1, got {epsilon!r}")


@lru_cache(maxsize=None)
def f_poly(k: int, i: int) -> Poly:
    """F_i: F_0=1, F_1=x, F_2=x^2-k, then F_i = x F_{i-1} - (k-1) F_{i-2}."""
    _check_k(k)
    _check_index(i)
    if i == 0:
        return ONE
    if i == 1:
        return X
    if i == 2:
        return Poly((-k, 0, 1))
    return X * f_poly(k, i - 1) - (k - 1) * f_poly(k, i - 2)


@lru_cache(maxsize=None)
def g_poly(k: int, i: int) -> Poly:
    """G_i = sum_j F_{i-2j}; satisfies G_i = x G_{i-1} - (k-1) G_{i-2} for i >= 2."""
    _check_k(k)
    _check_index(i)
    if i == 0:
        return ONE
    if i == 1:
        return X
    return X * g_poly(k, i - 1) - (k - 1) * g_poly(k, i - 2)


@lru_cache(maxsize=None)
def calg_poly(k: int, j: int) -> Poly:
    """Running sum of the F family: F_0 + F_1 + ... + F_j."""
    _check_k(k)
    _check_index(j)
    if j == 0:
        return ONE
    return calg_poly(k, j - 1) + f_poly(k, j)


@lru_cache(maxsize=None)
def scrf_poly(k: int, epsilon: int, i: int) -> Poly:
    """Squared-variable halves of F: x^eps * scrf(x^2) = F_{2i+eps}(x).

    The shared three-term recurrence only kicks in at i >= 3 for the even
    half and i >= 2 for the odd half; the low indices are explicit.
    """
    _check_k(k)
    _check_eps(epsilon)
    _check_index(i)
    if i == 0:
        return ONE
    if epsilon == 0:
        if i == 1:
            return Poly((-k, 1))
        if i == 2:
            return Poly((k * (k - 1), -(3 * k - 2), 1))
    else:
        if i == 1:
            return Poly((-(2 * k - 1), 1))
    lin = Poly((-(2 * k - 2), 1))
    return lin * scrf_poly(k, epsilon, i - 1) - (k - 1) ** 2 * scrf_poly(k, epsilon, i - 2)


@lru_cache(maxsize=None)
def scrg_poly(k: int, epsilon: int, i: int) -> Poly:
    """Running sum of scrf: x^eps * scrg(x^2) = G_{2i+eps}(x)."""
    _check_k(k)
    _check_eps(epsilon)
    _check_index(i)
    if i == 0:
        return ONE
    return scrg_poly(k, epsilon, i - 1) + scrf_poly(k, epsilon, i)


@lru_cache(maxsize=None)
def p_poly(i: int, epsilon: int) -> Poly:
    """k-independent integer family in z: P_0 = 1-eps, P_1 in {1, z-1},
    then P_i = (z-2) P_{i-1} - P_{i-2}.  Monic of degree i-eps for i >= 1."""
    _check_eps(epsilon)
    _check_index(i)
    if i == 0:
        return Poly((1 - epsilon,))
    if i == 1:
        return ONE if epsilon == 1 else Poly((-1, 1))
    return Poly((-2, 1)) * p_poly(i - 1, epsilon) - p_poly(i - 2, epsilon)


def lambda_j(k: int, j: int) -> float:
    """Largest zero of G_j, in closed Chebyshev form 2*sqrt(k-1)*cos(pi/(j+1))."""
    _check_k(k)
    if j < 1:
        raise ValueError("index must be >= 1")
    return 2.0 * math.sqrt(k - 1) * math.cos(math.pi / (j + 1))


def g_zero(k: int, i: int, j: int) -> float:
    """j-th largest zero of G_i (j = 1..i): 2*sqrt(k-1)*cos(j*pi/(i+1))."""
    _check_k(k)
    if not 1 <= j <= i:
        raise ValueError(f"zero index {j} out of range for degree {i}")
    return 2.0 * math.sqrt(k - 1) * math.cos(j * math.pi / (i + 1))


def sign_at(p: Poly, x) -> int:
    """Exact sign of p at a rational point (floats are converted exactly)."""
    v = p(_frac(x))
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class RootBracket:
    lo: float
    hi: float
    tol: float = 1e-12

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")


def bisect_root(p: Poly, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Bisection with exact rational sign evaluation at every probe."""
    slo = sign_at(p, lo)
    if slo == 0:
        return lo
    shi = sign_at(p, hi)
    if shi == 0:
        return hi
    if slo == shi:
        raise NoSignChange(f"no sign change of {p!r} on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float resolution exhausted
        s = sign_at(p, mid)
        if s == 0:
            return mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def largest_zero(p: Poly, bracket: RootBracket) -> float:
    """Root of p inside a sign-change bracket known to isolate its top zero."""
    if p.degree < 1:
        raise ValueError("polynomial must be nonconstant")
    return bisect_root(p, bracket.lo, bracket.hi, bracket.tol)
