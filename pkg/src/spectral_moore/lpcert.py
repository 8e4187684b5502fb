"""Linear-programming certificates for the bipartite order bound.

The certificate polynomial is the square of the quotient-matrix factor with
the extremal eigenvalue pair divided out, re-expanded in the degree-graded
basis scrf_{0,0}, scrf_{0,1}, ...  With nonnegative coefficients there, a
trace argument caps the graph order at 2 f(k^2) / f_0, and the bound
collapses to M(k,t,c) by construction.

``linearize`` computes the nonnegative structure constants of the basis:
the expansion of y^eps * scrf_{eps,i} * scrf_{eps,j} back into scrf_{0,l}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orthopoly import Poly, g_poly, scrf_poly


class NotARoot(ValueError):
    """The supplied eigenvalue does not annihilate the quotient factor."""


class HypothesisViolated(ValueError):
    """A certificate condition (sign or spectrum test) failed."""


def to_scrf_basis(p: Poly, k: int) -> tuple[Fraction, ...]:
    """Coefficients of p in the monic graded basis scrf_{0,l}(k; y)."""
    out = [Fraction(0)] * (p.degree + 1)
    rem = p
    for l in range(p.degree, -1, -1):
        cl = rem.coeffs[l] if l <= rem.degree else Fraction(0)
        out[l] = cl
        if cl:
            rem = rem - cl * scrf_poly(k, 0, l)
    if not rem.is_zero():
        raise AssertionError("graded reduction left a remainder")
    return tuple(out)


def from_scrf_basis(coeffs, k: int) -> Poly:
    total = Poly(())
    for l, cl in enumerate(coeffs):
        if cl:
            total = total + cl * scrf_poly(k, 0, l)
    return total


@dataclass(frozen=True)
class LinearizationTable:
    k: int
    epsilon: int
    i: int
    j: int
    p: tuple[Fraction, ...]   # p[l] = coefficient of scrf_{0,l}

    def coefficient(self, l: int) -> Fraction:
        return self.p[l] if 0 <= l < len(self.p) else Fraction(0)

    def support(self) -> tuple[int, ...]:
        return tuple(l for l, v in enumerate(self.p) if v != 0)


def linearize(k: int, epsilon: int, i: int, j: int) -> LinearizationTable:
    """Expansion of y^eps * scrf_{eps,i}(y) * scrf_{eps,j}(y) in scrf_{0,l}(y).

    All coefficients are nonnegative, p_0 vanishes unless i = j, and the
    support is exactly |i-j| <= l <= i+j+eps.
    """
    if epsilon not in (0, 1):
        raise ValueError("epsilon must be 0 or 1")
    prod = scrf_poly(k, epsilon, i) * scrf_poly(k, epsilon, j)
    if epsilon:
        prod = Poly((0, 1)) * prod
    coeffs = to_scrf_basis(prod, k)
    # pad to the full support window so the table is self-describing
    width = i + j + epsilon + 1
    padded = tuple(coeffs) + (Fraction(0),) * (width - len(coeffs))
    return LinearizationTable(k, epsilon, i, j, padded)


@dataclass(frozen=True)
class Certificate:
    k: int
    t: int
    c: Fraction | float
    theta: float
    theta_sq: Fraction | None
    f: tuple                  # f[0] = f_0, exact Fractions on the exact path

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.f)


def _to_scrf_basis_float(coeffs: list[float], k: int) -> tuple[float, ...]:
    rem = list(coeffs)
    out = [0.0] * len(rem)
    for l in range(len(rem) - 1, -1, -1):
        cl = rem[l]
        out[l] = cl
        if cl:
            for idx, b in enumerate(scrf_poly(k, 0, l).coeffs):
                rem[idx] -= cl * float(b)
    return tuple(out)


def build_certificate(k: int, t: int, c, theta=None, theta_sq=None, tol: float = 1e-8) -> Certificate:
    """Certificate for (k, t, c) at the top eigenvalue theta of the factor.

    theta may be omitted when theta_sq is given (only the square enters the
    construction).  Squaring the factor and dividing out (x^2 - theta^2) is a
    single division by (y - theta^2) in the squared variable: exact rational
    arithmetic when theta^2 is rational, synthetic float division with a
    residual check otherwise.
    """
    if t < 4:
        raise ValueError("certificates need t >= 4")
    exact_c = isinstance(c, (int, Fraction))
    cc = Fraction(c) if exact_c else float(c)
    if theta_sq is not None:
        theta_sq = Fraction(theta_sq)
    elif theta is not None and float(theta) == int(theta) and exact_c:
        theta_sq = Fraction(int(theta)) ** 2
    if theta is None:
        if theta_sq is None:
            raise ValueError("need theta or theta_sq")
        import math

        theta = math.sqrt(theta_sq)
    theta = float(theta)

    s_poly = (Fraction(cc) if exact_c else Fraction(float(cc))) - 1
    s_poly = s_poly * g_poly(k, t - 4) + g_poly(k, t - 2)
    sq_y = (s_poly * s_poly).even_part()

    if exact_c and theta_sq is not None:
        quo, rem = divmod(sq_y, Poly((-theta_sq, 1)))
        if not rem.is_zero():
            raise NotARoot(f"theta^2={theta_sq} is not a root of the squared factor")
        return Certificate(k, t, cc, theta, theta_sq, to_scrf_basis(quo, k))

    coeffs = [float(v) for v in sq_y.coeffs]
    s_val = theta * theta
    n = len(coeffs) - 1
    quo_f = [0.0] * n
    acc = coeffs[n]
    for i in range(n - 1, -1, -1):
        quo_f[i] = acc
        acc = coeffs[i] + acc * s_val
    if abs(acc) > tol * max(1.0, max(abs(v) for v in coeffs)):
        raise NotARoot(f"residual {acc} after dividing by y - {s_val}")
    return Certificate(k, t, cc, theta, None, _to_scrf_basis_float(quo_f, k))


@dataclass(frozen=True)
class LPReport:
    bound: Fraction | float
    equality: bool
    spectrum_values: tuple[float, ...]   # f(tau^2) per supplied tau
    girth_floor: int | None


def lp_bound(k: int, taus, cert: Certificate, tol: float = 1e-9) -> LPReport:
    """Evaluate the trace bound 2 f(k^2) / f_0 after checking hypotheses.

    taus are the nontrivial nonnegative eigenvalues (one per +- pair).
    Raises HypothesisViolated naming the first failing condition.
    """
    f = cert.f
    if not f or f[0] <= 0:
        raise HypothesisViolated("f_0 must be positive")
    for idx, v in enumerate(f):
        if v < 0:
            raise HypothesisViolated(f"coefficient f_{idx} = {v} is negative")
    fpoly = from_scrf_basis([Fraction(v) if not isinstance(v, Fraction) else v for v in f], k)
    exact = cert.exact
    fk2 = fpoly(k * k) if exact else fpoly(float(k * k))
    if fk2 <= 0:
        raise HypothesisViolated("f(k^2) must be positive")
    vals = []
    for tau in taus:
        val = float(fpoly(float(tau) ** 2))
        scl = max(1.0, float(fk2))
        if val > tol * scl:
            raise HypothesisViolated(f"f(tau^2) = {val} > 0 at tau = {tau}")
        vals.append(val)
    equality = all(abs(v) <= tol * max(1.0, float(fk2)) for v in vals)
    bound = 2 * fk2 / f[0]
    girth_floor = None
    if equality and all(v > 0 for v in f):
        girth_floor = 2 * (len(f) - 1) + 2
    return LPReport(bound, equality, tuple(vals), girth_floor)
