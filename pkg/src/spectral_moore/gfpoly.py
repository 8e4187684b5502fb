"""Polynomial arithmetic and factorization over prime fields, plus a rigorous
splitting screen for integer polynomials with all-real roots.

Factorization is the classical pipeline: squarefree decomposition (with the
p-th-root step in characteristic p), distinct-degree splitting by Frobenius
powers, then equal-degree splitting (Cantor-Zassenhaus for odd p, the trace
map over GF(2)).  Randomness is drawn from a seeded generator and the factor
multiset is canonically sorted, so output is reproducible bit for bit.

The rational screen decides whether a primitive integer polynomial with only
real roots factors over Q into pieces of degree at most two.  Linear factors
come from the rational root theorem; quadratic factors are reconstructed
from high-precision root pairs and confirmed by exact division (Gauss's
lemma turns a monic rational quadratic factor into an integer one after
clearing leading coefficients, and real simple roots make the pair
enumeration complete).  A factor of degree >= 3 modulo a prime that
preserves the leading coefficient certifies non-splitting outright.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .orthopoly import Poly

DEFAULT_SEED = 0x5EED


class NotPrime(ValueError):
    """Modulus is not prime."""


class PrecisionExhausted(RuntimeError):
    """Real roots could not be separated at the working precision."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for f in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p == f:
            return True
        if p % f == 0:
            return False
    # deterministic Miller-Rabin for 64-bit inputs
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class GFPoly:
    """Dense polynomial over GF(p), lowest-degree coefficient first."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        cs = [c % self.p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: "GFPoly") -> "GFPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return GFPoly(self.p, out)

    def __sub__(self, other: "GFPoly") -> "GFPoly":
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = (out[i] - c) % self.p
        return GFPoly(self.p, out)

    def __mul__(self, other) -> "GFPoly":
        if isinstance(other, int):
            return GFPoly(self.p, tuple(c * other % self.p for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return GFPoly(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % self.p
        return GFPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "GFPoly"):
        if other.is_zero():
            raise ZeroDivisionError
        p = self.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return GFPoly(p, ()), self
        inv = pow(other.lc(), p - 2, p)
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] * inv % p
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % p
        return GFPoly(p, quo), GFPoly(p, rem)

    def __mod__(self, other: "GFPoly") -> "GFPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "GFPoly") -> "GFPoly":
        return divmod(self, other)[0]

    def monic(self) -> "GFPoly":
        if self.is_zero() or self.lc() == 1:
            return self
        inv = pow(self.lc(), self.p - 2, self.p)
        return self * inv

    def derivative(self) -> "GFPoly":
        return GFPoly(self.p, tuple(i * c % self.p for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def render(self, var: str = "z") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                pw = var if i == 1 else f"{var}^{i}"
                terms.append(pw if c == 1 else f"{c}*{pw}")
        return " + ".join(terms)

    def __repr__(self):
        return f"GFPoly(p={self.p}, {self.render()})"


def gf_gcd(a: GFPoly, b: GFPoly) -> GFPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def gf_pow_mod(base: GFPoly, e: int, mod: GFPoly) -> GFPoly:
    out = GFPoly(base.p, (1,))
    base = base % mod
    while e:
        if e & 1:
            out = out * base % mod
        base = base * base % mod
        e >>= 1
    return out


def _pth_root(f: GFPoly) -> GFPoly:
    """For f = g(z^p): recover g (Frobenius fixes GF(p) coefficients)."""
    return GFPoly(f.p, f.coeffs[:: f.p])


def squarefree_decomposition(f: GFPoly) -> list[tuple[GFPoly, int]]:
    """Yun-style decomposition adapted to characteristic p; returns
    (squarefree factor, multiplicity) pairs with multiplicities >= 1."""
    p = f.p
    out: dict[int, GFPoly] = {}

    def accumulate(g: GFPoly, mult: int):
        if g.degree >= 1:
            out[mult] = out.get(mult, GFPoly(p, (1,))) * g

    def recurse(f: GFPoly, scale: int):
        f = f.monic()
        if f.degree < 1:
            return
        df = f.derivative()
        if df.is_zero():
            recurse(_pth_root(f), scale * p)
            return
        w = gf_gcd(f, df)
        v = f // w  # product of squarefree parts at each multiplicity
        m = 1
        while v.degree >= 1:
            nxt = gf_gcd(w, v)
            piece = v // nxt
            accumulate(piece, m * scale)
            v = nxt
            w = w // nxt
            m += 1
        if w.degree >= 1:
            recurse(w, scale * p)  # leftover is a p-th power

    recurse(f, 1)
    return sorted(((g.monic(), m) for m, g in out.items()), key=lambda t: t[1])


def distinct_degree(f: GFPoly) -> list[tuple[GFPoly, int]]:
    """Split a monic squarefree f into (product of irreducibles of degree d, d)."""
    p = f.p
    out = []
    h = GFPoly(p, (0, 1)) % f  # z mod f
    z = GFPoly(p, (0, 1))
    d = 0
    rest = f
    while rest.degree > 2 * (d + 1) - 1 and rest.degree >= 1:
        d += 1
        h = gf_pow_mod(h, p, rest) if d > 1 else gf_pow_mod(z, p, rest)
        g = gf_gcd(rest, h - z)
        if g.degree >= 1:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree >= 1:
        out.append((rest, rest.degree))
    return out


def _equal_degree_split(f: GFPoly, d: int, rng: random.Random) -> list[GFPoly]:
    """All monic irreducible factors of f, each of degree d."""
    p = f.p
    n = f.degree
    if n == d:
        return [f.monic()]
    while True:
        r = GFPoly(p, tuple(rng.randrange(p) for _ in range(n)) + (1,))
        if p == 2:
            # trace map r + r^2 + r^4 + ... over GF(2^d)
            acc = r % f
            tr = acc
            for _ in range(d - 1):
                acc = acc * acc % f
                tr = tr + acc
            g = gf_gcd(f, tr)
        else:
            e = (p**d - 1) // 2
            g = gf_gcd(f, gf_pow_mod(r, e, f) - GFPoly(p, (1,)))
        if 0 < g.degree < n:
            return sorted(
                _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng),
                key=lambda q: q.coeffs,
            )


@dataclass(frozen=True)
class FactorizationWitness:
    p: int
    unit: int
    factors: tuple[tuple[GFPoly, int], ...]   # (monic irreducible, multiplicity)

    @property
    def min_irreducible_degree(self) -> int:
        return min(g.degree for g, _ in self.factors)

    @property
    def max_irreducible_degree(self) -> int:
        return max(g.degree for g, _ in self.factors)

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(g.degree for g, m in self.factors for _ in range(m)))

    def count_degree(self, d: int, with_multiplicity: bool = True) -> int:
        if with_multiplicity:
            return sum(m for g, m in self.factors if g.degree == d)
        return sum(1 for g, _ in self.factors if g.degree == d)

    def product(self) -> GFPoly:
        out = GFPoly(self.p, (self.unit,))
        for g, m in self.factors:
            for _ in range(m):
                out = out * g
        return out


def gf_factor(f: GFPoly, seed: int = DEFAULT_SEED) -> FactorizationWitness:
    """Complete factorization into monic irreducibles times the leading unit."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.lc()
    if f.degree == 0:
        return FactorizationWitness(f.p, unit, ())
    rng = random.Random(seed)
    found: list[tuple[GFPoly, int]] = []
    for sqfree, mult in squarefree_decomposition(f):
        for block, d in distinct_degree(sqfree):
            for irr in _equal_degree_split(block, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return FactorizationWitness(f.p, unit, tuple(found))


def gf_irreducible(f: GFPoly) -> bool:
    w = gf_factor(f)
    return len(w.factors) == 1 and w.factors[0][1] == 1


# ---------------------------------------------------------------------------
# rational splitting screen


GOOD_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def _content(coeffs: list[int]) -> int:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    return g or 1


def _int_coeffs(f) -> list[int]:
    if isinstance(f, Poly):
        den = 1
        for c in f.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in f.coeffs]
    return [int(c) for c in f]


@dataclass(frozen=True)
class QSplitVerdict:
    splits_deg_le_2: bool
    factors: tuple[tuple[int, ...], ...]     # extracted integer factors, low-first
    remainder: tuple[int, ...]               # unfactored part (degree >= 3 iff not splits)
    witness: str


def _rational_roots(coeffs: list[int]) -> list[Fraction]:
    """All rational roots with multiplicity, by the rational root theorem."""
    roots = []
    work = list(coeffs)
    while len(work) > 1:
        # strip zero roots first
        if work[0] == 0:
            roots.append(Fraction(0))
            work = work[1:]
            continue
        a0, an = abs(work[0]), abs(work[-1])
        found = None
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if _eval_int(work, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        work = _deflate(work, found)
        roots.append(found)
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _eval_int(coeffs: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[int], root: Fraction) -> list[int]:
    """Divide by (x - root) over Q, clear denominators, restore primitivity."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    acc = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = Fraction(coeffs[i]) + acc * root
        out[i - 1] = acc
    lcm = 1
    for c in out:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in out]
    cont = _content(ints)
    return [c // cont for c in ints]


def _poly_div_exact(num: list[int], div: list[int]) -> list[int] | None:
    """Exact integer-polynomial division, or None if it does not divide."""
    rem = [Fraction(c) for c in num]
    dq = len(rem) - len(div)
    if dq < 0:
        return None
    quo = [Fraction(0)] * (dq + 1)
    lead = Fraction(div[-1])
    for i in range(dq, -1, -1):
        c = rem[i + len(div) - 1] / lead
        quo[i] = c
        for j, b in enumerate(div):
            rem[i + j] -= c * b
    if any(r != 0 for r in rem):
        return None
    lcm = 1
    for c in quo:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    out = [int(c * lcm) for c in quo]
    cont = _content(out)
    return [c // cont for c in out]


def _real_roots_hiprec(coeffs: list[int], dps: int):
    with mpmath.workdps(dps):
        rts = mpmath.polyroots([mpmath.mpf(c) for c in reversed(coeffs)], maxsteps=200, extraprec=80)
        return [mpmath.mpf(r.real) for r in rts]


def q_splitting_screen(f, use_gf_shortcut: bool = True, dps: int = 60) -> QSplitVerdict:
    """Decide whether a primitive integer polynomial with all-real roots
    splits over Q into factors of degree at most 2.

    An irreducible quadratic remainder still counts as splitting; only a
    certified factor of degree >= 3 refutes it.
    """
    coeffs = _int_coeffs(f)
    cont = _content(coeffs)
    coeffs = [c // cont for c in coeffs]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    if len(coeffs) - 1 <= 2:
        return QSplitVerdict(True, (tuple(coeffs),), (), "degree <= 2")

    extracted: list[tuple[int, ...]] = []

    # (a) rational roots
    for root in _rational_roots(coeffs):
        extracted.append((-root.numerator, root.denominator))
        coeffs = _deflate(coeffs, root)
    if len(coeffs) - 1 <= 2:
        return QSplitVerdict(True, tuple(extracted) + ((tuple(coeffs),) if len(coeffs) > 1 else ()), (), "linear factors only")

    # (c) modular shortcut: a good prime where every factor has degree >= 3
    if use_gf_shortcut:
        hits = 0
        for p in GOOD_PRIMES:
            if coeffs[-1] % p == 0:
                continue
            w = gf_factor(GFPoly(p, coeffs))
            if w.min_irreducible_degree >= 3:
                return QSplitVerdict(
                    False,
                    tuple(extracted),
                    tuple(coeffs),
                    f"mod {p} factor degrees {w.degree_multiset()} are all >= 3",
                )
            hits += 1
            if hits >= 3:
                break

    # (b) quadratic factors from real root pairs
    for attempt in range(3):
        try:
            coeffs = _extract_quadratics(coeffs, extracted, dps * (2**attempt))
            break
        except PrecisionExhausted:
            if attempt == 2:
                raise
    if len(coeffs) - 1 <= 2:
        tail = (tuple(coeffs),) if len(coeffs) > 1 else ()
        return QSplitVerdict(True, tuple(extracted) + tail, (), "split into degree <= 2 factors")
    return QSplitVerdict(
        False,
        tuple(extracted),
        tuple(coeffs),
        f"degree-{len(coeffs) - 1} remainder admits no linear or quadratic factor",
    )


def _extract_quadratics(coeffs: list[int], extracted: list[tuple[int, ...]], dps: int) -> list[int]:
    """Peel off integer quadratic factors via root-pair reconstruction."""
    changed = True
    while changed and len(coeffs) - 1 > 2:
        changed = False
        roots = _real_roots_hiprec(coeffs, dps)
        sep = min(
            (abs(a - b) for a, b in itertools.combinations(roots, 2)),
            default=mpmath.mpf(1),
        )
        if sep < mpmath.mpf(10) ** (-dps // 2):
            raise PrecisionExhausted(f"root separation {sep} at {dps} digits")
        lead = abs(coeffs[-1])
        for i, j in itertools.combinations(range(len(roots)), 2):
            s, pr = roots[i] + roots[j], roots[i] * roots[j]
            for a in _divisors(lead):
                b, c = -a * s, a * pr
                bi, ci = int(mpmath.nint(b)), int(mpmath.nint(c))
                if abs(b - bi) > 1e-6 or abs(c - ci) > 1e-6:
                    continue
                cand = [ci, bi, a]
                g = _content(cand)
                cand = [v // g for v in cand]
                quo = _poly_div_exact(coeffs, cand)
                if quo is not None:
                    extracted.append(tuple(cand))
                    coeffs = quo
                    changed = True
                    break
            if changed:
                break
    return coeffs


def kronecker_small_factors(coeffs: list[int]) -> bool:
    """Exhaustive oracle: does the polynomial split into degree <= 2 factors?

    Kronecker's method restricted to degree <= 2: a factor's values at three
    interpolation points divide the polynomial's values there, so candidates
    are enumerated over divisor triples and confirmed by exact division.
    Points are chosen where the polynomial is nonzero.  Test use only.
    """
    coeffs = list(coeffs)
    cont = _content(coeffs)
    coeffs = [c // cont for c in coeffs]

    def signed_divisors(v: int):
        out = []
        for d in _divisors(abs(v)):
            out += [d, -d]
        return out

    def strip(poly: list[int]) -> bool:
        if len(poly) - 1 <= 2:
            return True
        pts = []
        x = 0
        while len(pts) < 3:
            for cand in (x, -x) if x else (0,):
                if len(pts) < 3 and _eval_int(poly, Fraction(cand)) != 0:
                    pts.append(cand)
            x += 1
        x0, x1, x2 = pts
        v0, v1, v2 = (int(_eval_int(poly, Fraction(pt))) for pt in pts)
        for a0 in signed_divisors(v0):
            for a1 in signed_divisors(v1):
                for a2 in signed_divisors(v2):
                    # Lagrange through (x0,a0), (x1,a1), (x2,a2)
                    cand_frac = [Fraction(0)] * 3
                    for xi, ai in ((x0, a0), (x1, a1), (x2, a2)):
                        others = [xj for xj in (x0, x1, x2) if xj != xi]
                        den = (xi - others[0]) * (xi - others[1])
                        # ai/den * (x - o0)(x - o1)
                        w = Fraction(ai, den)
                        cand_frac[0] += w * others[0] * others[1]
                        cand_frac[1] += -w * (others[0] + others[1])
                        cand_frac[2] += w
                    if any(cf.denominator != 1 for cf in cand_frac):
                        continue
                    cand = [int(cf) for cf in cand_frac]
                    while cand and cand[-1] == 0:
                        cand.pop()
                    if len(cand) < 2:
                        continue
                    quo = _poly_div_exact(poly, cand)
                    if quo is not None and strip(quo):
                        return True
        return False

    # roots at the interpolation points would make divisor sets unbounded;
    # peel every rational root first (exact, self-contained)
    for root in _rational_roots(coeffs):
        coeffs = _deflate(coeffs, root)
    return strip(coeffs)
