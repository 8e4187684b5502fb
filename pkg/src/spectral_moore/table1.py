"""Catalog of known extremal bipartite graphs meeting the order bound.

Desk-scale rows carry a builder name so they can be constructed and verified
directly; the two larger rows (the generalized hexagon of order 2 and the
van Lint-Schrijver partial geometry) are checked on the formula side only.

The partial-geometry row is stored with theta = 3: that is the largest zero
of the degree-3 factor of its quotient matrix, i.e. the graph's actual
second eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Table1Row:
    name: str
    k: int
    theta_sq: Fraction
    d: int
    c: int
    order: int
    builder: str | None = None       # build_known name, None = formula-only
    params: tuple = ()

    @property
    def theta(self) -> float:
        return math.sqrt(self.theta_sq)

    @property
    def t(self) -> int:
        return self.d + 1


ROWS: tuple[Table1Row, ...] = (
    Table1Row("C6", 2, Fraction(1), 3, 1, 6, "cycle", (6,)),
    Table1Row("K_3,3", 3, Fraction(0), 2, 1, 6, "complete_bipartite", (3,)),
    Table1Row("K_4,4", 4, Fraction(0), 2, 1, 8, "complete_bipartite", (4,)),
    Table1Row("K_5,5", 5, Fraction(0), 2, 1, 10, "complete_bipartite", (5,)),
    Table1Row("K_6,6", 6, Fraction(0), 2, 1, 12, "complete_bipartite", (6,)),
    Table1Row("cube", 3, Fraction(1), 3, 2, 8, "cube", ()),
    Table1Row("heawood", 3, Fraction(2), 3, 1, 14, "heawood", ()),
    Table1Row("biplane_11_5_2", 5, Fraction(3), 3, 2, 22, "biplane", ()),
    Table1Row("pappus", 3, Fraction(3), 4, 2, 18, "affine_minus_class", (3,)),
    Table1Row("tutte_coxeter", 3, Fraction(4), 4, 1, 30, "tutte_coxeter", ()),
    Table1Row("GH(2,2)", 3, Fraction(6), 6, 1, 126, None, ()),
    Table1Row("pg(6,6,2)", 6, Fraction(9), 4, 2, 162, None, ()),
)


def rows(buildable_only: bool = False) -> tuple[Table1Row, ...]:
    if buildable_only:
        return tuple(r for r in ROWS if r.builder)
    return ROWS


def row_by_name(name: str) -> Table1Row:
    for r in ROWS:
        if r.name == name:
            return r
    raise KeyError(name)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, n + 1):
        if p * p > n:
            return _is_prime(n)
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return False


def attained_by(k: int, t: int, c) -> str | None:
    """Name of a known family attaining M(k, t, c), if any."""
    c = Fraction(c)
    for r in ROWS:
        if r.k == k and r.t == t and r.c == c:
            return r.name
    if c.denominator != 1:
        return None
    ci = c.numerator
    if ci == k and t >= 4:
        # same bound value as the (t-1, c=1) representation
        return attained_by(k, t - 1, 1)
    if t == 3 and ci == 1:
        return f"K_{k},{k}"
    if k == 2 and ci == 1:
        return f"C_{2 * (t - 1)}"
    if t == 4 and 1 <= ci < k:
        v, rem = divmod(k * (k - 1), ci)
        if rem == 0:
            v += 1
            known = {(7, 3, 1), (4, 3, 2), (11, 5, 2), (13, 4, 1), (21, 5, 1), (11, 6, 3), (16, 6, 2)}
            if (v, k, ci) in known or (ci == 1 and is_prime_power(k - 1)):
                return f"symmetric ({v},{k},{ci})-design"
    q = k - 1
    if t == 5 and ci == 1 and is_prime_power(q):
        return f"GQ({q},{q})"
    if t == 7 and ci == 1 and is_prime_power(q):
        return f"GH({q},{q})"
    if t == 5 and ci == k - 1 and is_prime_power(k):
        return f"AG(2,{k}) minus a parallel class"
    return None
