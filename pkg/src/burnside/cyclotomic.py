"""Exact cyclotomic-field arithmetic with canonical conductors.

A value lives in Q(zeta_n) as a rational coefficient vector on the power
basis {zeta_n^i : 0 <= i < phi(n)}, reduced modulo the n-th cyclotomic
polynomial.  Every constructor minimizes the level to the true conductor
(rationals sit at level 1), so equality of values is equality of stored
data.  Levels in scope are tiny; nothing here tries to be clever.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "euler_phi",
    "galois",
    "is_rational",
    "is_rational_integer",
    "multiplicative_order",
    "zeta",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def divisors(n: int) -> list:
    small, big = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                big.append(n // d)
        d += 1
    big.reverse()
    return small + big


def multiplicative_order(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    x = a % n
    order = 1
    while x != 1 % n:
        x = x * a % n
        order += 1
    return order


def _int_poly_div_exact(num, den):
    # den is monic; quotient is known to be exact and integral
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n < 1:
        raise ValueError("level must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _int_poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(level, coeffs):
    """Fold a coefficient-by-exponent list into the power basis of level."""
    phi_poly = cyclotomic_polynomial(level)
    deg = len(phi_poly) - 1
    cs = [Fraction(c) for c in coeffs]
    if len(cs) < deg:
        cs.extend(_ZERO for _ in range(deg - len(cs)))
    for e in range(len(cs) - 1, deg - 1, -1):
        c = cs[e]
        cs[e] = _ZERO
        if c:
            for j in range(deg):
                cs[e - deg + j] -= c * phi_poly[j]
    return tuple(cs[:deg])


def _apply_sigma(level, coeffs, k):
    full = [_ZERO] * level
    for e, c in enumerate(coeffs):
        if c:
            full[e * k % level] += c
    return _reduce(level, full)


def _solve_columns(cols, target):
    """Unique rational solution of sum_j x_j * cols[j] = target."""
    m = len(cols)
    d = len(target)
    aug = [[cols[j][i] for j in range(m)] + [Fraction(target[i])] for i in range(d)]
    where = [-1] * m
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, d) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(d):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        where[c] = r
        r += 1
    if any(row[m] for row in aug[r:]):
        raise ArithmeticError("inconsistent linear system")
    return [aug[where[c]][m] if where[c] >= 0 else _ZERO for c in range(m)]


def _downconvert(level, coeffs, f):
    step = level // f
    cols = []
    for i in range(euler_phi(f)):
        vec = [_ZERO] * (i * step + 1)
        vec[i * step] = _ONE
        cols.append(_reduce(level, vec))
    return tuple(_solve_columns(cols, coeffs))


def _minimize(level, coeffs):
    if not any(coeffs[1:]):
        return 1, (coeffs[0],)
    units = [k for k in range(1, level) if math.gcd(k, level) == 1]
    for f in divisors(level):
        if f == level:
            break
        if f == 1:
            continue  # nonrational at this point
        if all(
            _apply_sigma(level, coeffs, k) == coeffs
            for k in units
            if k % f == 1 and k != 1
        ):
            return f, _downconvert(level, coeffs, f)
    return level, coeffs


class Cyclotomic:
    """Element of a cyclotomic field in canonical (conductor-minimal) form.

    Cyclotomic(9, [0, 1]) is zeta_9; coefficients are indexed by exponent
    and may have any length, they are folded into the basis on the way in.
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level=1, coeffs=(0,)):
        if level < 1:
            raise ValueError("level must be positive")
        lv, cs = _minimize(level, _reduce(level, coeffs))
        object.__setattr__(self, "level", lv)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def zeta(cls, n, e=1):
        if n < 1:
            raise ValueError(f"E({n}): level must be positive")
        e %= n
        vec = [0] * (e + 1)
        vec[e] = 1
        return cls(n, vec)

    @classmethod
    def from_rational(cls, q) -> "Cyclotomic":
        return cls(1, (Fraction(q),))

    # -- predicates ---------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    @property
    def rational_value(self) -> Fraction:
        if self.level != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other)
        return None

    def _lift(self, lv):
        step = lv // self.level
        full = [_ZERO] * lv
        for e, c in enumerate(self.coeffs):
            full[e * step] = c
        return full

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        lv = math.lcm(self.level, other.level)
        a = self._lift(lv)
        for e, c in enumerate(other._lift(lv)):
            a[e] += c
        return Cyclotomic(lv, a)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(Cyclotomic)
        object.__setattr__(out, "level", self.level)
        object.__setattr__(out, "coeffs", tuple(-c for c in self.coeffs))
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        lv = math.lcm(self.level, other.level)
        s1 = lv // self.level
        s2 = lv // other.level
        full = [_ZERO] * lv
        for e1, c1 in enumerate(self.coeffs):
            if not c1:
                continue
            x1 = e1 * s1
            for e2, c2 in enumerate(other.coeffs):
                if c2:
                    full[(x1 + e2 * s2) % lv] += c1 * c2
        return Cyclotomic(lv, full)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        lv = self.level
        phi = len(self.coeffs)
        cols = []
        for j in range(phi):
            shifted = [_ZERO] * (lv + phi)
            for e, c in enumerate(self.coeffs):
                shifted[e + j] = c
            cols.append(_reduce(lv, shifted))
        target = [_ONE] + [_ZERO] * (phi - 1)
        return Cyclotomic(lv, _solve_columns(cols, target))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic.from_rational(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self):
        if self.level == 1:
            return hash(self.coeffs[0])
        return hash((self.level, self.coeffs))

    # -- display ------------------------------------------------------

    def __str__(self):
        if self.level == 1:
            return str(self.coeffs[0])
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
                continue
            base = f"E({self.level})" if e == 1 else f"E({self.level})^{e}"
            if c == 1:
                parts.append(base)
            elif c == -1:
                parts.append("-" + base)
            else:
                parts.append(f"{c}*{base}")
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    __repr__ = __str__


def zeta(n: int, e: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(n, e)


def galois(x: Cyclotomic, k: int) -> Cyclotomic:
    """Image of x under zeta -> zeta^k, for k coprime to the conductor."""
    if x.level == 1:
        return x
    if math.gcd(k, x.level) != 1:
        raise ValueError(f"{k} is not coprime to the conductor {x.level}")
    return Cyclotomic(x.level, _apply_sigma(x.level, x.coeffs, k % x.level))


def is_rational(x: Cyclotomic) -> bool:
    return x.level == 1


def is_rational_integer(x: Cyclotomic) -> bool:
    return x.level == 1 and x.coeffs[0].denominator == 1
