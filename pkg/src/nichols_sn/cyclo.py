"""Exact arithmetic in cyclotomic fields Q(ω_N).

An element is stored in the smallest cyclotomic field containing it, as
integer coordinates over the power basis 1, ω_N, ..., ω_N^{φ(N)-1}
(modulo the N-th cyclotomic polynomial) with one common positive
denominator.  ω_N is exp(2πi/N), so ω_N^{N/d} = ω_d.  Conductors are never
2 mod 4, since Q(ω_{2m}) = Q(ω_m) for odd m.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "order_of",
    "root_exponent",
    "roots_of_unity_by_order",
    "ZERO",
    "ONE",
    "euler_phi",
    "cyclotomic_polynomial",
    "to_text",
    "parse",
]

Scalar = Union["Cyclotomic", int, Fraction]


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _canonical_conductor(n: int) -> int:
    return n // 2 if n % 4 == 2 else n


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Φ_n, lowest degree first."""
    # x^n - 1 divided by Φ_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            den = cyclotomic_polynomial(d)
            num = _poly_exact_div(num, list(den))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder")
    return q


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k: coordinates of ω_n^k (0 <= k < n) in the power basis."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic Φ_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, poly[:phi])]
    return tuple(rows)


@lru_cache(maxsize=None)
def _embedding(d: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Row k: coordinates in Q(ω_n) of ω_d^k, for k < φ(d)."""
    table = _power_table(n)
    step = n // d
    return tuple(table[(k * step) % n] for k in range(euler_phi(d)))


@lru_cache(maxsize=None)
def _projection(d: int, n: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...], int]:
    """Pivot columns J and the inverse of the embedding restricted to J.

    The inverse is returned as integer columns with a common denominator.
    """
    emb = [list(map(Fraction, row)) for row in _embedding(d, n)]
    m = len(emb)
    # columns of emb (as an m x phi(n) matrix) chosen greedily to be independent
    cols: list[int] = []
    basis: list[list[Fraction]] = []
    for j in range(euler_phi(n)):
        col = [emb[i][j] for i in range(m)]
        v = list(col)
        for b, piv in _with_pivots(basis):
            if v[piv]:
                f = v[piv] / b[piv]
                v = [x - f * y for x, y in zip(v, b)]
        if any(v):
            cols.append(j)
            basis.append(v)
            if len(cols) == m:
                break
    sub = [[emb[i][j] for j in cols] for i in range(m)]
    inv = _invert(sub)
    scale = math.lcm(*(f.denominator for row in inv for f in row))
    inv_cols = tuple(tuple(int(inv[i][k] * scale) for i in range(m)) for k in range(m))
    return tuple(cols), inv_cols, scale


def _with_pivots(basis: list[list[Fraction]]):
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        yield b, piv


def _invert(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                g = aug[r][c]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _solve_int(a: list[list[int]], b: list[int]) -> tuple[list[int], int]:
    """Solve a x = b for invertible integer a; returns (det·x, det), both integral.

    Fraction-free elimination keeps every entry integral, and by Cramer's rule
    det·x is an integer vector, so back substitution divides exactly.
    """
    n = len(a)
    m = [list(row) + [bi] for row, bi in zip(a, b)]
    prev = 1
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c])
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            m[c] = [-x for x in m[c]]  # keep the determinant sign
        p = m[c][c]
        for r in range(c + 1, n):
            f = m[r][c]
            m[r] = [(p * x - f * y) // prev for x, y in zip(m[r], m[c])]
        prev = p
    det = m[n - 1][n - 1]
    y = [0] * n
    for r in range(n - 1, -1, -1):
        acc = det * m[r][n] - sum(m[r][k] * y[k] for k in range(r + 1, n))
        y[r] = acc // m[r][r]
    return y, det


def _lift(num: tuple[int, ...], d: int, n: int) -> list[int]:
    if d == n:
        return list(num)
    out = [0] * euler_phi(n)
    for c, row in zip(num, _embedding(d, n)):
        if c:
            for j, r in enumerate(row):
                if r:
                    out[j] += c * r
    return out


class Cyclotomic:
    """An element of Q(ω_N) in canonical form; immutable and hashable."""

    __slots__ = ("conductor", "num", "den")

    conductor: int
    num: tuple[int, ...]
    den: int

    def __init__(self, value: Scalar = 0) -> None:
        if isinstance(value, Cyclotomic):
            c, num, den = value.conductor, value.num, value.den
        else:
            f = Fraction(value)
            c, num, den = 1, (f.numerator,), f.denominator
        object.__setattr__(self, "conductor", c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def _raw(cls, conductor: int, num: tuple[int, ...], den: int) -> Cyclotomic:
        x = object.__new__(cls)
        object.__setattr__(x, "conductor", conductor)
        object.__setattr__(x, "num", num)
        object.__setattr__(x, "den", den)
        return x

    @classmethod
    def from_coords(cls, conductor: int, coords) -> Cyclotomic:
        """Element Σ coords[k] ω_N^k, for k below φ(N), reduced to canonical form."""
        if conductor % 4 == 2:
            return sum(
                (Cyclotomic(c) * root_of_unity(conductor, k) for k, c in enumerate(coords)),
                ZERO,
            )
        fr = [Fraction(c) for c in coords]
        if len(fr) != euler_phi(conductor):
            raise ValueError(f"expected {euler_phi(conductor)} coordinates")
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        num = [f.numerator * (den // f.denominator) for f in fr]
        return _normalize(conductor, num, den)

    @classmethod
    def from_exponents(cls, conductor: int, terms: dict[int, Scalar]) -> Cyclotomic:
        """Σ c_k ω_N^k for arbitrary integer exponents k."""
        total = ZERO
        for k, c in terms.items():
            total = total + Cyclotomic(c) * root_of_unity(conductor, k)
        return total

    # -- structure -----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.num) if c)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self) -> bool:
        return any(self.num)

    def __hash__(self) -> int:
        if self.conductor == 1:
            return hash(Fraction(self.num[0], self.den))
        return hash((self.conductor, self.num, self.den))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and self.num[0] * Fraction(other).denominator == Fraction(other).numerator * self.den
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self.den == other.den and self.num == other.num

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: Scalar) -> Cyclotomic:
        if not isinstance(other, Cyclotomic):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Cyclotomic(other)
        if self.conductor == 1 and other.conductor == 1:
            f = Fraction(self.num[0], self.den) + Fraction(other.num[0], other.den)
            return Cyclotomic._raw(1, (f.numerator,), f.denominator)
        n = math.lcm(self.conductor, other.conductor)
        a = _lift(self.num, self.conductor, n)
        b = _lift(other.num, other.conductor, n)
        den = self.den * other.den
        num = [x * other.den + y * self.den for x, y in zip(a, b)]
        return _normalize(n, num, den)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic._raw(self.conductor, tuple(-c for c in self.num), self.den)

    def __sub__(self, other: Scalar) -> Cyclotomic:
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-Cyclotomic(other))

    def __rsub__(self, other: Scalar) -> Cyclotomic:
        return Cyclotomic(other) + (-self)

    def __mul__(self, other: Scalar) -> Cyclotomic:
        if not isinstance(other, Cyclotomic):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Cyclotomic(other)
        if self.conductor == 1 and other.conductor == 1:
            f = Fraction(self.num[0] * other.num[0], self.den * other.den)
            return Cyclotomic._raw(1, (f.numerator,), f.denominator)
        if other.conductor == 1:
            return _normalize(self.conductor, [c * other.num[0] for c in self.num], self.den * other.den)
        if self.conductor == 1:
            return other * self
        n = math.lcm(self.conductor, other.conductor)
        a = _lift(self.num, self.conductor, n)
        b = _lift(other.num, other.conductor, n)
        conv: dict[int, int] = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        k = (i + j) % n
                        conv[k] = conv.get(k, 0) + x * y
        table = _power_table(n)
        num = [0] * euler_phi(n)
        for k, c in conv.items():
            if c:
                for j, r in enumerate(table[k]):
                    if r:
                        num[j] += c * r
        return _normalize(n, num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            f = 1 / Fraction(self.num[0], self.den)
            return Cyclotomic._raw(1, (f.numerator,), f.denominator)
        n = self.conductor
        phi = euler_phi(n)
        # column k of the multiplication matrix of num (without den) is num * ω^k
        table = _power_table(n)
        mat = [[0] * phi for _ in range(phi)]
        for k in range(phi):
            for j, c in enumerate(self.num):
                if c:
                    for i, r in enumerate(table[(j + k) % n]):
                        if r:
                            mat[i][k] += c * r
        y, det = _solve_int(mat, [1] + [0] * (phi - 1))
        return _normalize(n, [self.den * v for v in y], det)

    def lifted(self, n: int) -> list[Fraction]:
        """Coordinates of self in the power basis of Q(ω_n); the conductor must divide n."""
        if n % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide {n}")
        return [Fraction(c, self.den) for c in _lift(self.num, self.conductor, n)]

    def __truediv__(self, other: Scalar) -> Cyclotomic:
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self * Cyclotomic(other).inverse()

    def __rtruediv__(self, other: Scalar) -> Cyclotomic:
        return Cyclotomic(other) * self.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> Cyclotomic:
        """Complex conjugate (the automorphism ω ↦ ω⁻¹)."""
        if self.conductor == 1:
            return self
        n = self.conductor
        return Cyclotomic.from_exponents(
            n, {(-k) % n: Fraction(c, self.den) for k, c in enumerate(self.num) if c})

    # -- text ----------------------------------------------------------

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Cyclotomic({to_text(self)!r})"


def _normalize(n: int, num: list[int], den: int) -> Cyclotomic:
    g = math.gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if den < 0:
        num = [-c for c in num]
        den = -den
    if not any(num[1:]):
        return Cyclotomic._raw(1, (num[0],), den)
    return _reduce_conductor(n, tuple(num), den)


def _reduce_conductor(n: int, num: tuple[int, ...], den: int) -> Cyclotomic:
    while True:
        for p in _prime_factors(n):
            d = _canonical_conductor(n // p)
            if d == n:
                continue
            cols, inv_cols, scale = _projection(d, n)
            x = [num[j] for j in cols]
            # y = x · inv, kept as integers over the common denominator ``scale``
            yint = [sum(a * b for a, b in zip(x, col)) for col in inv_cols]
            back = _lift(tuple(yint), d, n)
            if all(b == c * scale for b, c in zip(back, num)):
                g = math.gcd(den * scale, *yint)
                num = tuple(c // g for c in yint)
                den = den * scale // g
                n = d
                if n == 1 or not any(num[1:]):
                    return Cyclotomic._raw(1, (num[0],), den)
                break
        else:
            return Cyclotomic._raw(n, num, den)


ZERO = Cyclotomic(0)
ONE = Cyclotomic(1)


@lru_cache(maxsize=None)
def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """ω_n^k in canonical form."""
    if n < 1:
        raise ValueError("order must be positive")
    k %= n
    if n % 4 == 2:
        # ω_{2m} = -ω_m^{(m+1)/2} for odd m
        m = n // 2
        base = -root_of_unity(m, (m + 1) // 2) if m > 1 else Cyclotomic(-1)
        return base**k
    phi = euler_phi(n)
    return _normalize(n, list(_power_table(n)[k]), 1) if phi > 0 else ONE


def order_of(x: Cyclotomic) -> int | None:
    """Least k >= 1 with x^k = 1, or None when x is not a root of unity."""
    if not x:
        return None
    bound = math.lcm(2, x.conductor)
    if x**bound != ONE:
        return None
    for d in sorted(d for d in range(1, bound + 1) if bound % d == 0):
        if x**d == ONE:
            return d
    raise AssertionError("unreachable")


def root_exponent(x: Cyclotomic) -> tuple[int, int] | None:
    """(m, e) with x = ω_m^e, m the order of x and gcd(e, m) = 1."""
    m = order_of(x)
    if m is None:
        return None
    for e in range(m):
        if math.gcd(e, m) == 1 and root_of_unity(m, e) == x:
            return m, e
    raise AssertionError("unreachable")


def roots_of_unity_by_order(bound: int) -> list[Cyclotomic]:
    """All ω_m^e with m | bound, ordered by (m, e), e coprime to m."""
    out = []
    for m in range(1, bound + 1):
        if bound % m == 0:
            for e in range(m):
                if math.gcd(e, m) == 1:
                    out.append(root_of_unity(m, e))
    return out


# -- text form -----------------------------------------------------------

def _frac_text(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def to_text(x: Cyclotomic) -> str:
    """Rationals as ``a/b``, roots of unity as ``w(m)^e``, otherwise a power-basis sum."""
    if x.conductor == 1:
        return _frac_text(x.to_fraction())
    re_ = root_exponent(x)
    if re_ is not None:
        return f"w({re_[0]})^{re_[1]}"
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = _frac_text(mag)
        elif mag == 1:
            body = f"w({x.conductor})^{k}"
        else:
            body = f"{_frac_text(mag)}*w({x.conductor})^{k}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(\*)?\s*)?(?:w\(\s*(\d+)\s*\)(?:\^\s*(-?\d+))?)?\s*"
)


def parse(text: str) -> Cyclotomic:
    """Inverse of ``to_text``: sums of terms ``[±][a/b][*]w(N)^k``."""
    pos = 0
    total = ZERO
    text = text.strip()
    if not text:
        raise ValueError("empty cyclotomic literal")
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse cyclotomic literal {text!r} at {pos}")
        sign, coef, star, n, k = m.groups()
        if coef is None and n is None:
            raise ValueError(f"cannot parse cyclotomic literal {text!r} at {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        if star and n is None:
            raise ValueError(f"dangling '*' in {text!r}")
        value = Cyclotomic(Fraction(coef)) if coef is not None else ONE
        if n is not None:
            value = value * root_of_unity(int(n), int(k) if k is not None else 1)
        total = total + (-value if sign == "-" else value)
        pos = m.end()
        first = False
    return total
