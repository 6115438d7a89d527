"""Exact polynomials, rational functions and truncated power series.

Coefficients are ``fractions.Fraction``.  A ``Series`` holds the terms
x^0..x^order; every operation keeps the smaller of the operand orders, so a
truncated result is never silently extended.  Series coefficients may also be
``Poly`` objects, which gives bivariate series truncated in the x-degree with
exact polynomial coefficients in a second variable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DomainError


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class Poly:
    """Dense univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def monomial(cls, deg: int, coeff=1) -> "Poly":
        return cls([0] * deg + [coeff])

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def coeff(self, i: int) -> Fraction:
        return self.c[i] if 0 <= i < len(self.c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.c

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({[str(v) for v in self.c]})"

    def __add__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.c), len(other.c))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-v for v in self.c)

    def __sub__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return Poly._lift(other) - self

    def __mul__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return other
        if not self.c or not other.c:
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out, base = Poly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "Poly"):
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [Fraction(0)] * max(len(rem) - len(other.c) + 1, 0)
        lead = other.c[-1]
        for i in range(len(q) - 1, -1, -1):
            f = rem[i + len(other.c) - 1] / lead
            q[i] = f
            if f:
                for j, b in enumerate(other.c):
                    rem[i + j] -= f * b
        return Poly(q), Poly(rem)

    def monic(self) -> "Poly":
        return Poly(v / self.c[-1] for v in self.c) if self.c else self

    def substitute(self, scale=1, power: int = 1) -> "Poly":
        """p(scale * x**power)"""
        out = [Fraction(0)] * (self.degree * power + 1 if self.c else 0)
        s = _frac(scale)
        for i, v in enumerate(self.c):
            out[i * power] = v * s**i
        return Poly(out)

    def __call__(self, value):
        acc = 0
        for v in reversed(self.c):
            acc = acc * value + v
        return acc

    def even_part(self) -> "Poly":
        return Poly(v if i % 2 == 0 else 0 for i, v in enumerate(self.c))

    def odd_part(self) -> "Poly":
        return Poly(v if i % 2 else 0 for i, v in enumerate(self.c))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic() if a else Poly([1])


class RationalFunction:
    """num/den in lowest terms; the denominator is scaled to constant term 1
    when that term is nonzero, otherwise made monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce: bool = True):
        num = Poly._lift(num)
        den = Poly([1]) if den is None else Poly._lift(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if reduce and num:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.divmod(g)[0], den.divmod(g)[0]
        if not num:
            den = Poly([1])
        scale = den.c[0] if den.c[0] else den.c[-1]
        self.num = Poly(v / scale for v in num.c)
        self.den = Poly(v / scale for v in den.c)

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return RationalFunction(other)
        return NotImplemented

    @classmethod
    def x(cls, power: int = 1, coeff=1) -> "RationalFunction":
        return cls(Poly.monomial(power, coeff))

    def __eq__(self, other):
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __add__(self, other):
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction._lift(other) - self

    def __mul__(self, other):
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction._lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(1) / self**(-e)
        return RationalFunction(self.num**e, self.den**e, reduce=False)

    def substitute(self, scale=1, power: int = 1) -> "RationalFunction":
        """f(scale * x**power)"""
        return RationalFunction(self.num.substitute(scale, power), self.den.substitute(scale, power))

    def even_part(self) -> "RationalFunction":
        return (self + self.substitute(-1)) * Fraction(1, 2)

    def odd_part(self) -> "RationalFunction":
        return (self - self.substitute(-1)) * Fraction(1, 2)

    def series(self, order: int) -> "Series":
        if self.den.coeff(0) == 0:
            raise DomainError("denominator vanishes at 0; no power series expansion")
        return Series(self.num.c, order) / Series(self.den.c, order)


class Series:
    """Truncated power series sum_{i<=order} c_i x^i."""

    __slots__ = ("c", "order", "zero")

    def __init__(self, coeffs: Iterable = (), order: int = 20, zero=None):
        if order < 0:
            raise DomainError("truncation order must be nonnegative")
        coeffs = list(coeffs)[: order + 1]
        if zero is None:
            zero = Poly() if any(isinstance(v, Poly) for v in coeffs) else Fraction(0)
        norm = (lambda v: v) if isinstance(zero, Poly) else _frac
        if isinstance(zero, Poly):
            coeffs = [Poly._lift(v) for v in coeffs]
        coeffs = [norm(v) for v in coeffs]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.c = tuple(coeffs)
        self.order = order
        self.zero = zero

    # constructors
    @classmethod
    def constant(cls, value, order: int, zero=None) -> "Series":
        return cls([value], order, zero)

    @classmethod
    def x(cls, order: int, power: int = 1, coeff=1, zero=None) -> "Series":
        one = (zero if zero is not None else Fraction(0)) + 1
        return cls([zero if zero is not None else 0] * power + [one * coeff], order, zero)

    @classmethod
    def from_function(cls, f, order: int) -> "Series":
        return cls((f(n) for n in range(order + 1)), order)

    def _like(self, coeffs, order=None) -> "Series":
        return Series(coeffs, self.order if order is None else order, self.zero)

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, RationalFunction):
            return other.series(self.order)
        if isinstance(other, (int, Fraction, Poly)):
            return self._like([self.zero + other])
        return NotImplemented

    # access
    def coefficient(self, n: int):
        if n > self.order:
            raise DomainError(f"coefficient {n} beyond truncation order {self.order}")
        return self.c[n] if n >= 0 else self.zero

    __getitem__ = coefficient

    def coefficients(self) -> list:
        return list(self.c)

    def integer_coefficients(self) -> list:
        out = []
        for n, v in enumerate(self.c):
            if isinstance(v, Poly):
                if any(w.denominator != 1 for w in v.c):
                    raise DomainError(f"non-integral coefficient at x^{n}")
                out.append([int(w) for w in v.c])
            else:
                if v.denominator != 1:
                    raise DomainError(f"non-integral coefficient {v} at x^{n}")
                out.append(int(v))
        return out

    def truncate(self, order: int) -> "Series":
        return self._like(self.c, min(order, self.order))

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        m = min(self.order, other.order)
        return self.c[: m + 1] == other.c[: m + 1]

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Series({[str(v) for v in self.c]}, order={self.order})"

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = min(self.order, other.order)
        return self._like((self.c[i] + other.c[i] for i in range(m + 1)), m)

    __radd__ = __add__

    def __neg__(self):
        return self._like(-v for v in self.c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or (isinstance(other, Poly)):
            return self._like(v * other for v in self.c)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = min(self.order, other.order)
        a, b = self.c, other.c
        out = [self.zero] * (m + 1)
        for i in range(m + 1):
            if a[i] == 0:
                continue
            for j in range(m + 1 - i):
                if b[j] != 0:
                    out[i + j] = out[i + j] + a[i] * b[j]
        return self._like(out, m)

    __rmul__ = __mul__

    def _unit_inverse(self, v):
        if isinstance(v, Poly):
            if not v.is_constant() or not v:
                raise DomainError("constant term is not invertible")
            return Poly([1 / v.c[0]])
        if v == 0:
            raise DomainError("division by a series with zero constant term")
        return 1 / v

    def inverse(self) -> "Series":
        inv0 = self._unit_inverse(self.c[0])
        out = [self.zero] * (self.order + 1)
        out[0] = self.zero + inv0
        for n in range(1, self.order + 1):
            acc = self.zero
            for i in range(1, n + 1):
                if self.c[i] != 0:
                    acc = acc + self.c[i] * out[n - i]
            out[n] = -acc * inv0
        return self._like(out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = min(self.order, other.order)
        return self.truncate(m) * other.truncate(m).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self._like([self.zero + 1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sqrt(self) -> "Series":
        """Square root with constant term 1; coefficients found one order per step."""
        if self.c[0] != 1:
            raise DomainError("sqrt needs constant term 1")
        out = [self.zero] * (self.order + 1)
        out[0] = self.zero + 1
        for n in range(1, self.order + 1):
            acc = self.c[n]
            for i in range(1, n):
                acc = acc - out[i] * out[n - i]
            out[n] = acc * Fraction(1, 2)
        return self._like(out)

    # structural maps
    def substitute(self, scale=1, power: int = 1) -> "Series":
        """f(scale * x**power); the result knows terms up to (order+1)*power - 1."""
        if power < 1:
            raise DomainError("substitution power must be positive")
        new_order = (self.order + 1) * power - 1
        out = [self.zero] * (new_order + 1)
        s = _frac(scale)
        for i, v in enumerate(self.c):
            out[i * power] = v * s**i
        return self._like(out, new_order)

    def shift(self, k: int) -> "Series":
        """Multiply by x**k (the order grows by k)."""
        return self._like([self.zero] * k + list(self.c), self.order + k)

    def div_x(self, k: int) -> "Series":
        """Divide by x**k; the k lowest terms must vanish."""
        if any(v != 0 for v in self.c[:k]):
            raise DomainError(f"series is not divisible by x^{k}")
        return self._like(self.c[k:], self.order - k)

    def even_part(self) -> "Series":
        return self._like(v if i % 2 == 0 else self.zero for i, v in enumerate(self.c))

    def odd_part(self) -> "Series":
        return self._like(v if i % 2 else self.zero for i, v in enumerate(self.c))

    def at_y(self, value) -> "Series":
        """Evaluate polynomial coefficients at a number (bivariate -> univariate)."""
        return Series((v(value) if isinstance(v, Poly) else v for v in self.c), self.order)


# Chebyshev machinery -------------------------------------------------------


def chebyshev_U(r: int) -> Poly:
    """U_r(t) from U_0 = 1, U_1 = 2t, U_r = 2t U_{r-1} - U_{r-2}."""
    if r < 0:
        raise DomainError("Chebyshev index must be nonnegative")
    a, b = Poly([1]), Poly([0, 2])
    if r == 0:
        return a
    two_t = Poly([0, 2])
    for _ in range(r - 1):
        a, b = b, two_t * b - a
    return b


def scaled_U(r: int) -> Poly:
    """x^r U_r(1/(2x)), a polynomial in x with constant term 1."""
    u = chebyshev_U(r)
    out = [Fraction(0)] * (r + 1)
    for i, v in enumerate(u.c):
        out[r - i] = v / 2**i
    return Poly(out)


def cheb_P(k: int) -> Poly:
    """sum_m (-1)^m C(k-m, m) x^m; satisfies P_k = P_{k-1} - x P_{k-2}."""
    if k < 0:
        return Poly()
    return Poly((-1) ** m * comb(k - m, m) for m in range(k // 2 + 1))


def r_k(k: int) -> RationalFunction:
    """R_k(x) = P_{k-1}(x)/P_k(x); R_0 = 0, R_1 = 1, R_k = 1/(1 - x R_{k-1})."""
    if k < 0:
        raise DomainError("R_k needs k >= 0")
    if k == 0:
        return RationalFunction(0)
    return RationalFunction(cheb_P(k - 1), cheb_P(k))


def u_ratio(j: int, k: int) -> RationalFunction:
    """U_j(1/(2x)) / U_k(1/(2x)) as a rational function of x."""
    num = scaled_U(j) * Poly.monomial(k - j) if k >= j else scaled_U(j)
    den = scaled_U(k) if k >= j else scaled_U(k) * Poly.monomial(j - k)
    return RationalFunction(num, den)


# Named series ---------------------------------------------------------------


def catalan_series(order: int) -> Series:
    """C(x) as the fixed point of C = 1 + x C^2 (one new correct term per pass)."""
    c = Series.constant(1, order)
    x = Series.x(order)
    for _ in range(order + 1):
        c = 1 + x * c * c
    return c


def catalan_sqrt_series(order: int) -> Series:
    """(1 - sqrt(1 - 4x)) / (2x), resolving the 0/0 at x = 0 by dividing by x."""
    s = Series([1, -4], order + 1).sqrt()
    return (1 - s).div_x(1) / 2


def fibonacci_series(order: int) -> Series:
    """F(x) = 1/(1 - x - x^2)"""
    return Series([1], order) / Series([1, -1, -1], order)


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1) if m >= 0 else 0


def fibonacci(m: int) -> int:
    """F_0 = F_1 = 1, extended backwards by F_m = F_{m+2} - F_{m+1}."""
    a, b = 1, 1
    if m >= 0:
        for _ in range(m):
            a, b = b, a + b
        return a
    for _ in range(-m):
        a, b = b - a, a
    return a


def genl_left(Y: Sequence, Z: Sequence, order: int, parity: str) -> Series:
    """Double-sum side of the even/odd convolution identity.

    ``"odd"``:  sum_n sum_{j <= n/4} y_{2j+1} z_{n-4j} x^n
    ``"even"``: sum_n sum_{j <= n/4} y_{2j}   z_{n-4j} x^n
    Missing terms of the finite sequences Y, Z count as zero.
    """
    off = 1 if parity == "odd" else 0

    def at(seq, i):
        return _frac(seq[i]) if 0 <= i < len(seq) else Fraction(0)

    return Series(
        (sum((at(Y, 2 * j + off) * at(Z, n - 4 * j) for j in range(n // 4 + 1)), Fraction(0))
         for n in range(order + 1)),
        order,
    )


def genl_right(Y: Sequence, Z: Sequence, order: int, parity: str) -> Series:
    """Closed side: (Y(x^2) -/+ Y(-x^2)) Z(x) / (2x^2), or (... + ...) Z(x) / 2."""
    y = Series(Y, order + 2)
    z = Series(Z, order + 2)
    y2, ym2 = y.substitute(1, 2), y.substitute(-1, 2)
    if parity == "odd":
        return ((y2 - ym2) * z).div_x(2).truncate(order) / 2
    return ((y2 + ym2) * z).truncate(order) / 2
