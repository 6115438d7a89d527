"""Continued-fraction generating functions for pattern statistics on
132-avoiding permutations (C_S, D_S) and involutions (C_I, D_I).

The variables x_1, x_2, ... are specialised to monomials x^a y^b.  A
specialisation is a finite list followed by a constant tail (the tail is
usually 1).  Each functional equation multiplies the recursive call by a
monomial of positive x-degree, so a truncation at x^N only needs the inner
call at a strictly smaller order; the recursion therefore terminates as long
as x_1 has positive x-degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, UnknownName
from .series import Poly, Series, catalan_series

Monomial = tuple  # (x exponent, y exponent)
ONE_MONO = (0, 0)


def _mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1])


def _sq(a: Monomial) -> Monomial:
    return (2 * a[0], 2 * a[1])


@dataclass(frozen=True)
class Weights:
    """x_1, x_2, ... = prefix[0], prefix[1], ..., then tail forever."""

    prefix: tuple
    tail: Monomial = ONE_MONO

    def __post_init__(self):
        prefix = list(self.prefix)
        while prefix and prefix[-1] == self.tail:
            prefix.pop()
        object.__setattr__(self, "prefix", tuple(prefix))

    def __getitem__(self, k: int) -> Monomial:
        """k-th weight, one-indexed."""
        return self.prefix[k - 1] if k <= len(self.prefix) else self.tail

    def shift(self) -> "Weights":
        """(x_1 x_2, x_2 x_3, ...)"""
        n = len(self.prefix)
        return Weights(tuple(_mul(self[k], self[k + 1]) for k in range(1, n + 1)),
                       _mul(self.tail, self.tail))

    def dshift(self) -> "Weights":
        """(x_1, x_2 x_3, x_3 x_4, ...)"""
        rest = Weights(self.prefix[1:], self.tail).shift()
        n = max(len(rest.prefix), 0)
        return Weights((self[1],) + tuple(rest[k] for k in range(1, n + 1)), rest.tail)

    def squared(self) -> "Weights":
        return Weights(tuple(_sq(m) for m in self.prefix), _sq(self.tail))


_MONO_RE = re.compile(r"^(?:(?P<c>1)|(?P<factors>[xy](?:\^\d+)?(?:\*[xy](?:\^\d+)?)*))$")


def parse_monomial(text: str) -> Monomial:
    """'1', 'x', 'y', 'x^2', 'x*y', 'x^2*y^3'"""
    text = text.strip().replace(" ", "")
    m = _MONO_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse monomial {text!r}")
    if m.group("c"):
        return ONE_MONO
    a = b = 0
    for f in m.group("factors").split("*"):
        var, _, e = f.partition("^")
        e = int(e) if e else 1
        if var == "x":
            a += e
        else:
            b += e
    return (a, b)


def parse_weights(text: str, tail: str = "1") -> Weights:
    """Comma-separated monomials for x_1, x_2, ...; later variables get ``tail``."""
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise DomainError("empty specialization")
    return Weights(tuple(parse_monomial(t) for t in items), parse_monomial(tail))


def _mono_series(m: Monomial, order: int, coeff=1) -> Series:
    return Series.x(order, m[0], zero=Poly()) * Poly.monomial(m[1], coeff) if m[0] <= order \
        else Series([], order, zero=Poly())


def _times(m: Monomial, inner: Series | None, order: int) -> Series:
    """m * inner at truncation order, where inner is known up to order - deg_x(m)."""
    if inner is None or m[0] > order:
        return Series([], order, zero=Poly())
    return inner.shift(m[0]).truncate(order) * Poly.monomial(m[1])


def _one(order: int) -> Series:
    return Series([Poly([1])], order, zero=Poly())


class _Evaluator:
    def __init__(self):
        self.memo = {}

    def _check(self, w: Weights):
        if w[1][0] <= 0:
            raise DomainError("x_1 must have positive x-degree (the recursion would not terminate)")
        if any(a < 0 or b < 0 for a, b in w.prefix + (w.tail,)):
            raise DomainError("exponents must be nonnegative")

    def inner(self, name, w, order):
        return None if order < 0 else self.eval(name, w, order)

    def eval(self, name: str, w: Weights, order: int) -> Series:
        key = (name, w, order)
        if key in self.memo:
            return self.memo[key]
        self._check(w)
        x1, x2 = w[1], w[2]
        one = _one(order)
        if name == "C_S":
            sw = w.shift()
            val = 1 / (one - _times(x1, self.inner("C_S", sw, order - x1[0]), order))
        elif name == "C_I":
            top = one + _times(x1, self.inner("C_I", w.shift(), order - x1[0]), order)
            m2 = _sq(x1)
            bottom = one - _times(m2, self.inner("C_S", w.squared().shift(), order - m2[0]), order)
            val = top / bottom
        elif name == "D_S":
            m = _mul(x1, x2)
            val = 1 / (one - _mono_series(x1, order) + _mono_series(m, order)
                       - _times(m, self.inner("D_S", w.dshift(), order - m[0]), order))
        elif name == "D_I":
            m = _mul(x1, x2)
            top = (one + _mono_series(x1, order) - _mono_series(m, order)
                   + _times(m, self.inner("D_I", w.dshift(), order - m[0]), order))
            m2, mm2 = _sq(x1), _sq(m)
            bottom = (one - _mono_series(m2, order) + _mono_series(mm2, order)
                      - _times(mm2, self.inner("D_S", w.squared().dshift(), order - mm2[0]), order))
            val = top / bottom
        else:
            raise UnknownName(f"unknown continued fraction {name!r}")
        self.memo[key] = val
        return val


_EVAL = _Evaluator()
CF_NAMES = ("C_S", "C_I", "D_S", "D_I")


def cf_catalog(name: str, weights, order: int = 20) -> Series:
    """Series in x with polynomial coefficients in y (x-degree truncation)."""
    if name not in CF_NAMES:
        raise UnknownName(f"unknown continued fraction {name!r}")
    if isinstance(weights, str):
        weights = parse_weights(weights)
    if order < 0:
        raise DomainError("order must be nonnegative")
    return _EVAL.eval(name, weights, order)


def rtl_gf(order: int = 20) -> Series:
    """sum over 132-avoiding involutions of x^|p| y^(right-to-left maxima):
    sum_j x^{2j} C^j(x^2) y^{2j} + sum_j x^{2j+1} C^j(x^2) / (1 - x - x^2 C(x^2)) y^{2j+1}."""
    c2 = catalan_series(order // 2 + 1).substitute(1, 2).truncate(order)
    x = Series.x(order)
    base = 1 / (1 - x - x * x * c2)
    lifted = lambda s: Series([Poly([v]) for v in s.c], order, zero=Poly())
    total = Series([], order, zero=Poly())
    power = Series.constant(1, order)  # x^{2j} C^j(x^2)
    for j in range(order // 2 + 1):
        total = total + lifted(power) * Poly.monomial(2 * j)
        total = total + lifted(x * power * base) * Poly.monomial(2 * j + 1)
        power = power * x * x * c2
    return total


def rtl_gf_from_cf(order: int = 20) -> Series:
    """(1 + x y C_I(x, 1, ...)) / (1 - x^2 y^2 C_S(x^2, 1, ...))"""
    ci = cf_catalog("C_I", Weights(((1, 0),)), order)
    cs = cf_catalog("C_S", Weights(((2, 0),)), order)
    one = _one(order)
    return (one + _times((1, 1), ci.truncate(order - 1), order)) / (
        one - _times((2, 2), cs.truncate(order - 2) if order >= 2 else None, order))
