"""Closed-form generating functions for parity-refined pattern classes, and
closed counting formulas.

Notation used in names:
  I   132-avoiding involutions;          J   involutions containing 132 once
  e/o even / odd number of inversions;   _once  the extra pattern occurs once
  12k = 12...k,  2134k = 2134...k,  23k1 = 23...k1,  rot = (d+1 ... k 1 ... d)

Every entry of ``gf_catalog`` returns an exact truncated Series.  Families
with a rational generating function are built as ``RationalFunction`` first
(see ``gf_rational``).  A few entries carry a ``variant``: ``"statement"``
is the formula as printed in the source, the default is the solution of the
functional equation from the corresponding block decomposition where the
two differ (the decisions file records each case).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError, UnknownName
from .perm import PatternSpec, increasing, pattern_23k1, pattern_2134, pattern_rot
from .series import (
    Poly,
    RationalFunction,
    Series,
    catalan,
    catalan_series,
    fibonacci,
    r_k,
    scaled_U,
)
from .succession import ballot_count, even_count, odd_count, rises_count

RF = RationalFunction
X = RF.x()
ONE = RF(1)


# building blocks -------------------------------------------------------------


@lru_cache(maxsize=None)
def R_neg(k: int) -> RF:
    """R_k(-x^2)"""
    return r_k(k).substitute(-1, 2)


@lru_cache(maxsize=None)
def R_pos(k: int) -> RF:
    """R_k(x^2)"""
    return r_k(k).substitute(1, 2)


@lru_cache(maxsize=None)
def R_even(k: int) -> RF:
    """R^e_k(x^2) = (R_k(x^2) + R_k(-x^2)) / 2"""
    return (R_pos(k) + R_neg(k)) * Fraction(1, 2)


@lru_cache(maxsize=None)
def R_odd(k: int) -> RF:
    """R^o_k(x^2) = (R_k(x^2) - R_k(-x^2)) / 2"""
    return (R_pos(k) - R_neg(k)) * Fraction(1, 2)


def inv_U(j: int) -> RF:
    """1 / U_j(1/(2x))"""
    return RF(Poly.monomial(j), scaled_U(j))


def sum_U_over_U(js, m: int, shift: int = 0) -> RF:
    """x^shift * sum_{j in js} U_j(1/(2x)) / U_m(1/(2x))"""
    num = Poly()
    for j in js:
        num = num + scaled_U(j) * Poly.monomial(m - j + shift)
    return RF(num, scaled_U(m))


def prod_R_neg(a: int, b: int) -> RF:
    out = ONE
    for i in range(a, b + 1):
        out = out * R_neg(i)
    return out


# companion totals ------------------------------------------------------------


@lru_cache(maxsize=None)
def I_12k(k: int) -> RF:
    """132-avoiding involutions avoiding 12...k: sum_{j<k} U_j / (x U_k)."""
    return sum_U_over_U(range(k), k, shift=-1)


@lru_cache(maxsize=None)
def I_rot(k: int, d: int) -> RF:
    t = I_12k(k - d)
    return (1 + X**2 * (R_pos(k - d - 1) - R_pos(d - 1)) * t) / (1 - X - X**2 * R_pos(d - 1))


@lru_cache(maxsize=None)
def I_12k_once(k: int) -> RF:
    """132-avoiding involutions containing 12...k exactly once."""
    if k == 1:
        return X
    return X * I_12k_once(k - 1) / (1 - X**2 * R_pos(k - 1))


@lru_cache(maxsize=None)
def J_12k(m: int) -> RF:
    """Involutions avoiding 12...m with one 132: x sum_{j=1}^{m-2} U_j / U_m."""
    return sum_U_over_U(range(1, m - 1), m, shift=1)


@lru_cache(maxsize=None)
def J_2134k(m: int, variant: str = "corrected") -> RF:
    """x [x^a U_2 + sum_{j=2}^{m-2} U_j] / U_m, a = 1 (a = 2 as printed)."""
    a = 2 if variant == "statement" else 1
    head = RF(scaled_U(2) * Poly.monomial(m - 2 + 1 + a), scaled_U(m))
    return head + sum_U_over_U(range(2, m - 1), m, shift=1)


# even families ---------------------------------------------------------------


def _avoid_increasing_term(k: int, j: int) -> RF:
    return X**j * (1 + X**2 * R_even(k - 1 - j) * I_12k(k - j)) * prod_R_neg(k - j, k)


@lru_cache(maxsize=None)
def Ie_12k(k: int) -> RF:
    out = RF(0)
    for j in range(k):
        out = out + _avoid_increasing_term(k, j)
    return out


@lru_cache(maxsize=None)
def Ie_2134k(k: int) -> RF:
    out = RF(0)
    for j in range(k - 2):
        out = out + _avoid_increasing_term(k, j)
    return out + X ** (k - 2) * r_k(2) * prod_R_neg(3, k)


@lru_cache(maxsize=None)
def Ie_rot(k: int, d: int, variant: str = "equation") -> RF:
    e, t, total = Ie_12k(k - d), I_12k(k - d), I_rot(k, d)
    if variant == "statement":
        a = R_neg(k - d)
        # R^e_{d-1}(-x^2) equals R^e_{d-1}(x^2): R^e is even
        body = (1 + X**2 * (R_neg(k - d - 1) - R_neg(d - 1)) * e
                + (R_even(d - 1) - R_even(k - d - 1)) * t
                + R_even(k - d - 1) * total)
        return a / (1 - X * a) * body
    b = R_neg(d)
    body = (1 + X**2 * (R_neg(d - 1) - R_neg(k - d - 1)) * e
            + X**2 * (R_even(k - d - 1) - R_even(d - 1)) * t
            + X**2 * R_even(d - 1) * total)
    return b / (1 - X * b) * body


@lru_cache(maxsize=None)
def Ie_12k_once(k: int, variant: str = "equation") -> RF:
    if variant == "statement":
        out = RF(0)
        for j in range(k):
            out = out + X ** (k - j) * R_even(j + 1) * prod_R_neg(j + 2, k) * inv_U(j + 2)
        return out
    if k == 1:
        return X
    return R_neg(k) * (X * Ie_12k_once(k - 1) + X**2 * R_even(k - 1) * I_12k_once(k))


@lru_cache(maxsize=None)
def Ie_2134k_once(k: int) -> RF:
    out = RF(0)
    for j in range(3, k + 1):
        out = out + X ** (k + 2 - j) * R_even(j - 1) * prod_R_neg(j, k) * inv_U(j)
    return (1 - X**2) * out


@lru_cache(maxsize=None)
def Ie_23k1_once(k: int) -> RF:
    odd = I_12k_once(k - 2) - Ie_12k_once(k - 2)
    return X**3 / (1 - X) * odd


@lru_cache(maxsize=None)
def Je_12k(k: int, variant: str = "equation") -> RF:
    if variant == "statement":
        out = RF(0)
        for j in range(3, k + 1):
            inner = R_odd(j - 1) + R_even(j - 1) * sum_U_over_U(range(1, j - 1), j)
            out = out + X ** (k + 1 - j) * inner * prod_R_neg(j, k)
        return out
    if k <= 2:
        return RF(0)
    return X * R_neg(k) * (X**2 * R_odd(k - 1) + X * R_even(k - 1) * J_12k(k) + Je_12k(k - 1))


@lru_cache(maxsize=None)
def Je_2134k(k: int, variant: str = "corrected") -> RF:
    if k <= 2:
        return RF(0)
    if k == 3:
        return X**5 / (1 - 4 * X**4)
    return X * R_neg(k) * (X**2 * R_odd(k - 1) + X * R_even(k - 1) * J_2134k(k, variant)
                           + Je_2134k(k - 1, variant))


@lru_cache(maxsize=None)
def Je_23k1(k: int) -> RF:
    inner = X * R_odd(k - 2) + R_even(k - 2) * J_12k(k - 1) - R_neg(k - 2) * Je_12k(k - 1)
    return X**2 / (1 - X) * inner


@lru_cache(maxsize=None)
def Je_2134k_once(k: int) -> RF:
    out = RF(0)
    for j in range(2, k):
        out = out + X ** (k + 2 - j) * R_even(j) * prod_R_neg(j + 1, k) * inv_U(j + 1)
    return (1 - X**2) * out


# families with square roots ----------------------------------------------------


def _c_pm(order: int):
    base = catalan_series(order // 2 + 1)
    return base.substitute(1, 2).truncate(order), base.substitute(-1, 2).truncate(order)


def Ie_empty_series(order: int) -> Series:
    cp, cm = _c_pm(order)
    x = Series.x(order)
    num = 2 * (1 - x) - x * x * (cp - cm)
    den = 2 * (1 - x + x * x * cm) * (1 - x - x * x * cp)
    return num / den


def I_empty_series(order: int) -> Series:
    """2 / (1 - 2x + sqrt(1 - 4x^2))"""
    x = Series.x(order)
    return 2 / (1 - 2 * x + (1 - 4 * x * x).sqrt())


def J_empty_series(order: int) -> Series:
    """x^3 C(x^2) / (1 - x - x^2 C(x^2)): involutions containing 132 once."""
    cp, _ = _c_pm(order)
    x = Series.x(order)
    return x**3 * cp / (1 - x - x * x * cp)


def Je_empty_series(order: int, variant: str = "statement") -> Series:
    x = Series.x(order)
    if variant == "statement":
        s1 = (1 - 4 * x * x).sqrt()
        s2 = (1 + 4 * x * x).sqrt()
        num = x * (1 - 2 * x + x * s1 + x * s2 - s1 * s2)
        den = (1 - 2 * x + s2) * (1 - 2 * x + s1)
        if den.coefficient(0) != 4:
            raise AssertionError("denominator constant term should be 4")
        return num / den
    if variant == "equation":
        cp, cm = _c_pm(order)
        total = J_empty_series(order)
        num = x * x / 2 * (cp + cm) * total + x**3 / 2 * (cp - cm)
        return num / (1 - x + x * x * cm)
    if variant == "closed":
        return Series.from_function(lambda n: je_empty_closed(n) if n >= 3 else 0, order)
    raise UnknownName(f"unknown variant {variant!r}")


# closed counts -----------------------------------------------------------------


def je_empty_closed(n: int) -> int:
    """Even involutions of length n >= 3 containing 132 once:
    C_m/2 * ([n/2](3 + (-1)^(n+1))/2 - 1 - (-1)^binom(n-3, 2)), m = [(n-2)/2]."""
    m = (n - 2) // 2
    sign = -1 if comb(n - 3, 2) % 2 else 1
    val = Fraction(catalan(m), 2) * (Fraction((n // 2) * (3 + (-1) ** (n + 1)), 2) - 1 - sign)
    if val.denominator != 1:
        raise AssertionError(f"non-integral value at n={n}")
    return int(val)


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def psi_even(n: int, variant: str = "statement") -> int:
    """Even involutions of length n containing 132 exactly once."""
    if variant == "statement":
        return _binom(n - 3, 1 + 2 * ((n - 5) // 4))
    extra = catalan(2 * (n // 4) - 1) if n % 4 == 0 and n >= 4 else 0
    return _binom(n - 3, 1 + 2 * ((n - 4) // 4)) - extra


def psi_odd(n: int, variant: str = "statement") -> int:
    if variant == "statement":
        return _binom(n - 3, 2 * ((n - 3) // 4))
    extra = catalan(2 * ((n - 2) // 4)) if n % 4 == 2 and n >= 6 else 0
    return _binom(n - 3, 2 * ((n - 1) // 4)) - extra


def rtl_count(n: int, s: int) -> int:
    """132-avoiding involutions of length n with s right-to-left maxima."""
    if n == 0:
        return 1 if s == 0 else 0
    if not 1 <= s <= n:
        return 0
    if s % 2 == 0:
        if n % 2:
            return 0
        return _binom(n - 1 - s // 2, n // 2 - 1) - _binom(n - 1 - s // 2, n // 2)
    return _binom(n - 1 - (s - 1) // 2, n // 2)


def bounded_fixed_count(k: int, n: int, p: int) -> int:
    """|I_n(132, 12...k)| with p fixed points, k in {3,4,5}, n >= 1."""
    if (n - p) % 2 or p < 0 or p > min(n, k - 1):
        return 0
    h = (n - 1) // 2
    if k == 3:
        return 2**h
    if k == 4:
        return fibonacci(n - 2) if p in (0, 3) else fibonacci(n - 1)
    if k == 5:
        if p == 2:
            return 3 ** (n // 2 - 1)
        return (3**h + 1) // 2 if p in (0, 1) else (3**h - 1) // 2
    raise DomainError("formulas exist for k = 3, 4, 5")


def bounded_parity_count(k: int, n: int) -> tuple:
    """(even, odd) counts of I_n(132, 12...k) for k in {3,4,5}, n >= 1."""
    l, r = divmod(n - 1, 4)
    F = fibonacci
    table = {
        3: ([2 ** (2 * l), 2 ** (2 * l), 0, 2 ** (2 * l + 1)],
            [0, 2 ** (2 * l), 2 ** (2 * l + 1), 2 ** (2 * l + 1)]),
        4: ([F(4 * l), F(4 * l + 1), F(4 * l + 1), F(4 * l + 2)],
            [F(4 * l - 1), F(4 * l), F(4 * l + 2), F(4 * l + 3)]),
        5: ([(3 ** (2 * l) + 1) // 2, 3 ** (2 * l), (3 ** (2 * l + 1) - 1) // 2, 3 ** (2 * l + 1)],
            [(3 ** (2 * l) - 1) // 2, 3 ** (2 * l), (3 ** (2 * l + 1) + 1) // 2, 3 ** (2 * l + 1)]),
    }
    if k not in table:
        raise DomainError("formulas exist for k = 3, 4, 5")
    even, odd = table[k]
    return even[r], odd[r]


def _positive(n: int) -> None:
    if n < 1:
        raise DomainError("the closed form holds for n >= 1")


def cf_once_12(n: int) -> int:
    """132-avoiding involutions with exactly one occurrence of 1-2."""
    _positive(n)
    return (1 + (-1) ** n) // 2


def cf_twice_12(n: int) -> int:
    _positive(n)
    return (2 * n - 3 - (-1) ** n) // 4


def cf_once_adjacent_12(n: int) -> int:
    """... with exactly one adjacent rise (generalized pattern 12)."""
    _positive(n)
    return (2 * n - 1 + (-1) ** n) // 4


def cf_twice_adjacent_12(n: int) -> int:
    _positive(n)
    return (2 * n * (n - 2) + 1 - (-1) ** n) // 8


CLOSED_COUNTS = {
    "even132": lambda n: even_count(n),
    "odd132": lambda n: odd_count(n),
    "rises": lambda n, r: rises_count(n, r),
    "ballot": lambda n, p: ballot_count(n, p),
    "psi_even": psi_even,
    "psi_odd": psi_odd,
    "rtl_maxima": lambda n, s: rtl_count(n, s),
    "je_empty": je_empty_closed,
    "once_12": cf_once_12,
    "twice_12": cf_twice_12,
    "once_adjacent_12": cf_once_adjacent_12,
    "twice_adjacent_12": cf_twice_adjacent_12,
    "bounded_fixed": lambda n, k, p: bounded_fixed_count(k, n, p),
    "bounded_even": lambda n, k: bounded_parity_count(k, n)[0],
    "bounded_odd": lambda n, k: bounded_parity_count(k, n)[1],
}


def closed_count(name: str, n: int, **params) -> int:
    if name not in CLOSED_COUNTS:
        raise UnknownName(f"unknown closed formula {name!r}")
    try:
        return CLOSED_COUNTS[name](n, **params)
    except TypeError as exc:
        raise DomainError(f"bad parameters for {name}: {exc}") from exc


# the catalog -------------------------------------------------------------------


def _need(params, key):
    if params.get(key) is None:
        raise DomainError(f"parameter {key} is required")
    return int(params[key])


def _k_at_least(lo):
    def check(params):
        k = _need(params, "k")
        if k < lo:
            raise DomainError(f"k must be at least {lo}")
        return (k,)
    return check


def _rot_params(params):
    k, d = _need(params, "k"), _need(params, "d")
    if not (1 <= d and 2 * d <= k):
        raise DomainError("need 1 <= d <= k/2")
    return (k, d)


def _none(params):
    return ()


# name -> (parameter check, rational builder or None, series builder or None,
#          pattern(s) the class refers to, variants)
_ENTRIES = {
    "Ie_empty": (_none, None, Ie_empty_series, ()),
    "I_empty": (_none, None, I_empty_series, ()),
    "Ie_12k": (_k_at_least(1), Ie_12k, None, ()),
    "I_12k": (_k_at_least(1), I_12k, None, ()),
    "Ie_2134k": (_k_at_least(2), Ie_2134k, None, ()),
    "I_2134k": (_k_at_least(2), I_12k, None, ()),
    "Ie_rot": (_rot_params, Ie_rot, None, ("equation", "statement")),
    "I_rot": (_rot_params, I_rot, None, ()),
    "Ie_12k_once": (_k_at_least(2), Ie_12k_once, None, ("equation", "statement")),
    "I_12k_once": (_k_at_least(1), I_12k_once, None, ()),
    "Ie_2134k_once": (_k_at_least(2), Ie_2134k_once, None, ()),
    "Ie_23k1_once": (_k_at_least(3), Ie_23k1_once, None, ()),
    "Je_empty": (_none, None, Je_empty_series, ("statement", "equation", "closed")),
    "J_empty": (_none, None, J_empty_series, ()),
    "Je_12k": (_k_at_least(2), Je_12k, None, ("equation", "statement")),
    "J_12k": (_k_at_least(2), J_12k, None, ()),
    "Je_2134k": (_k_at_least(2), Je_2134k, None, ("corrected", "statement")),
    "J_2134k": (_k_at_least(3), J_2134k, None, ("corrected", "statement")),
    "Je_23k1": (_k_at_least(2), Je_23k1, None, ()),
    "Je_once_zero": (_k_at_least(2), lambda k: RF(0), None, ()),
    "Je_2134k_once": (_k_at_least(2), Je_2134k_once, None, ()),
}

# odd companions: total minus even
_ODD = {
    "Io_empty": ("I_empty", "Ie_empty"),
    "Io_12k": ("I_12k", "Ie_12k"),
    "Io_2134k": ("I_2134k", "Ie_2134k"),
    "Io_rot": ("I_rot", "Ie_rot"),
    "Io_12k_once": ("I_12k_once", "Ie_12k_once"),
    "Jo_empty": ("J_empty", "Je_empty"),
    "Jo_12k": ("J_12k", "Je_12k"),
    "Jo_2134k": ("J_2134k", "Je_2134k"),
}


def catalog_names() -> list:
    return sorted(list(_ENTRIES) + list(_ODD))


def variants(name: str) -> tuple:
    if name in _ODD:
        return variants(_ODD[name][1])
    if name not in _ENTRIES:
        raise UnknownName(f"unknown generating function {name!r}")
    return _ENTRIES[name][3]


def _args(name: str, params: dict) -> tuple:
    check, _, _, vs = _ENTRIES[name]
    args = check(params)
    variant = params.get("variant")
    if variant is not None:
        if variant not in vs:
            raise DomainError(f"{name} has no variant {variant!r}")
        args = args + (variant,)
    return args


def gf_rational(name: str, **params):
    """The rational generating function, or None for square-root families."""
    if name in _ODD:
        total, even = _ODD[name]
        t, e = gf_rational(total, **_strip_variant(total, params)), gf_rational(even, **params)
        return None if t is None or e is None else t - e
    if name not in _ENTRIES:
        raise UnknownName(f"unknown generating function {name!r}")
    _, rational, _, _ = _ENTRIES[name]
    if rational is None:
        _args(name, params)
        return None
    return rational(*_args(name, params))


def _strip_variant(name, params):
    if params.get("variant") is not None and params["variant"] not in _ENTRIES[name][3]:
        return {k: v for k, v in params.items() if k != "variant"}
    return params


def gf_catalog(name: str, order: int = 20, **params) -> Series:
    """Exact series of a catalog entry, terms x^0..x^order."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    if name in _ODD:
        total, even = _ODD[name]
        return gf_catalog(total, order, **_strip_variant(total, params)) - gf_catalog(even, order, **params)
    if name not in _ENTRIES:
        raise UnknownName(f"unknown generating function {name!r}")
    _, rational, series, _ = _ENTRIES[name]
    args = _args(name, params)
    if rational is not None:
        return rational(*args).series(order)
    return series(order, *args)


def pattern_of(name: str, params: dict):
    """The second pattern a catalog entry refers to, with its required count
    (0 = avoided), or None."""
    base = name.split("_", 1)[1] if "_" in name else ""
    k = params.get("k")
    if base in ("empty",):
        return None
    if base.startswith("12k"):
        t = increasing(k)
    elif base.startswith("2134k"):
        t = pattern_2134(k)
    elif base.startswith("23k1"):
        t = pattern_23k1(k)
    elif base.startswith("rot"):
        t = pattern_rot(k, params["d"])
    else:
        return None
    return t, (1 if base.endswith("_once") else 0)
