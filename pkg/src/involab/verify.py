"""Coefficientwise comparison of formulas against the brute-force oracle.

A report is a plain dict {target, params, rows, verdict}; each row holds
n, expected, observed and match, plus whatever else identifies it (series
name, k, d, statistic value).  A mismatch is recorded, never raised.
"""

from __future__ import annotations

from math import comb
from typing import Callable

from . import oracle as O
from .bijections import phi, phi_inv, psi, rtl_lemma_map
from .catalog import closed_count, gf_catalog
from .contfrac import cf_catalog, rtl_gf
from .errors import DomainError, LimitExceeded, UnknownName
from .perm import (
    P132,
    PatternSpec,
    fixed_points,
    increasing,
    inversions,
    is_involution,
    parity,
    pattern_23k1,
    pattern_2134,
    pattern_rot,
    rtl_maxima_values,
    statistics,
)
from .succession import FIXED_POINTS, bounded_system, dp_inversions, dp_rises, level_counts
from .words import double_step_count, right_dyck_steps, surplus, xi

MATCH = "all-match"
MISMATCH = "mismatch"

A132 = "1-3-2"
ONCE132 = ((A132, 1),)
INV = O.INVOLUTIONS


def _row(n, expected, observed, **extra) -> dict:
    return dict(extra, n=n, expected=expected, observed=observed, match=expected == observed)


def _report(target, params, rows) -> dict:
    return {
        "target": target,
        "params": params,
        "rows": rows,
        "verdict": MATCH if all(r["match"] for r in rows) else MISMATCH,
    }


class _Ctx:
    """Oracle access bounded by the configured limit."""

    def __init__(self, n_max: int, limit: int | None):
        self.n_max = n_max
        self.limit = limit

    def split(self, n, avoid=(), contain=()):
        return O.parity_split(O.CountQuery(INV, n, tuple(avoid), tuple(contain)), self.limit)

    def dist(self, n, stat, avoid=(A132,), contain=(), kind=INV):
        d = O.distribution(O.CountQuery(kind, n, tuple(avoid), tuple(contain), (stat,)), self.limit)
        return {k[0]: v for k, v in d.items()}

    def objects(self, n, avoid=(A132,), contain=(), kind=INV):
        return O.enumerate_objects(O.CountQuery(kind, n, tuple(avoid), tuple(contain)), self.limit)

    def count(self, n, avoid=(), contain=(), kind=INV):
        return O.count(O.CountQuery(kind, n, tuple(avoid), tuple(contain)), self.limit)


def _as_list(d: dict, size: int) -> list:
    return [d.get(i, 0) for i in range(size)]


# catalog families ----------------------------------------------------------------


def _family(even: str, odd: str | None, constraint: Callable, ks, first_n: int = 0):
    """constraint(k or (k, d)) -> (avoid, contain) for the oracle."""

    def run(ctx: _Ctx, params: dict):
        rows = []
        for key in ks(params):
            kw = dict(zip(("k", "d"), key)) if isinstance(key, tuple) else ({"k": key} if key else {})
            avoid, contain = constraint(key)
            ev = gf_catalog(even, ctx.n_max, **kw).integer_coefficients()
            od = gf_catalog(odd, ctx.n_max, **kw).integer_coefficients() if odd else None
            for n in range(first_n, ctx.n_max + 1):
                e, o = ctx.split(n, avoid, contain)
                rows.append(_row(n, ev[n], e, series=even, **kw))
                if od is not None:
                    rows.append(_row(n, od[n], o, series=odd, **kw))
        return rows

    return run


def _ks(default):
    def pick(params):
        if params.get("k") is not None:
            k = int(params["k"])
            return [(k, int(params["d"]))] if params.get("d") is not None else [k]
        return list(default)
    return pick


def _rot_ks(params):
    if params.get("k") is not None and params.get("d") is not None:
        return [(int(params["k"]), int(params["d"]))]
    return [(3, 1), (4, 1), (4, 2), (5, 2)]


def _je_empty(ctx, params):
    rows = _family("Je_empty", "Jo_empty", lambda _: ((), ONCE132), lambda p: [None])(ctx, params)
    for n in range(3, ctx.n_max + 1):
        rows.append(_row(n, closed_count("je_empty", n), ctx.split(n, (), ONCE132)[0], series="closed"))
    return rows


def _once_zero(ctx, params):
    rows = []
    ks = [int(params["k"])] if params.get("k") is not None else [3, 4, 5]
    for k in ks:
        for name, t in (("12k", increasing(k)), ("23k1", pattern_23k1(k))):
            for n in range(ctx.n_max + 1):
                obs = ctx.split(n, (), ONCE132 + ((t, 1),))[0]
                rows.append(_row(n, 0, obs, series=f"Je_{name}_once", k=k))
    return rows


# statistics on 132-avoiding involutions --------------------------------------------


def _central(ctx, params):
    ci = cf_catalog("C_I", "x", ctx.n_max)
    rows = []
    for n in range(ctx.n_max + 1):
        obs = ctx.count(n, (A132,))
        rows.append(_row(n, comb(n, n // 2), obs, source="binomial"))
        rows.append(_row(n, int(ci[n].coeff(0)), obs, source="C_I"))
    return rows


def _ballot(ctx, params):
    rows = []
    for n in range(ctx.n_max + 1):
        exp = [closed_count("ballot", n, p=p) for p in range(n + 1)]
        rows.append(_row(n, exp, _as_list(ctx.dist(n, "fixed_points"), n + 1), source="oracle"))
        tree = level_counts(FIXED_POINTS, n)
        rows.append(_row(n, exp, [tree.get((p,), 0) for p in range(n + 1)], source="succession"))
    return rows


def _parity(ctx, params):
    rows = []
    table = dp_inversions(ctx.n_max)
    for n in range(ctx.n_max + 1):
        exp = [closed_count("even132", n), closed_count("odd132", n)]
        rows.append(_row(n, exp, list(ctx.split(n, (A132,))), source="oracle"))
        by_i = table[n].sum(axis=0)
        dp = [int(by_i[0::2].sum()), int(by_i[1::2].sum())]
        rows.append(_row(n, exp, dp, source="dp_inversions"))
    return rows


def _rises(ctx, params):
    rows = []
    table = dp_rises(ctx.n_max)
    for n in range(ctx.n_max + 1):
        size = max(n, 1)
        exp = [closed_count("rises", n, r=r) for r in range(size)]
        rows.append(_row(n, exp, _as_list(ctx.dist(n, "rises"), size), source="oracle"))
        dp = [int(table[n, :, r, :].sum()) for r in range(size)]
        rows.append(_row(n, exp, dp, source="dp_rises"))
        bad = sum(1 for p in ctx.objects(n) if n and statistics(p).ltr_minima != n - statistics(p).rises)
        rows.append(_row(n, 0, bad, source="ltr_minima = n - rises, violations"))
    return rows


def _psi_parity(ctx, params):
    rows = []
    for n in range(3, ctx.n_max + 1):
        exp = [closed_count("psi_even", n), closed_count("psi_odd", n)]
        rows.append(_row(n, exp, list(ctx.split(n, (), ONCE132))))
    return rows


def _rtl(ctx, params):
    gf = rtl_gf(ctx.n_max)
    rows = []
    for n in range(ctx.n_max + 1):
        obs = _as_list(ctx.dist(n, "rtl_maxima"), n + 1)
        rows.append(_row(n, [int(gf[n].coeff(s)) for s in range(n + 1)], obs, source="series"))
        rows.append(_row(n, [closed_count("rtl_maxima", n, s=s) for s in range(n + 1)], obs,
                         source="closed"))
    return rows


def _cf(name, stat, closed):
    def run(ctx, params):
        s = cf_catalog(name, "x,y", ctx.n_max)
        rows = []
        for n in range(ctx.n_max + 1):
            obs = ctx.dist(n, stat)
            size = max(obs) + 1 if obs else 1
            exp = [int(s[n].coeff(j)) for j in range(max(size, s[n].degree + 1))]
            rows.append(_row(n, exp, _as_list(obs, len(exp)), source="series"))
            if n >= 1:
                for j, cname in enumerate(closed, 1):
                    rows.append(_row(n, closed_count(cname, n), obs.get(j, 0), source=cname))
        return rows
    return run


def _bounded(ctx, params):
    rows = []
    ks = [int(params["k"])] if params.get("k") is not None else [3, 4, 5]
    for k in ks:
        sysk = bounded_system(k)
        for n in range(1, ctx.n_max + 1):
            obs = ctx.dist(n, "fixed_points", (A132, increasing(k)))
            exp = [closed_count("bounded_fixed", n, k=k, p=p) for p in range(n + 1)]
            rows.append(_row(n, exp, _as_list(obs, n + 1), k=k, source="fixed points"))
            e, o = ctx.split(n, (A132, increasing(k)))
            exp2 = [closed_count("bounded_even", n, k=k), closed_count("bounded_odd", n, k=k)]
            rows.append(_row(n, exp2, [e, o], k=k, source="parity"))
            total = sum(level_counts(sysk, n).values())
            rows.append(_row(n, e + o, total, k=k, source="succession"))
    return rows


# bijections -------------------------------------------------------------------------


def _phi(ctx, params):
    """Count of objects satisfying every transport identity, against the class size."""
    rows = []
    for n in range(ctx.n_max + 1):
        objs = ctx.objects(n)
        good = 0
        words = set()
        for p in objs:
            w = phi(p)
            words.add(w)
            st = statistics(p)
            if (phi_inv(w) == p and right_dyck_steps(w) == inversions(p)
                    and double_step_count(xi(w)) == st.rises and surplus(w) == fixed_points(p)):
                good += 1
        rows.append(_row(n, len(objs), good, source="transport"))
        rows.append(_row(n, len(objs), len(words), source="distinct images"))
    return rows


def _psi(ctx, params):
    rows = []
    for n in range(3, ctx.n_max + 1):
        inputs = [p for p in ctx.objects(n, (), ONCE132) if fixed_points(p) >= 1]
        images, good = set(), 0
        for p in inputs:
            s = psi(p)
            images.add(s)
            q = fixed_points(p)
            if (len(s) == n - 2 and is_involution(s) and fixed_points(s) == q
                    and parity(s) != parity(p)
                    and inversions(s) == inversions(p) - 2 * n + 2 * q + 3):
                good += 1
        rows.append(_row(n, len(inputs), good, source="psi properties"))
        # bijective onto I_{n-2}(132) restricted to at least one fixed point
        target = {p for p in ctx.objects(n - 2) if fixed_points(p) >= 1}
        rows.append(_row(n, sorted(target), sorted(images), source="image"))
    return rows


def _rtl_lemmas(ctx, params):
    rows = []
    for n in range(ctx.n_max):
        domain = [p for p in ctx.objects(n) if len(rtl_maxima_values(p)) % 2 == 1
                  and (n % 2 == 1 or fixed_points(p) >= 2)]
        images, ok = set(), 0
        for p in domain:
            img = rtl_lemma_map(p)
            images.add(img.perm)
            back = rtl_lemma_map(img.perm, inverse=True)
            if back.perm == p and back.case == img.case:
                ok += 1
        rows.append(_row(n, len(domain), ok, source="round trip"))
        rows.append(_row(n, len(domain), len(images), source="injective"))
        codomain = {q for q in ctx.objects(n + 1) if len(rtl_maxima_values(q)) >= 2}
        rows.append(_row(n, sorted(codomain), sorted(images), source="onto length n+1 with >= 2 maxima"))
    return rows


# exploratory ------------------------------------------------------------------------


def _motzkin(ctx, params):
    return [_row(n, O.motzkin(n), ctx.count(n, ("1-4-3-2",))) for n in range(ctx.n_max + 1)]


QUAD = ("1-2-3-4", "1-2-4-3", "1-4-2-3", "4-1-2-3")


def _quad(ctx, params):
    rows = []
    for n in range(ctx.n_max + 1):
        obs = O.count(O.CountQuery(O.PERMUTATIONS, n + 1, QUAD), ctx.limit_perm)
        rows.append(_row(n, comb(2 * n, n), obs))
    return rows


# registry ---------------------------------------------------------------------------

_once = lambda pat: (lambda k: ((A132,), ((pat(k), 1),)))
_avoid = lambda pat: (lambda k: ((A132, pat(k)), ()))
_j_avoid = lambda pat: (lambda k: ((pat(k),), ONCE132))

TARGETS = {
    "central-binomial": (_central, "size of I_n(1-3-2) vs binomial and C_I", True),
    "fixed-points": (_ballot, "fixed-point distribution vs ballot numbers", True),
    "parity": (_parity, "even/odd split of I_n(1-3-2)", True),
    "rises": (_rises, "rise distribution, dp table, ltr minima", True),
    "phi-transport": (_phi, "phi round trip and statistic transport", True),
    "psi": (_psi, "psi image, fixed points, inversion shift", True),
    "parity-132-once": (_psi_parity, "even/odd split of involutions with one 1-3-2", True),
    "even-avoid-132": (_family("Ie_empty", "Io_empty", lambda _: ((A132,), ()), lambda p: [None]),
                       "parity split of I_n(1-3-2)", True),
    "even-avoid-12k": (_family("Ie_12k", "Io_12k", _avoid(increasing), _ks(range(2, 6))),
                       "parity split of I_n(1-3-2, 12..k)", True),
    "even-avoid-2134k": (_family("Ie_2134k", "Io_2134k", _avoid(pattern_2134), _ks(range(2, 6))),
                         "parity split of I_n(1-3-2, 2134..k)", True),
    "even-avoid-rot": (_family("Ie_rot", "Io_rot", lambda kd: ((A132, pattern_rot(*kd)), ()), _rot_ks),
                       "parity split of I_n(1-3-2, (d+1)..k1..d)", True),
    "even-once-12k": (_family("Ie_12k_once", "Io_12k_once", _once(increasing), _ks(range(2, 6))),
                      "1-3-2 avoided, 12..k once", True),
    "even-once-2134k": (_family("Ie_2134k_once", None, _once(pattern_2134), _ks(range(2, 6))),
                        "1-3-2 avoided, 2134..k once", True),
    "even-once-23k1": (_family("Ie_23k1_once", None, _once(pattern_23k1), _ks(range(3, 6))),
                       "1-3-2 avoided, 23..k1 once", True),
    "even-132-once": (_je_empty, "1-3-2 once: series and closed form", True),
    "even-132-once-avoid-12k": (_family("Je_12k", "Jo_12k", _j_avoid(increasing), _ks(range(2, 6))),
                                "1-3-2 once, 12..k avoided", True),
    "even-132-once-avoid-2134k": (_family("Je_2134k", None, _j_avoid(pattern_2134), _ks(range(2, 6))),
                                  "1-3-2 once, 2134..k avoided", True),
    "even-132-once-avoid-23k1": (_family("Je_23k1", None, _j_avoid(pattern_23k1), _ks(range(3, 6))),
                                 "1-3-2 once, 23..k1 avoided", True),
    "even-132-once-pattern-once": (_once_zero, "1-3-2 once and 12..k or 23..k1 once: none even", True),
    "even-132-once-2134k-once": (
        _family("Je_2134k_once", None, lambda k: ((), ONCE132 + ((pattern_2134(k), 1),)), _ks(range(2, 6))),
        "1-3-2 once, 2134..k once", True),
    "classical-12": (_cf("C_I", "occ:1-2", ("once_12", "twice_12")), "(length, #1-2) via C_I", True),
    "adjacent-12": (_cf("D_I", "occ:12", ("once_adjacent_12", "twice_adjacent_12")),
                    "(length, #12) via D_I", True),
    "rtl-maxima": (_rtl, "right-to-left maxima: series, closed form", True),
    "rtl-lemmas": (_rtl_lemmas, "maxima-raising maps invert and are injective", True),
    "bounded-12k": (_bounded, "I_n(1-3-2, 12..k) by fixed points and parity, k=3..5", True),
    "motzkin_1432": (_motzkin, "|I_n(1-4-3-2)| vs Motzkin numbers (exploratory)", False),
    "quad4_classes": (_quad, "|S_{n+1}(1234,1243,1423,4123)| vs binom(2n,n) (exploratory)", False),
}

# short identifiers accepted on the command line
ALIASES = {
    "baseline": "central-binomial",
    "ballot": "fixed-points",
    "even132": "parity",
    "psi-even": "parity-132-once",
    "tha1": "even-avoid-132",
    "tha2": "even-avoid-12k",
    "tha3": "even-avoid-2134k",
    "tha4": "even-avoid-rot",
    "thb2": "even-once-12k",
    "thb3": "even-once-2134k",
    "thb4": "even-once-23k1",
    "thc1": "even-132-once",
    "thc2": "even-132-once-avoid-12k",
    "thc3": "even-132-once-avoid-2134k",
    "thc4": "even-132-once-avoid-23k1",
    "thd1": "even-132-once-pattern-once",
    "thd2": "even-132-once-2134k-once",
    "thc": "classical-12",
    "thd": "adjacent-12",
    "th-ssd": "rtl-maxima",
    "thssd": "rtl-maxima",
}

DEFAULT_N_MAX = {"motzkin_1432": 11, "quad4_classes": 8, "rtl-lemmas": 11}


def target_names() -> list:
    return sorted(TARGETS)


def resolve(target: str) -> str:
    name = ALIASES.get(target, target)
    if name not in TARGETS and name != "all":
        raise UnknownName(f"unknown verification target {target!r}")
    return name


def verify(target: str, n_max: int | None = None, params: dict | None = None,
           limit: int | None = None, perm_limit: int | None = None) -> dict:
    """Run one target (or "all") and return its report.

    ``limit`` bounds oracle lengths for involutions (default: the oracle's),
    ``perm_limit`` for permutations.
    """
    name = resolve(target)
    params = dict(params or {})
    if name == "all":
        return _verify_all(n_max, params, limit, perm_limit)
    if n_max is None:
        n_max = DEFAULT_N_MAX.get(name, O.DEFAULT_LIMITS[INV])
    if n_max < 0:
        raise DomainError("n_max must be nonnegative")
    inv_bound = O.DEFAULT_LIMITS[INV] if limit is None else limit
    perm_bound = O.DEFAULT_LIMITS[O.PERMUTATIONS] if perm_limit is None else perm_limit
    if name == "quad4_classes":
        if n_max + 1 > perm_bound:
            raise LimitExceeded(f"n={n_max + 1} exceeds the permutations limit {perm_bound}")
    elif n_max > inv_bound:
        raise LimitExceeded(f"n={n_max} exceeds the involutions limit {inv_bound}")
    ctx = _Ctx(n_max, inv_bound)
    ctx.limit_perm = perm_bound
    run, _, _ = TARGETS[name]
    shown = {k: v for k, v in params.items() if v is not None}
    return _report(target, dict(shown, n_max=n_max), run(ctx, params))


def _verify_all(n_max, params, limit, perm_limit) -> dict:
    rows = []
    for name in target_names():
        run, _, gating = TARGETS[name]
        cap = DEFAULT_N_MAX.get(name)
        n = n_max if cap is None or n_max is None else min(n_max, cap)
        rep = verify(name, n, {}, limit, perm_limit)
        rows.append({"target": name, "verdict": rep["verdict"], "gating": gating,
                     "rows": len(rep["rows"]), "n_max": rep["params"]["n_max"]})
    ok = all(r["verdict"] == MATCH for r in rows if r["gating"])
    return {"target": "all", "params": {"n_max": n_max}, "rows": rows,
            "verdict": MATCH if ok else MISMATCH}
