"""Words over {U, D}: Dyck prefixes, bilateral words and their statistics.

'U' is an up step and 'D' a down step.  A word is a plain ``str``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import ceil

from .errors import DomainError

DYCK_PREFIX = "DyckPrefix"
DYCK_WORD = "DyckWord"
BILATERAL = "Bilateral"
OTHER = "Other"


def check_word(w: str) -> str:
    if any(ch not in "UD" for ch in w):
        raise DomainError(f"words use only the letters U and D: {w!r}")
    return w


def heights(w: str) -> list:
    """Prefix heights, starting with 0 for the empty prefix."""
    h, out = 0, [0]
    for ch in w:
        h += 1 if ch == "U" else -1
        out.append(h)
    return out


def is_dyck_prefix(w: str) -> bool:
    return min(heights(w)) >= 0


def is_dyck_word(w: str) -> bool:
    return is_dyck_prefix(w) and w.count("U") == w.count("D")


def is_bilateral(w: str) -> bool:
    return w.count("U") - w.count("D") in (0, -1)


def classify(w: str) -> frozenset:
    check_word(w)
    out = set()
    if is_dyck_prefix(w):
        out.add(DYCK_PREFIX)
        if w.count("U") == w.count("D"):
            out.add(DYCK_WORD)
    if is_bilateral(w):
        out.add(BILATERAL)
    return frozenset(out or {OTHER})


def unmatched(w: str) -> tuple:
    """Positions (0-based) of unmatched D's and unmatched U's after
    cancelling every matched U...D pair."""
    stack, lone_d = [], []
    for i, ch in enumerate(w):
        if ch == "U":
            stack.append(i)
        elif stack:
            stack.pop()
        else:
            lone_d.append(i)
    return lone_d, stack


def matching_down(w: str, i: int) -> int:
    """Position of the D matching the U at position i, or -1."""
    depth = 0
    for j in range(i, len(w)):
        depth += 1 if w[j] == "U" else -1
        if depth == 0:
            return j
    return -1


def factors(w: str) -> list:
    """Dyck factors w_0, ..., w_p of w = w_0 s_1 w_1 ... s_p w_p, the s_i being
    the unmatched letters (separators)."""
    check_word(w)
    downs, ups = unmatched(w)
    cuts = sorted(downs + ups)
    out, start = [], 0
    for c in cuts:
        out.append(w[start:c])
        start = c + 1
    out.append(w[start:])
    return out


def surplus(w: str) -> int:
    return w.count("U") - w.count("D")


def xi(w: str) -> str:
    """Dyck prefix -> bilateral word: the first ceil(p/2) separators turn into D."""
    check_word(w)
    if not is_dyck_prefix(w):
        raise DomainError(f"xi needs a Dyck prefix: {w!r}")
    _, ups = unmatched(w)
    flip = set(ups[: ceil(len(ups) / 2)])
    return "".join("D" if i in flip else ch for i, ch in enumerate(w))


def xi_inv(b: str) -> str:
    """Bilateral word -> Dyck prefix: every unmatched D turns back into U."""
    check_word(b)
    if not is_bilateral(b):
        raise DomainError(f"xi_inv needs a bilateral word: {b!r}")
    downs, _ = unmatched(b)
    flip = set(downs)
    return "".join("U" if i in flip else ch for i, ch in enumerate(b))


@lru_cache(maxsize=None)
def _rds(w: str) -> int:
    if not w:
        return 0
    fs = factors(w)
    w0, rest = fs[0], fs[1:]
    tail_len = sum(len(f) for f in rest)
    if not w0:
        # w = U w_1 U ... U w_p
        return tail_len + _rds("U".join(rest))
    # w_0 = U w0' D w0'' with first-return decomposition
    close = matching_down(w0, 0)
    inner, after = w0[1:close], w0[close + 1 :]
    first = len(inner) + 1 + len(after) + tail_len
    second = len(after) + tail_len
    return first + second + _rds("U".join([inner + after] + rest))


def right_dyck_steps(w: str) -> int:
    """The recursive right-Dyck-step statistic i(w) of a Dyck prefix."""
    check_word(w)
    if not is_dyck_prefix(w):
        raise DomainError(f"right_dyck_steps needs a Dyck prefix: {w!r}")
    return _rds(w)


def double_step_count(w: str) -> int:
    """#UU in wU plus #DD in w."""
    check_word(w)
    wx = w + "U"
    uu = sum(1 for a, b in zip(wx, wx[1:]) if a == b == "U")
    dd = sum(1 for a, b in zip(w, w[1:]) if a == b == "D")
    return uu + dd


def min_height(w: str) -> int:
    """Minimal nonpositive height, as a nonnegative number: -min(0, heights)."""
    check_word(w)
    return -min(heights(w))


def split_uv(w: str) -> tuple:
    """u (v) collects, in order, the letters that follow a U (a D) in wU."""
    check_word(w)
    wx = w + "U"
    u = "".join(b for a, b in zip(wx, wx[1:]) if a == "U")
    v = "".join(b for a, b in zip(wx, wx[1:]) if a == "D")
    return u, v


def merge_uv(u: str, v: str) -> str:
    """Inverse of split_uv."""
    check_word(u)
    check_word(v)
    n = len(u) + len(v)
    if n == 0:
        return ""
    # #U(w) = |u|, and w[1:] + "U" is a shuffle of u and v
    first_is_up = len(u) - u.count("U") - v.count("U") + 1
    if first_is_up not in (0, 1):
        raise DomainError("pair (u, v) does not come from a word")
    w = ["U" if first_is_up else "D"]
    iu = iv = 0
    while len(w) < n + 1:
        if w[-1] == "U":
            if iu == len(u):
                raise DomainError("pair (u, v) does not come from a word")
            w.append(u[iu])
            iu += 1
        else:
            if iv == len(v):
                raise DomainError("pair (u, v) does not come from a word")
            w.append(v[iv])
            iv += 1
    if w[-1] != "U" or iu != len(u) or iv != len(v):
        raise DomainError("pair (u, v) does not come from a word")
    return "".join(w[:-1])


def all_words(n: int):
    for t in product("UD", repeat=n):
        yield "".join(t)


def dyck_prefixes(n: int):
    """All Dyck prefixes of length n, in lexicographic order with U < D."""
    def rec(prefix, h):
        if len(prefix) == n:
            yield prefix
            return
        yield from rec(prefix + "U", h + 1)
        if h > 0:
            yield from rec(prefix + "D", h - 1)

    yield from rec("", 0)


def bilateral_words(n: int):
    return (w for w in all_words(n) if is_bilateral(w))


def primitive_factor_count(w: str) -> int:
    """Number of returns to height 0 of a Dyck word."""
    hs = heights(w)
    return sum(1 for h in hs[1:] if h == 0)
