"""Explicit bijections on 132-avoiding involutions.

phi / phi_inv pair involutions with Dyck prefixes by following the same path
in two isomorphic generating trees.  psi removes the unique 132 occurrence of
an involution.  stack_sort_word records one-stack sorting as a Dyck word, and
rtl_lemma_map grows the number of right-to-left maxima.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DomainError
from .perm import (
    P132,
    check_perm,
    count_occurrences,
    fixed_points,
    is_involution,
    rtl_maxima_values,
    standardize,
)
from .words import check_word, is_dyck_prefix, matching_down, surplus, unmatched


class GrowthStep(Enum):
    INSERT_FIXED_POINT = "InsertFixedPoint"
    FIXED_POINT_TO_CYCLE = "FixedPointToCycle"


INSERT = GrowthStep.INSERT_FIXED_POINT
CYCLE = GrowthStep.FIXED_POINT_TO_CYCLE


def _check_avoiding_involution(p) -> tuple:
    p = check_perm(p)
    if not is_involution(p):
        raise DomainError(f"not an involution: {p}")
    if count_occurrences(p, P132):
        raise DomainError(f"involution contains 132: {p}")
    return p


def _insert_fixed(p: tuple, pos: int) -> list:
    """Insert a fixed point at (one-indexed) position pos."""
    shifted = [v + 1 if v >= pos else v for v in p]
    return shifted[: pos - 1] + [pos] + shifted[pos - 1 :]


def _remove_fixed(p: Sequence[int], pos: int) -> tuple:
    """Remove the fixed point at position pos (value pos)."""
    rest = list(p[: pos - 1]) + list(p[pos:])
    return tuple(v - 1 if v > pos else v for v in rest)


def _fixed_to_cycle(p: tuple, f: int, q: int) -> tuple:
    """Replace the fixed point f > q - 1 by a 2-cycle with a new element at position q."""
    s = _insert_fixed(p, q)
    f1 = f + 1 if f >= q else f
    s[q - 1], s[f1 - 1] = f1, q
    return tuple(s)


def _cycle_to_fixed(s: Sequence[int], q: int) -> tuple:
    """Inverse of _fixed_to_cycle: the partner of q becomes fixed, q disappears."""
    s = list(s)
    z = s[q - 1]
    s[z - 1] = z
    s[q - 1] = q
    return _remove_fixed(s, q)


def grow_involution(p: Sequence[int], step: GrowthStep) -> tuple:
    p = _check_avoiding_involution(p)
    return _grow_inv(p, step)


def _grow_inv(p: tuple, step: GrowthStep) -> tuple:
    n, q = len(p), fixed_points(p)
    m = (n - q) // 2
    if step is INSERT:
        return tuple(_insert_fixed(p, m + 1))
    if q == 0:
        raise DomainError("FixedPointToCycle needs at least one fixed point")
    first = next(i for i, v in enumerate(p, 1) if i == v)
    return _fixed_to_cycle(p, first, m + 1)


def undo_involution(s: Sequence[int]) -> tuple:
    """Parent and step of a nonempty involution in the generating tree."""
    s = tuple(s)
    if not s:
        raise DomainError("the empty involution is the root")
    n, q = len(s), fixed_points(s)
    m = (n - q) // 2
    if s[m] == m + 1:
        return _remove_fixed(s, m + 1), INSERT
    return _cycle_to_fixed(s, m), CYCLE


def grow_word(w: str, step: GrowthStep) -> str:
    check_word(w)
    if not is_dyck_prefix(w):
        raise DomainError(f"not a Dyck prefix: {w!r}")
    return _grow_word(w, step)


def _grow_word(w: str, step: GrowthStep) -> str:
    if step is INSERT:
        return "U" + w
    _, ups = unmatched(w)
    if not ups:
        raise DomainError("FixedPointToCycle needs a positive surplus of U")
    i = ups[0]
    return "U" + w[:i] + "D" + w[i + 1 :]


def undo_word(w: str) -> tuple:
    if not w:
        raise DomainError("the empty word is the root")
    j = matching_down(w, 0)
    if j < 0:
        return w[1:], INSERT
    return w[1:j] + "U" + w[j + 1 :], CYCLE


def growth_path_of_involution(p) -> list:
    p = _check_avoiding_involution(p)
    steps = []
    while p:
        p, step = undo_involution(p)
        steps.append(step)
    return steps[::-1]


def growth_path_of_word(w: str) -> list:
    check_word(w)
    if not is_dyck_prefix(w):
        raise DomainError(f"not a Dyck prefix: {w!r}")
    steps = []
    while w:
        w, step = undo_word(w)
        steps.append(step)
    return steps[::-1]


def phi(p) -> str:
    """132-avoiding involution -> Dyck prefix of the same length."""
    w = ""
    for step in growth_path_of_involution(p):
        w = _grow_word(w, step)
    return w


def phi_inv(w: str) -> tuple:
    p = ()
    for step in growth_path_of_word(w):
        p = _grow_inv(p, step)
    return p


def psi_locate(p: Sequence[int]) -> tuple:
    """(x, z) with x a fixed point and p(x+1) = z > x+1, or None."""
    for x in range(1, len(p) - 1):
        if p[x - 1] == x and p[x] > x + 1:
            return x, p[x]
    return None


def psi(p) -> tuple:
    """Involution with exactly one 132 and a fixed point -> 132-avoiding
    involution two shorter with the same number of fixed points."""
    p = check_perm(p)
    if not is_involution(p):
        raise DomainError("psi needs an involution")
    if count_occurrences(p, P132) != 1:
        raise DomainError("psi needs exactly one occurrence of 132")
    if fixed_points(p) == 0:
        raise DomainError("psi needs at least one fixed point")
    loc = psi_locate(p)
    if loc is None:
        raise DomainError("no fixed point x followed by a larger partner z")
    x, z = loc
    drop = {x, x + 1, z}
    kept = [v for i, v in enumerate(p, 1) if i not in drop]
    sigma = standardize(kept)
    # p = p' x z p'' y p''' with |p'| = x - 1 and |p''| = z - x - 2
    return tuple(_insert_fixed(sigma, (x - 1) + (z - x - 2) + 1))


def stack_sort_word(p) -> str:
    """Read p right to left; before pushing an entry pop every smaller top.
    U records a push, D a pop."""
    p = check_perm(p)
    stack, out, word = [], [], []
    for e in reversed(p):
        while stack and stack[-1] < e:
            out.append(stack.pop())
            word.append("D")
        stack.append(e)
        word.append("U")
    while stack:
        out.append(stack.pop())
        word.append("D")
    if out != sorted(out):
        raise DomainError("permutation is not sortable by one stack (contains 132)")
    return "".join(word)


LEMMA_EVEN = "even-length"
LEMMA_ODD_ONE = "odd-length-one-fixed-point"
LEMMA_ODD_MANY = "odd-length-several-fixed-points"


@dataclass(frozen=True)
class LemmaImage:
    perm: tuple
    case: str


def _position(p: Sequence[int], value: int) -> int:
    return p.index(value) + 1


def rtl_lemma_map(p, inverse: bool = False) -> LemmaImage:
    """Bijections raising the length by one and the number of right-to-left
    maxima by one or two (inverse=True undoes them).

    Forward, even length with 2l+1 maxima: the fixed point m_{l+1} becomes a
    cycle whose new element sits just after the block between m_{l+2} and the
    penultimate fixed point.  Odd length: the same when there are several
    fixed points; with a single fixed point the new element splits the block
    between m_{l+2} and m_{l+1} in half.
    """
    p = _check_avoiding_involution(p)
    if inverse:
        return _rtl_lemma_inverse(p)
    n = len(p)
    ms = rtl_maxima_values(p)
    s = len(ms)
    if s % 2 == 0:
        raise DomainError("input needs an odd number of right-to-left maxima")
    l = (s - 1) // 2
    centre = ms[l]  # m_{l+1}
    start = _position(p, ms[l + 1]) if l + 1 < s else 0
    fixed = [i for i, v in enumerate(p, 1) if i == v]
    if n % 2 == 0:
        if len(fixed) < 2:
            raise DomainError("even length with odd maxima needs two fixed points")
        case = LEMMA_EVEN
    else:
        case = LEMMA_ODD_ONE if len(fixed) == 1 else LEMMA_ODD_MANY
    if case == LEMMA_ODD_ONE:
        head = (centre - start - 1) // 2
    else:
        head = centre - 1 - fixed[-2]
    q = start + head + 1
    return LemmaImage(_fixed_to_cycle(p, centre, q), case)


def _rtl_lemma_inverse(s_perm: tuple) -> LemmaImage:
    ms = rtl_maxima_values(s_perm)
    s = len(ms)
    n = len(s_perm)
    if n == 0 or s < 2:
        raise DomainError("image has at least two right-to-left maxima")
    if s % 2:
        l = (s - 3) // 2
        q = ms[l]  # position of the partner, by the symmetry p^{-1}(m_i) = m_{s+1-i}
        case = LEMMA_ODD_MANY if n % 2 == 0 else LEMMA_EVEN
    else:
        if n % 2:
            raise DomainError("odd length images have an odd number of maxima")
        l = (s - 2) // 2
        q = ms[l]
        case = LEMMA_ODD_ONE
    return LemmaImage(_cycle_to_fixed(s_perm, q), case)
