"""Permutations in one-line notation, their statistics, and pattern occurrences.

Permutations are plain tuples of the integers 1..n.  Positions and values are
one-indexed in every public function, as in the usual combinatorial notation;
``p[i - 1]`` is the value at position ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError

Permutation = tuple


def check_perm(p: Sequence[int]) -> tuple:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise DomainError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> tuple:
    """Parse ``"4 3 5 1 2"`` (or ``"43512"`` when every value is a digit)."""
    text = text.strip()
    if text in ("", "ε", "e"):
        return ()
    if " " in text or "," in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        return check_perm(int(v) for v in parts)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"cannot parse permutation {text!r}") from exc


def format_perm(p: Sequence[int]) -> str:
    return " ".join(map(str, p)) if p else "ε"


def identity(n: int) -> tuple:
    return tuple(range(1, n + 1))


def inverse(p: Sequence[int]) -> tuple:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


def is_involution(p: Sequence[int]) -> bool:
    return all(p[v - 1] == i for i, v in enumerate(p, 1))


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def parity(p: Sequence[int]) -> str:
    return "odd" if inversions(p) % 2 else "even"


def fixed_points(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, 1) if i == v)


def rtl_maxima_values(p: Sequence[int]) -> list:
    """Right-to-left maxima, listed by increasing value (the order m_1 < m_2 < ...)."""
    out, best = [], 0
    for v in reversed(p):
        if v > best:
            out.append(v)
            best = v
    return out


def ltr_minima_values(p: Sequence[int]) -> list:
    out, best = [], len(p) + 1
    for v in p:
        if v < best:
            out.append(v)
            best = v
    return out


@dataclass(frozen=True)
class Statistics:
    rises: int
    descents: int
    fixed_points: int
    rtl_maxima: int
    ltr_minima: int


def statistics(p: Sequence[int]) -> Statistics:
    rises = sum(1 for a, b in zip(p, p[1:]) if a < b)
    return Statistics(
        rises=rises,
        descents=max(len(p) - 1, 0) - rises,
        fixed_points=fixed_points(p),
        rtl_maxima=len(rtl_maxima_values(p)),
        ltr_minima=len(ltr_minima_values(p)),
    )


@dataclass(frozen=True)
class PatternSpec:
    """A classical or dashed pattern.

    ``adjacency[m]`` is True when pattern letters m and m+1 must sit in
    adjacent positions of the host permutation (no dash between them).
    """

    letters: tuple
    adjacency: tuple

    def __post_init__(self):
        k = len(self.letters)
        if k < 1 or sorted(self.letters) != list(range(1, k + 1)):
            raise DomainError(f"pattern letters must permute 1..k: {self.letters}")
        if len(self.adjacency) != k - 1:
            raise DomainError("adjacency must have one entry per consecutive letter pair")

    @classmethod
    def parse(cls, text: str) -> "PatternSpec":
        """``"1-3-2"`` is classical 132, ``"12-43"`` needs 1,2 and 4,3 adjacent."""
        text = text.strip()
        if not text or text[0] == "-" or text[-1] == "-" or "--" in text:
            raise DomainError(f"malformed pattern {text!r}")
        letters, adjacency = [], []
        prev_dash = None
        for ch in text:
            if ch == "-":
                prev_dash = True
                continue
            if not ch.isdigit():
                raise DomainError(f"malformed pattern {text!r}")
            if letters:
                adjacency.append(not prev_dash)
            letters.append(int(ch))
            prev_dash = False
        return cls(tuple(letters), tuple(adjacency))

    @classmethod
    def classical(cls, letters: Iterable[int]) -> "PatternSpec":
        letters = tuple(letters)
        return cls(letters, (False,) * (len(letters) - 1))

    @property
    def k(self) -> int:
        return len(self.letters)

    def __str__(self):
        out = str(self.letters[0])
        for adj, letter in zip(self.adjacency, self.letters[1:]):
            out += ("" if adj else "-") + str(letter)
        return out


def increasing(k: int) -> PatternSpec:
    """12...k"""
    return PatternSpec.classical(range(1, k + 1))


def pattern_2134(k: int) -> PatternSpec:
    """2134...k, for k >= 2."""
    if k < 2:
        raise DomainError("2134...k needs k >= 2")
    return PatternSpec.classical((2, 1) + tuple(range(3, k + 1)))


def pattern_23k1(k: int) -> PatternSpec:
    """23...k1, for k >= 2."""
    if k < 2:
        raise DomainError("23...k1 needs k >= 2")
    return PatternSpec.classical(tuple(range(2, k + 1)) + (1,))


def pattern_rot(k: int, d: int) -> PatternSpec:
    """(d+1, d+2, ..., k, 1, 2, ..., d)"""
    if not 1 <= d < k:
        raise DomainError("rotation pattern needs 1 <= d < k")
    return PatternSpec.classical(tuple(range(d + 1, k + 1)) + tuple(range(1, d + 1)))


P132 = PatternSpec.classical((1, 3, 2))


def _count(p, t: PatternSpec, last: int | None) -> int:
    # DFS over index subsequences; ``chosen`` holds 0-based host indices.
    # With ``last`` given, the final pattern letter is pinned to that index and
    # earlier letters may only use indices compatible with it.
    letters, adjacency, k, n = t.letters, t.adjacency, t.k, len(p)
    if last is not None:
        top = p[last]
        allowed = [
            [idx < last and (p[idx] < top) == (letters[m] < letters[-1]) for idx in range(n)]
            for m in range(k - 1)
        ]
    chosen = []

    def consistent(idx: int) -> bool:
        m = len(chosen)
        v = p[idx]
        for j, prev in enumerate(chosen):
            if (p[prev] < v) != (letters[j] < letters[m]):
                return False
        return True

    def rec(start: int) -> int:
        m = len(chosen)
        if m == k:
            return 1
        if last is not None and m == k - 1:
            if chosen and adjacency[m - 1] and chosen[-1] + 1 != last:
                return 0
            if chosen and chosen[-1] >= last:
                return 0
            candidates = (last,)
        elif m and adjacency[m - 1]:
            candidates = (chosen[-1] + 1,) if chosen[-1] + 1 < n else ()
        else:
            candidates = range(start, n - (k - m) + 1)
        total = 0
        for idx in candidates:
            if last is not None and m < k - 1 and not allowed[m][idx]:
                continue
            if consistent(idx):
                chosen.append(idx)
                total += rec(idx + 1)
                chosen.pop()
        return total

    return rec(0)


def count_occurrences(p: Sequence[int], t: PatternSpec) -> int:
    """Number of index subsequences of ``p`` matching ``t`` (order and adjacency)."""
    return _count(tuple(p), t, None)


def occurrences_ending_at(p: Sequence[int], t: PatternSpec, position: int) -> int:
    """Occurrences whose last letter sits at the (one-indexed) ``position``."""
    if not 1 <= position <= len(p):
        return 0
    return _count(tuple(p), t, position - 1)


def avoids(p: Sequence[int], patterns: Iterable[PatternSpec]) -> bool:
    return all(count_occurrences(p, t) == 0 for t in patterns)


def standardize(values: Sequence[int]) -> tuple:
    """Order-isomorphic permutation of 1..len(values)."""
    rank = {v: i for i, v in enumerate(sorted(values), 1)}
    return tuple(rank[v] for v in values)


@dataclass(frozen=True)
class BlockDecomposition:
    """Largest-letter decomposition of a 132-restricted involution.

    kind is ``"last_is_max"`` (p ends with n; ``inner`` is p without it),
    ``"cycle"`` (p = beta, n, gamma, delta, j with j the position of n), or
    ``"middle"`` (only in once mode: p = beta, m, 2m+1, gamma, m+1).
    Blocks keep their original values.
    """

    kind: str
    n: int
    j: int = 0
    beta: tuple = ()
    gamma: tuple = ()
    delta: tuple = ()
    inner: tuple = ()

    def reassemble(self) -> tuple:
        if self.kind == "last_is_max":
            return self.inner + (self.n,)
        if self.kind == "cycle":
            return self.beta + (self.n,) + self.gamma + self.delta + (self.j,)
        m = (self.n - 1) // 2
        return self.beta + (m, self.n) + self.gamma + (m + 1,)


def block_decompose(p: Sequence[int], mode: str = "avoid") -> BlockDecomposition:
    """Decompose around the largest letter.

    mode ``"avoid"``: p must be a 132-avoiding involution.
    mode ``"once"``: p must be an involution containing 132 exactly once.
    """
    p = check_perm(p)
    if not is_involution(p):
        raise DomainError("block decomposition needs an involution")
    c = count_occurrences(p, P132)
    if mode == "avoid":
        if c:
            raise DomainError("mode 'avoid' needs a 132-avoiding involution")
    elif mode == "once":
        if c != 1:
            raise DomainError("mode 'once' needs exactly one occurrence of 132")
    else:
        raise DomainError(f"unknown mode {mode!r}")
    n = len(p)
    if n == 0:
        raise DomainError("the empty permutation has no largest letter")
    if p[-1] == n:
        return BlockDecomposition("last_is_max", n, inner=p[:-1])
    j = p.index(n) + 1
    if j <= n // 2:
        beta, gamma, delta = p[: j - 1], p[j : n - j], p[n - j : n - 1]
        if standardize(delta) != inverse(standardize(beta)):
            raise DomainError("delta is not the inverse of beta")
        return BlockDecomposition("cycle", n, j=j, beta=beta, gamma=gamma, delta=delta)
    m = (n - 1) // 2
    if mode == "once" and n % 2 == 1 and j == m + 1 and p[m - 1] == m and p[-1] == m + 1:
        beta, gamma = p[: m - 1], p[m + 1 : n - 1]
        if standardize(gamma) != inverse(standardize(beta)):
            raise DomainError("gamma is not the inverse of beta")
        return BlockDecomposition("middle", n, j=j, beta=beta, gamma=gamma)
    raise DomainError("permutation fits none of the decomposition cases")
