"""Brute-force enumeration: the ground truth for every formula in the package.

Objects are generated position by position.  Because the number of
occurrences of a pattern inside a prefix can only grow as the prefix grows,
a prefix is abandoned as soon as an avoided pattern appears or a pattern
exceeds its allowed count.  The counting itself is the plain subsequence
search from ``perm``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, LimitExceeded, UnknownName
from .perm import (
    PatternSpec,
    count_occurrences,
    fixed_points,
    inversions,
    occurrences_ending_at,
    statistics,
)

INVOLUTIONS = "involutions"
PERMUTATIONS = "permutations"

DEFAULT_LIMITS = {INVOLUTIONS: 12, PERMUTATIONS: 9}

STATISTICS = ("fixed_points", "inversions", "parity", "rises", "descents", "rtl_maxima", "ltr_minima")


def _as_pattern(t) -> PatternSpec:
    return t if isinstance(t, PatternSpec) else PatternSpec.parse(t)


@dataclass(frozen=True)
class CountQuery:
    """Objects of one class and length, filtered by avoided patterns and by
    exact occurrence counts, with a list of statistics to tally.

    A statistic is one of STATISTICS or ``"occ:<pattern>"``.
    """

    kind: str
    n: int
    avoid: tuple = ()
    contain: tuple = ()
    stats: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in DEFAULT_LIMITS:
            raise UnknownName(f"unknown object class {self.kind!r}")
        if self.n < 0:
            raise DomainError("length must be nonnegative")
        object.__setattr__(self, "avoid", tuple(_as_pattern(t) for t in self.avoid))
        object.__setattr__(
            self, "contain", tuple((_as_pattern(t), int(c)) for t, c in self.contain)
        )
        stats = tuple(self.stats)
        for s in stats:
            if s not in STATISTICS and not s.startswith("occ:"):
                raise UnknownName(f"unknown statistic {s!r}")
            if s.startswith("occ:"):
                _as_pattern(s[4:])
        object.__setattr__(self, "stats", stats)
        for _, c in self.contain:
            if c < 0:
                raise DomainError("occurrence counts must be nonnegative")


def _check_limit(q: CountQuery, limit) -> None:
    bound = DEFAULT_LIMITS[q.kind] if limit is None else limit
    if q.n > bound:
        raise LimitExceeded(f"n={q.n} exceeds the {q.kind} limit {bound}")


def _constraints(q: CountQuery) -> list:
    out = [(t, 0) for t in q.avoid]
    out += list(q.contain)
    return out


def _search(q: CountQuery) -> Iterator[tuple]:
    n = q.n
    cons = _constraints(q)
    invol = q.kind == INVOLUTIONS
    values = [0] * n
    used = [False] * (n + 2)
    counts = [0] * len(cons)

    def admit(i: int) -> list | None:
        # i is a 0-based position whose value was just placed
        prefix = values[: i + 1]
        added = []
        for ci, (t, cap) in enumerate(cons):
            a = occurrences_ending_at(prefix, t, i + 1) if t.k <= i + 1 else 0
            if counts[ci] + a > cap:
                return None
            added.append(a)
        return added

    def place(i: int):
        if i == n:
            if all(c == cap for c, (_, cap) in zip(counts, cons)):
                yield tuple(values)
            return
        if invol and values[i]:
            yield from step(i)
            return
        candidates = range(1, n + 1)
        for v in candidates:
            if used[v]:
                continue
            if invol and v < i + 1:
                continue  # smaller partners were placed earlier
            values[i] = v
            used[v] = True
            if invol and v != i + 1:
                values[v - 1] = i + 1
                used[i + 1] = True
            yield from step(i)
            if invol and v != i + 1:
                values[v - 1] = 0
                used[i + 1] = False
            used[v] = False
            values[i] = 0

    def step(i: int):
        added = admit(i)
        if added is None:
            return
        for ci, a in enumerate(added):
            counts[ci] += a
        yield from place(i + 1)
        for ci, a in enumerate(added):
            counts[ci] -= a

    yield from place(0)


def enumerate_objects(q: CountQuery, limit: int | None = None) -> list:
    """Every qualifying object exactly once, in lexicographic order."""
    _check_limit(q, limit)
    return list(_cached_objects(CountQuery(q.kind, q.n, q.avoid, q.contain)))


@lru_cache(maxsize=4096)
def _cached_objects(q: CountQuery) -> tuple:
    return tuple(_search(q))


def stat_value(p: tuple, name: str):
    if name.startswith("occ:"):
        return count_occurrences(p, _as_pattern(name[4:]))
    if name == "inversions":
        return inversions(p)
    if name == "parity":
        return "odd" if inversions(p) % 2 else "even"
    if name == "fixed_points":
        return fixed_points(p)
    return getattr(statistics(p), name)


def distribution(q: CountQuery, limit: int | None = None) -> Counter:
    """Joint tally {tuple of statistic values: count}."""
    _check_limit(q, limit)
    return Counter(dict(_cached_distribution(q)))


@lru_cache(maxsize=4096)
def _cached_distribution(q: CountQuery) -> tuple:
    tally = Counter()
    for p in _cached_objects(CountQuery(q.kind, q.n, q.avoid, q.contain)):
        tally[tuple(stat_value(p, s) for s in q.stats)] += 1
    return tuple(sorted(tally.items(), key=lambda kv: repr(kv[0])))


def count(q: CountQuery, limit: int | None = None) -> int:
    _check_limit(q, limit)
    return len(_cached_objects(CountQuery(q.kind, q.n, q.avoid, q.contain)))


def parity_split(q: CountQuery, limit: int | None = None) -> tuple:
    """(even, odd) counts."""
    d = distribution(CountQuery(q.kind, q.n, q.avoid, q.contain, ("parity",)), limit)
    return d.get(("even",), 0), d.get(("odd",), 0)


def telephone(n: int) -> int:
    """Number of involutions of length n: T(n) = T(n-1) + (n-1) T(n-2)."""
    a, b = 1, 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b if n >= 1 else 1


def motzkin(n: int) -> int:
    m = [1, 1]
    for k in range(2, n + 1):
        m.append(((2 * k + 1) * m[k - 1] + (3 * k - 3) * m[k - 2]) // (k + 2))
    return m[n]
