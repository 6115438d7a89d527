"""Generating trees given by succession systems, and the counting tables
they induce for fixed points, inversions and rises."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from .errors import DomainError

Label = tuple


@dataclass(frozen=True)
class SuccessionSystem:
    """Root label plus a rule producing the ordered children of a label.

    The rule also receives the level of the parent (its size n), since the
    inversion and rise systems add quantities that depend on n.
    """

    name: str
    root: Label
    rule: Callable[[Label, int], list]

    def children(self, label: Label, level: int) -> list:
        return self.rule(label, level)


def level_counts(system: SuccessionSystem, n: int) -> Counter:
    """Multiset of labels at level n (the root is level 0)."""
    if n < 0:
        raise DomainError("level must be nonnegative")
    current = Counter({system.root: 1})
    for level in range(n):
        nxt = Counter()
        for label, count in current.items():
            for child in system.children(label, level):
                nxt[child] += count
        current = nxt
    return current


def _fixed_point_rule(label, level):
    (p,) = label
    return [(p + 1,), (p - 1,)] if p >= 1 else [(1,)]


def _inversion_rule(label, n):
    p, i = label
    out = [(p + 1, i + n - p)]
    if p >= 1:
        out.append((p - 1, i + n - p + 1))
    return out


def _rise_rule(label, level):
    p, r, b = label
    out = [(p + 1, r + b, 1)]
    if p >= 1:
        out.append((p - 1, r + 1 - b, 0))
    return out


FIXED_POINTS = SuccessionSystem("fixed-points", (0,), _fixed_point_rule)
INVERSIONS = SuccessionSystem("inversions", (0, 0), _inversion_rule)
RISES = SuccessionSystem("rises", (0, 0, 0), _rise_rule)


def bounded_system(k: int) -> SuccessionSystem:
    """Fixed-point system with labels capped at k-1 (involutions avoiding
    132 and 12...k)."""
    if k < 2:
        raise DomainError("bounded system needs k >= 2")

    def rule(label, level):
        (p,) = label
        if p == 0:
            return [(1,)] if k >= 2 else []
        if p >= k - 1:
            return [(k - 2,)]
        return [(p + 1,), (p - 1,)]

    return SuccessionSystem(f"bounded-{k}", (0,), rule)


def ballot_count(n: int, p: int) -> int:
    """a_{n,p}: 132-avoiding involutions of length n with p fixed points."""
    if p < 0 or p > n or (n - p) % 2:
        return 0
    h = (n + p) // 2
    return comb(n, h) - comb(n, h + 1)


def dp_inversions(n: int) -> np.ndarray:
    """a[m, p, i] for m <= n: involutions in I_m(132) with p fixed points and
    i inversions, from a(m,p,i) = a(m-1,p-1,i+p-m) + a(m-1,p+1,i+p-m+1)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    imax = n * (n - 1) // 2
    a = np.zeros((n + 1, n + 2, imax + 1), dtype=np.int64)
    a[0, 0, 0] = 1
    for m in range(1, n + 1):
        for p in range(m + 1):
            for i in range(m * (m - 1) // 2 + 1):
                total = 0
                j = i + p - m
                if p >= 1 and 0 <= j <= imax:
                    total += a[m - 1, p - 1, j]
                j += 1
                if p + 1 <= m - 1 and 0 <= j <= imax:
                    total += a[m - 1, p + 1, j]
                a[m, p, i] = total
    return a[:, : n + 1, :]


def dp_rises(n: int) -> np.ndarray:
    """a[m, p, r, b] for m <= n, from
    a(m,p,r,b) = a(m-1,p+1-2b,r,1-b) + a(m-1,p+1-2b,r-1,b)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    a = np.zeros((n + 1, n + 2, n + 1, 2), dtype=np.int64)
    a[0, 0, 0, 0] = 1
    for m in range(1, n + 1):
        for p in range(m + 1):
            for r in range(m):
                for b in (0, 1):
                    q = p + 1 - 2 * b
                    if not 0 <= q <= m - 1:
                        continue
                    total = a[m - 1, q, r, 1 - b]
                    if r >= 1:
                        total += a[m - 1, q, r - 1, b]
                    a[m, p, r, b] = total
    return a[:, : n + 1, :, :]


def table_to_csv(table: np.ndarray, columns: list) -> str:
    """Nonzero entries of a dense table, one row per entry, last column 'count'."""
    if len(columns) != table.ndim:
        raise DomainError("one column name per table axis")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(columns) + ["count"])
    for idx in zip(*np.nonzero(table)):
        writer.writerow([int(v) for v in idx] + [int(table[idx])])
    return buf.getvalue()


# closed formulas -------------------------------------------------------------


def even_count(n: int) -> int:
    """Even involutions in I_n(132)."""
    return comb(n - 1, 2 * ((n + 1) // 4)) if n >= 1 else 1


def odd_count(n: int) -> int:
    return comb(n - 1, 1 + 2 * ((n - 2) // 4)) if n >= 2 else 0


def rises_count(n: int, r: int) -> int:
    """Involutions in I_n(132) with r rises."""
    if n == 0:
        return 1 if r == 0 else 0
    return comb(n // 2, (r + 1) // 2) * comb((n - 1) // 2, r // 2)
