"""Primary genus-0 Gromov-Witten invariants of P^n by the associativity recursion.

Insertions are hyperplane powers ``H^a``; an invariant is addressed by its
degree and the count vector of insertion codimensions.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .exact import (
    ONE,
    ZERO,
    Counts,
    InvariantKey,
    MemoTable,
    counts_add,
    counts_sub,
    sub_multisets,
)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

PRIMARY_MEMO = MemoTable("primary")


def dimension_gate(n: int, d: int, insertions: Iterable[Tuple[int, int]]) -> int:
    """Virtual dimension of M_{0,m}(P^n, d) minus the total degree of ``(psi_power, codim)`` insertions."""
    insertions = list(insertions)
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    for j, a in insertions:
        if j < 0 or not 0 <= a <= n:
            raise ValueError(f"insertion {(j, a)} out of range")
    return d * (n + 1) + n - 3 + len(insertions) - sum(j + a for j, a in insertions)


def to_counts(n: int, codims: Sequence[int]) -> Counts:
    out = [0] * (n + 1)
    for a in codims:
        if not 0 <= a <= n:
            raise ValueError(f"codimension {a} outside [0, {n}]")
        out[a] += 1
    return tuple(out)


def _gate_counts(n: int, d: int, counts: Counts, extra: int = 0) -> bool:
    m = sum(counts)
    weight = sum(a * k for a, k in enumerate(counts))
    return weight + extra == d * (n + 1) + n - 3 + m


def primary_invariant(n: int, d: int, codims: Sequence[int]) -> Fraction:
    """<H^{a_1} ... H^{a_m}>_{0,d} on P^n."""
    if n < 1:
        raise ValueError("ambient dimension must be >= 1")
    if d < 0:
        raise ValueError("degree must be >= 0")
    return primary_counts(n, d, to_counts(n, codims))


def nd_plane(d: int) -> Fraction:
    """Number of rational degree-d plane curves through 3d-1 general points."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return primary_counts(2, d, (0, 0, 3 * d - 1))


def primary_counts(n: int, d: int, counts: Counts) -> Fraction:
    if not _gate_counts(n, d, counts):
        return ZERO
    m = sum(counts)
    if d == 0:
        return ONE if m == 3 else ZERO
    if counts[0]:
        # string equation with no descendants
        return ZERO
    if counts[1]:
        return d * primary_counts(n, d, counts_add(counts, 1, -1))
    key = InvariantKey.from_counts(n, d, None, counts)
    return PRIMARY_MEMO.get_or_compute(key, lambda: _reduce(n, d, counts))


def _reduce(n: int, d: int, counts: Counts) -> Fraction:
    m = sum(counts)
    if m == 0:
        # M_{0,0}(P^1, 1) is a point
        return ONE if (n, d) == (1, 1) else ZERO
    if m == 1:
        return ZERO
    if m == 2:
        # the gate leaves only the line through two points
        return ONE if d == 1 and counts[n] == 2 else ZERO
    a, b, c = default_pivots(counts)
    return wdvv_solve(n, d, counts, a, b, c)


def default_pivots(counts: Counts) -> Tuple[int, int, int]:
    """Split H^a with a minimal; H^c maximal; H^b any other insertion.

    Moving codimension from the smallest to the largest insertion makes the
    same-degree, same-size term strictly more spread, so the walk terminates.
    """
    present = [a for a, k in enumerate(counts) for _ in range(k)]
    a = present[0]
    c = present[-1]
    b = present[1]
    return a, b, c


def wdvv_solve(n: int, d: int, counts: Counts, a: int, b: int, c: int) -> Fraction:
    """Solve the associativity relation on (H^{a-1}, H, H^b, H^c) for <H^a H^b H^c Gamma>_d.

    ``a``, ``b``, ``c`` name three insertion slots of ``counts`` with ``a >= 2``.
    """
    if a < 2:
        raise ValueError("the split insertion needs codimension >= 2")
    rest = counts_sub(counts, _unit(n, a, b, c))
    if min(rest) < 0:
        raise ValueError("pivots are not insertions of the invariant")
    lhs = ZERO
    rhs = ZERO
    subsets = list(sub_multisets(rest))
    for d1 in range(d + 1):
        d2 = d - d1
        for g1, mult in subsets:
            g2 = counts_sub(rest, g1)
            # <H^{a-1} H G1 e>_{d1} <e^ H^b H^c G2>_{d2}
            if not (d1 == 0 and sum(g1) == 0):
                lhs += mult * _split_term(n, d1, d2, g1, g2, (a - 1, 1), (b, c))
            # <H^{a-1} H^b G1 e>_{d1} <e^ H H^c G2>_{d2}
            rhs += mult * _split_term(n, d1, d2, g1, g2, (a - 1, b), (1, c))
    return rhs - lhs


def _unit(n: int, *codims: int) -> Counts:
    out = [0] * (n + 1)
    for x in codims:
        out[x] += 1
    return tuple(out)


def _split_term(n, d1, d2, g1, g2, left, right) -> Fraction:
    first = counts_add(counts_add(g1, left[0]), left[1])
    m1 = sum(first) + 1
    e = d1 * (n + 1) + n - 3 + m1 - sum(x * k for x, k in enumerate(first))
    if not 0 <= e <= n:
        return ZERO
    v1 = primary_counts(n, d1, counts_add(first, e))
    if v1 == 0:
        return ZERO
    second = counts_add(counts_add(counts_add(g2, right[0]), right[1]), n - e)
    return v1 * primary_counts(n, d2, second)
