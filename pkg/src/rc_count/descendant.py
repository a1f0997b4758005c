"""Genus-0 invariants of P^n with a single descendant insertion.

``<tau_j(H^c) prod tau_0(H^{a_i})>_d`` is reduced to primaries with the string,
dilaton and divisor equations and the topological recursion relation.  A
closed-form one-point oracle from the hypergeometric J-function series is
kept alongside as an independent check.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .exact import ONE, ZERO, Counts, InvariantKey, MemoTable, counts_add, counts_sub, sub_multisets
from .primary import _gate_counts, primary_counts, to_counts

DESCENDANT_MEMO = MemoTable("descendant")


def descendant_invariant(n: int, d: int, special: Tuple[int, int], codims: Sequence[int]) -> Fraction:
    """<tau_j(H^c) prod_i tau_0(H^{a_i})>_{0,d} on P^n with ``special = (j, c)``."""
    j, c = special
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if j < 0 or not 0 <= c <= n:
        raise ValueError(f"descendant insertion {special} out of range")
    return descendant_counts(n, d, j, c, to_counts(n, codims))


def descendant_counts(n: int, d: int, j: int, c: int, counts: Counts) -> Fraction:
    if c > n or c < 0:
        return ZERO
    if not _gate_counts(n, d, counts, extra=j + c - 1):
        return ZERO
    if j == 0:
        return primary_counts(n, d, counts_add(counts, c))
    m = sum(counts)
    if d == 0:
        # psi^{m-2} on M_{0,m+1} integrates to 1; the gate fixes the cohomology degree
        return ONE if j == m - 2 else ZERO
    if counts[0]:
        return descendant_counts(n, d, j - 1, c, counts_add(counts, 0, -1))
    if j == 1 and c == 0:
        return (m - 2) * primary_counts(n, d, counts)
    if counts[1]:
        less = counts_add(counts, 1, -1)
        return d * descendant_counts(n, d, j, c, less) + descendant_counts(n, d, j - 1, c + 1, less)
    key = InvariantKey.from_counts(n, d, (j, c), counts)
    return DESCENDANT_MEMO.get_or_compute(key, lambda: _reduce(n, d, j, c, counts))


def _reduce(n: int, d: int, j: int, c: int, counts: Counts) -> Fraction:
    companions = [a for a, k in enumerate(counts) for _ in range(k)]
    if len(companions) >= 2:
        A, B = companions[-1], companions[-2]
        return trr_expand(n, d, j, c, A, B, counts_sub(counts, _pair(n, A, B)))
    # Adjoin divisor insertions until two companions exist, then undo the
    # divisor equation:  <tau_j(H^c) X H> = d <tau_j(H^c) X> + <tau_{j-1}(H^{c+1}) X>
    if len(companions) == 1:
        A = companions[0]
        augmented = trr_expand(n, d, j, c, A, 1, _zero(n))
        return (augmented - descendant_counts(n, d, j - 1, c + 1, counts)) / d
    twice = trr_expand(n, d, j, c, 1, 1, _zero(n))
    once = (twice - descendant_counts(n, d, j - 1, c + 1, _pair(n, 1))) / d
    return (once - descendant_counts(n, d, j - 1, c + 1, counts)) / d


def _zero(n: int) -> Counts:
    return (0,) * (n + 1)


def _pair(n: int, *codims: int) -> Counts:
    out = [0] * (n + 1)
    for a in codims:
        out[a] += 1
    return tuple(out)


def trr_expand(n: int, d: int, j: int, c: int, A: int, B: int, rest: Counts) -> Fraction:
    """Topological recursion for <tau_j(H^c) H^A H^B prod rest>_d with companions A, B.

    Splits psi at the descendant point over boundary divisors separating it from
    the two companions; the left factor keeps the (lowered) descendant, the right
    factor is primary, so no factor ever carries two descendants.
    """
    if j < 1:
        raise ValueError("TRR needs a positive psi power")
    total = ZERO
    subsets = list(sub_multisets(rest))
    for d1 in range(d + 1):
        d2 = d - d1
        for s, mult in subsets:
            size = sum(s)
            if d1 == 0 and size + 2 < 3:
                continue
            weight = sum(a * k for a, k in enumerate(s))
            e = d1 * (n + 1) + n - 3 + size + 2 - (j - 1) - c - weight
            if not 0 <= e <= n:
                continue
            left = descendant_counts(n, d1, j - 1, c, counts_add(s, e))
            if left == 0:
                continue
            right_counts = counts_add(counts_add(counts_add(counts_sub(rest, s), A), B), n - e)
            total += mult * left * primary_counts(n, d2, right_counts)
    return total


def jfunction_onepoint(n: int, d: int, j: int, c: int) -> Fraction:
    """Coefficient of H^{n-c} hbar^{-j-2} in prod_{m=1..d} (H + m hbar)^{-(n+1)} mod H^{n+1}.

    Equals <tau_j(H^c)>_{0,d} whenever j + c = (n+1)d + n - 2; zero otherwise.
    """
    if d < 1:
        raise ValueError("the one-point series starts in degree 1")
    if j < 0 or not 0 <= c <= n:
        return ZERO
    if j + c != (n + 1) * d + n - 2:
        return ZERO
    # with x = H/hbar: prod_m m^{-(n+1)} (1 + x/m)^{-(n+1)}, truncated at x^n
    series = [ONE] + [ZERO] * n
    for m in range(1, d + 1):
        factor = _inverse_power_series(Fraction(1, m), n + 1, n)
        series = _mul_trunc(series, factor, n)
        series = [v / Fraction(m) ** (n + 1) for v in series]
    return series[n - c]


def _inverse_power_series(t: Fraction, power: int, order: int):
    # (1 + t x)^{-power} = sum_k binom(-power, k) t^k x^k
    out = []
    coeff = ONE
    for k in range(order + 1):
        out.append(coeff * t**k)
        coeff = coeff * (-(power + k)) / (k + 1)
    return out


def _mul_trunc(p, q, order):
    out = [ZERO] * (order + 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for k in range(order + 1 - i):
            out[i + k] += x * q[k]
    return out
