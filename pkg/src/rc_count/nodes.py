"""Intersection numbers on spaces of k-tuples of stable maps sharing a node.

A k-tuple space is integrated as an ordered sum over degree compositions and
constraint distributions, divided by k!.  The shared node is sewn with the
Kunneth decomposition of the small diagonal of (P^n)^k; node classes are
products of complete homogeneous polynomials in the node psi classes, either
the ordinary psi classes or the ones pulled back after forgetting every
constraint point.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from .descendant import descendant_counts
from .exact import (
    ZERO,
    ConstraintTuple,
    Counts,
    MemoTable,
    binomial,
    block_distributions,
    counts_add,
    counts_sub,
    counts_weight,
    positive_compositions,
    sub_multisets,
)
from .primary import nd_plane

MODIFIED_MEMO = MemoTable("modified")


@dataclass(frozen=True)
class NodeClassSpec:
    """``a^l`` times ``prod_i eta_{m_i}`` at the node.

    ``modified`` selects psi classes pulled back from the spaces without
    constraint points; otherwise the ordinary cotangent-line classes are used.
    """

    l: int = 0
    generators: Tuple[int, ...] = ()
    modified: bool = True

    def __post_init__(self):
        if self.l < 0 or any(m < 1 for m in self.generators):
            raise ValueError("node power must be >= 0 and generators positive")
        object.__setattr__(self, "generators", tuple(sorted(self.generators)))

    @property
    def psi_degree(self) -> int:
        return sum(self.generators)

    @property
    def degree(self) -> int:
        return self.l + self.psi_degree


@dataclass(frozen=True)
class MulticomponentSpace:
    """Unordered k-tuples of positive-degree maps with a common node through ``mu``.

    ``merged_m`` constraints are moved onto the node (summed over all choices);
    ``separate`` names two elements of ``mu`` that must lie on different components.
    """

    n: int
    d: int
    k: int
    mu: ConstraintTuple
    merged_m: int = 0
    separate: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.mu.n != self.n:
            raise ValueError("constraint tuple lives in a different P^n")
        if self.separate is not None:
            i, j = self.separate
            if i == j or not (0 <= i < len(self.mu) and 0 <= j < len(self.mu)):
                raise ValueError(f"filter references absent constraints {self.separate}")

    @property
    def dimension(self) -> int:
        n, d, k = self.n, self.d, self.k
        return (n + 1) * d + n - 2 * k + len(self.mu) - self.mu.total_codim - self.merged_m


def diagonal_weights(n: int, k: int, l: int) -> List[Tuple[int, ...]]:
    """Exponent tuples of the Kunneth terms of [small diagonal] * H^l in (P^n)^k."""
    if k < 1 or l < 0:
        raise ValueError("need k >= 1 and l >= 0")
    target = n * (k - 1) + l
    return [w for w in itertools.product(range(n + 1), repeat=k) if sum(w) == target]


def symmetric_expand(spec, k: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Monomial expansion of ``prod_i h_{m_i}(psi_1, ..., psi_k)``.

    ``spec`` is a :class:`NodeClassSpec` or a sequence of generator degrees.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    generators = spec.generators if isinstance(spec, NodeClassSpec) else tuple(spec)
    poly: Dict[Tuple[int, ...], int] = {(0,) * k: 1}
    for m in generators:
        h = [e for e in itertools.product(range(m + 1), repeat=k) if sum(e) == m]
        nxt: Dict[Tuple[int, ...], int] = defaultdict(int)
        for mono, coef in poly.items():
            for e in h:
                nxt[tuple(x + y for x, y in zip(mono, e))] += coef
        poly = dict(nxt)
    return sorted(poly.items())


def modified_descendant(n: int, d: int, j: int, b: int, c: int, mu) -> Fraction:
    """<psi^j psibar^b H^c at the special point; tau_0 per constraint>_d.

    ``psibar`` is psi pulled back along forgetting the constraint points;
    ``mu`` is a :class:`ConstraintTuple` or a sequence of codimensions.
    """
    if d < 1:
        raise ValueError("modified classes need a positive-degree component")
    if j < 0 or b < 0 or not 0 <= c <= n:
        raise ValueError("psi powers must be >= 0 and c in [0, n]")
    codims = mu.codims if isinstance(mu, ConstraintTuple) else tuple(mu)
    counts = [0] * (n + 1)
    for a in codims:
        if not 0 <= a <= n:
            raise ValueError(f"codimension {a} outside [0, {n}]")
        counts[a] += 1
    return modified_counts(n, d, j, b, c, tuple(counts))


def modified_counts(n: int, d: int, j: int, b: int, c: int, counts: Counts) -> Fraction:
    if c > n:
        return ZERO
    m = sum(counts)
    if j + b + c + counts_weight(counts) != (n + 1) * d + n - 2 + m:
        return ZERO
    if b == 0:
        return descendant_counts(n, d, j, c, counts)
    key = (n, d, j, b, c, counts)
    return MODIFIED_MEMO.get_or_compute(key, lambda: _modified_step(n, d, j, b, c, counts))


def _modified_step(n, d, j, b, c, counts) -> Fraction:
    # psibar = psi - sum of divisors where a set S of constraint points bubbles off
    # with the special point; psi^j on the ghost M_{0,|S|+2} forces |S| = j + 1
    value = modified_counts(n, d, j + 1, b - 1, c, counts)
    for sub, mult in sub_multisets(counts, j + 1):
        merged = c + counts_weight(sub)
        if merged > n:
            continue
        value -= mult * modified_counts(n, d, 0, b - 1, merged, counts_sub(counts, sub))
    return value


def _component_value(n, d, b, c, counts, modified) -> Fraction:
    if modified:
        return modified_counts(n, d, 0, b, c, counts)
    return descendant_counts(n, d, b, c, counts)


def vbar_number(space: MulticomponentSpace, spec: NodeClassSpec) -> Fraction:
    """Evaluate ``a^l eta...`` on the k-tuple space (merged/filtered variants included)."""
    n, d, k = space.n, space.d, space.k
    if d < k:
        return ZERO
    if spec.degree != space.dimension:
        return ZERO
    codims = list(space.mu.codims)
    separated: Tuple[int, ...] = ()
    if space.separate is not None:
        separated = tuple(codims[i] for i in space.separate)
        for i in sorted(space.separate, reverse=True):
            del codims[i]
    counts = [0] * (n + 1)
    for a in codims:
        counts[a] += 1
    counts = tuple(counts)
    expansion = symmetric_expand(spec, k)
    total = ZERO
    if space.merged_m == 0:
        subsets = [((0,) * (n + 1), 1)]
    else:
        subsets = list(sub_multisets(counts, space.merged_m))
    for sub, mult in subsets:
        merged = counts_weight(sub)
        if merged > n:
            continue
        total += mult * _ordered_sum(
            n, d, k, counts_sub(counts, sub), spec.l + merged, expansion, spec.modified, separated
        )
    return total / factorial(k)


def _ordered_sum(n, d, k, counts, node_power, expansion, modified, separated) -> Fraction:
    target = n * (k - 1) + node_power
    total = ZERO
    placements = [p for p in itertools.product(range(k), repeat=len(separated)) if len(set(p)) == len(p)]
    for degrees in positive_compositions(d, k):
        for blocks, mult in block_distributions(counts, k):
            for place in placements:
                comp_counts = list(blocks)
                for codim, i in zip(separated, place):
                    comp_counts[i] = counts_add(comp_counts[i], codim)
                sizes = [sum(cc) for cc in comp_counts]
                weights = [counts_weight(cc) for cc in comp_counts]
                for exps, coef in expansion:
                    cs = [
                        (n + 1) * degrees[i] + n - 2 + sizes[i] - exps[i] - weights[i]
                        for i in range(k)
                    ]
                    if sum(cs) != target or any(not 0 <= x <= n for x in cs):
                        continue
                    term = Fraction(coef * mult)
                    for i in range(k):
                        term *= _component_value(n, degrees[i], exps[i], cs[i], comp_counts[i], modified)
                        if term == 0:
                            break
                    total += term
    return total


def vbar_kms_sum(n: int, d: int, k: int, m: int, mu: ConstraintTuple, spec: NodeClassSpec) -> Fraction:
    """Ordinary-class number on the space with m constraints moved onto the node."""
    return vbar_number(MulticomponentSpace(n, d, k, mu, merged_m=m), spec)


def planar_aggregates(d: int) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """(A_d, B_d, C_d, Delta_d) for rational plane curves through 3d-2 points."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    nd = {e: nd_plane(e) for e in range(1, d + 1)}
    split_b = ZERO
    split_delta = ZERO
    for d1 in range(1, d):
        d2 = d - d1
        w = binomial(3 * d - 2, 3 * d1 - 1) * nd[d1] * nd[d2]
        split_b += w * d1**2 * d2**2
        split_delta += w * d1 * d2
    a_d = nd[d]
    b_d = -a_d / d + split_b / (2 * d)
    delta = split_delta / 2
    return a_d, b_d, -delta, delta
