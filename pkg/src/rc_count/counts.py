"""Counts of rational curves with a cusp, a triple point or a tacnode.

Every count is assembled from intersection numbers on the k-tuple spaces of
:mod:`rc_count.nodes`.  Class expressions are written as lists of
``(coefficient, a_power, eta_generators)`` terms; ``eta_generators`` follows
:class:`~rc_count.nodes.NodeClassSpec`.

The P^3 level-one functions return the full bracket on the left of each
identity (for instance ``<a, V2^(1,1)>``, not half of it).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Literal, Tuple

from .exact import ZERO, ConstraintTuple, binomial
from .nodes import MulticomponentSpace, NodeClassSpec, planar_aggregates, vbar_number
from .primary import nd_plane

SINGULARITIES = ("cusp", "triple-point", "tacnode", "node-family", "two-component-family")
ROUTE_B_CONVENTIONS = ("derived", "printed")


class BalanceError(ValueError):
    """The constraint tuple does not satisfy the dimension balance of the formula."""


class IntegralityError(ArithmeticError):
    """A normalized count came out negative or fractional."""


@dataclass(frozen=True)
class CountQuery:
    singularity: str
    n: int
    d: int
    mu: ConstraintTuple

    def __post_init__(self):
        if self.singularity not in SINGULARITIES:
            raise ValueError(f"unknown singularity {self.singularity!r}")
        if self.mu.n != self.n:
            raise ValueError("constraint tuple lives in a different P^n")


@dataclass(frozen=True)
class CountResult:
    query: CountQuery
    raw: Fraction
    divisor: int
    count: Fraction

    @classmethod
    def normalize(cls, query: CountQuery, raw: Fraction, divisor: int) -> "CountResult":
        count = Fraction(raw) / divisor
        if count.denominator != 1 or count < 0:
            raise IntegralityError(
                f"{query.singularity} count for n={query.n}, d={query.d}, "
                f"mu={query.mu.codims} is {count}, not a non-negative integer"
            )
        return cls(query, Fraction(raw), divisor, count)


Term = Tuple[int, int, Tuple[int, ...]]


def bracket(terms: Iterable[Term], mu: ConstraintTuple, d: int, k: int, separate=None) -> Fraction:
    """<sum c * a^l * prod eta_m, V_k(mu)> with the modified node classes."""
    space = MulticomponentSpace(mu.n, d, k, mu, separate=separate)
    total = ZERO
    for coef, l, gens in terms:
        if coef:
            total += coef * vbar_number(space, NodeClassSpec(l, tuple(gens), True))
    return total


def count(mu: ConstraintTuple, d: int, k: int) -> Fraction:
    """|V_k(mu)| for a zero-dimensional space."""
    return bracket([(1, 0, ())], mu, d, k)


def eta(m: int) -> Tuple[int, ...]:
    return (m,) if m > 0 else ()


# -- cusps in P^n -------------------------------------------------------------


def check_cusp_balance(n: int, d: int, mu: ConstraintTuple) -> None:
    need = d * (n + 1) - 2 + len(mu)
    if mu.total_codim != need:
        raise BalanceError(
            f"cusp counts need sum of codimensions = d(n+1) - 2 + N = {need}, got {mu.total_codim}"
        )


def cusp_raw_route_a(n: int, d: int, mu: ConstraintTuple) -> Fraction:
    total = ZERO
    for k in range(1, (n + 2) // 2 + 1):
        inner = ZERO
        for l in range(n + 3 - 2 * k):
            inner += binomial(n + 1, l) * vbar_number(
                MulticomponentSpace(n, d, k, mu), NodeClassSpec(l, eta(n + 2 - 2 * k - l), True)
            )
        total += (-1) ** (k - 1) * factorial(k - 1) * inner
    return total


def route_b_coefficient(k: int, m: int, convention: str = "derived") -> int:
    """Weight of the ordinary-class bracket on V_{k,m} in the cusp sum.

    ``derived`` expands the modified classes through the boundary divisors of
    the forgetful map, giving (-1)^(k+m-1) k^m (k-1)!.  ``printed`` uses the
    factor (m-1)! in place of (k-1)! for m >= 1 and (k-1)! at m = 0.
    """
    if convention == "derived":
        tail = factorial(k - 1)
    elif convention == "printed":
        tail = factorial(m - 1) if m >= 1 else factorial(k - 1)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return (-1) ** (k + m - 1) * k**m * tail


def cusp_raw_route_b(n: int, d: int, mu: ConstraintTuple, convention: str = "derived") -> Fraction:
    total = ZERO
    for k in range(1, (n + 2) // 2 + 1):
        for m in range(0, min(n + 2 - 2 * k, len(mu)) + 1):
            top = n + 2 - 2 * k - m
            inner = ZERO
            space = MulticomponentSpace(n, d, k, mu, merged_m=m)
            for l in range(top + 1):
                inner += binomial(n + 1, l) * vbar_number(space, NodeClassSpec(l, eta(top - l), False))
            if inner:
                total += route_b_coefficient(k, m, convention) * inner
    return total


def cusp_count(n: int, d: int, mu: ConstraintTuple, route: Literal["A", "B"] = "A") -> CountResult:
    """Rational cuspidal degree-d curves in P^n through ``mu``."""
    if n < 2 or d < 1:
        raise ValueError("cusp counts need n >= 2 and d >= 1")
    query = CountQuery("cusp", n, d, mu)
    check_cusp_balance(n, d, mu)
    if route == "A":
        raw = cusp_raw_route_a(n, d, mu)
    elif route == "B":
        raw = cusp_raw_route_b(n, d, mu)
    else:
        raise ValueError(f"unknown route {route!r}")
    return CountResult.normalize(query, raw, 1)


# -- P^3 level-one numbers ----------------------------------------------------


def p3_tuple(p: int, q: int) -> ConstraintTuple:
    if p < 0 or q < 0:
        raise ValueError("numbers of points and lines must be >= 0")
    return ConstraintTuple.points_lines(3, p, q)


def _p3_balance(mu: ConstraintTuple, d: int, offset: int, what: str) -> None:
    if mu.n != 3 or any(c not in (2, 3) for c in mu.codims):
        raise ValueError("expected a tuple of points and lines in P^3")
    if d < 1:
        raise ValueError("degree must be >= 1")
    p, q = mu.codims.count(3), mu.codims.count(2)
    if 2 * p + q != 4 * d - offset:
        raise BalanceError(f"{what} needs 2p + q = 4d - {offset} = {4 * d - offset}, got {2 * p + q}")


def level1_V1_family(kind: str, d: int, mu: ConstraintTuple) -> Fraction:
    """Brackets of ``1, a, a^2, a*eta, eta^2`` against the one-node space V1^(1)(mu)."""
    if kind == "count":
        _p3_balance(mu, d, 1, "|V1^(1)|")
        return bracket([(2 * d - 6, 2, ()), (-4, 1, (1,)), (-1, 0, (1, 1))], mu, d, 1) + count(mu, d, 2)
    if kind == "a":
        _p3_balance(mu, d, 2, "<a, V1^(1)>")
        return (
            bracket([(2 * d - 6, 3, ()), (-4, 2, (1,)), (-1, 1, (1, 1))], mu, d, 1)
            + bracket([(1, 2, ())], mu.append(1), d, 1)
            + bracket([(1, 1, ())], mu, d, 2)
        )
    _p3_balance(mu, d, 3, f"<{kind}, V1^(1)>")
    plus0, plus1 = mu.append(0), mu.append(1)
    if kind == "a2":
        return (
            2 * bracket([(1, 3, ())], plus1, d, 1)
            - bracket([(4, 3, (1,)), (1, 2, (1, 1))], mu, d, 1)
            + bracket([(1, 2, ())], mu, d, 2)
        )
    if kind == "a_eta":
        return (
            bracket([(1, 1, (1,))], plus0, d, 1)
            + bracket([(1, 2, (1,))], plus1, d, 1)
            + d * bracket([(1, 3, (1,))], mu, d, 1)
            - bracket([(4, 2, ()), (1, 1, (1,))], mu, d, 2)
        )
    if kind == "eta2":
        return (
            bracket([(1, 0, (1, 1))], plus0, d, 1)
            + bracket([(1, 1, (1, 1))], plus1, d, 1)
            + bracket([(4, 3, (1,)), (d, 2, (1, 1))], mu, d, 1)
            - count(mu, d, 3)
        )
    raise ValueError(f"unknown class {kind!r}; expected count, a, a2, a_eta or eta2")


def level1_V2_1(d: int, mu: ConstraintTuple) -> Fraction:
    """|V2^(1)(mu)|: a nodal component with a second component through its node."""
    _p3_balance(mu, d, 3, "|V2^(1)|")
    return (
        count(mu.append(0), d, 2)
        + bracket([(1, 1, ())], mu.append(1), d, 2)
        + 3 * count(mu, d, 3)
        - bracket([(12 - d, 2, ()), (4, 1, (1,)), (2, 0, (2,)), (-1, 0, (1, 1))], mu, d, 2)
    )


def level1_S2(d: int, mu: ConstraintTuple) -> Fraction:
    """|S2(mu)|: two components tangent at a common point."""
    _p3_balance(mu, d, 3, "|S2|")
    return bracket([(6, 2, ()), (4, 1, (1,)), (1, 0, (2,))], mu, d, 2) - 3 * count(mu, d, 3)


def _with_line_and_plane(mu: ConstraintTuple) -> Tuple[ConstraintTuple, Tuple[int, int]]:
    extended = mu.append(1).append(2)
    # the appended plane is the only codim-1 element; any line can play the appended one
    plane = extended.codims.index(1)
    line = extended.codims.index(2)
    return extended, (line, plane)


def level1_V2_11(kind: str, d: int, mu: ConstraintTuple) -> Fraction:
    """<a, V2^(1,1)> or <eta, V2^(1,1)>: two components meeting twice."""
    _p3_balance(mu, d, 3, f"<{kind}, V2^(1,1)>")
    extended, sep = _with_line_and_plane(mu)
    if kind == "a":
        half = bracket([(1, 1, ())], extended, d, 2, separate=sep) - bracket(
            [(4, 2, ()), (1, 1, (1,))], mu, d, 2
        )
    elif kind == "eta":
        half = (
            bracket([(1, 0, (1,))], extended, d, 2, separate=sep)
            + count(mu.append(0), d, 2)
            + bracket([(1, 1, ())], mu.append(1), d, 2)
            + d * bracket([(1, 2, ())], mu, d, 2)
            - 3 * count(mu, d, 3)
        )
    else:
        raise ValueError(f"unknown class {kind!r}; expected a or eta")
    return 2 * half


def level1_S1_class(kind: str, d: int, mu: ConstraintTuple) -> Fraction:
    """<a, S1> or <eta, S1>: cuspidal curves with the cusp on a hyperplane, or weighted by psi."""
    _p3_balance(mu, d, 3, f"<{kind}, S1>")
    if kind == "a":
        return bracket([(6, 3, (1,)), (4, 2, (1, 1)), (1, 1, (1, 1, 1))], mu, d, 1) - bracket(
            [(4, 2, ()), (1, 1, (1,))], mu, d, 2
        )
    if kind == "eta":
        return bracket(
            [(4, 3, (1,)), (6, 2, (1, 1)), (4, 1, (1, 1, 1)), (1, 0, (1, 1, 1, 1))], mu, d, 1
        ) - count(mu, d, 3)
    raise ValueError(f"unknown class {kind!r}; expected a or eta")


# -- P^3 level-two counts -----------------------------------------------------


def triple_point_count_P3(d: int, p: int, q: int) -> CountResult:
    mu = p3_tuple(p, q)
    _p3_balance(mu, d, 3, "triple-point counts")
    raw = (
        level1_V1_family("count", d, mu.append(0))
        + level1_V1_family("a", d, mu.append(1))
        + 16 * level1_S1_class("a", d, mu)
        + 8 * level1_S1_class("eta", d, mu)
        + 2 * level1_V2_1(d, mu)
        - (12 - d) * level1_V1_family("a2", d, mu)
        - 8 * level1_V1_family("a_eta", d, mu)
        - 2 * level1_V1_family("eta2", d, mu)
        - 2 * level1_S2(d, mu)
    )
    return CountResult.normalize(CountQuery("triple-point", 3, d, mu), raw, 6)


def tacnode_count_P3(d: int, p: int, q: int) -> CountResult:
    mu = p3_tuple(p, q)
    _p3_balance(mu, d, 3, "tacnode counts")
    raw = (
        6 * level1_V1_family("a2", d, mu)
        + level1_V1_family("eta2", d, mu)
        + 4 * level1_V2_11("a", d, mu)
        + Fraction(1, 2) * level1_V2_11("eta", d, mu)
        + 7 * level1_S2(d, mu)
        - 20 * level1_S1_class("a", d, mu)
        - 19 * level1_S1_class("eta", d, mu)
        - 2 * level1_V2_1(d, mu)
    )
    return CountResult.normalize(CountQuery("tacnode", 3, d, mu), raw, 2)


# -- P^2 closed forms ---------------------------------------------------------


def _planar_query(kind: str, d: int) -> CountQuery:
    if d < 1:
        raise ValueError("degree must be >= 1")
    return CountQuery(kind, 2, d, ConstraintTuple.points_lines(2, 3 * d - 2))


def triple_point_count_P2(d: int) -> CountResult:
    query = _planar_query("triple-point", d)
    a, b, c, _ = planar_aggregates(d)
    raw = 3 * (d * d - 6 * d + 10) * a - 3 * (d - 6) * b + 6 * c
    return CountResult.normalize(query, raw, 6)


def tacnode_count_P2(d: int) -> CountResult:
    query = _planar_query("tacnode", d)
    a, b, c, _ = planar_aggregates(d)
    raw = 2 * (3 * d - 11) * a + 2 * (d - 9) * b - 8 * c
    return CountResult.normalize(query, raw, 2)


PLANAR_PARTS = ("nodal", "node-on-line", "node-eta", "cusp", "node-pairs")


def planar_node_lemmas(part: str, d: int) -> Fraction:
    """Closed forms for plane curves through 3d-2 points (3d-1 for ``nodal``).

    ``nodal``        rational curves through 3d-1 points counted with a choice of node
    ``node-on-line`` <a, V1^(1)>
    ``node-eta``     <eta, V1^(1)>
    ``cusp``         |S1|
    ``node-pairs``   |V2^(1,1)|, ordered pairs of distinct nodes
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    a, b, c, delta = planar_aggregates(d)
    if part == "nodal":
        return binomial(d - 1, 2) * nd_plane(d)
    if part == "node-on-line":
        return (2 * d - 3) * a - b
    if part == "node-eta":
        return a + d * b - delta
    if part == "cusp":
        return 3 * a + 3 * b + 2 * c
    if part == "node-pairs":
        return 2 * a + 2 * d * b + 2 * c
    raise ValueError(f"unknown part {part!r}; expected one of {PLANAR_PARTS}")
