"""Exact scalars, combinatorial enumerators and canonical memo keys.

Everything in the engine is an exact rational; ``Fraction`` keeps values in
lowest terms with a positive denominator after every operation.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Callable, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

ExactScalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

Counts = Tuple[int, ...]


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient; 0 outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    return Fraction(comb(n, k))


def positive_compositions(d: int, k: int) -> List[Tuple[int, ...]]:
    """Ordered k-tuples of positive integers summing to d."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if d < k:
        return []
    out = []
    # stars and bars over the d-1 gaps
    for cuts in itertools.combinations(range(1, d), k - 1):
        edges = (0,) + cuts + (d,)
        out.append(tuple(edges[i + 1] - edges[i] for i in range(k)))
    return out


@dataclass(frozen=True)
class ConstraintTuple:
    """Multiset of codimensions of general-position linear subspaces of P^n.

    Only codimensions matter; the element order is canonical (sorted), and the
    position of an element in ``codims`` is its label for distribution filters.
    """

    n: int
    codims: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be >= 1")
        for c in self.codims:
            if not 1 <= c <= self.n:
                raise ValueError(f"codimension {c} outside [1, {self.n}]")
        object.__setattr__(self, "codims", tuple(sorted(self.codims)))

    @classmethod
    def from_counts(cls, n: int, counts: Sequence[int]) -> "ConstraintTuple":
        codims = []
        for c, k in enumerate(counts):
            codims.extend([c] * k)
        return cls(n, tuple(codims))

    @classmethod
    def points_lines(cls, n: int, *numbers: int) -> "ConstraintTuple":
        """``numbers`` are counts of codim n, n-1, n-2, ... subspaces."""
        codims = []
        for i, k in enumerate(numbers):
            codims.extend([n - i] * k)
        return cls(n, tuple(codims))

    def __len__(self):
        return len(self.codims)

    @property
    def total_codim(self) -> int:
        return sum(self.codims)

    def counts(self) -> Counts:
        out = [0] * (self.n + 1)
        for c in self.codims:
            out[c] += 1
        return tuple(out)

    def append(self, r: int) -> "ConstraintTuple":
        """Adjoin a generic r-dimensional linear subspace (codimension n - r)."""
        if not 0 <= r < self.n:
            raise ValueError(f"subspace dimension {r} outside [0, {self.n - 1}]")
        return ConstraintTuple(self.n, self.codims + (self.n - r,))

    def merge(self, subset: Sequence[int]) -> int:
        """Codimension of the generic intersection of the indexed elements.

        A value above n means the intersection is empty.
        """
        return sum(self.codims[i] for i in subset)


def constraint_distributions(
    mu: ConstraintTuple,
    k: int,
    separate: Optional[Tuple[int, int]] = None,
) -> List[Tuple[int, ...]]:
    """All assignments element -> block in ``range(k)``; blocks may be empty.

    ``separate`` names two element indices that must land in different blocks.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if separate is not None:
        for i in separate:
            if not 0 <= i < len(mu):
                raise ValueError(f"filter names element {i} absent from the tuple")
    out = []
    for assignment in itertools.product(range(k), repeat=len(mu)):
        if separate is not None and assignment[separate[0]] == assignment[separate[1]]:
            continue
        out.append(assignment)
    return out


# -- multiset helpers (count vectors indexed by codimension) ---------------


def counts_add(counts: Counts, codim: int, times: int = 1) -> Counts:
    lst = list(counts)
    lst[codim] += times
    return tuple(lst)


def counts_sub(a: Counts, b: Counts) -> Counts:
    return tuple(x - y for x, y in zip(a, b))


def counts_weight(counts: Counts) -> int:
    return sum(c * k for c, k in enumerate(counts))


def sub_multisets(counts: Counts, size: Optional[int] = None) -> Iterator[Tuple[Counts, int]]:
    """Sub-multisets of a labeled multiset, grouped by shape.

    Yields ``(sub_counts, multiplicity)`` where the multiplicity is the number of
    labeled subsets with that shape.
    """
    ranges = [range(c + 1) for c in counts]
    for sub in itertools.product(*ranges):
        if size is not None and sum(sub) != size:
            continue
        yield sub, prod(comb(c, s) for c, s in zip(counts, sub))


def block_distributions(counts: Counts, k: int) -> Iterator[Tuple[Tuple[Counts, ...], int]]:
    """Distributions of a labeled multiset into k ordered blocks, grouped by shape.

    The multiplicities sum to ``k ** len(multiset)``.
    """
    per_codim = []
    for c in counts:
        options = []
        for parts in _weak_compositions(c, k):
            mult = 1
            rest = c
            for p in parts:
                mult *= comb(rest, p)
                rest -= p
            options.append((parts, mult))
        per_codim.append(options)
    for choice in itertools.product(*per_codim):
        blocks = tuple(tuple(opt[0][i] for opt in choice) for i in range(k))
        yield blocks, prod(opt[1] for opt in choice)


def _weak_compositions(total: int, k: int) -> Iterator[Tuple[int, ...]]:
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, k - 1):
            yield (first,) + rest


# -- canonical keys and the shared memo table -------------------------------


@dataclass(frozen=True)
class InvariantKey:
    """Identity of a one-component genus-0 invariant of P^n.

    ``descendant`` is ``(psi_power, hyperplane_power)`` or ``None``; primaries are
    stored sorted so that any permutation of insertions yields the same key.
    """

    n: int
    d: int
    descendant: Optional[Tuple[int, int]]
    primaries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "primaries", tuple(sorted(self.primaries)))

    @classmethod
    def from_counts(cls, n: int, d: int, descendant, counts: Counts) -> "InvariantKey":
        prim = []
        for c, k in enumerate(counts):
            prim.extend([c] * k)
        return cls(n, d, descendant, tuple(prim))

    def __str__(self):
        desc = "-" if self.descendant is None else f"{self.descendant[0]}.{self.descendant[1]}"
        prim = ",".join(map(str, self.primaries))
        return f"n{self.n}:d{self.d}:t{desc}:[{prim}]"

    @classmethod
    def parse(cls, text: str) -> "InvariantKey":
        n_part, d_part, t_part, p_part = text.split(":")
        if not (n_part[0] == "n" and d_part[0] == "d" and t_part[0] == "t"):
            raise ValueError(f"malformed key {text!r}")
        if not (p_part.startswith("[") and p_part.endswith("]")):
            raise ValueError(f"malformed key {text!r}")
        desc = None
        if t_part[1:] != "-":
            j, c = t_part[1:].split(".")
            desc = (int(j), int(c))
        body = p_part[1:-1]
        prim = tuple(int(x) for x in body.split(",")) if body else ()
        return cls(int(n_part[1:]), int(d_part[1:]), desc, prim)


@dataclass
class MemoTable:
    """Thread-safe get-or-compute table; a racing duplicate computation is benign."""

    name: str
    _data: Dict[Hashable, Fraction] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)
    hits: int = 0
    misses: int = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], Fraction]) -> Fraction:
        with self._lock:
            if key in self._data:
                self.hits += 1
                return self._data[key]
        value = compute()
        with self._lock:
            self.misses += 1
            return self._data.setdefault(key, value)

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def items(self):
        with self._lock:
            return list(self._data.items())

    def update(self, entries: Dict[Hashable, Fraction]) -> None:
        with self._lock:
            self._data.update(entries)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0
