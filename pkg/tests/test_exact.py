import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rc_count.exact import (
    ConstraintTuple,
    InvariantKey,
    MemoTable,
    binomial,
    block_distributions,
    constraint_distributions,
    positive_compositions,
    sub_multisets,
)


@pytest.mark.parametrize("n,k,expected", [(3, 1, 3), (10, 5, 252), (4, 7, 0), (4, -1, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative_top():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_positive_compositions_examples():
    assert positive_compositions(3, 2) == [(1, 2), (2, 1)]
    assert positive_compositions(2, 3) == []
    assert len(positive_compositions(4, 2)) == 3


def test_positive_compositions_count():
    for d in range(1, 13):
        for k in range(1, d + 1):
            comps = positive_compositions(d, k)
            assert len(comps) == binomial(d - 1, k - 1)
            assert len(set(comps)) == len(comps)
            assert all(sum(c) == d and min(c) >= 1 for c in comps)


def test_constraint_distributions():
    two = ConstraintTuple(3, (3, 2))
    assert len(constraint_distributions(two, 2)) == 4
    assert len(constraint_distributions(two, 2, separate=(0, 1))) == 2
    assert len(constraint_distributions(ConstraintTuple(3, (3, 3, 2)), 2)) == 8
    with pytest.raises(ValueError):
        constraint_distributions(two, 2, separate=(0, 5))


def test_constraint_tuple_is_a_multiset():
    a = ConstraintTuple(3, (2, 3, 2))
    b = ConstraintTuple(3, (3, 2, 2))
    assert a == b and hash(a) == hash(b)
    assert a.append(0).codims == (2, 2, 3, 3)
    assert a.append(1).codims == (2, 2, 2, 3)
    assert a.merge([0, 2]) == 5  # empty in P^3
    with pytest.raises(ValueError):
        ConstraintTuple(3, (4,))


def _brute_blocks(counts, k):
    labels = [c for c, m in enumerate(counts) for _ in range(m)]
    tally = {}
    for assignment in itertools.product(range(k), repeat=len(labels)):
        blocks = [[0] * len(counts) for _ in range(k)]
        for codim, block in zip(labels, assignment):
            blocks[block][codim] += 1
        key = tuple(tuple(b) for b in blocks)
        tally[key] = tally.get(key, 0) + 1
    return tally


@pytest.mark.parametrize("counts,k", [((0, 0, 2, 3), 2), ((0, 1, 1, 2), 3), ((0, 0, 4), 2), ((0, 2, 0, 1, 1), 3)])
def test_block_distributions_match_brute_force(counts, k):
    grouped = dict(block_distributions(counts, k))
    assert grouped == _brute_blocks(counts, k)
    assert sum(grouped.values()) == k ** sum(counts)


def test_sub_multisets_count_all_subsets():
    counts = (0, 2, 1, 3)
    assert sum(m for _, m in sub_multisets(counts)) == 2 ** 6
    assert sum(m for _, m in sub_multisets(counts, 2)) == 15


def test_invariant_key_canonical_under_shuffles():
    rng = random.Random(7)
    base = [3, 2, 2, 3, 1, 0, 2]
    keys = set()
    for _ in range(100):
        rng.shuffle(base)
        keys.add(InvariantKey(3, 2, (1, 2), tuple(base)))
    assert len(keys) == 1
    key = keys.pop()
    assert InvariantKey.parse(str(key)) == key
    assert str(InvariantKey(2, 1, None, ())) == "n2:d1:t-:[]"


fractions = st.fractions(max_denominator=10**6).filter(lambda f: abs(f.numerator) < 10**12)


@given(fractions, fractions, fractions)
def test_exact_arithmetic_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    s = a * b + c
    assert s.denominator > 0 and Fraction(s.numerator, s.denominator) == s


def test_memo_table_get_or_compute():
    table = MemoTable("t")
    calls = []
    assert table.get_or_compute("k", lambda: calls.append(1) or Fraction(5)) == 5
    assert table.get_or_compute("k", lambda: calls.append(1) or Fraction(6)) == 5
    assert calls == [1] and table.hits == 1 and table.misses == 1
