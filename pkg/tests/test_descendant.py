import random

import pytest

from rc_count.descendant import descendant_invariant, jfunction_onepoint, trr_expand
from rc_count.exact import counts_sub
from rc_count.primary import primary_invariant, to_counts


@pytest.mark.parametrize(
    "n,d,special,codims,expected",
    [
        (2, 1, (1, 2), [], 1),
        (2, 1, (2, 1), [], -3),
        (2, 1, (3, 0), [], 6),
        (2, 0, (1, 0), [2, 0, 0], 1),
        (2, 1, (0, 2), [2], 1),
        (3, 1, (4, 0), [], 0),
    ],
)
def test_descendant_examples(n, d, special, codims, expected):
    # (3, 1, (4, 0)) has the wrong degree (j + c must be 5), so it is gated to 0
    assert descendant_invariant(n, d, special, codims) == expected


def test_j_function_agreement():
    for n in range(1, 5):
        for d in range(1, 4):
            total = (n + 1) * d + n - 2
            for c in range(0, n + 1):
                j = total - c
                if j < 0:
                    continue
                assert descendant_invariant(n, d, (j, c), []) == jfunction_onepoint(n, d, j, c), (n, d, j, c)


def test_j_function_off_balance_is_zero():
    assert jfunction_onepoint(2, 1, 1, 1) == 0


def _instances(count, seed):
    """Random balanced <tau_j(H^c) prod H^a> with at least two companions of codim >= 2."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 3)
        d = rng.randint(1, 2)
        codims = [rng.randint(2, n) for _ in range(rng.randint(2, 4))] if n >= 2 else [1, 1]
        need = (n + 1) * d + n - 2 + len(codims) - sum(codims)
        c = rng.randint(0, n)
        j = need - c
        if j >= 1:
            out.append((n, d, j, c, codims))
    return out


def test_trr_pivot_independence():
    for n, d, j, c, codims in _instances(60, seed=1):
        counts = to_counts(n, codims)
        value = descendant_invariant(n, d, (j, c), codims)
        for x in range(len(codims)):
            for y in range(x + 1, len(codims)):
                A, B = codims[x], codims[y]
                rest = counts_sub(counts, to_counts(n, [A, B]))
                assert trr_expand(n, d, j, c, A, B, rest) == value


def test_string_identity_by_recursion():
    for n, d, j, c, codims in _instances(40, seed=2):
        # <tau_j(H^c) 1 Gamma> evaluated by TRR with the unit as a companion
        A, rest = codims[0], codims[1:]
        direct = trr_expand(n, d, j, c, 0, A, to_counts(n, rest))
        assert direct == descendant_invariant(n, d, (j - 1, c), codims)


def test_dilaton_identity_by_recursion():
    for n, d, _, _, codims in _instances(40, seed=3):
        m = len(codims)
        if sum(codims) != (n + 1) * d + n - 3 + m:
            continue
        A, B = codims[0], codims[1]
        rest = counts_sub(to_counts(n, codims), to_counts(n, [A, B]))
        assert trr_expand(n, d, 1, 0, A, B, rest) == (m - 2) * primary_invariant(n, d, codims)


def test_divisor_identity_by_recursion():
    for n, d, j, c, codims in _instances(40, seed=4):
        A, rest = codims[0], codims[1:]
        direct = trr_expand(n, d, j, c, 1, A, to_counts(n, rest))
        expected = d * descendant_invariant(n, d, (j, c), codims)
        if c + 1 <= n:
            expected += descendant_invariant(n, d, (j - 1, c + 1), codims)
        assert direct == expected


def test_dimension_gate_zeroes():
    assert descendant_invariant(2, 1, (1, 1), []) == 0
    with pytest.raises(ValueError):
        descendant_invariant(2, 1, (1, 3), [])
