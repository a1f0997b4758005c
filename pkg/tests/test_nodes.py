from fractions import Fraction
from math import factorial

import pytest

from rc_count.descendant import descendant_invariant
from rc_count.exact import ConstraintTuple, constraint_distributions, positive_compositions
from rc_count.nodes import (
    MulticomponentSpace,
    NodeClassSpec,
    diagonal_weights,
    modified_descendant,
    planar_aggregates,
    symmetric_expand,
    vbar_number,
)


def points(n, k):
    return ConstraintTuple.points_lines(n, k)


def test_diagonal_weights():
    assert sorted(diagonal_weights(2, 2, 0)) == [(0, 2), (1, 1), (2, 0)]
    assert sorted(diagonal_weights(2, 2, 1)) == [(1, 2), (2, 1)]
    assert diagonal_weights(2, 1, 2) == [(2,)]
    assert diagonal_weights(2, 2, 3) == []


def test_symmetric_expand():
    assert symmetric_expand(NodeClassSpec(0, (2,)), 2) == [((0, 2), 1), ((1, 1), 1), ((2, 0), 1)]
    assert symmetric_expand(NodeClassSpec(0, (1, 1)), 2) == [((0, 2), 1), ((1, 1), 2), ((2, 0), 1)]
    assert symmetric_expand(NodeClassSpec(0, (2,)), 1) == [((2,), 1)]
    assert symmetric_expand((), 3) == [((0, 0, 0), 1)]


def test_modified_micro_oracles():
    assert modified_descendant(2, 1, 0, 1, 0, [2, 2]) == -2
    assert modified_descendant(2, 1, 0, 2, 0, [2]) == 0


def test_modified_without_psibar_is_descendant():
    assert modified_descendant(2, 2, 1, 0, 2, [2, 2, 2, 2]) == descendant_invariant(2, 2, (1, 2), [2, 2, 2, 2])


def test_vbar_examples():
    # balanced versions of the plain count and of pairs of lines (see the notes)
    assert vbar_number(MulticomponentSpace(2, 3, 1, points(2, 7)), NodeClassSpec(2)) == 12
    assert vbar_number(MulticomponentSpace(2, 2, 2, points(2, 4)), NodeClassSpec()) == 3
    assert vbar_number(MulticomponentSpace(2, 3, 1, points(2, 7)), NodeClassSpec(1, (1,))) == 24


def test_vbar_off_balance_is_zero():
    assert vbar_number(MulticomponentSpace(2, 3, 1, points(2, 8)), NodeClassSpec(2)) == 0
    assert vbar_number(MulticomponentSpace(2, 2, 2, points(2, 5)), NodeClassSpec()) == 0
    assert vbar_number(MulticomponentSpace(2, 1, 2, points(2, 1)), NodeClassSpec()) == 0


def test_filter_rejects_absent_elements():
    with pytest.raises(ValueError):
        MulticomponentSpace(3, 2, 2, ConstraintTuple(3, (3, 2)), separate=(0, 4))


def test_planar_aggregates_examples():
    assert planar_aggregates(1) == (1, -1, 0, 0)
    assert planar_aggregates(3) == (12, 24, -42, 42)
    assert planar_aggregates(4) == (620, 1564, -2124, 2124)


def test_aggregate_bridge():
    for d in range(1, 7):
        mu = points(2, 3 * d - 2)
        a, b, c, delta = planar_aggregates(d)
        one = MulticomponentSpace(2, d, 1, mu)
        assert vbar_number(one, NodeClassSpec(2)) == a
        assert vbar_number(one, NodeClassSpec(1, (1,))) == b
        assert vbar_number(one, NodeClassSpec(0, (1, 1))) == c
        assert vbar_number(MulticomponentSpace(2, d, 2, mu), NodeClassSpec()) == delta


def test_k1_collapse_to_descendants():
    for n in (2, 3):
        for d in (1, 2, 3):
            for npts in range(0, 3 * d + 2):
                mu = points(n, npts)
                space = MulticomponentSpace(n, d, 1, mu)
                for b in range(0, 5):
                    for l in range(0, n + 1):
                        spec = NodeClassSpec(l, (b,) if b else (), modified=False)
                        expected = descendant_invariant(n, d, (b, l), mu.codims)
                        assert vbar_number(space, spec) == expected
                        if b >= 2:
                            split = NodeClassSpec(l, (1, b - 1), modified=True)
                            assert vbar_number(space, split) == vbar_number(
                                space, NodeClassSpec(l, (b,), modified=True)
                            )


def test_flags_agree_without_psi():
    for d in (2, 3):
        mu = points(3, 2 * d - 1).append(1)
        for k in (1, 2):
            for l in range(4):
                space = MulticomponentSpace(3, d, k, mu)
                assert vbar_number(space, NodeClassSpec(l, (), True)) == vbar_number(space, NodeClassSpec(l, (), False))


def _literal(space, spec, reverse=False):
    """Direct transcription of the defining sum over labeled distributions."""
    n, d, k, mu = space.n, space.d, space.k, space.mu
    total = Fraction(0)
    comps = positive_compositions(d, k)
    if reverse:
        comps = comps[::-1]
    for degrees in comps:
        for assignment in constraint_distributions(mu, k, space.separate):
            blocks = [[mu.codims[i] for i in range(len(mu)) if assignment[i] == b] for b in range(k)]
            for weights in diagonal_weights(n, k, spec.l):
                for exps, coef in symmetric_expand(spec, k):
                    term = Fraction(coef)
                    for i in range(k):
                        if spec.modified:
                            term *= modified_descendant(n, degrees[i], 0, exps[i], weights[i], blocks[i])
                        else:
                            term *= descendant_invariant(n, degrees[i], (exps[i], weights[i]), blocks[i])
                    total += term
    return total / factorial(k)


@pytest.mark.parametrize(
    "n,d,k,codims,spec,separate",
    [
        (2, 3, 2, (2,) * 6, NodeClassSpec(0, (1,)), None),
        (2, 4, 2, (2,) * 8, NodeClassSpec(1, (1,)), None),
        (3, 3, 2, (3, 3, 3, 2, 2, 2), NodeClassSpec(1, (1,)), None),
        (3, 3, 3, (3, 3, 3, 3, 2), NodeClassSpec(0, ()), None),
        (3, 2, 2, (3, 3, 3, 1), NodeClassSpec(1, ()), (1, 0)),
        (3, 3, 2, (3, 3, 3, 3, 3, 1), NodeClassSpec(0, (1,), False), (1, 0)),
    ],
)
def test_assembly_matches_literal_sum(n, d, k, codims, spec, separate):
    space = MulticomponentSpace(n, d, k, ConstraintTuple(n, codims), separate=separate)
    fast = vbar_number(space, spec)
    assert fast != 0
    assert fast == _literal(space, spec)
    # exchange symmetry: a different enumeration order of the components
    assert fast == _literal(space, spec, reverse=True)
