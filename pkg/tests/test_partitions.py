"""Partition enumeration, lattice predicates, and shape counting."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from cumulants.partitions import (
    IntegerPartition,
    Lattice,
    SetPartition,
    count_by_shape,
    d_lambda,
    falling_factorial,
    integer_partitions,
    interval_partitions,
    interval_type,
    is_interval,
    is_noncrossing,
    kreweras_complement,
    leq_refinement,
    noncrossing_partitions,
    set_partitions,
    single_block,
    singletons,
)

BELL = [1, 2, 5, 15, 52, 203, 877, 4140]
CATALAN = [1, 2, 5, 14, 42, 132, 429]


def sp(n, *blocks):
    return SetPartition.from_blocks(n, blocks)


def test_falling_factorial():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(-2, 2) == 6
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)


def test_integer_partition_validation():
    with pytest.raises(ValueError):
        IntegerPartition((1, 2))
    with pytest.raises(ValueError):
        IntegerPartition((2, 0))
    lam = IntegerPartition((3, 1, 1))
    assert lam.n == 5
    assert lam.length == 3
    assert lam.multiplicities() == {3: 1, 1: 2}
    assert lam.parts_factorial == 6
    assert lam.mult_factorial == 2


def test_integer_partitions_reverse_lex():
    assert [p.parts for p in integer_partitions(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert integer_partitions(0) == [IntegerPartition(())]
    assert len(integer_partitions(10)) == 42
    listed = [p.parts for p in integer_partitions(7)]
    assert listed == sorted(listed, reverse=True)


def test_d_lambda():
    assert d_lambda(IntegerPartition((2, 1))) == 3
    assert d_lambda(IntegerPartition((1, 1, 1))) == 1
    assert d_lambda(IntegerPartition((2, 2))) == 3
    # shape counts add up to the Bell numbers
    for n in range(1, 8):
        assert sum(d_lambda(lam) for lam in integer_partitions(n)) == BELL[n - 1]


def test_set_partition_canonical_form():
    left = SetPartition.from_blocks(4, [[3, 4], [2, 1]])
    right = SetPartition.from_blocks(4, [(1, 2), (4, 3)])
    assert left == right
    assert left.blocks == ((1, 2), (3, 4))
    with pytest.raises(ValueError):
        SetPartition.from_blocks(3, [[1, 2]])
    with pytest.raises(ValueError):
        SetPartition.from_blocks(3, [[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        SetPartition.from_blocks(2, [[1, 2], []])


def test_set_partitions_counts_and_order():
    for n in range(1, 9):
        assert len(set_partitions(n)) == BELL[n - 1]
    listed = set_partitions(3)
    assert listed[0] == single_block(3)
    assert listed[-1] == singletons(3)
    with pytest.raises(ValueError):
        set_partitions(0)
    with pytest.raises(ValueError):
        set_partitions(13)


def test_shape():
    assert sp(4, [1, 2], [3, 4]).shape() == IntegerPartition((2, 2))
    assert sp(5, [1, 3, 5], [2], [4]).shape() == IntegerPartition((3, 1, 1))


def test_is_noncrossing():
    assert not is_noncrossing(sp(4, [1, 3], [2, 4]))
    assert is_noncrossing(sp(4, [1, 4], [2, 3]))
    assert all(is_noncrossing(p) for p in set_partitions(3))
    for n in range(1, 8):
        assert len(noncrossing_partitions(n)) == CATALAN[n - 1]


def test_is_interval():
    assert is_interval(sp(4, [1, 2], [3, 4]))
    assert not is_interval(sp(4, [1, 4], [2, 3]))
    assert is_interval(single_block(6))
    for n in range(1, 11):
        assert len(interval_partitions(n)) == 2 ** (n - 1)
    assert all(is_interval(p) for p in interval_partitions(6))
    with pytest.raises(ValueError):
        interval_partitions(17)


def test_leq_refinement():
    assert leq_refinement(singletons(4), sp(4, [1, 2], [3, 4]))
    assert leq_refinement(sp(4, [1, 2], [3, 4]), single_block(4))
    assert not leq_refinement(sp(4, [1, 3], [2], [4]), sp(4, [1, 2], [3, 4]))
    assert leq_refinement(sp(3, [1, 2], [3]), sp(3, [1, 2], [3]))
    with pytest.raises(ValueError):
        leq_refinement(singletons(3), singletons(4))


def test_interval_type_examples():
    t = interval_type(singletons(4), sp(4, [1, 2], [3, 4]))
    assert t.k == (0, 2, 0, 0)
    t = interval_type(sp(4, [1], [2], [3, 4]), sp(4, [1, 2], [3, 4]))
    assert t.k == (1, 1, 0, 0)
    with pytest.raises(ValueError):
        interval_type(sp(4, [1, 3], [2], [4]), sp(4, [1, 2], [3, 4]))


def test_interval_type_invariants():
    # sum k_i = l(pi) and sum i k_i = l(sigma) on every comparable pair
    for n in (3, 4, 5):
        elements = set_partitions(n)
        for pi in elements:
            for sigma in elements:
                if not leq_refinement(sigma, pi):
                    continue
                t = interval_type(sigma, pi)
                assert sum(t.k) == pi.length
                assert sum(i * k for i, k in enumerate(t.k, start=1)) == sigma.length


def test_interval_type_from_bottom_is_shape():
    for pi in set_partitions(5):
        t = interval_type(singletons(5), pi)
        mult = {}
        for size in pi.shape().parts:
            mult[size] = mult.get(size, 0) + 1
        assert t.k == tuple(mult.get(i, 0) for i in range(1, 6))


def test_kreweras_examples():
    assert kreweras_complement(singletons(3)) == single_block(3)
    assert kreweras_complement(single_block(3)) == singletons(3)
    assert kreweras_complement(sp(3, [1, 2], [3])) == sp(3, [1], [2, 3])
    with pytest.raises(ValueError):
        kreweras_complement(sp(4, [1, 3], [2, 4]))


def test_kreweras_bijection_and_order_reversal():
    for n in (2, 3, 4, 5, 6):
        elements = noncrossing_partitions(n)
        images = {kreweras_complement(p) for p in elements}
        assert len(images) == len(elements)
        assert all(is_noncrossing(q) for q in images)
        # double complement preserves the shape
        for p in elements:
            assert kreweras_complement(kreweras_complement(p)).shape() == p.shape()
    # order reversal on a comparable pair
    a = sp(4, [1, 2], [3], [4])
    b = sp(4, [1, 2], [3, 4])
    assert leq_refinement(a, b)
    assert leq_refinement(kreweras_complement(b), kreweras_complement(a))


def test_count_by_shape_examples():
    assert count_by_shape(IntegerPartition((2, 1)), Lattice.ALL) == 3
    assert count_by_shape(IntegerPartition((2, 2)), Lattice.NC) == 2
    assert count_by_shape(IntegerPartition((2, 1)), Lattice.INTERVAL) == 2


def test_count_by_shape_matches_enumeration():
    enumerations = {
        Lattice.ALL: set_partitions,
        Lattice.NC: noncrossing_partitions,
        Lattice.INTERVAL: interval_partitions,
    }
    for n in range(1, 8):
        for lattice, enum in enumerations.items():
            tally: dict[tuple, int] = {}
            for p in enum(n):
                key = p.shape().parts
                tally[key] = tally.get(key, 0) + 1
            for lam in integer_partitions(n):
                expected = count_by_shape(lam, lattice)
                assert expected == tally.get(lam.parts, 0)
                assert expected.denominator == 1


def test_count_by_shape_totals():
    for n in range(1, 9):
        lams = integer_partitions(n)
        assert sum(count_by_shape(l, Lattice.ALL) for l in lams) == BELL[n - 1]
        assert sum(count_by_shape(l, Lattice.INTERVAL) for l in lams) == 2 ** (n - 1)
    for n in range(1, 8):
        lams = integer_partitions(n)
        assert sum(count_by_shape(l, Lattice.NC) for l in lams) == CATALAN[n - 1]
