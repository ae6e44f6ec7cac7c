from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from jackwhittaker.combinatorics import (EMPTY, Partition, add_box, addable_boxes, arm_leg,
                                         block_encoding, conjugate, contains_box,
                                         dominance_compare, dominance_leq, from_block_encoding,
                                         grow_by, linear_extension, partition_tuples,
                                         partitions_of, partitions_up_to, remove_box,
                                         removable_corners, shrink_by, z_of)


def pentagonal_counts(n_max):
    """Partition numbers from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


partitions = st.lists(st.integers(1, 7), max_size=7).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_partitions_of_small():
    assert partitions_of(0) == [EMPTY]
    assert partitions_of(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    assert len(partitions_of(4)) == 5


def test_partition_counts_match_pentagonal_recurrence():
    counts = pentagonal_counts(40)
    for n in range(41):
        assert len(partitions_of(n)) == counts[n]


def test_partitions_are_distinct_and_reverse_lex():
    for n in range(12):
        ps = partitions_of(n)
        assert len(set(ps)) == len(ps)
        assert [tuple(x) for x in ps] == sorted((tuple(x) for x in ps), reverse=True)
        assert all(x.size() == n for x in ps)


def test_conjugate_examples():
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(Partition([4, 4, 2, 1, 1, 1])) == Partition([6, 3, 2, 2])
    assert conjugate(Partition([2, 1])) == Partition([2, 1])


def test_conjugate_is_involution():
    for lam in partitions_up_to(12):
        assert conjugate(conjugate(lam)) == lam


def test_contains_box():
    lam = Partition([4, 4, 2, 1, 1])
    assert contains_box(lam, 2, 3)
    assert not contains_box(lam, 4, 3)
    assert not contains_box(EMPTY, 1, 1)


def test_arm_leg_examples():
    assert arm_leg(Partition([2, 1]), 1, 1) == (1, 1)
    assert arm_leg(EMPTY, 1, 1) == (-1, -1)
    # (1,2) lies inside (3): the conjugate is (1,1,1), so the leg is 1 - 1 = 0
    assert arm_leg(Partition([3]), 1, 2) == (1, 0)
    assert arm_leg(Partition([3]), 2, 2) == (-2, -1)
    assert arm_leg(Partition([3]), 1, 5) == (-2, -1)


@given(partitions)
def test_arm_leg_nonnegative_inside(lam):
    boxes = list(lam.boxes())
    assert len(boxes) == lam.size()
    for i, j in boxes:
        a, l = arm_leg(lam, i, j)
        assert a >= 0 and l >= 0


def test_removable_corners_examples():
    assert removable_corners(Partition([1])) == [(1, 1)]
    assert removable_corners(Partition([2, 2, 1])) == [(2, 2), (3, 1)]
    assert removable_corners(Partition([4, 4, 2, 1, 1, 1])) == [(2, 4), (3, 2), (6, 1)]


@given(partitions)
def test_corner_count_is_number_of_distinct_parts(lam):
    corners = removable_corners(lam)
    assert len(corners) == len(set(lam))
    for i, _ in corners:
        smaller = remove_box(lam, i)
        assert list(smaller) == sorted(smaller, reverse=True)
    ms, ns = block_encoding(lam)
    assert list(zip(ms, ns)) == corners
    assert from_block_encoding(ms, ns) == lam


@given(partitions)
def test_addable_boxes_give_partitions(lam):
    for i, j in addable_boxes(lam):
        bigger = add_box(lam, i)
        assert bigger.size() == lam.size() + 1
        assert bigger.part(i) == j


def test_z_of():
    assert z_of(Partition([2, 1])) == 2
    assert z_of(Partition([1, 1, 1])) == 6
    assert z_of(Partition([3])) == 3
    for n in range(1, 9):
        # sum over classes of n!/z_lam counts all permutations
        assert sum(factorial(n) // z_of(lam) for lam in partitions_of(n)) == factorial(n)


def test_dominance_examples():
    assert dominance_leq(Partition([1, 1, 1]), Partition([2, 1]))
    assert dominance_compare(Partition([3, 3]), Partition([4, 1, 1])) is None
    assert dominance_leq(Partition([2, 1]), Partition([2, 1]))


def test_dominance_is_a_partial_order():
    for n in range(1, 11):
        ps = partitions_of(n)
        for a in ps:
            assert dominance_leq(a, a)
            for b in ps:
                if a != b and dominance_leq(a, b):
                    assert not dominance_leq(b, a)
                    for c in ps:
                        if dominance_leq(b, c):
                            assert dominance_leq(a, c)


def test_dominance_reverses_under_conjugation():
    for n in range(1, 9):
        for a in partitions_of(n):
            for b in partitions_of(n):
                assert dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a))


def test_shrink_by_examples():
    assert set(shrink_by(Partition([2, 1]), 1)) == {Partition([2]), Partition([1, 1])}
    assert shrink_by(Partition([1]), 2) == []
    assert set(shrink_by(Partition([2, 2]), 2)) == {Partition([2]), Partition([1, 1])}


def test_grow_and_shrink_are_dual():
    for n in range(7):
        for mu in partitions_of(n):
            for k in (1, 2):
                for lam in grow_by(mu, k):
                    assert mu in shrink_by(lam, k)


@pytest.mark.parametrize("order", ["lex", "conjugate"])
def test_linear_extensions_refine_dominance(order):
    for d in range(1, 10):
        seq = linear_extension(d, order)
        assert sorted(seq) == sorted(partitions_of(d))
        pos = {lam: i for i, lam in enumerate(seq)}
        for a in seq:
            for b in seq:
                if a != b and dominance_leq(a, b):
                    assert pos[a] < pos[b]


def test_linear_extensions_differ_somewhere():
    assert linear_extension(6, "lex") != linear_extension(6, "conjugate")


def test_partition_tuples_count():
    p = pentagonal_counts(10)
    for d in range(8):
        assert len(partition_tuples(d, 2)) == sum(p[k] * p[d - k] for k in range(d + 1))
        assert all(sum(y.size() for y in Y) == d for Y in partition_tuples(d, 3))


def test_partition_json_and_key():
    lam = Partition([4, 4, 2, 1, 1, 1])
    assert lam.to_json() == [4, 4, 2, 1, 1, 1]
    assert EMPTY.to_json() == []
    assert lam.key() == "[4,4,2,1,1,1]"
    assert lam.part(7) == 0
    assert lam.length() == 6 and lam.size() == 13
