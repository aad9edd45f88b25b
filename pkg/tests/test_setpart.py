import random

import pytest

from nchopf import setpart as sp
from nchopf.setpart import SetPartition, SetPartitionError


def test_parse_roundtrip():
    for text in ("{}", "{1}", "{1,3|2}", "{1,2|3,5|4|6,7}"):
        assert str(SetPartition.parse(text)) == text


def test_canonical_block_order():
    a = SetPartition([(4,), (2, 5), (3, 1)])
    assert str(a) == "{1,3|2,5|4}"
    assert a == SetPartition.parse("{2,5|1,3|4}")


def test_invalid_inputs_rejected():
    with pytest.raises(SetPartitionError):
        SetPartition([(1, 1)])
    with pytest.raises(SetPartitionError):
        SetPartition([(1,), (3,)])  # gap
    with pytest.raises(SetPartitionError):
        SetPartition([()])
    with pytest.raises(SetPartitionError):
        SetPartition.parse("{1|}")
    with pytest.raises(SetPartitionError):
        SetPartition.parse("(1|2)")


def test_partitions_of_counts():
    # Bell numbers
    for n, count in enumerate([1, 1, 2, 5, 15, 52, 203]):
        assert len(sp.partitions_of(n)) == count


def test_meet_join_lattice_axioms():
    for n in range(5):
        universe = sp.partitions_of(n)
        for a in universe:
            for b in universe:
                m = sp.meet(a, b)
                j = sp.join(a, b)
                assert sp.leq_refinement(m, a) and sp.leq_refinement(m, b)
                assert sp.leq_refinement(a, j) and sp.leq_refinement(b, j)
                for c in universe:
                    if sp.leq_refinement(c, a) and sp.leq_refinement(c, b):
                        assert sp.leq_refinement(c, m)
                    if sp.leq_refinement(a, c) and sp.leq_refinement(b, c):
                        assert sp.leq_refinement(j, c)


def test_concat_shifts():
    a = SetPartition.parse("{1,2}")
    b = SetPartition.parse("{1|2}")
    assert str(sp.concat(a, b)) == "{1,2|3|4}"
    assert sp.concat(sp.EMPTY, b) == b


def test_standardize_raise_inverse():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(1, 7)
        a = rng.choice(sp.partitions_of(n))
        support = rng.sample(range(1, 20), n)
        raised = sp.raise_to(a, support)
        assert sp.standardize(raised) == a


def test_atomic_split_example():
    a = SetPartition.parse("{1,3|2|4|5,8|6,7}")
    assert [str(f) for f in sp.atomic_split(a)] == ["{1,3|2}", "{1}", "{1,4|2,3}"]


def test_split_bar_roundtrip():
    for n in range(7):
        for a in sp.partitions_of(n):
            factors = sp.atomic_split(a)
            assert all(sp.is_atomic(f) for f in factors)
            rebuilt = sp.EMPTY
            for f in factors:
                rebuilt = sp.concat(rebuilt, f)
            assert rebuilt == a


def test_atomic_counts():
    # number of atomic set partitions of [n]: 1, 1, 2, 6, 22
    for n, count in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 22)]:
        assert sum(sp.is_atomic(a) for a in sp.partitions_of(n)) == count


def test_partition_word():
    a = SetPartition.parse("{1,3|2|4|5,8|6,7}")
    assert sp.partition_word(a) == (1, 1, 1, 2, 3, 3, 3, 3)


def test_lyndon_counts():
    # Lyndon set partitions of [n]: 1, 1, 3, 9, 34  (n = 1..5)
    for n, count in [(1, 1), (2, 1), (3, 3), (4, 9), (5, 34)]:
        assert sum(sp.is_lyndon(a) for a in sp.partitions_of(n)) == count


def test_lyndon_factorization_properties():
    for n in range(1, 7):
        for a in sp.partitions_of(n):
            word = sp.atomic_split(a)
            factors = sp.lyndon_factorize(word)
            assert tuple(x for f in factors for x in f) == word
            keys = [tuple(sp.atom_key(x) for x in f) for f in factors]
            assert keys == sorted(keys, reverse=True)
            for f in factors:
                rebuilt = sp.EMPTY
                for x in f:
                    rebuilt = sp.concat(rebuilt, x)
                assert sp.is_lyndon(rebuilt)


def test_star_order_is_partial_order():
    for n in range(1, 6):
        universe = sp.partitions_of(n)
        for a in universe:
            assert sp.star_leq(a, a)
            for b in universe:
                if sp.star_leq(a, b) and sp.star_leq(b, a):
                    assert a == b
                assert sp.star_leq(a, b) <= sp.leq_refinement(a, b)


def test_star_covers_merge_separated_blocks():
    a = SetPartition.parse("{1|2|3}")
    assert {str(x) for x in sp.star_covers(a)} == {"{1,2|3}", "{1,3|2}", "{1|2,3}"}
    b = SetPartition.parse("{1,3|2}")
    assert sp.star_covers(b) == set()


def test_phi_set():
    a = SetPartition.parse("{1,3|2,5,6|4}")
    assert sp.phi_set(a) == frozenset({1, 2, 5})
