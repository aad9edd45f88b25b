import random

import pytest

from nchopf import setcomp as sc
from nchopf.setcomp import SetComposition, SetCompositionError
from nchopf.setpart import SetPartition


def test_parse_roundtrip():
    for text in ("()", "(1)", "(2|1)", "(1,3|2)", "(2,3,6|1,7|4,8|5)"):
        assert str(SetComposition.parse(text)) == text


def test_part_order_is_significant():
    assert SetComposition.parse("(1|2)") != SetComposition.parse("(2|1)")


def test_invalid_inputs_rejected():
    with pytest.raises(SetCompositionError):
        SetComposition([(1,), (1,)])
    with pytest.raises(SetCompositionError):
        SetComposition([(2,)])  # gap
    with pytest.raises(SetCompositionError):
        SetComposition.parse("{1|2}")


def test_compositions_of_counts():
    # ordered Bell numbers
    for n, count in enumerate([1, 1, 3, 13, 75, 541]):
        assert len(sc.compositions_of(n)) == count


def test_wedge_is_noncommutative_pseudo_meet():
    phi = SetComposition.parse("(1,2|3)")
    psi = SetComposition.parse("(3|1,2)")
    assert str(sc.wedge(phi, psi)) == "(1,2|3)"
    assert str(sc.wedge(psi, phi)) == "(3|1,2)"
    # wedge(phi, psi) <= phi always; <= psi can fail
    found_asymmetric = False
    for n in range(1, 5):
        for a in sc.compositions_of(n):
            for b in sc.compositions_of(n):
                w = sc.wedge(a, b)
                assert sc.leq_refinement(w, a)
                if not sc.leq_refinement(w, b):
                    found_asymmetric = True
    assert found_asymmetric


def test_refinement_poset_of_3():
    universe = sc.compositions_of(3)
    assert len(universe) == 13
    top = SetComposition.parse("(1,2,3)")
    assert all(sc.leq_refinement(phi, top) for phi in universe)
    minimal = [phi for phi in universe
               if not any(sc.leq_refinement(psi, phi) and psi != phi
                          for psi in universe)]
    assert len(minimal) == 6
    assert all(phi.length == 3 for phi in minimal)


def test_vee_is_least_common_coarsening():
    for n in range(1, 5):
        for a in sc.compositions_of(n):
            for b in sc.compositions_of(n):
                try:
                    v = sc.vee(a, b)
                except SetCompositionError:
                    continue
                assert sc.leq_refinement(a, v) and sc.leq_refinement(b, v)


def test_delta_of_sequence_example():
    assert str(sc.delta_of_sequence((2, 1, 1, 7, 9, 1, 2, 7))) == \
        "(2,3,6|1,7|4,8|5)"


def test_alpha_and_forget():
    phi = SetComposition.parse("(1,3|2|4,5)")
    assert sc.alpha(phi) == (2, 1, 2)
    assert sc.forget(phi) == SetPartition.parse("{1,3|2|4,5}")


def test_atomic_split_roundtrip():
    for n in range(6):
        for phi in sc.compositions_of(n):
            factors = sc.atomic_split(phi)
            assert all(sc.is_atomic(f) for f in factors)
            rebuilt = sc.EMPTY
            for f in factors:
                rebuilt = sc.concat(rebuilt, f)
            assert rebuilt == phi


def test_atomic_split_example():
    phi = SetComposition.parse("(1,2,3|4|5,6|7)")
    assert [str(f) for f in sc.atomic_split(phi)] == \
        ["(1,2,3)", "(1)", "(1,2)", "(1)"]


def test_star_order_on_compositions():
    phi = SetComposition.parse("(1|2|3)")
    assert {str(x) for x in sc.star_covers(phi)} == {"(1,2|3)", "(1|2,3)"}
    # decreasing composition is isolated
    dec = SetComposition.parse("(3|2|1)")
    assert sc.star_covers(dec) == set()
    assert sc.star_upset(dec) == frozenset({dec})


def test_sharp_examples():
    small = SetComposition.parse("(1,3,4|2|5,6|7)")
    big = SetComposition.parse("(1,5,6|2|3,7|4)")
    other = SetComposition.parse("(1,2,4|5|3,6|7)")
    assert sc.sharp_leq(small, big)
    assert not sc.sharp_leq(small, other)
    assert not sc.sharp_leq(other, small)
    base = SetComposition.parse("(1,2,3|4|5,6|7)")
    assert all(sc.sharp_leq(base, psi)
               for psi in sc.alpha_class(7, (3, 1, 2, 1)))


def test_sharp_is_partial_order():
    for n in range(1, 6):
        universe = sc.compositions_of(n)
        for a in universe:
            assert sc.sharp_leq(a, a)
        rng = random.Random(n)
        sample = rng.sample(universe, min(len(universe), 25))
        for a in sample:
            for b in sample:
                if sc.sharp_leq(a, b) and sc.sharp_leq(b, a):
                    assert a == b
                if sc.sharp_leq(a, b):
                    assert sc.alpha(a) == sc.alpha(b)
                for c in sample:
                    if sc.sharp_leq(a, b) and sc.sharp_leq(b, c):
                        assert sc.sharp_leq(a, c)


def test_shifted_shuffle_counts():
    phi = SetComposition.parse("(1,3|2)")
    psi = SetComposition.parse("(1|2)")
    shuffles = sc.shifted_shuffle(phi, psi)
    assert len(shuffles) == 6
    assert SetComposition.parse("(1,3|2|4|5)") in shuffles
    assert SetComposition.parse("(4|5|1,3|2)") in shuffles


def test_word_of():
    phi = SetComposition.parse("(2,3,6|1,7|4,8|5)")
    assert sc.word_of(phi) == (2, 1, 1, 3, 4, 1, 2, 3)


def test_reverse_complement_involution():
    for n in range(5):
        for phi in sc.compositions_of(n):
            rc = sc.reverse_complement(phi)
            assert sc.alpha(rc) == sc.alpha(phi)[::-1]
            assert sc.reverse_complement(rc) == phi


def test_standardize_raise_inverse():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randrange(1, 6)
        phi = rng.choice(sc.compositions_of(n))
        support = rng.sample(range(1, 20), n)
        assert sc.standardize(sc.raise_to(phi, support)) == phi
