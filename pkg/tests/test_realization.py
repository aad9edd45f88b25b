import random

import pytest

from nchopf import realization as rz
from nchopf import setcomp as sc
from nchopf import setpart as sp
from nchopf.realization import RealizationError, WordPolynomial
from nchopf.setcomp import SetComposition
from nchopf.setpart import SetPartition


def test_word_polynomial_arithmetic():
    p = WordPolynomial(2, {(1, 2): 1, (2, 1): -1})
    q = WordPolynomial(2, {(2, 1): 1})
    assert (p + q).terms == {(1, 2): 1}
    assert (p - p).is_zero()
    with pytest.raises(RealizationError):
        WordPolynomial(2, {(3,): 1})


def test_word_mul_concatenates():
    p = WordPolynomial(2, {(1,): 1})
    q = WordPolynomial(2, {(2,): 3})
    assert rz.word_mul(p, q).terms == {(1, 2): 3}


def test_realize_m_counts():
    # m_{1|2} in 3 variables: all x_i x_j with i != j
    a = SetPartition.parse("{1|2}")
    poly = rz.realize_m(a, 3)
    assert len(poly.terms) == 6
    assert all(w[0] != w[1] for w in poly.terms)
    # too few variables collapses to zero
    assert rz.realize_m(SetPartition.parse("{1|2|3}"), 2).is_zero()


def test_realize_M_is_ordered_selection():
    phi = SetComposition.parse("(2|1)")
    poly = rz.realize_M(phi, 3)
    # words x_b x_a with a < b at position of part 1
    assert set(poly.terms) == {(2, 1), (3, 1), (3, 2)}
    assert rz.realize_M(SetComposition.parse("(1|2)"), 3).terms == \
        {(1, 2): 1, (1, 3): 1, (2, 3): 1}


def test_reexpand_inverts_realize():
    rng = random.Random(13)
    for _ in range(15):
        n = rng.randrange(1, 5)
        a = rng.choice(sp.partitions_of(n))
        poly = rz.realize_m(a, n + 1)
        back = rz.reexpand(poly, "m")
        assert back.terms == {a: 1}
        phi = rng.choice(sc.compositions_of(n))
        back = rz.reexpand(rz.realize_M(phi, n + 1), "M")
        assert back.terms == {phi: 1}


def test_reexpand_flags_residual():
    bad = WordPolynomial(3, {(1, 2): 1})  # not symmetric over patterns
    with pytest.raises(RealizationError):
        rz.reexpand(bad, "m")
    with pytest.raises(RealizationError):
        rz.reexpand(bad, "M")


def test_quasisym_check():
    phi = SetComposition.parse("(1,3|2)")
    good = rz.realize_M(phi, 4)
    assert rz.quasisym_check(good)
    # drop one word: no longer constant on the class
    word = next(iter(good.terms))
    broken = good - WordPolynomial(4, {word: 1})
    assert not rz.quasisym_check(broken)


def test_m_realization_is_quasisymmetric_too():
    for n in range(1, 4):
        for a in sp.partitions_of(n):
            assert rz.quasisym_check(rz.realize_m(a, n + 1))
