import math

import pytest

from nchopf import posets
from nchopf import setpart as sp
from nchopf.posets import FinitePoset, PosetError


def divisors_poset(n):
    elems = [d for d in range(1, n + 1) if n % d == 0]
    return FinitePoset(elems, lambda a, b: b % a == 0)


def test_rejects_non_posets():
    with pytest.raises(PosetError):
        FinitePoset([1, 2], lambda a, b: a != b)  # not reflexive
    with pytest.raises(PosetError):
        FinitePoset([1, 2], lambda a, b: True)  # 2-cycle


def test_covers_are_transitive_reduction():
    p = divisors_poset(12)
    cover_pairs = {(p.elements[i], p.elements[j]) for i, j in p.covers}
    assert cover_pairs == {(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12),
                           (6, 12)}


def test_moebius_on_divisor_lattice():
    p = divisors_poset(12)
    # classical number-theoretic Moebius of the quotient
    assert p.moebius(1, 1) == 1
    assert p.moebius(1, 2) == -1
    assert p.moebius(1, 6) == 1
    assert p.moebius(1, 4) == 0
    assert p.moebius(1, 12) == 0
    assert p.moebius(4, 2) == 0  # incomparable direction


def test_moebius_sums_to_zero_on_intervals():
    p = posets.build(sp.partitions_of(4), sp.leq_refinement)
    for x in p.elements:
        for y in p.elements:
            if x != y and p.leq(x, y):
                assert sum(p.moebius(x, z) for z in p.interval(x, y)) == 0


def test_refinement_lattice_moebius_bottom_top():
    # mu(0, 1) on the partition lattice of [n] is (-1)^(n-1) (n-1)!
    for n in range(1, 6):
        p = posets.build(sp.partitions_of(n), sp.leq_refinement)
        bottom = sp.SetPartition([(i,) for i in range(1, n + 1)])
        top = sp.SetPartition([tuple(range(1, n + 1))])
        assert p.moebius(bottom, top) == (-1) ** (n - 1) * math.factorial(n - 1)


def test_ranked_and_boolean_diagnostics():
    p = posets.build(sp.partitions_of(4), sp.star_leq)
    assert p.is_ranked()
    assert p.is_eulerian_intervals()
    assert all(p.downset_is_boolean(x) for x in p.elements)
    report = p.structure_report()
    assert report["isRanked"] and report["booleanIdeals"]
    assert report["size"] == 15


def test_components():
    p = FinitePoset([1, 2, 3, 4], lambda a, b: a == b or (a, b) in {(1, 2)})
    comps = p.components()
    assert sorted(len(c) for c in comps) == [1, 1, 2]


def test_dot_export_deterministic_and_well_formed():
    p = posets.build(sp.partitions_of(3), sp.star_leq)
    dot = p.dot_export()
    assert dot == p.dot_export()
    assert dot.startswith("digraph poset {")
    assert dot.rstrip().endswith("}")
    assert '"{1|2|3}" -> "{1,2|3}";' in dot


def test_empty_poset():
    p = FinitePoset([], lambda a, b: True)
    assert len(p) == 0
    assert p.dot_export().count("->") == 0


def test_render_figure(tmp_path):
    p = posets.build(sp.partitions_of(3), sp.star_leq)
    out = tmp_path / "hasse.png"
    p.render_figure(str(out))
    assert out.stat().st_size > 0
