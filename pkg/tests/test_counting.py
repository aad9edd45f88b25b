import pytest

from nchopf import counting
from nchopf.counting import Series


def test_bell_numbers():
    assert [counting.bell(n) for n in range(8)] == \
        [1, 1, 2, 5, 15, 52, 203, 877]


def test_stirling_numbers():
    assert counting.stirling2(4, 2) == 7
    assert counting.stirling2(5, 3) == 25
    assert sum(counting.stirling2(5, k) for k in range(1, 6)) == \
        counting.bell(5)
    with pytest.raises(ValueError):
        counting.stirling2(3, 4)


def test_ordered_bell():
    assert [counting.ordered_bell(n) for n in range(6)] == \
        [1, 1, 3, 13, 75, 541]


def test_atomic_count_tables():
    a = counting.atomic_counts(4)
    # grade sums: 1, 1, 2, 6 atomic set partitions
    assert [sum(a[k].values()) for k in (1, 2, 3, 4)] == [1, 1, 2, 6]
    c = counting.comp_atomic_counts(4)
    assert [sum(c[k].values()) for k in (1, 2, 3, 4)] == [1, 2, 8, 48]
    b = counting.lyndon_counts(5)
    assert [sum(b[k].values()) for k in (1, 2, 3, 4, 5)] == [1, 1, 3, 9, 34]


def test_series_arithmetic():
    one = Series.one(4)
    x = Series(4, {(1, 0): 1})
    geom = (one - x).inverse()
    assert all(geom.coefficient(k, 0) == 1 for k in range(5))
    assert (geom * (one - x)) == one
    with pytest.raises(ValueError):
        x.inverse()


def test_series_truncation():
    x = Series(2, {(1, 0): 1})
    cube = x * x * x
    assert cube.coeffs == {}


def test_sharp_rank_counts_permutation_class():
    # ranks on the all-singletons class; corank counts match A003319
    counts = counting.sharp_rank_counts(5)
    assert sum(counts.values()) == 120
    by_factors = {5 - r: c for r, c in counts.items()}
    assert by_factors[1] == 71  # indecomposable permutations of 5
    assert by_factors[5] == 1


def test_all_series_identities_pass():
    for which in ("i", "ii", "iii", "iv", "v", "vi"):
        report = counting.series_identity_check(
            which, trunc_part=6, trunc_comp=5, trunc_sharp=4)
        assert report["status"] == "pass", report


def test_unknown_identity_rejected():
    with pytest.raises(ValueError):
        counting.series_identity_check("vii")
