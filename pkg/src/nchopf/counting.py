"""Counting sequences and exact truncated-series identity checks.

Everything is exact integer arithmetic; the series identities tie the
atomic/Lyndon counts to the dimensions of the graded algebra pieces.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from . import setcomp as sc
from . import setpart as sp


@lru_cache(maxsize=None)
def bell(n):
    """Bell number by the binomial recursion."""
    if n < 0:
        raise ValueError("negative index")
    if n <= 1:
        return 1
    return sum(comb(n - 1, i) * bell(n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def stirling2(n, k):
    """Stirling number of the second kind, S(n, k) with 1 <= k <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"k out of range: need 1 <= {k} <= {n}")
    if k == 1 or k == n:
        return 1
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _stirling(n, k):
    # internal convention including the (0,0) term used by the series
    if n == 0 and k == 0:
        return 1
    if k < 1 or k > n:
        return 0
    return stirling2(n, k)


def ordered_bell(n):
    if n == 0:
        return 1
    return sum(factorial(k) * stirling2(n, k) for k in range(1, n + 1))


def atomic_counts(n_max):
    """Table a[k][i]: atomic set partitions of size k and length i."""
    table = {}
    for k in range(1, n_max + 1):
        row = {}
        for a in sp.partitions_of(k):
            if sp.is_atomic(a):
                row[a.length] = row.get(a.length, 0) + 1
        table[k] = row
    return table


def comp_atomic_counts(n_max):
    """Table c[k][i]: atomic set compositions of size k and length i."""
    table = {}
    for k in range(1, n_max + 1):
        row = {}
        for phi in sc.compositions_of(k):
            if sc.is_atomic(phi):
                row[phi.length] = row.get(phi.length, 0) + 1
        table[k] = row
    return table


def lyndon_counts(n_max):
    """Table b[k][i]: Lyndon set partitions of size k and length i."""
    table = {}
    for k in range(1, n_max + 1):
        row = {}
        for a in sp.partitions_of(k):
            if sp.is_lyndon(a):
                row[a.length] = row.get(a.length, 0) + 1
        table[k] = row
    return table


class Series:
    """Bivariate truncated power series in q and t, exact integers.

    Coefficients are kept for q-degree <= trunc; t-degree is bounded by
    the q-degree in every series we build, so no separate cap is needed.
    """

    __slots__ = ("trunc", "coeffs")

    def __init__(self, trunc, coeffs=()):
        self.trunc = trunc
        acc = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for (dq, dt), c in items:
            if dq <= trunc and c:
                acc[(dq, dt)] = acc.get((dq, dt), 0) + c
                if not acc[(dq, dt)]:
                    del acc[(dq, dt)]
        self.coeffs = acc

    @staticmethod
    def one(trunc):
        return Series(trunc, {(0, 0): 1})

    def __add__(self, other):
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return Series(self.trunc, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return Series(self.trunc, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        acc = {}
        for (q1, t1), c1 in self.coeffs.items():
            for (q2, t2), c2 in other.coeffs.items():
                if q1 + q2 > self.trunc:
                    continue
                key = (q1 + q2, t1 + t2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return Series(self.trunc, acc)

    def inverse(self):
        """1/self, requiring unit constant term."""
        if self.coeffs.get((0, 0)) != 1:
            raise ValueError("inverse needs constant term 1")
        g = Series.one(self.trunc) - self  # no constant term
        out = Series.one(self.trunc)
        power = Series.one(self.trunc)
        # t-degree grows with q-degree, so q-truncation terminates the loop
        for _ in range(self.trunc):
            power = power * g
            if not power.coeffs:
                break
            out = out + power
        return out

    def __eq__(self, other):
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def coefficient(self, dq, dt):
        return self.coeffs.get((dq, dt), 0)

    def diff(self, other):
        """Coefficient-level differences as a sorted list."""
        keys = set(self.coeffs) | set(other.coeffs)
        out = []
        for k in sorted(keys):
            a, b = self.coeffs.get(k, 0), other.coeffs.get(k, 0)
            if a != b:
                out.append({"q": k[0], "t": k[1], "lhs": a, "rhs": b})
        return out


def _geom_inverse_power(trunc, t_deg, q_deg, b):
    """(1 - t^i q^k)^(-b) truncated: sum of C(b+j-1, j) (t^i q^k)^j."""
    acc = {}
    j = 0
    while j * q_deg <= trunc:
        acc[(j * q_deg, j * t_deg)] = comb(b + j - 1, j)
        j += 1
    return Series(trunc, acc)


def _stirling_series(trunc):
    return Series(trunc, {(n, k): _stirling(n, k)
                          for n in range(trunc + 1) for k in range(n + 1)})


def _bell_series(trunc):
    return Series(trunc, {(n, 0): bell(n) for n in range(trunc + 1)})


def _ordered_stirling_series(trunc):
    coeffs = {(0, 0): 1}
    for n in range(1, trunc + 1):
        for k in range(1, n + 1):
            coeffs[(n, k)] = factorial(k) * stirling2(n, k)
    return Series(trunc, coeffs)


def sharp_rank_counts(n):
    """Rank sizes of the all-singletons class under the run order,
    with rank = number of parts minus number of atomic factors."""
    ones = tuple([1] * n)
    counts = {}
    for phi in sc.alpha_class(n, ones):
        r = phi.length - len(sc.atomic_split(phi))
        counts[r] = counts.get(r, 0) + 1
    if n == 0:
        counts = {0: 1}
    return counts


def _sharp_rank_series(trunc):
    """g(x)/(t + g - t*g) with g = sum k! x^k, q playing the role of x."""
    g = Series(trunc, {(k, 0): factorial(k) for k in range(trunc + 1)})
    t = Series(trunc, {(0, 1): 1})
    denom = t + g - t * g
    return g * denom.inverse()


def series_identity_check(which, trunc_part=8, trunc_comp=7, trunc_sharp=5):
    """Check one of the six enumeration identities; exact coefficients.

    which is one of "i".."vi".  Returns a report dict with any
    coefficient-level differences.
    """
    if which == "i":
        trunc = trunc_part
        a = atomic_counts(trunc)
        gen = Series(trunc, {(k, i): -c for k, row in a.items()
                             for i, c in row.items()})
        lhs = (Series.one(trunc) + gen).inverse()
        rhs = _stirling_series(trunc)
    elif which == "ii":
        trunc = trunc_part
        a = atomic_counts(trunc)
        gen = Series(trunc, {(k, 0): -sum(row.values()) for k, row in a.items()})
        lhs = (Series.one(trunc) + gen).inverse()
        rhs = _bell_series(trunc)
    elif which == "iii":
        trunc = trunc_part
        b = lyndon_counts(trunc)
        lhs = Series.one(trunc)
        for k, row in b.items():
            for i, c in row.items():
                lhs = lhs * _geom_inverse_power(trunc, i, k, c)
        rhs = _stirling_series(trunc)
    elif which == "iv":
        trunc = trunc_part
        b = lyndon_counts(trunc)
        lhs = Series.one(trunc)
        for k, row in b.items():
            lhs = lhs * _geom_inverse_power(trunc, 0, k, sum(row.values()))
        rhs = _bell_series(trunc)
    elif which == "v":
        trunc = trunc_comp
        c = comp_atomic_counts(trunc)
        gen = Series(trunc, {(k, i): -v for k, row in c.items()
                             for i, v in row.items()})
        lhs = (Series.one(trunc) + gen).inverse()
        rhs = _ordered_stirling_series(trunc)
    elif which == "vi":
        trunc = trunc_sharp
        series = _sharp_rank_series(trunc)
        lhs = Series(trunc, {(n, k): series.coefficient(n, k)
                             for n in range(trunc + 1) for k in range(n + 1)})
        # the series indexes by number of atomic factors, n minus the rank
        rhs = Series(trunc, {(n, n - k): c for n in range(trunc + 1)
                             for k, c in sharp_rank_counts(n).items()})
    else:
        raise ValueError(f"unknown identity {which!r}")
    mismatches = lhs.diff(rhs)
    return {"check": f"series-identity-{which}",
            "truncation": lhs.trunc,
            "status": "pass" if not mismatches else "fail",
            **({"mismatches": mismatches} if mismatches else {})}
