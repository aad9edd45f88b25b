"""The Hopf algebra of symmetric functions in noncommuting variables
and its graded dual.

Bases: m (monomial), p (power-sum analogue), q (separated-merge order
sums) on the primal side; w (dual monomial) and qdual on the dual side.
Products are implemented literally from their defining conditions and
cross-validated elsewhere against the polynomial realization.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

from . import setpart as sp
from .linalg import (Element, TensorElement, graded_antipode, linear_extend,
                     linear_extend_tensor, triangular_convert)
from .setpart import SetPartition


def _segment(lo, hi):
    """The one-block partition on {lo+1..hi} shifted into place via blocks."""
    return tuple(range(lo + 1, hi + 1))


@lru_cache(maxsize=None)
def m_mul_basis(a, b):
    """m_a m_b = sum of m_c over c whose meet with [n]|[k] is a|b."""
    n, k = a.size, b.size
    if n == 0:
        return Element.monomial("m", b)
    if k == 0:
        return Element.monomial("m", a)
    nk = SetPartition((_segment(0, n), _segment(n, n + k)))
    target = sp.concat(a, b)
    terms = [(c, 1) for c in sp.partitions_of(n + k) if sp.meet(c, nk) == target]
    return Element("m", terms)


def m_mul(x, y):
    from .linalg import bilinear_extend
    return bilinear_extend(m_mul_basis, x, y, zero=Element.zero("m"))


@lru_cache(maxsize=None)
def m_comul_basis(a):
    """Sum over block subsets S of st(a_S) (x) st(a_{S^c})."""
    blocks = a.blocks
    acc = []
    for r in range(len(blocks) + 1):
        for chosen in itertools.combinations(range(len(blocks)), r):
            left = sp.standardize([blocks[i] for i in chosen])
            right = sp.standardize([blocks[i] for i in range(len(blocks))
                                    if i not in chosen])
            acc.append(((left, right), 1))
    return TensorElement(("m", "m"), acc)


def m_comul(x):
    return linear_extend_tensor(m_comul_basis, x)


@lru_cache(maxsize=None)
def p_expand(a):
    """p_a = sum of m_b over b coarser than a in refinement order."""
    return Element("m", [(b, 1) for b in sp.partitions_of(a.size)
                         if sp.leq_refinement(a, b)])


def to_m_from_p(x):
    return linear_extend(p_expand, x)


def to_p(x):
    """Rewrite an m-basis element in the p basis (exact Moebius inversion
    via unitriangular elimination; coarser terms have fewer blocks)."""
    if x.basis != "m":
        raise ValueError("to_p expects an m-basis element")
    return triangular_convert(x, "p", p_expand, lambda i: -i.length)


def p_mul(x, y):
    from .linalg import bilinear_extend
    f = lambda a, b: Element.monomial("p", sp.concat(a, b))
    return bilinear_extend(f, x, y, zero=Element.zero("p"))


@lru_cache(maxsize=None)
def q_expand(a):
    """q_a = sum of m_b over the separated-merge up-set of a."""
    return Element("m", [(b, 1) for b in sorted(sp.star_upset(a), key=str)])


def to_m_from_q(x):
    return linear_extend(q_expand, x)


def to_q(x):
    if x.basis != "m":
        raise ValueError("to_q expects an m-basis element")
    return triangular_convert(x, "q", q_expand, lambda i: -i.length)


def q_mul(x, y):
    from .linalg import bilinear_extend
    f = lambda a, b: Element.monomial("q", sp.concat(a, b))
    return bilinear_extend(f, x, y, zero=Element.zero("q"))


@lru_cache(maxsize=None)
def w_mul_basis(a, b):
    """w_a w_b summed over supports S for a, complement for b."""
    n, k = a.size, b.size
    acc = Counter()
    universe = range(1, n + k + 1)
    for s in itertools.combinations(universe, n):
        comp = [x for x in universe if x not in s]
        blocks = sp.raise_to(a, s) + sp.raise_to(b, comp)
        acc[SetPartition(blocks)] += 1
    return Element("w", acc.items())


def w_mul(x, y):
    from .linalg import bilinear_extend
    return bilinear_extend(w_mul_basis, x, y, zero=Element.zero("w"))


@lru_cache(maxsize=None)
def w_comul_basis(a):
    """Cut the ground set at every i: st(a|_{1..i}) (x) st(a|_{i+1..n})."""
    n = a.size
    acc = []
    for i in range(n + 1):
        left = sp.standardize(sp.restrict(a, range(1, i + 1)))
        right = sp.standardize(sp.restrict(a, range(i + 1, n + 1)))
        acc.append(((left, right), 1))
    return TensorElement(("w", "w"), acc)


def w_comul(x):
    return linear_extend_tensor(w_comul_basis, x)


def w_comul_basis_meet(a):
    """The meet-condition form of the dual coproduct: terms come from
    c with meet(c, [k]|[n-k]) splitting as b|c'.  Used as an invariant
    cross-check for the restriction form."""
    n = a.size
    acc = []
    for k in range(n + 1):
        blocks = [b for b in (_segment(0, k), _segment(k, n)) if b]
        tk = SetPartition(blocks)
        cut = sp.meet(a, tk) if n else a
        for b in sp.partitions_of(k):
            for c in sp.partitions_of(n - k):
                if cut == sp.concat(b, c):
                    acc.append(((b, c), 1))
    return TensorElement(("w", "w"), acc)


_antipode_caches = {}


def antipode(x):
    """Antipode of a homogeneous element in any NCSym/NCSym* basis.

    p/q inputs are routed through m; qdual through w.  The result stays
    in the hub basis (m or w).
    """
    basis = x.basis
    if basis in ("p", "q"):
        x = to_m_from_p(x) if basis == "p" else to_m_from_q(x)
        basis = "m"
    elif basis == "qdual":
        x = to_w_from_qdual(x)
        basis = "w"
    if basis == "m":
        cache = _antipode_caches.setdefault("m", {})
        return graded_antipode(x, m_mul_basis, m_comul_basis, sp.EMPTY, cache)
    if basis == "w":
        cache = _antipode_caches.setdefault("w", {})
        return graded_antipode(x, w_mul_basis, w_comul_basis, sp.EMPTY, cache)
    raise ValueError(f"antipode not defined for basis {basis!r}")


@lru_cache(maxsize=None)
def qdual_expand(a):
    """q*_a as a signed sum of w_b over the down-set of a.

    Moebius inversion over the boolean principal ideal; satisfies
    [q_a, q*_b] = delta.
    """
    return Element("w", [(b, (-1) ** (b.length - a.length))
                         for b in sorted(sp.star_downset(a), key=str)])


def to_w_from_qdual(x):
    return linear_extend(qdual_expand, x)


def to_qdual(x):
    if x.basis != "w":
        raise ValueError("to_qdual expects a w-basis element")
    return triangular_convert(x, "qdual", qdual_expand, lambda i: i.length)


def lyndon_generators(n):
    """Lyndon set partitions of size n: the cofree generators' indices."""
    return tuple(a for a in sp.partitions_of(n) if n and sp.is_lyndon(a))


def atomic_generators(n):
    return tuple(a for a in sp.partitions_of(n) if n and sp.is_atomic(a))


def _integer_rank(rows):
    """Exact rank of an integer matrix by fraction-free (Bareiss)
    elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    nrow, ncol = len(mat), len(mat[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncol):
        pivot = next((r for r in range(row, nrow) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        for r in range(row + 1, nrow):
            for c in range(col + 1, ncol):
                mat[r][c] = (mat[r][c] * mat[row][col]
                             - mat[r][col] * mat[row][c]) // prev
            mat[r][col] = 0
        prev = mat[row][col]
        rank += 1
        row += 1
        if row == nrow:
            break
    return rank


def _lyndon_multisets(n):
    """Multisets of Lyndon partitions with sizes summing to n."""
    pool = [a for k in range(1, n + 1) for a in lyndon_generators(k)]
    pool.sort(key=lambda a: (a.size, str(a)))
    out = []

    def rec(start, remaining, chosen):
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for i in range(start, len(pool)):
            if pool[i].size <= remaining:
                chosen.append(pool[i])
                rec(i, remaining - pool[i].size, chosen)
                chosen.pop()

    rec(0, n, [])
    return out


def verify_cofree(n_max):
    """Shuffle triangularity of the w-product and full rank of the
    nonincreasing Lyndon-product family, per grade."""
    checks = []
    for n in range(1, n_max + 1):
        # (a) shuffle triangularity on every operand pair of total size n
        status = "pass"
        witness = None
        for i in range(1, n):
            for a in sp.partitions_of(i):
                for b in sp.partitions_of(n - i):
                    prod = w_mul_basis(a, b)
                    fa, fb = sp.atomic_split(a), sp.atomic_split(b)
                    top = len(fa) + len(fb)
                    shuffles = Counter()
                    for pos in itertools.combinations(range(top), len(fa)):
                        posset = set(pos)
                        word = []
                        ia = ib = 0
                        for t in range(top):
                            if t in posset:
                                word.append(fa[ia])
                                ia += 1
                            else:
                                word.append(fb[ib])
                                ib += 1
                        c = word[0]
                        for f in word[1:]:
                            c = sp.concat(c, f)
                        shuffles[c] += 1
                    for c, coeff in prod.terms.items():
                        fl = len(sp.atomic_split(c))
                        if fl > top or (fl == top and coeff != shuffles.get(c)) \
                                or (fl < top and c in shuffles):
                            status = "fail"
                            witness = f"w_{a} w_{b} term {c}"
                    if sum(shuffles.values()) and \
                            any(c not in prod.terms for c in shuffles):
                        status = "fail"
                        witness = f"w_{a} w_{b} missing shuffle term"
        checks.append({"check": "shuffle-triangularity", "grade": n,
                       "status": status, **({"witness": witness} if witness else {})})

        # (b) nonincreasing Lyndon products span the grade
        basis = sp.partitions_of(n)
        col = {a: i for i, a in enumerate(basis)}
        rows = []
        for multiset in _lyndon_multisets(n):
            word = sorted(multiset, key=sp.atom_key, reverse=True)
            prod = Element.monomial("w", sp.EMPTY)
            for f in word:
                prod = w_mul(prod, Element.monomial("w", f))
            row = [0] * len(basis)
            for idx, c in prod.terms.items():
                row[col[idx]] = c
            rows.append(row)
        count_ok = len(rows) == len(basis)
        rank = _integer_rank(rows)
        ok = count_ok and rank == len(basis)
        checks.append({"check": "lyndon-product-rank", "grade": n,
                       "status": "pass" if ok else "fail",
                       **({} if ok else {"witness":
                           f"count={len(rows)} rank={rank} dim={len(basis)}"})})
    return checks


def verify_free(n_max):
    """Monomials in atomic p (and q) generators per grade: count equals
    the grade dimension; basis change to m is unitriangular."""
    from .counting import bell
    checks = []
    atom_count = {k: len(atomic_generators(k)) for k in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        # compositions in atomic generators <-> partitions via the split
        total = _atomic_monomial_count(n, atom_count)
        ok = total == bell(n) == len(sp.partitions_of(n))
        checks.append({"check": "atomic-monomial-count", "grade": n,
                       "status": "pass" if ok else "fail",
                       **({} if ok else {"witness": f"{total} != {bell(n)}"})})
        for name, expand in (("p", p_expand), ("q", q_expand)):
            basis = sorted(sp.partitions_of(n), key=lambda a: (-a.length, str(a)))
            pos = {a: i for i, a in enumerate(basis)}
            ok = True
            witness = None
            for i, a in enumerate(basis):
                exp = expand(a)
                if exp.terms.get(a) != 1:
                    ok, witness = False, f"{name}_{a} leading coefficient"
                for b in exp.terms:
                    if pos[b] < i:
                        ok, witness = False, f"{name}_{a} has early term m_{b}"
            checks.append({"check": f"{name}-to-m-unitriangular", "grade": n,
                           "status": "pass" if ok else "fail",
                           **({"witness": witness} if witness else {})})
    return checks


def _atomic_monomial_count(n, atom_count):
    counts = [1] + [0] * n
    for total in range(1, n + 1):
        counts[total] = sum(atom_count.get(k, 0) * counts[total - k]
                            for k in range(1, total + 1))
    return counts[n]


def to_basis(x, target):
    """Convert between the NCSym bases m/p/q and dual bases w/qdual."""
    routes_primal = {"m", "p", "q"}
    routes_dual = {"w", "qdual"}
    if x.basis in routes_primal and target in routes_primal:
        hub = {"m": lambda e: e, "p": to_m_from_p, "q": to_m_from_q}[x.basis](x)
        return {"m": lambda e: e, "p": to_p, "q": to_q}[target](hub)
    if x.basis in routes_dual and target in routes_dual:
        hub = {"w": lambda e: e, "qdual": to_w_from_qdual}[x.basis](x)
        return {"w": lambda e: e, "qdual": to_qdual}[target](hub)
    raise ValueError(f"no conversion from {x.basis} to {target}")


def mul(x, y):
    """Product in the basis both operands share."""
    if x.basis != y.basis:
        raise ValueError("operands must share a basis")
    table = {"m": m_mul, "p": p_mul, "q": q_mul, "w": w_mul}
    if x.basis not in table:
        raise ValueError(f"no product rule in basis {x.basis!r}")
    return table[x.basis](x, y)


def comul(x):
    table = {"m": m_comul, "w": w_comul}
    if x.basis not in table:
        raise ValueError(f"no coproduct rule in basis {x.basis!r}")
    return table[x.basis](x)
