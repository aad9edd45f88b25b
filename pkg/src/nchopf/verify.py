"""Exhaustive property suites at desk scale.

Each suite returns a list of report dicts {"check", ..., "status"} with a
witness on failure.  The composition-side bounds run one grade below the
partition-side bound, matching the relative cost of the two families.
"""

from __future__ import annotations

import itertools

from . import counting, ncqsym, ncsym, posets, realization
from . import setcomp as sc
from . import setpart as sp
from .linalg import Element, pairing, pairing_tensor, tensor


def _report(check, ok, witness=None, **extra):
    out = {"check": check, **extra, "status": "pass" if ok else "fail"}
    if not ok and witness is not None:
        out["witness"] = str(witness)
    return out


# ---------------------------------------------------------------------------
# Hopf axiom suite


def _triple_left(comul_basis, idx):
    """(comul (x) id) comul at a basis index, as a dict on index triples."""
    acc = {}
    for (a, b), c in comul_basis(idx).terms.items():
        for (x, y), d in comul_basis(a).terms.items():
            key = (x, y, b)
            acc[key] = acc.get(key, 0) + c * d
            if not acc[key]:
                del acc[key]
    return acc


def _triple_right(comul_basis, idx):
    acc = {}
    for (a, b), c in comul_basis(idx).terms.items():
        for (x, y), d in comul_basis(b).terms.items():
            key = (a, x, y)
            acc[key] = acc.get(key, 0) + c * d
            if not acc[key]:
                del acc[key]
    return acc


def _hopf_suite(label, basis, enum, mul, mul_basis, comul_basis, antipode,
                n_max):
    checks = []
    mono = lambda idx: Element.monomial(basis, idx)

    ok, witness = True, None
    for total in range(3, n_max + 1):
        for i in range(1, total - 1):
            for j in range(1, total - i):
                k = total - i - j
                for a in enum(i):
                    for b in enum(j):
                        for c in enum(k):
                            lhs = mul(mul(mono(a), mono(b)), mono(c))
                            rhs = mul(mono(a), mul(mono(b), mono(c)))
                            if lhs != rhs:
                                ok, witness = False, f"({a})({b})({c})"
    checks.append(_report(f"{label}-associativity", ok, witness, bound=n_max))

    ok, witness = True, None
    for n in range(n_max + 1):
        for idx in enum(n):
            if _triple_left(comul_basis, idx) != _triple_right(comul_basis, idx):
                ok, witness = False, idx
    checks.append(_report(f"{label}-coassociativity", ok, witness, bound=n_max))

    ok, witness = True, None
    for total in range(2, n_max + 1):
        for i in range(1, total):
            for a in enum(i):
                for b in enum(total - i):
                    lhs = None
                    for idx, c in mul_basis(a, b).terms.items():
                        piece = comul_basis(idx).scale(c)
                        lhs = piece if lhs is None else lhs + piece
                    rhs = comul_basis(a).multiply(comul_basis(b), mul_basis)
                    if (lhs.terms if lhs is not None else {}) != rhs.terms:
                        ok, witness = False, f"({a})({b})"
    checks.append(_report(f"{label}-compatibility", ok, witness, bound=n_max))

    ok, witness = True, None
    for n in range(n_max + 1):
        for idx in enum(n):
            left = Element(basis)
            right = Element(basis)
            for (x, y), c in comul_basis(idx).terms.items():
                if x.size == 0:
                    left = left + mono(y).scale(c)
                if y.size == 0:
                    right = right + mono(x).scale(c)
            if left != mono(idx) or right != mono(idx):
                ok, witness = False, idx
    checks.append(_report(f"{label}-counit", ok, witness, bound=n_max))

    ok, witness = True, None
    unit = enum(0)[0]
    for n in range(n_max + 1):
        for idx in enum(n):
            want = mono(unit) if n == 0 else Element(basis)
            left = Element(basis)
            right = Element(basis)
            for (x, y), c in comul_basis(idx).terms.items():
                left = left + mul(antipode(mono(x)), mono(y)).scale(c)
                right = right + mul(mono(x), antipode(mono(y))).scale(c)
            if left != want or right != want:
                ok, witness = False, idx
    checks.append(_report(f"{label}-antipode-convolution", ok, witness,
                          bound=n_max))
    return checks


def verify_hopf(n_max):
    """Hopf axioms in the hub bases; composition side at n_max - 1."""
    checks = []
    checks += _hopf_suite("m", "m", sp.partitions_of, ncsym.m_mul,
                          ncsym.m_mul_basis, ncsym.m_comul_basis,
                          ncsym.antipode, n_max)
    checks += _hopf_suite("w", "w", sp.partitions_of, ncsym.w_mul,
                          ncsym.w_mul_basis, ncsym.w_comul_basis,
                          ncsym.antipode, n_max)
    comp_max = max(n_max - 1, 0)
    checks += _hopf_suite("M", "M", sc.compositions_of, ncqsym.M_mul,
                          ncqsym.M_mul_basis, ncqsym.M_comul_basis,
                          ncqsym.antipode, comp_max)
    checks += _hopf_suite("W", "W", sc.compositions_of, ncqsym.W_mul,
                          ncqsym.W_mul_basis, ncqsym.W_comul_basis,
                          ncqsym.antipode, comp_max)
    return checks


# ---------------------------------------------------------------------------
# Duality transposes


def _duality_suite(label, pbasis, dbasis, enum, pmul_basis, pcomul_basis,
                   dmul_basis, dcomul_basis, antipode, n_max):
    checks = []

    ok, witness = True, None
    for total in range(2, n_max + 1):
        for i in range(1, total):
            for a in enum(i):
                for b in enum(total - i):
                    prod = pmul_basis(a, b)
                    split = tensor(Element.monomial(pbasis, a),
                                   Element.monomial(pbasis, b))
                    for c in enum(total):
                        lhs = prod.terms.get(c, 0)
                        rhs = pairing_tensor(split, dcomul_basis(c))
                        if lhs != rhs:
                            ok, witness = False, f"[{a}.{b}, {c}]"
    checks.append(_report(f"{label}-product-coproduct-transpose", ok, witness,
                          bound=n_max))

    ok, witness = True, None
    for total in range(2, n_max + 1):
        for i in range(1, total):
            for a in enum(i):
                for b in enum(total - i):
                    prod = dmul_basis(a, b)
                    split = tensor(Element.monomial(dbasis, a),
                                   Element.monomial(dbasis, b))
                    for c in enum(total):
                        lhs = pairing_tensor(pcomul_basis(c), split)
                        rhs = prod.terms.get(c, 0)
                        if lhs != rhs:
                            ok, witness = False, f"[coproduct {c}, {a}(x){b}]"
    checks.append(_report(f"{label}-coproduct-product-transpose", ok, witness,
                          bound=n_max))

    ok, witness = True, None
    for n in range(n_max + 1):
        for a in enum(n):
            sa = antipode(Element.monomial(pbasis, a))
            for b in enum(n):
                sb = antipode(Element.monomial(dbasis, b))
                lhs = pairing(sa, Element.monomial(dbasis, b))
                rhs = pairing(Element.monomial(pbasis, a), sb)
                if lhs != rhs:
                    ok, witness = False, f"[S {a}, {b}]"
    checks.append(_report(f"{label}-antipode-transpose", ok, witness,
                          bound=n_max))
    return checks


def verify_duality(n_max):
    checks = _duality_suite("partition", "m", "w", sp.partitions_of,
                            ncsym.m_mul_basis, ncsym.m_comul_basis,
                            ncsym.w_mul_basis, ncsym.w_comul_basis,
                            ncsym.antipode, n_max)
    comp_max = max(n_max - 1, 0)
    checks += _duality_suite("composition", "M", "W", sc.compositions_of,
                             ncqsym.M_mul_basis, ncqsym.M_comul_basis,
                             ncqsym.W_mul_basis, ncqsym.W_comul_basis,
                             ncqsym.antipode, comp_max)
    return checks


# ---------------------------------------------------------------------------
# Multiplicativity theorems, verified at the monomial level


def verify_multiplicativity(n_max):
    checks = []

    ok, witness = True, None
    for total in range(2, n_max + 1):
        for i in range(1, total):
            for a in sp.partitions_of(i):
                for b in sp.partitions_of(total - i):
                    lhs = ncsym.m_mul(ncsym.p_expand(a), ncsym.p_expand(b))
                    if lhs != ncsym.p_expand(sp.concat(a, b)):
                        ok, witness = False, f"p_{a} p_{b}"
    checks.append(_report("p-concatenation-product", ok, witness, bound=n_max))

    ok, witness = True, None
    for total in range(2, n_max + 1):
        for i in range(1, total):
            for a in sp.partitions_of(i):
                for b in sp.partitions_of(total - i):
                    lhs = ncsym.m_mul(ncsym.q_expand(a), ncsym.q_expand(b))
                    if lhs != ncsym.q_expand(sp.concat(a, b)):
                        ok, witness = False, f"q_{a} q_{b}"
    for n in range(1, n_max + 1):
        for a in sp.partitions_of(n):
            prod = Element.monomial("m", sp.EMPTY)
            for f in sp.atomic_split(a):
                prod = ncsym.m_mul(prod, ncsym.q_expand(f))
            if prod != ncsym.q_expand(a):
                ok, witness = False, f"q-factorization of {a}"
    checks.append(_report("q-atomic-multiplicativity", ok, witness, bound=n_max))

    comp_max = max(n_max - 1, 0)
    ok, witness = True, None
    for total in range(2, comp_max + 1):
        for i in range(1, total):
            for phi in sc.compositions_of(i):
                for psi in sc.compositions_of(total - i):
                    lhs = ncqsym.M_mul(ncqsym.Q_expand(phi),
                                       ncqsym.Q_expand(psi))
                    rhs = Element.zero("M")
                    for g in sc.shifted_shuffle(phi, psi):
                        rhs = rhs + ncqsym.Q_expand(g)
                    if lhs != rhs:
                        ok, witness = False, f"Q_{phi} Q_{psi}"
    checks.append(_report("Q-shifted-shuffle-product", ok, witness,
                          bound=comp_max))

    ok, witness = True, None
    for total in range(2, comp_max + 1):
        for i in range(1, total):
            for phi in sc.compositions_of(i):
                for psi in sc.compositions_of(total - i):
                    lhs = ncqsym.W_mul(ncqsym.V_expand(phi),
                                       ncqsym.V_expand(psi))
                    if lhs != ncqsym.V_expand(sc.concat(phi, psi)):
                        ok, witness = False, f"V_{phi} V_{psi}"
    checks.append(_report("V-concatenation-product", ok, witness,
                          bound=comp_max))
    return checks


# ---------------------------------------------------------------------------
# Realization oracle


def verify_oracle(n_max):
    checks = []

    ok, witness = True, None
    for total in range(2, n_max + 1):
        for i in range(1, total):
            for a in sp.partitions_of(i):
                for b in sp.partitions_of(total - i):
                    poly = realization.word_mul(
                        realization.realize_m(a, total),
                        realization.realize_m(b, total))
                    try:
                        got = realization.reexpand(poly, "m")
                    except realization.RealizationError as exc:
                        ok, witness = False, f"m_{a} m_{b}: {exc}"
                        continue
                    if got != ncsym.m_mul_basis(a, b):
                        ok, witness = False, f"m_{a} m_{b}"
    checks.append(_report("m-product-oracle", ok, witness, bound=n_max))

    comp_max = max(n_max - 1, 0)
    ok, witness = True, None
    for total in range(2, comp_max + 1):
        for i in range(1, total):
            for phi in sc.compositions_of(i):
                for psi in sc.compositions_of(total - i):
                    poly = realization.word_mul(
                        realization.realize_M(phi, total),
                        realization.realize_M(psi, total))
                    try:
                        got = realization.reexpand(poly, "M")
                    except realization.RealizationError as exc:
                        ok, witness = False, f"M_{phi} M_{psi}: {exc}"
                        continue
                    if got != ncqsym.M_mul_basis(phi, psi):
                        ok, witness = False, f"M_{phi} M_{psi}"
                    if not realization.quasisym_check(poly):
                        ok, witness = False, f"M_{phi} M_{psi} not quasisym"
    checks.append(_report("M-product-oracle", ok, witness, bound=comp_max))
    return checks


# ---------------------------------------------------------------------------
# Poset suite


def verify_posets(n_max):
    checks = []

    ok, witness = True, None
    for n in range(1, n_max + 1):
        p = posets.build(sp.partitions_of(n), sp.star_leq)
        rank = p.ranks()
        if not p.is_ranked():
            ok, witness = False, f"n={n} not ranked"
        for i, a in enumerate(p.elements):
            if rank[i] != n - a.length:
                ok, witness = False, f"n={n} rank({a})"
            if p.covered_count(a) != n - a.length:
                ok, witness = False, f"n={n} covered-count({a})"
            if not p.downset_is_boolean(a):
                ok, witness = False, f"n={n} ideal({a})"
        if not p.is_eulerian_intervals():
            ok, witness = False, f"n={n} not Eulerian"
    checks.append(_report("partition-star-poset", ok, witness, bound=n_max))

    if n_max >= 4:
        a = sp.SetPartition.parse("{1,4|2|3}")
        atomic = sp.is_atomic(a)
        maximal = not sp.star_covers(a)
        ok = atomic and not maximal
        checks.append(_report("atomic-not-maximal-witness", ok,
                              f"atomic={atomic} maximal={maximal}"))

    comp_max = max(n_max - 1, 0)
    ok, witness = True, None
    for n in range(1, comp_max + 1):
        p = posets.build(sc.compositions_of(n), sc.star_leq)
        for comp in p.components():
            maxima = [x for x in comp
                      if not any(p.leq(x, y) and x != y for y in comp)]
            if len(maxima) != 1:
                ok, witness = False, f"n={n} component of {comp[0]}"
                continue
            top = maxima[0]
            if len(p.downset(top)) != len(comp) or not p.downset_is_boolean(top):
                ok, witness = False, f"n={n} component of {top}"
        decreasing = sc.SetComposition([(i,) for i in range(n, 0, -1)])
        comp_of = next(c for c in p.components() if decreasing in c)
        if len(comp_of) != 1:
            ok, witness = False, f"n={n} decreasing not isolated"
    checks.append(_report("composition-star-components", ok, witness,
                          bound=comp_max))

    ok, witness = True, None
    for n in range(1, comp_max + 1):
        for alpha in _int_compositions(n):
            cls = sc.alpha_class(n, alpha)
            for phi, psi in itertools.product(cls, repeat=2):
                if sc.sharp_leq(phi, psi) != sc.sharp_leq(
                        sc.reverse_complement(phi), sc.reverse_complement(psi)):
                    ok, witness = False, f"alpha={alpha} ({phi},{psi})"
    checks.append(_report("sharp-reversal-complement-isomorphism", ok, witness,
                          bound=comp_max))
    return checks


def _int_compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _int_compositions(n - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Series identities and the zeta factorization


def verify_series(n_max):
    return [counting.series_identity_check(
                which, trunc_part=n_max, trunc_comp=min(n_max, 7),
                trunc_sharp=min(n_max, 5))
            for which in ("i", "ii", "iii", "iv", "v", "vi")]


def verify_zeta(n_max):
    """p-in-q matrix is 0/1 unitriangular; times q-in-m it is the
    refinement zeta matrix."""
    checks = []
    for n in range(1, n_max + 1):
        basis = sp.partitions_of(n)
        pos = {a: i for i, a in enumerate(basis)}
        size = len(basis)
        pq = [[0] * size for _ in range(size)]
        qm = [[0] * size for _ in range(size)]
        ok, witness = True, None
        for a in basis:
            row = ncsym.to_q(ncsym.p_expand(a))
            for b, c in row.terms.items():
                pq[pos[a]][pos[b]] = c
                if c not in (0, 1):
                    ok, witness = False, f"p_{a} has coefficient {c} on q_{b}"
                if b != a and b.length >= a.length:
                    ok, witness = False, f"p_{a} not triangular at q_{b}"
            if row.terms.get(a) != 1:
                ok, witness = False, f"p_{a} diagonal"
            for b, c in ncsym.q_expand(a).terms.items():
                qm[pos[a]][pos[b]] = c
        if ok:
            for i, a in enumerate(basis):
                for j, b in enumerate(basis):
                    prod = sum(pq[i][k] * qm[k][j] for k in range(size))
                    want = 1 if sp.leq_refinement(a, b) else 0
                    if prod != want:
                        ok, witness = False, f"zeta({a},{b}) = {prod} != {want}"
        checks.append(_report("zeta-factorization", ok, witness, grade=n))
    return checks
