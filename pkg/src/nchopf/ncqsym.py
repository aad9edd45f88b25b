"""The Hopf algebra of quasi-symmetric functions in noncommuting
variables and its graded dual.

Bases: M (monomial) and Q (shifted-shuffle) on the primal side; W
(dual monomial), V (concatenation-multiplicative) and Qdual on the
dual side.  The antipode reuses the generic graded recursion with
this algebra's product/coproduct hooks.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import setcomp as sc
from .linalg import (Element, TensorElement, bilinear_extend, graded_antipode,
                     linear_extend, linear_extend_tensor, triangular_convert)
from .setcomp import SetComposition


def _initial_pair(n, k):
    """The set composition ([n])|([k]) used in the product condition."""
    parts = [p for p in (tuple(range(1, n + 1)),
                         tuple(range(n + 1, n + k + 1))) if p]
    return SetComposition(parts)


@lru_cache(maxsize=None)
def M_mul_basis(phi, psi):
    """M_phi M_psi = sum of M_gamma with wedge(([n])|([k]), gamma) = phi|psi."""
    n, k = phi.size, psi.size
    if n == 0:
        return Element.monomial("M", psi)
    if k == 0:
        return Element.monomial("M", phi)
    nk = _initial_pair(n, k)
    target = sc.concat(phi, psi)
    terms = [(g, 1) for g in sc.compositions_of(n + k) if sc.wedge(nk, g) == target]
    return Element("M", terms)


def M_mul(x, y):
    return bilinear_extend(M_mul_basis, x, y, zero=Element.zero("M"))


@lru_cache(maxsize=None)
def M_comul_basis(phi):
    """Cut the part sequence at every position, standardizing both runs."""
    ell = phi.length
    acc = []
    for i in range(ell + 1):
        left = sc.standardize(phi.parts[:i])
        right = sc.standardize(phi.parts[i:])
        acc.append(((left, right), 1))
    return TensorElement(("M", "M"), acc)


def M_comul(x):
    return linear_extend_tensor(M_comul_basis, x)


@lru_cache(maxsize=None)
def theta_basis(a):
    """theta(m_a): sum of M over all orderings of a's blocks."""
    acc = []
    for perm in itertools.permutations(a.blocks):
        acc.append((SetComposition(perm), 1))
    return Element("M", acc)


def theta(x):
    if x.basis != "m":
        raise ValueError("theta expects an m-basis element")
    return linear_extend(theta_basis, x)


def theta_star(x):
    """theta*(W_phi) = w of the underlying partition (forget the order)."""
    if x.basis != "W":
        raise ValueError("theta_star expects a W-basis element")
    return linear_extend(
        lambda phi: Element.monomial("w", sc.forget(phi)), x)


@lru_cache(maxsize=None)
def Q_expand(phi):
    """Q_phi = sum of M over the adjacent-separated-merge up-set."""
    return Element("M", [(g, 1) for g in sorted(sc.star_upset(phi), key=str)])


def to_M_from_Q(x):
    return linear_extend(Q_expand, x)


def to_Q(x):
    if x.basis != "M":
        raise ValueError("to_Q expects an M-basis element")
    return triangular_convert(x, "Q", Q_expand, lambda i: -i.length)


def Q_mul_basis(phi, psi):
    """Q-product: sum over the shifted shuffle of the part sequences."""
    return Element("Q", [(g, 1) for g in sc.shifted_shuffle(phi, psi)])


def Q_mul(x, y):
    return bilinear_extend(Q_mul_basis, x, y, zero=Element.zero("Q"))


@lru_cache(maxsize=None)
def Qdual_expand(phi):
    """Q*_phi as a signed sum of W over the down-set of phi.

    The Moebius-inverted dual over the boolean component; satisfies
    [Q_phi, Q*_psi] = delta.
    """
    return Element("W", [(psi, (-1) ** (psi.length - phi.length))
                         for psi in sorted(sc.star_downset(phi), key=str)])


def to_W_from_Qdual(x):
    return linear_extend(Qdual_expand, x)


def to_Qdual(x):
    if x.basis != "W":
        raise ValueError("to_Qdual expects a W-basis element")
    return triangular_convert(x, "Qdual", Qdual_expand, lambda i: i.length)


@lru_cache(maxsize=None)
def W_mul_basis(phi, psi):
    """W_phi W_psi: raise phi onto S, psi onto the complement, concatenate."""
    n, k = phi.size, psi.size
    acc = []
    universe = range(1, n + k + 1)
    for s in itertools.combinations(universe, n):
        comp = [x for x in universe if x not in s]
        parts = sc.raise_to(phi, s) + sc.raise_to(psi, comp)
        acc.append((SetComposition(parts), 1))
    return Element("W", acc)


def W_mul(x, y):
    return bilinear_extend(W_mul_basis, x, y, zero=Element.zero("W"))


@lru_cache(maxsize=None)
def W_comul_basis(phi):
    """Split via the wedge condition against ([k])|([n-k]) for each k."""
    n = phi.size
    acc = []
    for k in range(n + 1):
        left = sc.standardize(sc.restrict(phi, range(1, k + 1)))
        right = sc.standardize(sc.restrict(phi, range(k + 1, n + 1)))
        # the wedge of ([k])|([n-k]) with phi always splits as left|right
        acc.append(((left, right), 1))
    return TensorElement(("W", "W"), acc)


def W_comul(x):
    return linear_extend_tensor(W_comul_basis, x)


def W_comul_basis_wedge(phi):
    """Literal evaluation of the wedge condition, for cross-checking."""
    n = phi.size
    acc = []
    for k in range(n + 1):
        tk = _initial_pair(k, n - k)
        cut = sc.wedge(tk, phi) if n else phi
        for b in sc.compositions_of(k):
            for c in sc.compositions_of(n - k):
                if cut == sc.concat(b, c):
                    acc.append(((b, c), 1))
    return TensorElement(("W", "W"), acc)


@lru_cache(maxsize=None)
def V_expand(phi):
    """V_phi = sum of W over the run-standardization up-set of phi."""
    return Element("W", [(psi, 1)
                         for psi in sorted(sc.sharp_upset(phi), key=str)])


def to_W_from_V(x):
    return linear_extend(V_expand, x)


def to_V(x):
    if x.basis != "W":
        raise ValueError("to_V expects a W-basis element")
    # strictly larger elements have strictly fewer atomic factors
    return triangular_convert(x, "V", V_expand,
                              lambda i: -len(sc.atomic_split(i)))


def V_mul_basis(phi, psi):
    return Element.monomial("V", sc.concat(phi, psi))


def V_mul(x, y):
    return bilinear_extend(V_mul_basis, x, y, zero=Element.zero("V"))


_antipode_caches = {}


def antipode(x):
    """Antipode of a homogeneous element in any NCQSym/NCQSym* basis."""
    basis = x.basis
    if basis == "Q":
        x, basis = to_M_from_Q(x), "M"
    elif basis == "V":
        x, basis = to_W_from_V(x), "W"
    elif basis == "Qdual":
        x, basis = to_W_from_Qdual(x), "W"
    if basis == "M":
        cache = _antipode_caches.setdefault("M", {})
        return graded_antipode(x, M_mul_basis, M_comul_basis, sc.EMPTY, cache)
    if basis == "W":
        cache = _antipode_caches.setdefault("W", {})
        return graded_antipode(x, W_mul_basis, W_comul_basis, sc.EMPTY, cache)
    raise ValueError(f"antipode not defined for basis {basis!r}")


def atomic_generators(n):
    return tuple(phi for phi in sc.compositions_of(n)
                 if n and sc.is_atomic(phi))


def verify_free_cofree(n_max):
    """Q-triangularity under the word order and atomic-V monomial counts."""
    from .counting import ordered_bell
    checks = []
    atom_count = {k: len(atomic_generators(k)) for k in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        status = "pass"
        witness = None
        for phi in sc.compositions_of(n):
            factors = sc.atomic_split(phi)
            prod = Element.monomial("Q", sc.EMPTY)
            for f in factors:
                prod = Q_mul(prod, Element.monomial("Q", f))
            if prod.terms.get(phi) != 1:
                status, witness = "fail", f"Q-product of {phi} factors misses Q_{phi}"
                continue
            wphi = sc.word_of(phi)
            for g in prod.terms:
                if g != phi and not sc.word_of(g) > wphi:
                    status, witness = "fail", f"{g} not word-larger than {phi}"
        checks.append({"check": "Q-triangularity", "grade": n,
                       "status": status,
                       **({"witness": witness} if witness else {})})

        counts = [1] + [0] * n
        for total in range(1, n + 1):
            counts[total] = sum(atom_count.get(k, 0) * counts[total - k]
                                for k in range(1, total + 1))
        ok = counts[n] == ordered_bell(n)
        checks.append({"check": "atomic-V-monomial-count", "grade": n,
                       "status": "pass" if ok else "fail",
                       **({} if ok else {"witness":
                           f"{counts[n]} != {ordered_bell(n)}"})})
    return checks


def to_basis(x, target):
    """Convert between the NCQSym bases M/Q and duals W/V/Qdual."""
    primal = {"M", "Q"}
    dual = {"W", "V", "Qdual"}
    if x.basis in primal and target in primal:
        hub = {"M": lambda e: e, "Q": to_M_from_Q}[x.basis](x)
        return {"M": lambda e: e, "Q": to_Q}[target](hub)
    if x.basis in dual and target in dual:
        hub = {"W": lambda e: e, "V": to_W_from_V,
               "Qdual": to_W_from_Qdual}[x.basis](x)
        return {"W": lambda e: e, "V": to_V, "Qdual": to_Qdual}[target](hub)
    raise ValueError(f"no conversion from {x.basis} to {target}")


def mul(x, y):
    if x.basis != y.basis:
        raise ValueError("operands must share a basis")
    table = {"M": M_mul, "Q": Q_mul, "W": W_mul, "V": V_mul}
    if x.basis not in table:
        raise ValueError(f"no product rule in basis {x.basis!r}")
    return table[x.basis](x, y)


def comul(x):
    table = {"M": M_comul, "W": W_comul}
    if x.basis not in table:
        raise ValueError(f"no coproduct rule in basis {x.basis!r}")
    return table[x.basis](x)
