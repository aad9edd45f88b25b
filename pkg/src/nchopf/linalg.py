"""Exact sparse integer linear combinations over tagged bases.

An Element is a finite map from basis indices (SetPartition or
SetComposition values) to nonzero Python ints.  TensorElement holds
pairs of indices for coproduct output.  Everything is immutable in
spirit: arithmetic returns new values and never mutates inputs.
"""

from __future__ import annotations

import json

from .setpart import SetPartition
from .setcomp import SetComposition

PARTITION_BASES = ("m", "p", "q", "w", "qdual")
COMPOSITION_BASES = ("M", "Q", "W", "V", "Qdual")
ALL_BASES = PARTITION_BASES + COMPOSITION_BASES


class BasisMismatch(ValueError):
    pass


def index_kind(basis):
    if basis in PARTITION_BASES:
        return SetPartition
    if basis in COMPOSITION_BASES:
        return SetComposition
    raise BasisMismatch(f"unknown basis tag {basis!r}")


class Element:
    """Sparse integer combination of basis elements of one tagged basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=()):
        index_kind(basis)
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for idx, c in items:
            if c:
                acc[idx] = acc.get(idx, 0) + c
                if not acc[idx]:
                    del acc[idx]
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @staticmethod
    def zero(basis):
        return Element(basis)

    @staticmethod
    def monomial(basis, idx, coeff=1):
        return Element(basis, [(idx, coeff)])

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"cannot combine Element with {type(other).__name__}")
        if self.basis != other.basis:
            raise BasisMismatch(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for idx, c in other.terms.items():
            acc[idx] = acc.get(idx, 0) + c
        return Element(self.basis, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return Element(self.basis, {i: c * v for i, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Element) and self.basis == other.basis
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def grades(self):
        return sorted({idx.size for idx in self.terms})

    def homogeneous_grade(self):
        gs = self.grades()
        if len(gs) > 1:
            raise ValueError(f"element is not homogeneous: grades {gs}")
        return gs[0] if gs else None

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for idx in sorted(self.terms, key=str):
            c = self.terms[idx]
            mono = f"{self.basis}_{idx}"
            if bits:
                sign = " + " if c > 0 else " - "
            else:
                sign = "" if c > 0 else "-"
            c = abs(c)
            bits.append(sign + (mono if c == 1 else f"{c} {mono}"))
        return "".join(bits)

    def __repr__(self):
        return f"<Element {self}>"


class TensorElement:
    """Sparse integer combination over pairs of basis indices."""

    __slots__ = ("bases", "terms")

    def __init__(self, bases, terms=()):
        for b in bases:
            index_kind(b)
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for pair, c in items:
            if c:
                acc[pair] = acc.get(pair, 0) + c
                if not acc[pair]:
                    del acc[pair]
        object.__setattr__(self, "bases", tuple(bases))
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    def _check(self, other):
        if self.bases != other.bases:
            raise BasisMismatch(f"basis mismatch: {self.bases} vs {other.bases}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for pair, c in other.terms.items():
            acc[pair] = acc.get(pair, 0) + c
        return TensorElement(self.bases, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorElement(self.bases, {p: c * v for p, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.bases == other.bases
                and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def swap(self):
        return TensorElement(self.bases[::-1],
                             {(b, a): c for (a, b), c in self.terms.items()})

    def multiply(self, other, mul):
        """(x tensor y)(u tensor v) componentwise, products via mul(i, j).

        All gradings used here are unsigned, so no Koszul sign appears.
        """
        self._check(other)
        acc = {}
        for (a, b), c1 in self.terms.items():
            for (u, v), c2 in other.terms.items():
                left = mul(a, u)
                right = mul(b, v)
                for i1, d1 in left.terms.items():
                    for i2, d2 in right.terms.items():
                        key = (i1, i2)
                        acc[key] = acc.get(key, 0) + c1 * c2 * d1 * d2
        return TensorElement(self.bases, acc)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for a, b in sorted(self.terms, key=lambda p: (str(p[0]), str(p[1]))):
            c = self.terms[(a, b)]
            mono = f"{self.bases[0]}_{a} (x) {self.bases[1]}_{b}"
            if bits:
                sign = " + " if c > 0 else " - "
            else:
                sign = "" if c > 0 else "-"
            c = abs(c)
            bits.append(sign + (mono if c == 1 else f"{c} {mono}"))
        return "".join(bits)

    def __repr__(self):
        return f"<TensorElement {self}>"


def tensor(x, y):
    acc = {}
    for i, c in x.terms.items():
        for j, d in y.terms.items():
            acc[(i, j)] = c * d
    return TensorElement((x.basis, y.basis), acc)


def linear_extend(f, x):
    """Extend a basis-index map f(idx) -> Element linearly to x."""
    out = None
    for idx, c in x.terms.items():
        piece = f(idx).scale(c)
        out = piece if out is None else out + piece
    if out is None:
        raise ValueError("cannot extend over the zero element without a target basis")
    return out


def linear_extend_tensor(f, x):
    """Extend a basis-index map f(idx) -> TensorElement linearly to x."""
    out = None
    for idx, c in x.terms.items():
        piece = f(idx).scale(c)
        out = piece if out is None else out + piece
    if out is None:
        raise ValueError("cannot extend over the zero element without a target basis")
    return out


def bilinear_extend(f, x, y, zero=None):
    """Extend a basis-pair map f(i, j) -> Element bilinearly to (x, y)."""
    out = zero
    for i, c in x.terms.items():
        for j, d in y.terms.items():
            piece = f(i, j).scale(c * d)
            out = piece if out is None else out + piece
    if out is None:
        raise ValueError("bilinear extension of empty operands needs a zero element")
    return out


_PAIRABLE = {("m", "w"), ("M", "W")}


def pairing(x, y):
    """Duality pairing of a monomial-basis element against its dual basis.

    x must be in basis m (partitions) or M (compositions), y in w or W.
    """
    if (x.basis, y.basis) not in _PAIRABLE:
        raise BasisMismatch(
            f"pairing needs (m,w) or (M,W), got ({x.basis},{y.basis})")
    return sum(c * y.terms.get(idx, 0) for idx, c in x.terms.items())


def pairing_tensor(tx, ty):
    """[a (x) b, u (x) v] = [a,u][b,v], extended bilinearly."""
    if (tx.bases[0], ty.bases[0]) not in _PAIRABLE or \
       (tx.bases[1], ty.bases[1]) not in _PAIRABLE:
        raise BasisMismatch(f"pairing needs (m,w)/(M,W) pairs, got {tx.bases} vs {ty.bases}")
    total = 0
    for (a, b), c in tx.terms.items():
        total += c * ty.terms.get((a, b), 0)
    return total


def triangular_convert(x, target_basis, expand, sort_key):
    """Rewrite x (given in the expansion basis) in the target basis.

    expand(idx) must return idx's expansion with unit leading coefficient
    on idx and all other terms strictly later in sort_key.  The loop
    peels leading terms; exact over the integers.
    """
    rest = dict(x.terms)
    out = {}
    key = lambda i: (sort_key(i), str(i))
    while rest:
        idx = min(rest, key=key)
        c = rest.pop(idx)
        out[idx] = out.get(idx, 0) + c
        for j, d in expand(idx).terms.items():
            if j == idx:
                continue
            rest[j] = rest.get(j, 0) - c * d
            if not rest[j]:
                del rest[j]
    return Element(target_basis, out)


def graded_antipode(x, mul, comul, unit_index, _cache=None):
    """Antipode via the graded recursion S(x) = -x - sum S(x') x''.

    mul(i, j) -> Element and comul(i) -> TensorElement are the Hopf
    structure hooks in x's basis; unit_index is the grade-0 index.
    x must be homogeneous.
    """
    x.homogeneous_grade()
    cache = _cache if _cache is not None else {}

    def s_basis(idx):
        if idx in cache:
            return cache[idx]
        if idx.size == 0:
            out = Element.monomial(x.basis, idx)
        else:
            out = Element.monomial(x.basis, idx, -1)
            for (a, b), c in comul(idx).terms.items():
                if a.size == 0 or b.size == 0:
                    continue
                sa = s_basis(a)
                for i, d in sa.terms.items():
                    out = out + mul(i, b).scale(-c * d)
        cache[idx] = out
        return out

    return linear_extend(s_basis, x) if x.terms else x


def element_to_json(x):
    """JSON form {"basis": ..., "terms": {...}} with canonical key order."""
    terms = {str(idx): c for idx, c in x.terms.items()}
    return json.dumps({"basis": x.basis,
                       "terms": {k: terms[k] for k in sorted(terms)}})


def element_from_json(text):
    data = json.loads(text)
    basis = data["basis"]
    kind = index_kind(basis)
    return Element(basis, [(kind.parse(k), int(c))
                           for k, c in data["terms"].items()])
