"""Polynomial realization oracle: words in noncommuting variables.

Realizes the monomial bases as honest sums of words, multiplies words
by concatenation, and re-expands word polynomials back into the
monomial bases.  This path is independent of the structure-constant
formulas and is used to validate them.
"""

from __future__ import annotations

import itertools

from .linalg import Element
from .setcomp import SetComposition, delta_of_sequence
from .setpart import SetPartition


class RealizationError(ValueError):
    pass


class WordPolynomial:
    """Finite integer combination of words over the alphabet {1..n_vars}."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for word, c in items:
            word = tuple(word)
            if any(not (1 <= x <= n_vars) for x in word):
                raise RealizationError(f"letter out of range in {word}")
            if c:
                acc[word] = acc.get(word, 0) + c
                if not acc[word]:
                    del acc[word]
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("WordPolynomial is immutable")

    def __eq__(self, other):
        return (isinstance(other, WordPolynomial)
                and self.n_vars == other.n_vars and self.terms == other.terms)

    def __add__(self, other):
        if self.n_vars != other.n_vars:
            raise RealizationError("alphabet size mismatch")
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return WordPolynomial(self.n_vars, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return WordPolynomial(self.n_vars, {w: c * v for w, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            mono = "".join(f"x{i}" for i in w) or "1"
            bits.append(f"{'+' if c >= 0 else '-'}{abs(c) if abs(c) != 1 else ''}{mono}")
        return " ".join(bits)

    __repr__ = __str__


def word_mul(p, q):
    """Concatenation product, extended bilinearly."""
    if p.n_vars != q.n_vars:
        raise RealizationError("alphabet size mismatch")
    acc = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            w = w1 + w2
            acc[w] = acc.get(w, 0) + c1 * c2
    return WordPolynomial(p.n_vars, acc)


def realize_m(a, n_vars):
    """Sum over injective assignments of a's blocks to variable values.

    Empty (flagged lossy) when n_vars < number of blocks.
    """
    ell = a.length
    if n_vars < ell:
        return WordPolynomial(n_vars)
    block_of = {}
    for j, blk in enumerate(a.blocks):
        for x in blk:
            block_of[x] = j
    acc = {}
    for values in itertools.permutations(range(1, n_vars + 1), ell):
        word = tuple(values[block_of[i]] for i in range(1, a.size + 1))
        acc[word] = acc.get(word, 0) + 1
    if a.size == 0:
        acc[()] = 1
    return WordPolynomial(n_vars, acc)


def realize_M(phi, n_vars):
    """Sum over value sequences whose level composition is phi.

    The j-th part receives the j-th smallest chosen value, so the sum
    runs over increasing value tuples.
    """
    ell = phi.length
    if n_vars < ell:
        return WordPolynomial(n_vars)
    part_of = {}
    for j, p in enumerate(phi.parts):
        for x in p:
            part_of[x] = j
    acc = {}
    for values in itertools.combinations(range(1, n_vars + 1), ell):
        word = tuple(values[part_of[i]] for i in range(1, phi.size + 1))
        acc[word] = acc.get(word, 0) + 1
    if phi.size == 0:
        acc[()] = 1
    return WordPolynomial(n_vars, acc)


def _pattern_m(word):
    """Partition of positions by equal letters."""
    groups = {}
    for i, x in enumerate(word, start=1):
        groups.setdefault(x, []).append(i)
    return SetPartition(groups.values())


def _pattern_M(word):
    return delta_of_sequence(word) if word else SetComposition(())


def reexpand(p, kind):
    """Invert the realization: classify words by value pattern.

    kind is "m" or "M".  Any residual that is not a realization of a
    pattern is an error, never silently dropped.
    """
    if kind == "m":
        pattern, realize = _pattern_m, realize_m
    elif kind == "M":
        pattern, realize = _pattern_M, realize_M
    else:
        raise RealizationError(f"unknown basis kind {kind!r}")
    coeffs = {}
    for word, c in p.terms.items():
        pat = pattern(word)
        if pat in coeffs:
            continue
        coeffs[pat] = c
    residual = p
    for pat, c in coeffs.items():
        residual = residual - realize(pat, p.n_vars).scale(c)
    if not residual.is_zero():
        witness = sorted(residual.terms)[0]
        raise RealizationError(
            f"polynomial is not {kind}-expressible; residual at word {witness}")
    return Element(kind, [(pat, c) for pat, c in coeffs.items()])


def quasisym_check(p):
    """True iff coefficients are constant on level-pattern classes."""
    seen = set()
    for word in p.terms:
        pat = (_pattern_M(word), len(word))
        if pat in seen:
            continue
        seen.add(pat)
        phi, length = pat
        coeff = p.terms[word]
        part_of = {}
        for j, pp in enumerate(phi.parts):
            for x in pp:
                part_of[x] = j
        for values in itertools.combinations(range(1, p.n_vars + 1), phi.length):
            other = tuple(values[part_of[i]] for i in range(1, length + 1))
            if p.terms.get(other, 0) != coeff:
                return False
    return True
