"""Set partitions of [n] and the combinatorial operations on them.

A set partition is stored canonically: blocks sorted by minimum element,
elements ascending inside each block.  All values are immutable and
hashable, so they can index sparse linear combinations and be memoized
freely.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class SetPartitionError(ValueError):
    """Raised on malformed input (duplicates, gaps, empty blocks)."""


class SetPartition:
    """Canonical partition of {1..n} into disjoint nonempty blocks.

    n == 0 gives the empty partition (no blocks), which indexes the unit
    of the algebras built on top of this module.
    """

    __slots__ = ("blocks", "size", "_hash")

    def __init__(self, blocks):
        bl = []
        seen = set()
        for b in blocks:
            b = tuple(sorted(b))
            if not b:
                raise SetPartitionError("empty block")
            for x in b:
                if not isinstance(x, int) or x < 1:
                    raise SetPartitionError(f"bad element {x!r}")
                if x in seen:
                    raise SetPartitionError(f"duplicate element {x}")
                seen.add(x)
            bl.append(b)
        n = len(seen)
        if seen:
            for i in range(1, n + 1):
                if i not in seen:
                    raise SetPartitionError(f"gap in ground set: missing {i}")
        bl.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(bl))
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "_hash", hash((n,) + tuple(bl)))

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    @property
    def length(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # arbitrary but deterministic; canonical-string order
        return str(self) < str(other)

    def __str__(self):
        return "{" + "|".join(",".join(str(x) for x in b) for b in self.blocks) + "}"

    def __repr__(self):
        return f"SetPartition.parse({str(self)!r})"

    @staticmethod
    def parse(text):
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise SetPartitionError(f"expected {{...}}, got {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return SetPartition(())
        blocks = []
        for part in inner.split("|"):
            elems = []
            for tok in part.split(","):
                tok = tok.strip()
                if not tok:
                    raise SetPartitionError(f"empty element in block {part!r}")
                try:
                    elems.append(int(tok))
                except ValueError:
                    raise SetPartitionError(f"bad element {tok!r}") from None
            blocks.append(elems)
        return SetPartition(blocks)


EMPTY = SetPartition(())


@lru_cache(maxsize=None)
def partitions_of(n):
    """All set partitions of [n], in canonical-string order."""
    if n < 0:
        raise SetPartitionError("negative size")
    out = []

    def rec(i, blocks):
        if i > n:
            out.append(SetPartition(blocks))
            return
        for j in range(len(blocks)):
            rec(i + 1, blocks[:j] + [blocks[j] + (i,)] + blocks[j + 1:])
        rec(i + 1, blocks + [(i,)])

    rec(1, [])
    out.sort(key=str)
    return tuple(out)


def partitions_by_length(n, k):
    return tuple(a for a in partitions_of(n) if a.length == k)


def _check_sizes(a, b):
    if a.size != b.size:
        raise SetPartitionError(f"size mismatch: {a.size} != {b.size}")


def meet(a, b):
    """Greatest lower bound in refinement order (pairwise intersections)."""
    _check_sizes(a, b)
    blocks = []
    for x in a.blocks:
        sx = set(x)
        for y in b.blocks:
            inter = sx.intersection(y)
            if inter:
                blocks.append(inter)
    return SetPartition(blocks)


def join(a, b):
    """Least upper bound in refinement order (union-find closure)."""
    _check_sizes(a, b)
    parent = list(range(a.size + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blk in a.blocks + b.blocks:
        for x in blk[1:]:
            parent[find(x)] = find(blk[0])
    groups = {}
    for x in range(1, a.size + 1):
        groups.setdefault(find(x), []).append(x)
    return SetPartition(groups.values())


def leq_refinement(a, b):
    """True iff every block of a lies inside some block of b."""
    _check_sizes(a, b)
    owner = {}
    for j, blk in enumerate(b.blocks):
        for x in blk:
            owner[x] = j
    for blk in a.blocks:
        if len({owner[x] for x in blk}) != 1:
            return False
    return True


def concat(a, b):
    """The bar operation a|b: b's entries shifted up by |a|."""
    n = a.size
    return SetPartition(a.blocks + tuple(tuple(x + n for x in blk) for blk in b.blocks))


def restrict(a, keep):
    """Blocks of a intersected with keep, empty blocks dropped.

    Returns a tuple of blocks over the subset, not a SetPartition.
    """
    keep = set(keep)
    if not keep.issubset(range(1, a.size + 1)):
        raise SetPartitionError("restriction set not a subset of the ground set")
    out = []
    for blk in a.blocks:
        nb = tuple(x for x in blk if x in keep)
        if nb:
            out.append(nb)
    return tuple(out)


def standardize(blocks):
    """Order-preserving relabeling of a partial partition onto {1..k}."""
    support = sorted(x for blk in blocks for x in blk)
    relabel = {x: i + 1 for i, x in enumerate(support)}
    return SetPartition(tuple(tuple(relabel[x] for x in blk) for blk in blocks))


def raise_to(a, support):
    """Relabel a's entries order-preservingly onto the sorted support.

    Returns a tuple of blocks over the support (inverse of standardize).
    """
    support = sorted(support)
    if len(support) != a.size:
        raise SetPartitionError("support size does not match partition size")
    relabel = {i + 1: x for i, x in enumerate(support)}
    return tuple(tuple(relabel[x] for x in blk) for blk in a.blocks)


@lru_cache(maxsize=None)
def atomic_split(a):
    """The factorization a = a1 | a2 | ... into atomic pieces.

    Cuts at every prefix [r] that is a union of blocks.  The empty
    partition yields the empty factor sequence (unit convention).
    """
    n = a.size
    if n == 0:
        return ()
    reach = {}
    for blk in a.blocks:
        top = blk[-1]
        for x in blk:
            reach[x] = top
    cuts = []
    hi = 0
    for r in range(1, n + 1):
        hi = max(hi, reach[r])
        if hi == r:
            cuts.append(r)
    factors = []
    lo = 0
    for r in cuts:
        keep = range(lo + 1, r + 1)
        factors.append(standardize(restrict(a, keep)))
        lo = r
    return tuple(factors)


def is_atomic(a):
    return a.size > 0 and len(atomic_split(a)) == 1


def partition_word(a):
    """w(a): letter i is the index of the atomic factor containing position i."""
    word = []
    for j, f in enumerate(atomic_split(a), start=1):
        word.extend([j] * f.size)
    return tuple(word)


def atom_key(a):
    """Sort key realizing the total order on set partitions.

    Compares by size, then length, then the factor word, with the
    canonical string as a final tie-break so the order is total.
    """
    return (a.size, a.length, partition_word(a), str(a))


def cmp_atoms(a, b):
    ka, kb = atom_key(a), atom_key(b)
    return (ka > kb) - (ka < kb)


def length_lex_key(a):
    """Sort key for the order comparing by factor count then factor word."""
    factors = atomic_split(a)
    return (len(factors), tuple(atom_key(f) for f in factors))


def cmp_length_lex(a, b):
    ka, kb = length_lex_key(a), length_lex_key(b)
    return (ka > kb) - (ka < kb)


def is_lyndon(a):
    """True iff a's factor word is strictly below all nontrivial rotations."""
    if a.size == 0:
        raise SetPartitionError("empty partition has no Lyndon status")
    word = tuple(atom_key(f) for f in atomic_split(a))
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_factorize(word, key=atom_key):
    """Chen-Fox-Lyndon factorization of a word (Duval's algorithm).

    Returns the unique nonincreasing sequence of Lyndon factors whose
    concatenation is the word.
    """
    word = tuple(word)
    ks = [key(x) for x in word]
    n = len(word)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and ks[k] <= ks[j]:
            k = i if ks[k] < ks[j] else k + 1
            j += 1
        while i <= k:
            factors.append(word[i:i + j - k])
            i += j - k
    return factors


def star_covers(a):
    """Merges of two blocks b1, b2 with max(b1) < min(b2)."""
    out = set()
    bl = a.blocks
    for i, j in itertools.combinations(range(len(bl)), 2):
        for x, y in ((bl[i], bl[j]), (bl[j], bl[i])):
            if x[-1] < y[0]:
                rest = [bl[r] for r in range(len(bl)) if r not in (i, j)]
                out.add(SetPartition(rest + [x + y]))
    return out


@lru_cache(maxsize=None)
def star_upset(a):
    """All b with a <=* b (reflexive-transitive closure of the covers)."""
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            for y in star_covers(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def star_leq(a, b):
    _check_sizes(a, b)
    return b in star_upset(a)


def star_downset(a):
    """All b with b <=* a, by filtering the grade (desk scale)."""
    return frozenset(b for b in partitions_of(a.size) if a in star_upset(b))


def phi_set(a):
    """Elements that are not maximal in their block."""
    return frozenset(x for blk in a.blocks for x in blk[:-1])
