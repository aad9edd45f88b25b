"""Set compositions (ordered set partitions) and their operations.

Part order is significant everywhere; only the elements inside a block
are normalized (ascending).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .setpart import SetPartition


class SetCompositionError(ValueError):
    """Raised on malformed input (duplicates, gaps, empty blocks)."""


class SetComposition:
    """Ordered sequence of disjoint nonempty blocks covering {1..n}."""

    __slots__ = ("parts", "size", "_hash")

    def __init__(self, parts):
        pl = []
        seen = set()
        for p in parts:
            p = tuple(sorted(p))
            if not p:
                raise SetCompositionError("empty part")
            for x in p:
                if not isinstance(x, int) or x < 1:
                    raise SetCompositionError(f"bad element {x!r}")
                if x in seen:
                    raise SetCompositionError(f"duplicate element {x}")
                seen.add(x)
            pl.append(p)
        n = len(seen)
        if seen:
            for i in range(1, n + 1):
                if i not in seen:
                    raise SetCompositionError(f"gap in ground set: missing {i}")
        object.__setattr__(self, "parts", tuple(pl))
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "_hash", hash(("SC",) + tuple(pl)))

    def __setattr__(self, name, value):
        raise AttributeError("SetComposition is immutable")

    @property
    def length(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, SetComposition) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return str(self) < str(other)

    def __str__(self):
        return "(" + "|".join(",".join(str(x) for x in p) for p in self.parts) + ")"

    def __repr__(self):
        return f"SetComposition.parse({str(self)!r})"

    @staticmethod
    def parse(text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise SetCompositionError(f"expected (...), got {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return SetComposition(())
        parts = []
        for part in inner.split("|"):
            elems = []
            for tok in part.split(","):
                tok = tok.strip()
                if not tok:
                    raise SetCompositionError(f"empty element in part {part!r}")
                try:
                    elems.append(int(tok))
                except ValueError:
                    raise SetCompositionError(f"bad element {tok!r}") from None
            parts.append(elems)
        return SetComposition(parts)


EMPTY = SetComposition(())


@lru_cache(maxsize=None)
def compositions_of(n):
    """All set compositions of [n], in canonical-string order."""
    if n < 0:
        raise SetCompositionError("negative size")
    if n == 0:
        return (EMPTY,)
    current = [((1,),)]
    for i in range(2, n + 1):
        nxt = []
        for parts in current:
            for j, p in enumerate(parts):
                nxt.append(parts[:j] + (p + (i,),) + parts[j + 1:])
            for j in range(len(parts) + 1):
                nxt.append(parts[:j] + ((i,),) + parts[j:])
        current = nxt
    out = [SetComposition(parts) for parts in current]
    out.sort(key=str)
    return tuple(out)


def _check_sizes(a, b):
    if a.size != b.size:
        raise SetCompositionError(f"size mismatch: {a.size} != {b.size}")


def wedge(phi, psi):
    """The noncommutative pseudo-meet: intersections, phi-part outer.

    Empty intersections are dropped so every part is nonempty.
    """
    _check_sizes(phi, psi)
    parts = []
    for p in phi.parts:
        sp = set(p)
        for q in psi.parts:
            inter = sp.intersection(q)
            if inter:
                parts.append(sorted(inter))
    return SetComposition(parts)


def refinement_upset(phi):
    """All coarsenings of phi: groupings of consecutive parts."""
    ell = phi.length
    out = set()
    for cutmask in range(1 << max(ell - 1, 0)):
        parts = []
        cur = []
        for i, p in enumerate(phi.parts):
            cur.extend(p)
            if i == ell - 1 or not (cutmask >> i) & 1:
                parts.append(cur)
                cur = []
        out.add(SetComposition(parts))
    if ell == 0:
        out.add(phi)
    return out


def vee(phi, psi):
    """Least common coarsening; exists and is unique in this order."""
    _check_sizes(phi, psi)
    common = refinement_upset(phi) & refinement_upset(psi)
    if not common:
        raise SetCompositionError("no common coarsening")
    best = min(len(c.parts) for c in common)
    mins = [c for c in common if len(c.parts) == best]
    if len(mins) != 1:
        raise SetCompositionError(f"least upper bound not unique: {mins}")
    return mins[0]


def leq_refinement(phi, psi):
    """phi <= psi: parts land in psi's parts, consecutively."""
    _check_sizes(phi, psi)
    owner = {}
    for j, p in enumerate(psi.parts):
        for x in p:
            owner[x] = j
    last = None
    for p in phi.parts:
        js = {owner[x] for x in p}
        if len(js) != 1:
            return False
        j = js.pop()
        if last is not None and j not in (last, last + 1):
            return False
        last = j
    return True


def concat(phi, psi):
    n = phi.size
    return SetComposition(phi.parts + tuple(tuple(x + n for x in p) for p in psi.parts))


def restrict(phi, keep):
    """Parts intersected with keep in part order; empties dropped."""
    keep = set(keep)
    if not keep.issubset(range(1, phi.size + 1)):
        raise SetCompositionError("restriction set not a subset of the ground set")
    out = []
    for p in phi.parts:
        np_ = tuple(x for x in p if x in keep)
        if np_:
            out.append(np_)
    return tuple(out)


def standardize(parts):
    """Order-preserving relabeling onto {1..k}, part order kept."""
    support = sorted(x for p in parts for x in p)
    relabel = {x: i + 1 for i, x in enumerate(support)}
    return SetComposition(tuple(tuple(relabel[x] for x in p) for p in parts))


def raise_to(phi, support):
    """Relabel entries order-preservingly onto the sorted support."""
    support = sorted(support)
    if len(support) != phi.size:
        raise SetCompositionError("support size does not match composition size")
    relabel = {i + 1: x for i, x in enumerate(support)}
    return tuple(tuple(relabel[x] for x in p) for p in phi.parts)


def delta_of_sequence(gamma):
    """Set composition whose part j collects positions of the j-th
    smallest distinct value of the sequence."""
    gamma = tuple(gamma)
    if not gamma:
        raise SetCompositionError("empty sequence")
    values = sorted(set(gamma))
    rank = {v: i for i, v in enumerate(values)}
    parts = [[] for _ in values]
    for i, g in enumerate(gamma, start=1):
        parts[rank[g]].append(i)
    return SetComposition(parts)


def alpha(phi):
    """Composition of part sizes, in order."""
    return tuple(len(p) for p in phi.parts)


def forget(phi):
    """Forget part order: the underlying set partition."""
    return SetPartition(phi.parts)


@lru_cache(maxsize=None)
def atomic_split(phi):
    """Cut before every prefix of parts whose union is an initial segment."""
    if phi.size == 0:
        return ()
    factors = []
    run = []
    covered = 0
    for p in phi.parts:
        run.append(p)
        covered += len(p)
        if max(x for q in run for x in q) == covered:
            factors.append(standardize(run))
            run = []
    # union of all parts is [n], so the last run always closes
    return tuple(factors)


def is_atomic(phi):
    return phi.size > 0 and len(atomic_split(phi)) == 1


def star_covers(phi):
    """Merges of adjacent parts with all entries of the left below the right."""
    out = set()
    parts = phi.parts
    for i in range(len(parts) - 1):
        if parts[i][-1] < parts[i + 1][0]:
            merged = parts[:i] + (parts[i] + parts[i + 1],) + parts[i + 2:]
            out.add(SetComposition(merged))
    return out


@lru_cache(maxsize=None)
def star_upset(phi):
    seen = {phi}
    frontier = [phi]
    while frontier:
        nxt = []
        for x in frontier:
            for y in star_covers(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def star_leq(phi, psi):
    _check_sizes(phi, psi)
    return psi in star_upset(phi)


def star_downset(phi):
    return frozenset(psi for psi in compositions_of(phi.size) if phi in star_upset(psi))


def sharp_leq(phi, psi):
    """phi <=# psi: equal part-size compositions, and phi's atomic factors
    are the standardizations of the corresponding runs of psi's parts."""
    _check_sizes(phi, psi)
    if alpha(phi) != alpha(psi):
        return False
    pos = 0
    for factor in atomic_split(phi):
        run = psi.parts[pos:pos + factor.length]
        if standardize(run) != factor:
            return False
        pos += factor.length
    return True


def sharp_upset(phi):
    return frozenset(psi for psi in alpha_class(phi.size, alpha(phi))
                     if sharp_leq(phi, psi))


@lru_cache(maxsize=None)
def alpha_class(n, comp):
    """All set compositions of [n] with part sizes comp, built directly."""
    if sum(comp) != n or any(c < 1 for c in comp):
        return ()
    out = []

    def rec(remaining, idx, parts):
        if idx == len(comp):
            out.append(SetComposition(parts))
            return
        for chosen in itertools.combinations(remaining, comp[idx]):
            rest = tuple(x for x in remaining if x not in chosen)
            rec(rest, idx + 1, parts + [chosen])

    rec(tuple(range(1, n + 1)), 0, [])
    out.sort(key=str)
    return tuple(out)


def shifted_shuffle(phi, psi):
    """All interleavings of phi's parts with psi's parts raised by |phi|."""
    n = phi.size
    raised = tuple(tuple(x + n for x in p) for p in psi.parts)
    la, lb = phi.length, len(raised)
    out = []
    for positions in itertools.combinations(range(la + lb), la):
        pos = set(positions)
        ia = ib = 0
        parts = []
        for i in range(la + lb):
            if i in pos:
                parts.append(phi.parts[ia])
                ia += 1
            else:
                parts.append(raised[ib])
                ib += 1
        out.append(SetComposition(parts))
    return tuple(out)


def word_of(phi):
    """w(phi): letter i is the index (1-based) of the part containing i."""
    w = [0] * phi.size
    for j, p in enumerate(phi.parts, start=1):
        for x in p:
            w[x - 1] = j
    return tuple(w)


def word_lex_cmp(phi, psi):
    _check_sizes(phi, psi)
    wa, wb = word_of(phi), word_of(psi)
    return (wa > wb) - (wa < wb)


def reverse_complement(phi):
    """Reverse the parts and complement the entries (x -> n+1-x)."""
    n = phi.size
    return SetComposition(tuple(tuple(n + 1 - x for x in p)
                                for p in reversed(phi.parts)))
