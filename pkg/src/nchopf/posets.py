"""Explicit finite posets: Moebius function, structural diagnostics,
transitive reduction, DOT export and Hasse-diagram figures."""

from __future__ import annotations

import json


class PosetError(ValueError):
    pass


class FinitePoset:
    """Finite poset built from a ground set and a leq predicate.

    Elements must be hashable with deterministic str() labels.  The
    closure is materialized; covers are its transitive reduction.
    """

    def __init__(self, elements, leq):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        up = [set() for _ in range(n)]
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                if leq(x, y):
                    up[i].add(j)
        for i in range(n):
            if i not in up[i]:
                raise PosetError(f"leq not reflexive at {self.elements[i]}")
        for i in range(n):
            for j in up[i]:
                if i != j and i in up[j]:
                    raise PosetError(
                        f"cycle: {self.elements[i]} <= {self.elements[j]} <= "
                        f"{self.elements[i]}")
                if not up[j].issubset(up[i]):
                    k = next(iter(up[j] - up[i]))
                    raise PosetError(
                        f"leq not transitive: {self.elements[i]} <= "
                        f"{self.elements[j]} <= {self.elements[k]}")
        self._up = [frozenset(s) for s in up]
        covers = []
        for i in range(n):
            above = self._up[i] - {i}
            for j in above:
                if not any(k != j and j in self._up[k] for k in above):
                    covers.append((i, j))
        self.covers = frozenset(covers)
        self._mu = {}
        self._ranks = None

    def __len__(self):
        return len(self.elements)

    def leq(self, x, y):
        return self._index[y] in self._up[self._index[x]]

    def upset(self, x):
        return [self.elements[j] for j in sorted(self._up[self._index[x]])]

    def downset(self, x):
        j = self._index[x]
        return [self.elements[i] for i in range(len(self.elements))
                if j in self._up[i]]

    def interval(self, x, y):
        i, j = self._index[x], self._index[y]
        return [self.elements[k] for k in self._up[i] if j in self._up[k]]

    def moebius(self, x, y):
        """Moebius value mu(x, y); 0 (flagged via comparable()) if x !<= y."""
        i, j = self._index[x], self._index[y]
        if j not in self._up[i]:
            return 0
        return self._mu_idx(i, j)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def _mu_idx(self, i, j):
        key = (i, j)
        if key in self._mu:
            return self._mu[key]
        if i == j:
            val = 1
        else:
            val = -sum(self._mu_idx(i, k)
                       for k in self._up[i] if j in self._up[k] and k != j)
        self._mu[key] = val
        return val

    def ranks(self):
        """Longest-chain rank from the minimal elements, or None per element
        never (always defined); the poset is ranked iff every cover climbs
        exactly one level."""
        if self._ranks is not None:
            return self._ranks
        n = len(self.elements)
        children = [[] for _ in range(n)]
        indeg = [0] * n
        for i, j in self.covers:
            children[i].append(j)
            indeg[j] += 1
        rank = [0] * n
        queue = [i for i in range(n) if indeg[i] == 0]
        order = []
        while queue:
            i = queue.pop()
            order.append(i)
            for j in children[i]:
                rank[j] = max(rank[j], rank[i] + 1)
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        self._ranks = rank
        return rank

    def is_ranked(self):
        rank = self.ranks()
        return all(rank[j] == rank[i] + 1 for i, j in self.covers)

    def is_eulerian_intervals(self):
        """mu(x,y) == (-1)^(rank difference) on every comparable pair."""
        if not self.is_ranked():
            return False
        rank = self.ranks()
        for i in range(len(self.elements)):
            for j in self._up[i]:
                if self._mu_idx(i, j) != (-1) ** (rank[j] - rank[i]):
                    return False
        return True

    def downset_is_boolean(self, x):
        """Principal ideal of x isomorphic to a boolean lattice.

        Checks that atoms below x generate it: mapping y to the set of
        atoms below y must biject the ideal with the power set of the
        atoms and preserve order both ways.
        """
        down = self.downset(x)
        minimal = [y for y in down
                   if not any(self.leq(z, y) and z != y for z in down)]
        if len(minimal) != 1:
            return False
        bottom = minimal[0]
        atoms = [y for y in down if (self._index[bottom], self._index[y]) in self.covers]
        r = len(atoms)
        if len(down) != 2 ** r:
            return False
        images = {}
        for y in down:
            images[y] = frozenset(a for a in atoms if self.leq(a, y))
        if len(set(images.values())) != 2 ** r:
            return False
        for y in down:
            for z in down:
                if self.leq(y, z) != (images[y] <= images[z]):
                    return False
        return True

    def structure_report(self):
        rank = self.ranks()
        ranked = self.is_ranked()
        report = {
            "size": len(self.elements),
            "isRanked": ranked,
            "rankFn": {str(x): rank[i] for i, x in enumerate(self.elements)},
            "isEulerianIntervals": self.is_eulerian_intervals() if ranked else False,
            "booleanIdeals": all(self.downset_is_boolean(x) for x in self.elements),
        }
        return report

    def covered_count(self, x):
        j = self._index[x]
        return sum(1 for (i, jj) in self.covers if jj == j)

    def components(self):
        n = len(self.elements)
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, j in self.covers:
            parent[find(i)] = find(j)
        comps = {}
        for i in range(n):
            comps.setdefault(find(i), []).append(self.elements[i])
        return sorted(comps.values(), key=lambda c: str(c[0]))

    def dot_export(self, labeling=str):
        """Deterministic DOT text: one node per element, one edge per
        cover, same-rank groups per level."""
        rank = self.ranks()
        order = sorted(range(len(self.elements)),
                       key=lambda i: (rank[i], labeling(self.elements[i])))
        lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i in order:
            lines.append(f'  "{labeling(self.elements[i])}";')
        for level in sorted(set(rank)):
            members = [f'"{labeling(self.elements[i])}";'
                       for i in order if rank[i] == level]
            lines.append("  { rank=same; " + " ".join(members) + " }")
        edges = sorted((labeling(self.elements[i]), labeling(self.elements[j]))
                       for i, j in self.covers)
        for a, b in edges:
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        rank = self.ranks()
        order = sorted(range(len(self.elements)),
                       key=lambda i: (rank[i], str(self.elements[i])))
        pos = {i: k for k, i in enumerate(order)}
        return json.dumps({
            "elements": [str(self.elements[i]) for i in order],
            "covers": sorted([pos[i], pos[j]] for i, j in self.covers),
            "ranks": [rank[i] for i in order],
        })

    def render_figure(self, path):
        """Draw the Hasse diagram with matplotlib and save it to path."""
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        rank = self.ranks()
        levels = {}
        for i in range(len(self.elements)):
            levels.setdefault(rank[i], []).append(i)
        xy = {}
        for level, members in levels.items():
            members.sort(key=lambda i: str(self.elements[i]))
            for k, i in enumerate(members):
                xy[i] = (k - (len(members) - 1) / 2.0, level)
        width = max((len(v) for v in levels.values()), default=1)
        height = max(levels, default=0) + 1
        fig, ax = plt.subplots(figsize=(max(4, 1.6 * width), max(3, 1.2 * height)))
        for i, j in sorted(self.covers):
            ax.plot([xy[i][0], xy[j][0]], [xy[i][1], xy[j][1]],
                    color="0.6", lw=1, zorder=1)
        for i, (x, y) in xy.items():
            ax.text(x, y, str(self.elements[i]), ha="center", va="center",
                    zorder=2, fontsize=9,
                    bbox=dict(boxstyle="round", fc="white", ec="0.3"))
        ax.set_axis_off()
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)


def build(elements, leq):
    return FinitePoset(elements, leq)
