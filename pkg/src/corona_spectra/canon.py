"""Canonical labeling by individualization-refinement with automorphism pruning.

Small-scale and dependency-free: adequate for graphs up to a few dozen
vertices, which covers the census (n <= 8) and switching graphs of trees
up to order 12.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph


def _refine(nb: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement; colors are re-ranked so they stay invariant."""
    ncolors = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in nb[v]))) for v in range(len(colors))]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[v] -= 1
    return out


def _pair_bits(n: int, edges, label: Sequence[int]) -> int:
    bits = 0
    for u, v in edges:
        a, b = label[u], label[v]
        if a > b:
            a, b = b, a
        bits |= 1 << (b * (b - 1) // 2 + a)
    return bits


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.nb = [sorted(s) for s in g.neighbors()]
        self.best_cert: int | None = None
        self.best_label: list[int] | None = None
        self.auts: list[list[int]] = []

    def run(self) -> tuple[int, list[int]]:
        self._visit([0] * self.g.n, [])
        return self.best_cert, self.best_label

    def _visit(self, colors: list[int], prefix: list[int]) -> None:
        colors = _refine(self.nb, colors)
        n = self.g.n
        if len(set(colors)) == n:
            cert = _pair_bits(n, self.g.edges, colors)
            if self.best_cert is None or cert < self.best_cert:
                self.best_cert, self.best_label = cert, colors
            elif cert == self.best_cert:
                inv = [0] * n
                for v, lab in enumerate(self.best_label):
                    inv[lab] = v
                self.auts.append([inv[colors[v]] for v in range(n)])
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        # first smallest non-singleton cell
        target = min((c for c, vs in cells.items() if len(vs) > 1), key=lambda c: (len(cells[c]), c))
        done: list[int] = []
        for v in cells[target]:
            if done and self._same_orbit(v, done, prefix):
                continue
            self._visit(_individualize(colors, v), prefix + [v])
            done.append(v)

    def _same_orbit(self, v: int, done: list[int], prefix: list[int]) -> bool:
        gens = [a for a in self.auts if all(a[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(self.g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in gens:
            for x in range(self.g.n):
                rx, ry = find(x), find(a[x])
                if rx != ry:
                    parent[rx] = ry
        rv = find(v)
        return any(find(u) == rv for u in done)


def canonical_labeling(g: Graph) -> list[int]:
    """label[v] = position of v in the canonical order."""
    if g.n == 0:
        return []
    return _Search(g).run()[1]


def certificate(g: Graph) -> tuple[int, int]:
    """Complete isomorphism invariant: equal iff the graphs are isomorphic."""
    if g.n == 0:
        return (0, 0)
    return (g.n, _Search(g).run()[0])


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return certificate(g1) == certificate(g2)
