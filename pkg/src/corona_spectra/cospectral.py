"""Cospectral pairs built from coronas and switching graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .algebra import IntPoly, render
from .assembler import corona_char_poly
from .canon import canonical_form, certificate, is_isomorphic
from .engine import char_poly, coronal
from .errors import InvariantError, ResourceLimitError
from .graphs import Graph, complement, emit_graph6, switching_graph

MAX_TREE_ORDER = 12


@dataclass(frozen=True)
class CospectralPair:
    g1: Graph
    g2: Graph
    certificate: IntPoly
    isomorphic: bool

    def record(self) -> str:
        return json.dumps(
            {
                "g1": emit_graph6(self.g1),
                "g2": emit_graph6(self.g2),
                "polynomial": render(self.certificate),
                "isomorphic": self.isomorphic,
            },
            sort_keys=True,
        )


def is_cospectral(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and char_poly(g1) == char_poly(g2)


def coronal_equal(h1: Graph, h2: Graph) -> bool:
    return coronal(h1).chi == coronal(h2).chi


@dataclass
class Corollary10Report:
    """Premises and conclusions of both corona cospectrality implications.

    (a) G1, G2 cospectral  =>  G1 o H1 and G2 o H1 cospectral.
    (b) H1, H2 cospectral with equal coronals  =>  G1 o H1 and G1 o H2 cospectral.
    """

    premise_a: bool
    conclusion_a: bool
    premise_b: bool
    conclusion_b: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        def verdict(premise, conclusion):
            if not premise:
                return "premise fails" + (" (coronas cospectral anyway)" if conclusion else "")
            return "PASS" if conclusion else "FAIL"

        return [
            f"(a) G1~G2 => G1oH1 ~ G2oH1: {verdict(self.premise_a, self.conclusion_a)}",
            f"(b) H1~H2, chi equal => G1oH1 ~ G1oH2: {verdict(self.premise_b, self.conclusion_b)}",
        ]


def _corona_poly(g: Graph, h: Graph) -> IntPoly:
    return corona_char_poly(g, h, verify=True).total


def verify_corollary10(g1: Graph, g2: Graph, h1: Graph, h2: Graph, *, strict: bool = True) -> Corollary10Report:
    premise_a = is_cospectral(g1, g2)
    conclusion_a = g1.n == g2.n and _corona_poly(g1, h1) == _corona_poly(g2, h1)
    premise_b = is_cospectral(h1, h2) and coronal_equal(h1, h2)
    conclusion_b = h1.n == h2.n and _corona_poly(g1, h1) == _corona_poly(g1, h2)
    report = Corollary10Report(premise_a, conclusion_a, premise_b, conclusion_b)
    if premise_a and not conclusion_a:
        report.violations.append("implication (a) violated")
    if premise_b and not conclusion_b:
        report.violations.append("implication (b) violated")
    if strict and report.violations:
        raise InvariantError("; ".join(report.violations))
    return report


# trees

@lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found: dict = {}
    for parent in _tree_classes(n - 1):
        for v in range(n - 1):
            child = Graph(n, parent.edges | {(v, n - 1)})
            key = certificate(child)
            if key not in found:
                found[key] = canonical_form(child)
    return tuple(found[k] for k in sorted(found))


def enumerate_trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism (leaf augmentation + canonical dedup)."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_TREE_ORDER:
        raise ResourceLimitError(f"tree enumeration is limited to order <= {MAX_TREE_ORDER}")
    return list(_tree_classes(n))


def prufer_to_tree(seq: tuple[int, ...] | list[int], n: int | None = None) -> Graph:
    """Labeled tree on len(seq)+2 vertices with the given Prufer sequence."""
    n = len(seq) + 2 if n is None else n
    if len(seq) != n - 2 or any(not 0 <= s < n for s in seq):
        raise ValueError("invalid Prufer sequence")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, s))
        degree[leaf] -= 1
        degree[s] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def trees_by_prufer(n: int) -> list[Graph]:
    """Tree classes via all n^(n-2) Prufer sequences; a slow cross-check for small n."""
    if n <= 2:
        return enumerate_trees(n)
    found = {}
    for seq in product(range(n), repeat=n - 2):
        t = prufer_to_tree(seq, n)
        key = certificate(t)
        if key not in found:
            found[key] = canonical_form(t)
    return [found[k] for k in sorted(found)]


def find_tree_mates(order: int) -> list[CospectralPair]:
    """Non-isomorphic cospectral tree pairs whose complements are also cospectral."""
    trees = enumerate_trees(order)
    buckets: dict[tuple, list[Graph]] = {}
    for t in trees:
        key = (char_poly(t).coeffs, char_poly(complement(t)).coeffs)
        buckets.setdefault(key, []).append(t)
    pairs = []
    for key in sorted(buckets):
        group = buckets[key]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                t1, t2 = group[i], group[j]
                pairs.append(CospectralPair(t1, t2, IntPoly(key[0]), is_isomorphic(t1, t2)))
    return pairs


def smallest_tree_mates(max_order: int = MAX_TREE_ORDER) -> tuple[int, list[CospectralPair]]:
    for order in range(1, max_order + 1):
        pairs = find_tree_mates(order)
        if pairs:
            return order, pairs
    return 0, []


def switching_pair(t1: Graph, t2: Graph) -> CospectralPair:
    """Switching graphs of two cospectral trees with cospectral complements."""
    problems = []
    if not t1.is_tree():
        problems.append("t1 is not a tree")
    if not t2.is_tree():
        problems.append("t2 is not a tree")
    if not is_cospectral(t1, t2):
        problems.append("t1 and t2 are not cospectral")
    if not is_cospectral(complement(t1), complement(t2)):
        problems.append("complements of t1 and t2 are not cospectral")
    if problems:
        raise ValueError("switching_pair precondition failed: " + "; ".join(problems))
    s1, s2 = switching_graph(t1), switching_graph(t2)
    n = t1.n
    for s in (s1, s2):
        if set(s.degrees()) != {n - 1}:
            raise InvariantError("switching graph is not (n-1)-regular")
    f1 = char_poly(s1)
    if f1 != char_poly(s2):
        raise InvariantError("switching graphs are not cospectral")
    if not coronal_equal(s1, s2):
        raise InvariantError("cospectral regular switching graphs have different coronals")
    return CospectralPair(s1, s2, f1, is_isomorphic(s1, s2))
