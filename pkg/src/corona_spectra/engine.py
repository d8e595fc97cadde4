"""Characteristic polynomials, adjugate sums and the coronal of a graph.

Two independent routes compute the cofactor sum 1^T adj(xI - B) 1:

* the rank-one update identity det(M + u w^T) = det(M) + w^T adj(M) u,
  evaluated at integer points and interpolated (the workhorse), and
* Schwenk's path expansion adj(xI - B)_ij = sum over i-j paths P of f_{H-P}
  (the oracle; exponential in general).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import ONE, X, IntPoly, RatFunc, exact_div, interpolate
from .errors import InvariantError, ResourceLimitError
from .graphs import Graph

DEFAULT_PATH_BUDGET = 10**6


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _sample_points(n: int) -> list[int]:
    # symmetric about zero keeps the determinant values small
    return [t - n // 2 for t in range(n + 1)]


def _shifted_det(adj: Sequence[Sequence[int]], t: int, extra=None) -> int:
    """det(tI - A + extra), where extra is an optional integer matrix."""
    n = len(adj)
    rows = []
    for i in range(n):
        row = [-a for a in adj[i]]
        row[i] += t
        if extra is not None:
            row = [r + e for r, e in zip(row, extra[i])]
        rows.append(row)
    return bareiss_det(rows)


def char_poly_of_matrix(adj: Sequence[Sequence[int]]) -> IntPoly:
    n = len(adj)
    if n == 0:
        return ONE
    pts = _sample_points(n)
    return interpolate([(t, _shifted_det(adj, t)) for t in pts], n)


def char_poly(g: Graph) -> IntPoly:
    """det(xI - A) for the adjacency matrix A of g."""
    return char_poly_of_matrix(g.adjacency())


def _rank_one_cofactor_sum(adj: Sequence[Sequence[int]], u: Sequence[int], w: Sequence[int]) -> IntPoly:
    """w^T adj(xI - A) u via det(xI - A + u w^T) - det(xI - A)."""
    n = len(adj)
    update = [[u[i] * w[j] for j in range(n)] for i in range(n)]
    pts = _sample_points(n)
    values = [(t, _shifted_det(adj, t, update) - _shifted_det(adj, t)) for t in pts]
    return interpolate(values, n)


def adjugate_sum(h: Graph) -> IntPoly:
    """Sum of all entries of adj(xI - B), i.e. the unreduced coronal numerator."""
    if h.n < 1:
        raise ValueError("graph must be nonempty")
    ones = [1] * h.n
    return _rank_one_cofactor_sum(h.adjacency(), ones, ones)


def diagonal_cofactor_sum(h: Graph) -> IntPoly:
    """Trace of adj(xI - B), computed one principal minor at a time."""
    total = IntPoly()
    for v in range(h.n):
        total = total + char_poly(h.induced_subgraph(u for u in range(h.n) if u != v))
    return total


@dataclass(frozen=True)
class Coronal:
    chi: RatFunc
    chi_tilde: IntPoly
    f_h: IntPoly
    g: IntPoly
    d: int

    @property
    def n(self) -> int:
        return self.f_h.degree

    def check(self) -> None:
        """Raise InvariantError unless every bookkeeping identity holds."""
        n = self.n
        num, den = self.chi.num, self.chi.den
        problems = []
        if self.chi_tilde.degree != n - 1 or self.chi_tilde.lc != n:
            problems.append("chi_tilde must have degree n-1 and leading coefficient n")
        if self.g * den != self.f_h:
            problems.append("f_H != g * den(chi)")
        if self.g.degree != n - self.d or den.degree != self.d:
            problems.append("degree bookkeeping mismatch")
        if num.degree != self.d - 1 or num.lc != n:
            problems.append("num(chi) must have degree d-1 and leading coefficient n")
        if not den.is_monic():
            problems.append("den(chi) is not monic")
        if problems:
            raise InvariantError("; ".join(problems))


def make_coronal(chi_tilde: IntPoly, f_h: IntPoly) -> Coronal:
    chi = RatFunc(chi_tilde, f_h)
    g = exact_div(f_h, chi.den)
    c = Coronal(chi=chi, chi_tilde=chi_tilde, f_h=f_h, g=g, d=chi.den.degree)
    c.check()
    return c


def coronal(h: Graph) -> Coronal:
    """The coronal 1^T (xI - B)^{-1} 1 of h with its factorization bookkeeping."""
    return make_coronal(adjugate_sum(h), char_poly(h))


# Schwenk's path expansion

class _SubgraphCharPolys:
    """Memoised characteristic polynomials of vertex-deleted subgraphs."""

    def __init__(self, h: Graph):
        self.adj = h.adjacency()
        self.n = h.n
        self.cache: dict[frozenset, IntPoly] = {}

    def without(self, removed: frozenset) -> IntPoly:
        p = self.cache.get(removed)
        if p is None:
            keep = [v for v in range(self.n) if v not in removed]
            sub = [[self.adj[i][j] for j in keep] for i in keep]
            p = self.cache[removed] = char_poly_of_matrix(sub)
        return p


class _PathBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimitError(f"path enumeration exceeded the budget of {self.limit} paths")


def simple_paths(h: Graph, i: int, j: int, budget: int | _PathBudget = DEFAULT_PATH_BUDGET):
    """Yield the vertex sets of simple i-j paths; for i == j, the trivial path {i}."""
    if not isinstance(budget, _PathBudget):
        budget = _PathBudget(budget)
    if i == j:
        budget.spend()
        yield frozenset((i,))
        return
    nb = [sorted(s) for s in h.neighbors()]
    on_path = {i}
    stack = [iter(nb[i])]
    trail = [i]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            on_path.discard(trail.pop())
            continue
        if w in on_path:
            continue
        if w == j:
            budget.spend()
            yield frozenset(on_path | {j})
            continue
        on_path.add(w)
        trail.append(w)
        stack.append(iter(nb[w]))


def schwenk_adjugate_entry(
    h: Graph, i: int, j: int, budget: int | _PathBudget = DEFAULT_PATH_BUDGET, _polys=None
) -> IntPoly:
    """adj(xI - B)_ij as the sum of f_{H-P} over simple paths P from i to j."""
    if not (0 <= i < h.n and 0 <= j < h.n):
        raise ValueError(f"vertices ({i}, {j}) out of range for n={h.n}")
    polys = _polys or _SubgraphCharPolys(h)
    total = IntPoly()
    for p in simple_paths(h, i, j, budget):
        total = total + polys.without(p)
    return total


def schwenk_adjugate_sum(h: Graph, budget: int = DEFAULT_PATH_BUDGET) -> IntPoly:
    """Sum of all adjugate entries; the budget caps the total number of paths."""
    polys = _SubgraphCharPolys(h)
    spent = _PathBudget(budget)
    total = IntPoly()
    for i in range(h.n):
        total = total + schwenk_adjugate_entry(h, i, i, spent, polys)
        for j in range(i + 1, h.n):
            # adj(xI - B) is symmetric
            total = total + 2 * schwenk_adjugate_entry(h, i, j, spent, polys)
    return total


def coronal_via_schwenk(h: Graph, budget: int = DEFAULT_PATH_BUDGET) -> Coronal:
    if h.n < 1:
        raise ValueError("graph must be nonempty")
    return make_coronal(schwenk_adjugate_sum(h, budget), char_poly(h))


# near-regular route

def coronal_near_regular(h: Graph, r: int) -> Coronal:
    """Coronal from (xI - B)1 = (x - r)1 + v with v_i = r - deg(i).

    chi = (n f_H - 1^T adj(xI - B) v) / ((x - r) f_H), reduced.  The adjugate
    term needs one rank-one determinant update instead of all n^2 cofactors.
    """
    if h.n < 1:
        raise ValueError("graph must be nonempty")
    n = h.n
    v = [r - d for d in h.degrees()]
    f_h = char_poly(h)
    if any(v):
        weighted = _rank_one_cofactor_sum(h.adjacency(), v, [1] * n)
    else:
        weighted = IntPoly()
    chi = RatFunc(n * f_h - weighted, (X - r) * f_h)
    # chi_tilde follows from chi = chi_tilde / f_H
    chi_tilde = exact_div(chi.num * f_h, chi.den)
    return make_coronal(chi_tilde, f_h)
