from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs
from corona_spectra.algebra import ONE, X, IntPoly, RatFunc
from corona_spectra.census import enumerate_graphs
from corona_spectra.engine import (
    adjugate_sum,
    bareiss_det,
    char_poly,
    coronal,
    coronal_near_regular,
    coronal_via_schwenk,
    diagonal_cofactor_sum,
    schwenk_adjugate_entry,
    simple_paths,
)
from corona_spectra.errors import ResourceLimitError
from corona_spectra.graphs import Graph, complete, cycle, disjoint_union, path, star


def _perm_sign(p):
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            sign *= -1 if length % 2 == 0 else 1
    return sign


def leibniz_det(m):
    """Symbolic determinant of a matrix of IntPoly entries (small n only)."""
    n = len(m)
    total = IntPoly(())
    for p in permutations(range(n)):
        term = IntPoly.const(_perm_sign(p))
        for i in range(n):
            term = term * m[i][p[i]]
        total = total + term
    return total


def resolvent_matrix(g):
    a = g.adjacency()
    return [[(X if i == j else IntPoly(())) - IntPoly.const(a[i][j]) for j in range(g.n)] for i in range(g.n)]


def brute_cofactor_sum(g):
    m = resolvent_matrix(g)
    n = g.n
    total = IntPoly(())
    for i in range(n):
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            total = total + IntPoly.const((-1) ** (i + j)) * (leibniz_det(minor) if minor else ONE)
    return total


def test_bareiss():
    assert bareiss_det([]) == 1
    assert bareiss_det([[2, 1], [1, 3]]) == 5
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    m = [[3, -1, 4, 1], [5, 9, -2, 6], [5, 3, 5, -8], [9, 7, 9, 3]]
    assert bareiss_det(m) == round(np.linalg.det(np.array(m)))


@given(graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_char_poly_matches_leibniz(g):
    assert char_poly(g) == leibniz_det(resolvent_matrix(g))


@given(graphs(max_n=10))
@settings(max_examples=40, deadline=None)
def test_char_poly_matches_numpy(g):
    f = char_poly(g)
    ref = np.poly(np.array(g.adjacency(), dtype=float)) if g.n else np.array([1.0])
    assert f.is_monic()
    assert np.allclose(list(reversed(f.coeffs)), ref, atol=1e-6)


def test_char_poly_examples():
    assert char_poly(cycle(4)) == X**4 - 4 * X**2
    assert char_poly(path(3)) == X**3 - 2 * X
    assert char_poly(Graph(1)) == X


@given(graphs(max_n=5))
@settings(max_examples=30, deadline=None)
def test_adjugate_sum_matches_cofactors(g):
    assert adjugate_sum(g) == brute_cofactor_sum(g)


def test_adjugate_sum_p3():
    assert adjugate_sum(path(3)) == 3 * X**2 + 4 * X


@given(graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_diagonal_cofactors_give_derivative(g):
    assert diagonal_cofactor_sum(g) == char_poly(g).derivative()


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_coronal_invariants(g):
    c = coronal(g)
    c.check()
    # 1 <= d <= n, lc(chi_tilde) = n, g * den = f_H
    assert 1 <= c.d <= g.n
    assert c.chi_tilde.lc == g.n
    assert c.g * c.chi.den == c.f_h
    assert c.chi.den.is_monic()


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=30, deadline=None)
def test_coronal_matches_numeric_resolvent(g):
    c = coronal(g)
    a = np.array(g.adjacency(), dtype=float)
    t = 11.5  # above every eigenvalue of a graph on <= 7 vertices
    want = np.ones(g.n) @ np.linalg.solve(t * np.eye(g.n) - a, np.ones(g.n))
    assert abs(float(c.chi.num(t)) / float(c.chi.den(t)) - want) < 1e-9


def test_witness_coronals():
    s5 = star(5)
    c4k1 = disjoint_union(cycle(4), Graph(1))
    p5 = path(5)
    k2k3 = disjoint_union(complete(2), complete(3))
    assert coronal(s5).chi == RatFunc(5 * X + 8, X**2 - 4)
    assert coronal(c4k1).chi == RatFunc(5 * X - 2, X**2 - 2 * X)
    assert coronal(p5).chi == RatFunc(5 * X**2 + 8 * X - 1, X**3 - 3 * X)
    assert coronal(k2k3).chi == RatFunc(5 * X - 7, X**2 - 3 * X + 2)


def test_regular_graph_has_d_one():
    for r_graph in (cycle(5), complete(4), disjoint_union(cycle(3), cycle(4))):
        assert coronal(r_graph).d == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_schwenk_equals_generic(n):
    for g in enumerate_graphs(n):
        assert coronal_via_schwenk(g).chi == coronal(g).chi


@pytest.mark.parametrize("n", range(1, 7))
def test_near_regular_equals_generic(n):
    for g in enumerate_graphs(n):
        want = coronal(g)
        for r in range(0, n):
            got = coronal_near_regular(g, r)
            assert got.chi == want.chi
            assert got.chi_tilde == want.chi_tilde


def test_schwenk_entry_diagonal_is_vertex_deleted_poly():
    g = path(4)
    for v in range(4):
        sub = g.induced_subgraph(u for u in range(4) if u != v)
        assert schwenk_adjugate_entry(g, v, v) == char_poly(sub)


def test_simple_paths_and_budget():
    g = cycle(4)
    # paths are reported by vertex set
    found = sorted(sorted(p) for p in simple_paths(g, 0, 2))
    assert found == [[0, 1, 2], [0, 2, 3]]
    assert list(simple_paths(g, 1, 1)) == [frozenset({1})]
    assert len(list(simple_paths(complete(5), 0, 1))) == 1 + 3 + 6 + 6
    with pytest.raises(ResourceLimitError):
        coronal_via_schwenk(complete(9), budget=100)
