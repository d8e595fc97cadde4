from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from corona_spectra.algebra import X, IntPoly
from corona_spectra.engine import char_poly
from corona_spectra.errors import NonRealRootsError
from corona_spectra.graphs import cycle
from corona_spectra.roots import (
    RootInterval,
    count_real_roots,
    isolate_real_roots,
    multiplicity_in,
    sturm_chain,
)

WIDTH = Fraction(1, 2**40)


def test_simple_pair():
    roots = isolate_real_roots(X**2 - 1)
    assert [r.multiplicity for r in roots] == [1, 1]
    assert roots[0].contains(Fraction(-1)) and roots[1].contains(Fraction(1))


def test_double_root():
    (r,) = isolate_real_roots((X - 2) ** 2)
    assert r.multiplicity == 2 and r.contains(Fraction(2))


def test_cycle_spectrum():
    roots = isolate_real_roots(char_poly(cycle(4)))
    assert [r.multiplicity for r in roots] == [1, 2, 1]
    for r, want in zip(roots, (-2, 0, 2)):
        assert r.contains(Fraction(want))


def test_irrational_roots_are_narrow():
    roots = isolate_real_roots(X**2 - 2)
    assert len(roots) == 2
    for r, want in zip(roots, (-2**0.5, 2**0.5)):
        assert not r.exact
        assert r.width <= WIDTH
        assert abs(float(r) - want) < 1e-12
        # the interval brackets a sign change of x^2 - 2
        assert (r.lo**2 - 2) * (r.hi**2 - 2) < 0


def test_non_real_roots():
    assert count_real_roots(X**2 + 1) == 0
    assert isolate_real_roots(X**2 + 1) == []
    with pytest.raises(NonRealRootsError):
        isolate_real_roots((X**2 + 1) * (X - 1), require_all_real=True)


def test_sturm_chain_counts():
    p = (X - 1) * (X + 3) * (X**2 - 5)
    assert count_real_roots(p) == 4
    assert sturm_chain(p)[0] == p


@given(graphs(max_n=9))
@settings(max_examples=40, deadline=None)
def test_graph_spectra_match_numpy(g):
    f = char_poly(g)
    roots = isolate_real_roots(f, require_all_real=True)
    assert sum(r.multiplicity for r in roots) == g.n
    assert all(r.width <= WIDTH for r in roots)
    assert roots == sorted(roots)
    flat = sorted(float(r) for r in roots for _ in range(r.multiplicity))
    ref = np.sort(np.linalg.eigvalsh(np.array(g.adjacency(), dtype=float)))
    assert np.allclose(flat, ref, atol=1e-6)


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(1, 3)), min_size=1, max_size=4, unique_by=lambda t: t[0]))
@settings(max_examples=60, deadline=None)
def test_integer_roots_with_multiplicity(spec):
    p = IntPoly((1,))
    for root, mult in spec:
        p = p * (X - root) ** mult
    roots = isolate_real_roots(p)
    assert len(roots) == len(spec)
    for r, (a, m) in zip(roots, sorted(spec)):
        assert r.contains(Fraction(a)) and r.multiplicity == m
        assert r.width <= WIDTH
    for r in roots:
        assert multiplicity_in(p, r) == r.multiplicity


def test_root_interval_ordering():
    a = RootInterval(Fraction(0), Fraction(1), 1)
    b = RootInterval(Fraction(2), Fraction(3), 1)
    assert a < b and not a.overlaps(b)
