import math

import pytest

from corona_spectra.algebra import ONE, X, IntPoly, RatFunc
from corona_spectra.census import enumerate_graphs
from corona_spectra.closed_forms import (
    PartitionSpec,
    bipartite_new_eig_cubic,
    coronal_complete_bipartite,
    coronal_complete_multipartite,
    coronal_complete_multipartite_product_form,
    coronal_path,
    coronal_path_schwenk_form,
    coronal_regular,
    path_charpoly_sequence,
    regular_corona_new_eigs,
)
from corona_spectra.cospectral import coronal_equal, is_cospectral
from corona_spectra.engine import char_poly, coronal
from corona_spectra.graphs import (
    Graph,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    path,
)


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def test_regular_examples():
    assert coronal_regular(4, 2) == RatFunc(IntPoly.const(4), X - 2) == coronal(cycle(4)).chi
    assert coronal_regular(5, 4) == coronal(complete(5)).chi
    assert coronal_regular(1, 0) == RatFunc(ONE, X) == coronal(Graph(1)).chi
    with pytest.raises(ValueError):
        coronal_regular(3, 3)


def test_regular_new_eigs():
    lo, hi = regular_corona_new_eigs(0, 2, 4)
    assert (lo, hi) == pytest.approx((1 - math.sqrt(5), 1 + math.sqrt(5)))
    for n in (1, 3, 7):
        assert regular_corona_new_eigs(3, 3, n) == pytest.approx((3 - math.sqrt(n), 3 + math.sqrt(n)))


@pytest.mark.parametrize("n", range(1, 8))
def test_all_regular_graphs_share_one_coronal(n):
    seen = {}
    for g in enumerate_graphs(n):
        if g.is_regular():
            r = g.degrees()[0]
            chi = coronal(g).chi
            assert chi == coronal_regular(n, r)
            seen.setdefault(r, chi)
            assert seen[r] == chi


@pytest.mark.slow
def test_connected_regular_order_eight():
    for g in enumerate_graphs(8):
        if g.is_regular() and g.is_connected():
            assert coronal(g).chi == coronal_regular(8, g.degrees()[0])


def test_cospectral_regular_pairs_share_coronal():
    for n in range(1, 8):
        regular = [g for g in enumerate_graphs(n) if g.is_regular()]
        for i, a in enumerate(regular):
            for b in regular[i + 1 :]:
                if is_cospectral(a, b):
                    assert coronal_equal(a, b)


def test_complete_bipartite_examples():
    assert coronal_complete_bipartite(1, 4) == RatFunc(5 * X + 8, X**2 - 4)
    assert coronal_complete_bipartite(2, 3) == RatFunc(5 * X + 12, X**2 - 6)
    assert coronal_complete_bipartite(1, 1) == RatFunc(IntPoly.const(2), X - 1)


@pytest.mark.parametrize("p", range(1, 6))
def test_complete_bipartite_matches_engine(p):
    for q in range(p, 6):
        assert coronal_complete_bipartite(p, q) == coronal(complete_bipartite(p, q)).chi


def test_bipartite_cubic():
    assert bipartite_new_eig_cubic(0, 1, 1) == (-2, -3, 0, 1)  # (x + 1)^2 (x - 2)
    assert bipartite_new_eig_cubic(2, 1, 1) == (0, -3, -2, 1)
    # K1 o K2 has characteristic polynomial x^3 - 3x - 2
    f = char_poly(complete(3))
    assert tuple(f.coeffs) == bipartite_new_eig_cubic(0, 1, 1)


def test_multipartite_examples():
    assert coronal_complete_multipartite([2, 3]) == coronal_complete_bipartite(2, 3)
    assert coronal_complete_multipartite([1, 1, 1]) == RatFunc(IntPoly.const(3), X - 2)
    assert coronal_complete_multipartite([2, 2, 2]) == coronal(complete_multipartite([2, 2, 2])).chi
    assert PartitionSpec((1, 2, 3)).elementary(2) == 2 + 3 + 6


@pytest.mark.parametrize("n", range(1, 8))
def test_multipartite_forms_match_engine(n):
    for parts in partitions(n):
        want = coronal(complete_multipartite(parts)).chi
        assert coronal_complete_multipartite(parts) == want
        assert coronal_complete_multipartite_product_form(parts) == want


def test_path_sequence():
    f = path_charpoly_sequence(5)
    assert f[2] == X**2 - 1
    assert f[3] == X**3 - 2 * X == char_poly(path(3))
    assert f[5] == X**5 - 4 * X**3 + 3 * X == char_poly(path(5))


def test_path_examples():
    assert coronal_path(1) == RatFunc(ONE, X)
    assert coronal_path(5) == RatFunc(5 * X**2 + 8 * X - 1, X**3 - 3 * X)
    assert coronal_path(7) == RatFunc(7 * X**3 + 12 * X**2 - 6 * X - 8, X**4 - 4 * X**2 + 2)


@pytest.mark.parametrize("n", range(1, 13))
def test_path_forms_match_engine(n):
    want = coronal(path(n)).chi
    assert coronal_path(n) == want
    assert coronal_path_schwenk_form(n) == want


def test_degree_sequence_does_not_determine_coronal():
    p5, k2k3 = path(5), disjoint_union(complete(2), complete(3))
    assert sorted(p5.degrees()) == sorted(k2k3.degrees())
    assert coronal(p5).chi != coronal(k2k3).chi
    assert not is_cospectral(p5, k2k3)
