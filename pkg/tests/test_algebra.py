from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corona_spectra.algebra import (
    ONE,
    X,
    IntPoly,
    RatFunc,
    compose_into,
    exact_div,
    gcd,
    interpolate,
    parse_poly,
    reduce,
    render,
    render_ratfunc,
    squarefree_factors,
)
from corona_spectra.errors import InterpolationError, NotDivisibleError

coeff_lists = st.lists(st.integers(-20, 20), max_size=6)
polys = coeff_lists.map(lambda cs: IntPoly(tuple(cs)))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def naive_mul(a, b):
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return IntPoly(tuple(out))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == IntPoly(())
    assert a * ONE == a


@given(coeff_lists, coeff_lists)
def test_mul_matches_schoolbook(a, b):
    assert IntPoly(tuple(a)) * IntPoly(tuple(b)) == naive_mul(a, b)


@given(polys, st.integers(-30, 30))
def test_evaluation_is_a_homomorphism(p, t):
    q = p * p + p
    assert q(t) == p(t) ** 2 + p(t)


def test_trailing_zeros_stripped():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).is_zero()
    assert IntPoly(()).degree < 0


def test_gcd_example():
    a = IntPoly.from_roots([1, 2, -3])
    b = IntPoly.from_roots([2, -3, 5])
    assert gcd(a, b) == IntPoly.from_roots([2, -3])
    assert gcd(X**2 - 1, X**2 - 2) == ONE


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_divides_both(a, b, c):
    g = gcd(a * c, b * c)
    assert g.lc > 0
    exact_div(a * c * g.lc ** 10, g)
    exact_div(b * c * g.lc ** 10, g)
    # c's primitive part divides the gcd
    assert (g.degree >= c.degree)


def test_exact_div_raises():
    assert exact_div(X**2 - 1, X - 1) == X + 1
    with pytest.raises(NotDivisibleError):
        exact_div(X**2 + 1, X - 1)


def test_squarefree_factors():
    p = (X - 1) * (X + 2) ** 2 * (X - 3) ** 3
    assert squarefree_factors(p) == [X - 1, X + 2, X - 3]
    assert squarefree_factors(X**2 + 1) == [X**2 + 1]


def test_reduce_example():
    # (x^2 - 1)/(x^2 - 3x + 2) = (x + 1)/(x - 2)
    r = reduce(X**2 - 1, X**2 - 3 * X + 2)
    assert r.num == X + 1 and r.den == X - 2
    assert r.d == 1


def test_ratfunc_arithmetic():
    a = RatFunc(ONE, X)
    b = RatFunc(X + 1, X - 1)
    s = a + b
    assert s == RatFunc(X**2 + 2 * X - 1, X**2 - X)
    assert s(Fraction(3)) == Fraction(1, 3) + 2
    assert (a * b) / b == a
    assert a - a == RatFunc(IntPoly(()), ONE)


def test_compose_into_matches_substitution():
    # f(t) = t^2 - 1 at t = (x q - p)/q with p = 1, q = x: clear the denominator q^2
    f = X**2 - 1
    p, q = ONE, X
    rho_num = X * q - p
    out = compose_into(f, rho_num, q)
    assert out == rho_num**2 - q**2
    assert compose_into(f, rho_num, q, extra_den_power=1) == (rho_num**2 - q**2) * q


@given(polys, polys, nonzero_polys, st.integers(-5, 5))
@settings(max_examples=60)
def test_compose_into_evaluates(f, num, den, t):
    dv = den(t)
    if dv == 0:
        return
    lhs = compose_into(f, num, den)(t)
    k = max(f.degree, 0)
    assert Fraction(lhs) == f(Fraction(num(t), dv)) * Fraction(dv) ** k


def test_interpolate_c4():
    # f_C4 = x^4 - 4x^2 sampled at five integers
    f = X**4 - 4 * X**2
    pts = [(t, f(t)) for t in (-2, -1, 0, 1, 2)]
    assert interpolate(pts, 4) == f


def test_interpolate_errors():
    with pytest.raises(InterpolationError):
        interpolate([(0, 0), (0, 1)], 1)
    with pytest.raises(InterpolationError):
        interpolate([(0, 0), (2, 1)], 1)  # slope 1/2


def test_render_and_parse_round_trip():
    p = X**4 - 4 * X**2 + 3 * X - 1
    assert render(p) == "x^4 - 4*x^2 + 3*x - 1"
    assert parse_poly(render(p)) == p
    assert render(5 * X + 8, var="\\lambda", tex=True) == "5\\lambda + 8"
    assert render_ratfunc(RatFunc(5 * X + 8, X**2 - 4)) == "(5*x + 8)/(x^2 - 4)"
    assert render_ratfunc(RatFunc(ONE, X)) == "1/x"


@given(polys)
def test_parse_inverts_render(p):
    assert parse_poly(render(p)) == p


def test_worked_examples():
    assert (X - 1) * (X + 1) == X**2 - 1
    assert exact_div(X**3 - 2 * X, X) == X**2 - 2
    assert (X - 2) ** 0 == ONE
    assert gcd(X**2 - 4, X**2 - 2 * X) == X - 2
    assert gcd(X**3 - 2 * X, 3 * X**2 + 4 * X) == X
    assert gcd(2 * X - 4, IntPoly(())) == X - 2
    assert reduce(3 * X**2 + 4 * X, X**3 - 2 * X) == RatFunc(3 * X + 4, X**2 - 2)
    zero = reduce(IntPoly(()), X - 1)
    assert zero.num.is_zero() and zero.den == ONE
    assert compose_into(X, X**2 - 1, X) == X**2 - 1
    assert compose_into(X**2, X, ONE) == X**2
    assert compose_into(X - 2, X**2 - 2 * X - 4, X - 2) == X**2 - 4 * X
    assert (X**2 - 2)(3) == 7
    assert interpolate([(0, -2), (1, -1), (2, 2)], 2) == X**2 - 2
    assert interpolate([(t, 5) for t in range(4)], 3) == IntPoly.const(5)
