"""Exact real-root isolation with Sturm sequences."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import IntPoly, exact_div_q, gcd, prem, squarefree_factors
from .errors import InvariantError, NonRealRootsError

DEFAULT_WIDTH = Fraction(1, 2**40)


@dataclass(frozen=True, order=True)
class RootInterval:
    """Either the exact root ``lo == hi`` or the single root inside the open interval (lo, hi)."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def overlaps(self, other: RootInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def contains(self, t: Fraction) -> bool:
        if self.exact:
            return t == self.lo
        return self.lo < t < self.hi


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """p, p', -rem(p, p'), ... with positive rescaling at every step."""
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = -prem(chain[-2], chain[-1])
        if r.is_zero():
            break
        c = r.content()
        chain.append(IntPoly(a // c for a in r.coeffs))
    return chain


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sign_variations(chain: list[IntPoly], t: Fraction) -> int:
    prev, count = 0, 0
    for q in chain:
        s = _sign(q(t))
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def _variations_at_infinity(chain: list[IntPoly], positive: bool) -> int:
    prev, count = 0, 0
    for q in chain:
        s = _sign(q.lc) if positive or q.degree % 2 == 0 else -_sign(q.lc)
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def count_real_roots(p: IntPoly) -> int:
    """Number of distinct real roots."""
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    return _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)


def root_bound(p: IntPoly) -> Fraction:
    """A power of two strictly exceeding every root's absolute value (Cauchy)."""
    lc = abs(p.lc)
    top = max((abs(c) for c in p.coeffs[:-1]), default=0)
    b = 1 + Fraction(top, lc)
    out = Fraction(1)
    while out <= b:
        out *= 2
    return out


def _isolate_squarefree(s: IntPoly, width: Fraction) -> list[tuple[Fraction, Fraction]]:
    chain = sturm_chain(s)
    bound = root_bound(s)
    out: list[tuple[Fraction, Fraction]] = []
    lo, hi = -bound, bound
    v_lo, v_hi = sign_variations(chain, lo), sign_variations(chain, hi)
    stack = [(lo, hi, v_lo, v_hi)]
    while stack:
        a, b, va, vb = stack.pop()
        k = va - vb
        if k == 0:
            continue
        if k == 1:
            out.append(_refine(s, a, b, width))
            continue
        c = (a + b) / 2
        if s(c) == 0:
            out.append((c, c))
            # step away from the exact root until both sides are root-free
            delta = (b - a) / 4
            while True:
                lo_c, hi_c = c - delta, c + delta
                if s(lo_c) and s(hi_c):
                    v_lc, v_hc = sign_variations(chain, lo_c), sign_variations(chain, hi_c)
                    if v_lc - v_hc == 1:
                        break
                delta /= 2
            stack.append((a, lo_c, va, v_lc))
            stack.append((hi_c, b, v_hc, vb))
            continue
        vc = sign_variations(chain, c)
        stack.append((a, c, va, vc))
        stack.append((c, b, vc, vb))
    out.sort()
    return out


def _refine(s: IntPoly, a: Fraction, b: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink (a, b), which holds exactly one simple root, by sign bisection."""
    sa = _sign(s(a))
    while b - a > width:
        c = (a + b) / 2
        sc = _sign(s(c))
        if sc == 0:
            return c, c
        if sc == sa:
            a = c
        else:
            b = c
    return a, b


def isolate_real_roots(
    p: IntPoly, width: Fraction = DEFAULT_WIDTH, *, require_all_real: bool = False
) -> list[RootInterval]:
    """Disjoint isolating intervals of width <= ``width`` with exact multiplicities.

    When ``require_all_real`` is set, a polynomial whose real roots do not
    account for its full degree raises NonRealRootsError.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    factors = squarefree_factors(p)
    sqfree = IntPoly((1,))
    for a in factors:
        sqfree = sqfree * a
    out = []
    for lo, hi in _isolate_squarefree(sqfree, width) if sqfree.degree > 0 else []:
        mult = _multiplicity_in(factors, lo, hi)
        if mult == 0:
            raise InvariantError(f"no square-free factor owns the root in ({lo}, {hi})")
        out.append(RootInterval(lo, hi, mult))
    if require_all_real and sum(r.multiplicity for r in out) != p.degree:
        raise NonRealRootsError(
            f"only {sum(r.multiplicity for r in out)} of {p.degree} roots are real"
        )
    return out


def _has_root(a: IntPoly, lo: Fraction, hi: Fraction) -> bool:
    # (lo, hi) isolates one root of a multiple of a, so a sign change decides it
    if lo == hi:
        return a(lo) == 0
    return _sign(a(lo)) * _sign(a(hi)) < 0


def _sturm_count(a: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct roots of a square-free polynomial in the open interval (lo, hi)."""
    chain = sturm_chain(a)
    n = sign_variations(chain, lo) - sign_variations(chain, hi)
    if a(hi) == 0:
        n -= 1
    return n


def _multiplicity_in(factors: list[IntPoly], lo: Fraction, hi: Fraction) -> int:
    mult = 0
    for i, a in enumerate(factors, start=1):
        if a.degree >= 1 and _has_root(a, lo, hi):
            mult += i
    return mult


def multiplicity_in(p: IntPoly, interval: RootInterval) -> int:
    """Multiplicity of p at the root inside an interval known to hold at most one root of p."""
    if p.degree < 1:
        return 0
    factors = squarefree_factors(p)
    total = 0
    for i, a in enumerate(factors, start=1):
        if a.degree < 1:
            continue
        if interval.exact:
            k = int(a(interval.lo) == 0)
        else:
            k = _sturm_count(a, interval.lo, interval.hi)
        if k > 1:
            raise InvariantError("interval holds more than one root of the polynomial")
        total += i * k
    return total


def refine_interval(p: IntPoly, interval: RootInterval) -> RootInterval:
    """Halve an isolating interval of p (keeping the multiplicity)."""
    if interval.exact:
        return interval
    s = _squarefree_part(p)
    lo, hi = _refine(s, interval.lo, interval.hi, interval.width / 2)
    return RootInterval(lo, hi, interval.multiplicity)


def _squarefree_part(p: IntPoly) -> IntPoly:
    return exact_div_q(p, gcd(p, p.derivative()))


def interval_eval(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p over [lo, hi] by interval Horner evaluation."""
    a = b = Fraction(0)
    for c in reversed(p.coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b
