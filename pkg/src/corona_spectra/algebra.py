"""Exact univariate polynomials over the integers and reduced rational functions.

Coefficients are stored low degree first, so ``IntPoly((-2, 0, 1))`` is
``x^2 - 2``.  The zero polynomial is the empty tuple and has degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce as _fold
from math import gcd as _igcd
from typing import Iterable, Sequence

from .errors import InterpolationError, NotDivisibleError


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"coefficients must be int, got {type(a).__name__}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # construction helpers
    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPoly:
        return cls((0,) * degree + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        """Monic polynomial prod (x - r)."""
        p = cls.const(1)
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({render(self)!r})"

    def __str__(self):
        return render(self)

    # ring operations
    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, t):
        """Horner evaluation at an int, Fraction, or polynomial."""
        acc = 0 if not isinstance(t, IntPoly) else IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        return _fold(_igcd, self.coeffs, 0)

    def primitive(self) -> IntPoly:
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)


def _coerce(v):
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly.const(v)
    return NotImplemented


X = IntPoly.x()
ONE = IntPoly.const(1)
ZERO = IntPoly()


def divmod_exact_lc(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division over Z; raises NotDivisibleError when a quotient term is not integral."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p.coeffs)
    dq, lq = q.degree, q.lc
    quot = [0] * max(len(r) - dq, 0)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if not c:
            continue
        t, rem = divmod(c, lq)
        if rem:
            raise NotDivisibleError(f"{render(q)} does not divide {render(p)} over the integers")
        quot[k - dq] = t
        for i, qc in enumerate(q.coeffs):
            r[k - dq + i] -= t * qc
    return IntPoly(quot), IntPoly(r)


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    quot, rem = divmod_exact_lc(p, q)
    if rem:
        raise NotDivisibleError(f"{render(q)} does not divide {render(p)}: remainder {render(rem)}")
    return quot


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder |lc(b)|^(deg a - deg b + 1) * a mod b.

    Uses the absolute value of the leading coefficient so the result is a
    positive multiple of the true remainder (Sturm chains depend on the sign).
    """
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    sign = 1 if lb > 0 else -1
    lb_abs = abs(lb)
    steps = 0
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[k]
        # r <- |lb| * r - sign * c * x^(k-db) * b
        r = [lb_abs * v for v in r]
        for i, bc in enumerate(b.coeffs):
            r[k - db + i] -= sign * c * bc
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    extra = max(a.degree - db + 1, 0) - steps
    return IntPoly(r) * lb_abs**extra if extra > 0 else IntPoly(r)


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Greatest common divisor over Q, scaled to a primitive integer polynomial
    with positive leading coefficient (monic when either input is monic)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, prem(a, b).primitive()
    return a.primitive()


def squarefree_factors(p: IntPoly) -> list[IntPoly]:
    """Primitive a_1, a_2, ... with p ~ prod a_i^i up to a constant.

    a_i collects the roots of multiplicity exactly i (ONE when there are
    none), so the list index encodes the multiplicity.  Only gcds and exact
    divisions are used, so constant factors never matter.
    """
    if p.degree < 1:
        return []
    p = p.primitive()
    rest = gcd(p, p.derivative())
    layer = exact_div_q(p, rest)
    out = []
    while layer.degree >= 1:
        deeper = gcd(rest, layer)
        out.append(exact_div_q(layer, deeper))
        rest = exact_div_q(rest, deeper)
        layer = deeper
    return out


def exact_div_q(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact division over Q, rescaled to a primitive integer result.

    Only the root structure survives; the constant factor is discarded.
    """
    if p.is_zero():
        return p
    qp = q.primitive()
    scale = qp.lc ** max(p.degree - qp.degree + 1, 0)
    quot, rem = divmod_exact_lc(p * scale, qp)
    if rem:
        raise NotDivisibleError(f"{render(q)} does not divide {render(p)} over Q")
    return quot.primitive()


def compose_into(f: IntPoly, rho_num: IntPoly, rho_den: IntPoly, extra_den_power: int = 0) -> IntPoly:
    """rho_den^(deg f + extra) * f(rho_num / rho_den), as an exact polynomial."""
    if extra_den_power < 0:
        raise ValueError("extra_den_power must be non-negative")
    if rho_den.is_zero():
        raise ZeroDivisionError("rho_den is zero")
    m = f.degree
    if m < 0:
        return ZERO
    # Horner on the homogenised form: acc <- acc * num + c_k * den^(m-k)
    acc = IntPoly.const(f.coeffs[m])
    den_pow = ONE
    for k in range(m - 1, -1, -1):
        den_pow = den_pow * rho_den
        acc = acc * rho_num + den_pow * f.coeffs[k]
    return acc * rho_den**extra_den_power


def eval_at_integer(p: IntPoly, t: int) -> int:
    return p(t)


def interpolate(points: Sequence[tuple[int, int]], degree_bound: int) -> IntPoly:
    """Integer polynomial of degree <= degree_bound through the given points."""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InterpolationError("duplicate abscissae")
    if len(points) < degree_bound + 1:
        raise InterpolationError(f"need {degree_bound + 1} points, got {len(points)}")
    # Newton divided differences
    n = len(points)
    coef = [Fraction(y) for _, y in points]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # poly <- poly * (x - xs[i]) + coef[i]
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] += c
            nxt[k] -= c * xs[i]
        nxt[0] += coef[i]
        poly = nxt
    out = []
    for c in poly:
        if c.denominator != 1:
            raise InterpolationError(f"non-integral interpolant coefficient {c}")
        out.append(c.numerator)
    result = IntPoly(out)
    if result.degree > degree_bound:
        raise InterpolationError(
            f"interpolant has degree {result.degree}, exceeding bound {degree_bound}"
        )
    return result


class RatFunc:
    """Reduced quotient num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly = ONE, *, _reduced: bool = False):
        if not _reduced:
            num, den = _reduce_pair(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def d(self) -> int:
        """Degree of the reduced denominator."""
        return self.den.degree

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = RatFunc(_coerce(other))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFunc({render_ratfunc(self)!r})"

    def __str__(self):
        return render_ratfunc(self)

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __call__(self, t):
        return Fraction(self.num(t)) / self.den(t)


def _as_ratfunc(v):
    if isinstance(v, RatFunc):
        return v
    v = _coerce(v)
    if v is NotImplemented:
        return v
    return RatFunc(v, ONE, _reduced=True)


def _reduce_pair(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    g = gcd(num, den)
    # g is primitive, so both quotients are integral (Gauss's lemma)
    num = exact_div(num, g)
    den = exact_div(den, g)
    if den.lc < 0:
        num, den = -num, -den
    if den.lc != 1:
        c = _igcd(num.content(), den.content())
        num = IntPoly(a // c for a in num.coeffs)
        den = IntPoly(a // c for a in den.coeffs)
        if den.lc != 1:
            raise ValueError(f"denominator {render(den)} cannot be made monic over the integers")
    return num, den


def reduce(num: IntPoly, den: IntPoly) -> RatFunc:
    return RatFunc(num, den)


# rendering

def render(p: IntPoly, var: str = "x", *, tex: bool = False) -> str:
    """Descending-degree text with explicit signs, e.g. ``x^4 - 4*x^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else (f"{var}^{{{k}}}" if tex and k > 9 else f"{var}^{k}")
            if a == 1:
                body = mono
            else:
                body = f"{a}{mono}" if tex else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _n_terms(p: IntPoly) -> int:
    return sum(1 for c in p.coeffs if c)


def render_ratfunc(r: RatFunc, var: str = "x", *, tex: bool = False) -> str:
    num = render(r.num, var, tex=tex)
    if r.den == ONE:
        return num
    den = render(r.den, var, tex=tex)
    if tex:
        return rf"\frac{{{num}}}{{{den}}}"
    if _n_terms(r.num) > 1 or r.num.lc < 0:
        num = f"({num})"
    if _n_terms(r.den) > 1 or (r.den.degree > 0 and r.den.lc != 1):
        den = f"({den})"
    return f"{num}/{den}"


def parse_poly(text: str, var: str = "x") -> IntPoly:
    """Inverse of :func:`render` for integer polynomials (also accepts ``**``)."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    terms: dict[int, int] = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        if s[i] not in "+-":
            raise ValueError(f"expected sign at offset {i} in {text!r}")
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        term = s[i + 1 : j]
        if not term:
            raise ValueError(f"empty term at offset {i} in {text!r}")
        if var in term:
            coef_txt, _, rest = term.partition(var)
            coef_txt = coef_txt.rstrip("*")
            coef = int(coef_txt) if coef_txt else 1
            if rest:
                if not rest.startswith("^"):
                    raise ValueError(f"bad exponent in term {term!r}")
                deg = int(rest[1:].strip("{}"))
            else:
                deg = 1
        else:
            coef, deg = int(term), 0
        terms[deg] = terms.get(deg, 0) + sign * coef
        i = j
    top = max(terms)
    return IntPoly(terms.get(k, 0) for k in range(top + 1))
