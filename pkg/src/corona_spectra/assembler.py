"""Characteristic polynomial and spectrum of a corona G o H.

With the reduced coronal chi_H = p/q and f_H = g*q,

    f_{G o H}(x) = f_H(x)^m f_G(x - chi_H(x)) = g^m * sum_k c_k (x q - p)^k q^(m-k)

for f_G = sum_k c_k x^k.  The roots of g^m are the "old" eigenvalues; the
second factor equals prod over eigenvalues mu of G of (q(x)(x - mu) - p(x)),
whose roots are the "new" ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import X, IntPoly, compose_into, gcd
from .engine import Coronal, char_poly, coronal
from .errors import InvariantError
from .graphs import Graph, corona
from .roots import (
    RootInterval,
    interval_eval,
    isolate_real_roots,
    multiplicity_in,
    refine_interval,
)


@dataclass(frozen=True)
class CoronaCharPoly:
    total: IntPoly
    m: int
    n: int
    old_part: IntPoly
    new_part: IntPoly
    f_g: IntPoly
    coronal: Coronal

    def check(self, g: Graph | None = None, h: Graph | None = None) -> None:
        size = self.m * (self.n + 1)
        if not self.total.is_monic() or self.total.degree != size:
            raise InvariantError(f"f_(G o H) must be monic of degree {size}")
        if self.old_part * self.new_part != self.total:
            raise InvariantError("total != old_part * new_part")
        if g is not None and h is not None:
            if self.total[size - 1] != 0:
                raise InvariantError("trace coefficient of f_(G o H) is nonzero")
            edges = g.num_edges + self.m * h.num_edges + self.m * self.n
            if self.total[size - 2] != -edges:
                raise InvariantError("second coefficient of f_(G o H) is not minus the edge count")


def assemble(f_g: IntPoly, c: Coronal) -> CoronaCharPoly:
    """Assemble f_{G o H} from f_G and the coronal of H alone."""
    m = f_g.degree
    p, q = c.chi.num, c.chi.den
    new_part = compose_into(f_g, X * q - p, q, 0)
    old_part = c.g**m
    return CoronaCharPoly(
        total=old_part * new_part,
        m=m,
        n=c.n,
        old_part=old_part,
        new_part=new_part,
        f_g=f_g,
        coronal=c,
    )


def corona_char_poly(g: Graph, h: Graph, *, verify: bool = True) -> CoronaCharPoly:
    """f_{G o H} from f_G, f_H and the coronal of H.

    With ``verify`` the result is also checked coefficient by coefficient
    against the characteristic polynomial of the explicitly built corona.
    """
    if g.n < 1 or h.n < 1:
        raise ValueError("both graphs must be nonempty")
    result = assemble(char_poly(g), coronal(h))
    result.check(g, h)
    if verify:
        direct = char_poly(corona(g, h))
        if direct != result.total:
            raise InvariantError(
                f"assembled {result.total} differs from direct char poly {direct}"
            )
    return result


@dataclass(frozen=True)
class NewRootGroup:
    """The d+1 corona roots solving x - chi_H(x) = mu for one eigenvalue mu of G.

    ``roots`` multiplicities are within the group polynomial q(x)(x - mu) - p(x);
    every root counts ``mu.multiplicity`` times in the corona.
    """

    mu: RootInterval
    roots: tuple[RootInterval, ...]


@dataclass(frozen=True)
class SpectrumReport:
    m: int
    n: int
    d: int
    char_poly: CoronaCharPoly
    old_roots: tuple[RootInterval, ...]
    new_groups: tuple[NewRootGroup, ...]
    all_roots: tuple[RootInterval, ...]
    stacked: tuple[RootInterval, ...] = field(default=())

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.all_roots)

    def check(self) -> None:
        """Exact consistency of the old/new split with the roots of the total."""
        size = self.m * (self.n + 1)
        if self.total_multiplicity != size:
            raise InvariantError(f"roots account for {self.total_multiplicity} of {size}")
        old = sum(r.multiplicity for r in self.old_roots)
        new = sum(r.multiplicity * grp.mu.multiplicity for grp in self.new_groups for r in grp.roots)
        if old != (self.n - self.d) * self.m or new != self.m * (self.d + 1):
            raise InvariantError("old/new eigenvalue counts do not match (n-d)m + m(d+1)")
        for grp in self.new_groups:
            if sum(r.multiplicity for r in grp.roots) != self.d + 1:
                raise InvariantError("a new-root group does not have d+1 roots")
        cp = self.char_poly
        for root in self.all_roots:
            here = self.m * multiplicity_in(cp.coronal.g, root) + multiplicity_in(cp.new_part, root)
            if here != root.multiplicity:
                raise InvariantError(f"multiplicity mismatch at {float(root):.12g}")


def decompose(g: Graph, h: Graph, *, verify: bool = True) -> SpectrumReport:
    """Old/new split of the corona spectrum, with isolated real roots."""
    cp = corona_char_poly(g, h, verify=verify)
    c = cp.coronal
    m = cp.m
    old = tuple(
        RootInterval(r.lo, r.hi, r.multiplicity * m)
        for r in (isolate_real_roots(c.g, require_all_real=True) if c.g.degree > 0 else [])
    )
    mus = isolate_real_roots(cp.f_g, require_all_real=True)
    new_roots = isolate_real_roots(cp.new_part, require_all_real=True)
    buckets: dict[int, list[RootInterval]] = {k: [] for k in range(len(mus))}
    for lam in new_roots:
        k, lam = _match_mu(lam, cp, mus)
        mu = mus[k]
        if lam.multiplicity % mu.multiplicity:
            raise InvariantError("new-root multiplicity is not a multiple of its eigenvalue's")
        buckets[k].append(RootInterval(lam.lo, lam.hi, lam.multiplicity // mu.multiplicity))
    groups = tuple(NewRootGroup(mus[k], tuple(buckets[k])) for k in range(len(mus)))
    all_roots = tuple(isolate_real_roots(cp.total, require_all_real=True))
    common = gcd(c.g, cp.new_part) if c.g.degree > 0 else IntPoly((1,))
    stacked = tuple(isolate_real_roots(common)) if common.degree > 0 else ()
    report = SpectrumReport(
        m=m,
        n=cp.n,
        d=c.d,
        char_poly=cp,
        old_roots=old,
        new_groups=groups,
        all_roots=all_roots,
        stacked=stacked,
    )
    report.check()
    return report


def _match_mu(lam: RootInterval, cp: CoronaCharPoly, mus: list[RootInterval], max_steps: int = 400):
    """Find the eigenvalue mu of G with lam - chi_H(lam) = mu, refining lam as needed."""
    p, q = cp.coronal.chi.num, cp.coronal.chi.den
    for _ in range(max_steps):
        lo, hi = lam.lo, lam.hi
        q_lo, q_hi = interval_eval(q, lo, hi)
        if q_lo > 0 or q_hi < 0:
            p_lo, p_hi = interval_eval(p, lo, hi)
            ratios = [a / b for a in (p_lo, p_hi) for b in (q_lo, q_hi)]
            mu_lo, mu_hi = lo - max(ratios), hi - min(ratios)
            hits = [
                k for k, mu in enumerate(mus)
                if mu_lo <= mu.hi and mu.lo <= mu_hi
            ]
            if len(hits) == 1:
                return hits[0], lam
        if lam.exact:
            mu = lam.lo - Fraction(p(lam.lo), q(lam.lo))
            hits = [k for k, r in enumerate(mus) if r.lo <= mu <= r.hi]
            if len(hits) == 1:
                return hits[0], lam
            mus = [refine_interval(cp.f_g, r) for r in mus]
            continue
        lam = refine_interval(cp.new_part, lam)
        mus = [refine_interval(cp.f_g, r) for r in mus]
    raise InvariantError(f"could not attach the new root near {float(lam):.12g} to an eigenvalue of G")
