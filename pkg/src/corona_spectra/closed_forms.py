"""Closed-form coronals for regular, complete multipartite and path graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra import ONE, X, IntPoly, RatFunc


def coronal_regular(n: int, r: int) -> RatFunc:
    """n / (x - r) for any r-regular graph on n vertices."""
    if n < 1 or not 0 <= r <= n - 1:
        raise ValueError(f"need n >= 1 and 0 <= r <= n-1, got n={n}, r={r}")
    return RatFunc(IntPoly.const(n), X - r)


def regular_corona_new_eigs(mu: float, r: int, n: int) -> tuple[float, float]:
    """The two corona eigenvalues (mu + r +- sqrt((r - mu)^2 + 4n)) / 2 attached to mu."""
    if n < 1:
        raise ValueError("n must be positive")
    root = math.sqrt((r - mu) ** 2 + 4 * n)
    return (mu + r - root) / 2, (mu + r + root) / 2


def coronal_complete_bipartite(p: int, q: int) -> RatFunc:
    """((p + q) x + 2pq) / (x^2 - pq)."""
    if p < 1 or q < 1:
        raise ValueError("part sizes must be positive")
    return RatFunc(IntPoly((2 * p * q, p + q)), IntPoly((-p * q, 0, 1)))


def bipartite_new_eig_cubic(mu: Fraction | int, p: int, q: int) -> tuple[Fraction, ...]:
    """Coefficients (low degree first) of x^3 - mu x^2 - (p + q + pq) x + pq (mu - 2).

    Returned as Fractions because mu may be any rational eigenvalue of G.
    """
    mu = Fraction(mu)
    return (p * q * (mu - 2), Fraction(-(p + q + p * q)), -mu, Fraction(1))


@dataclass(frozen=True)
class PartitionSpec:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts or any(k < 1 for k in parts):
            raise ValueError(f"parts must be positive integers, got {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def elementary(self, j: int) -> int:
        """C_j: sum of products of j distinct part sizes."""
        return sum(math.prod(c) for c in combinations(self.parts, j))


def coronal_complete_multipartite(spec: PartitionSpec | Sequence[int]) -> RatFunc:
    """sum_j j C_j x^(k-j) / (x^k - sum_{j>=2} (j-1) C_j x^(k-j)), reduced."""
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    k = spec.k
    num = [0] * k
    den = [0] * k + [1]
    for j in range(1, k + 1):
        cj = spec.elementary(j)
        num[k - j] += j * cj
        if j >= 2:
            den[k - j] -= (j - 1) * cj
    return RatFunc(IntPoly(num), IntPoly(den))


def coronal_complete_multipartite_product_form(spec: PartitionSpec | Sequence[int]) -> RatFunc:
    """(prod (n_j + x) / sum_j n_j prod_{i != j} (n_i + x) - 1)^(-1)."""
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    factors = [IntPoly((nj, 1)) for nj in spec.parts]
    full = ONE
    for f in factors:
        full = full * f
    weighted = IntPoly()
    for j, nj in enumerate(spec.parts):
        others = ONE
        for i, f in enumerate(factors):
            if i != j:
                others = others * f
        weighted = weighted + nj * others
    # full/weighted - 1 = (full - weighted)/weighted, then invert
    return RatFunc(weighted, full - weighted)


def path_charpoly_sequence(n: int) -> list[IntPoly]:
    """f_0 = 1, f_1 = x, f_j = x f_{j-1} - f_{j-2}; f_j is the path P_j's char poly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    seq = [ONE]
    if n >= 1:
        seq.append(X)
    for _ in range(2, n + 1):
        seq.append(X * seq[-1] - seq[-2])
    return seq


def coronal_path(n: int) -> RatFunc:
    """(n f_n - 2 sum_{j<n} f_j) / ((x - 2) f_n), reduced."""
    if n < 1:
        raise ValueError("n must be positive")
    f = path_charpoly_sequence(n)
    tail = IntPoly()
    for fj in f[:-1]:
        tail = tail + fj
    return RatFunc(n * f[n] - 2 * tail, (X - 2) * f[n])


def coronal_path_schwenk_form(n: int) -> RatFunc:
    """(sum_i f_{i-1} f_{n-i} + 2 sum_{i<j} f_{i-1} f_{n-j}) / f_n from unique paths.

    The off-diagonal sum runs over i < j, each unordered pair counted twice
    by the symmetry of the adjugate.
    """
    if n < 1:
        raise ValueError("n must be positive")
    f = path_charpoly_sequence(n)
    total = IntPoly()
    for i in range(1, n + 1):
        total = total + f[i - 1] * f[n - i]
        for j in range(i + 1, n + 1):
            total = total + 2 * f[i - 1] * f[n - j]
    return RatFunc(total, f[n])
