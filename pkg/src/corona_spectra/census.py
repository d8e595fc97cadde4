"""Graphs up to isomorphism at small orders, and the distribution of the
reduced coronal denominator degree d over them."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import canonical_form, certificate
from .engine import coronal
from .errors import ResourceLimitError
from .graphs import Graph, parse_graph6

MAX_BUILTIN_ORDER = 8

# number of graphs on n unlabeled vertices
KNOWN_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found: dict[tuple[int, int], Graph] = {}
    for parent in _classes(n - 1):
        for mask in range(1 << (n - 1)):
            edges = set(parent.edges)
            edges.update((v, n - 1) for v in range(n - 1) if mask >> v & 1)
            child = Graph(n, frozenset(edges))
            key = certificate(child)
            if key not in found:
                found[key] = canonical_form(child)
    return tuple(found[k] for k in sorted(found))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of n-vertex graphs.

    Every class on n vertices arises by adding a vertex, with any neighbourhood,
    to some class on n-1 vertices; children are deduplicated by certificate.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    if n > MAX_BUILTIN_ORDER:
        raise ResourceLimitError(
            f"built-in enumeration is limited to n <= {MAX_BUILTIN_ORDER}; supply a graph6 stream"
        )
    yield from _classes(n)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


@dataclass(frozen=True)
class CensusRow:
    n: int
    counts_by_d: dict[int, int]
    total: int

    @property
    def average_d(self) -> Fraction:
        return Fraction(sum(d * c for d, c in self.counts_by_d.items()), self.total)

    @property
    def average_d_over_n(self) -> Fraction:
        return self.average_d / self.n

    def records(self) -> list[dict]:
        return [{"n": self.n, "d": d, "count": c} for d, c in sorted(self.counts_by_d.items())]


def _coronal_degree(g: Graph) -> int:
    c = coronal(g)
    return c.d


def coronal_degree_census(n: int, graphs: Iterable[Graph] | None = None, jobs: int = 1) -> CensusRow:
    """Bucket the graphs of order n (built-in enumeration unless given) by d."""
    graphs = list(enumerate_graphs(n) if graphs is None else graphs)
    for g in graphs:
        if g.n != n:
            raise ValueError(f"graph of order {g.n} in a census of order {n}")
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            degrees = list(pool.map(_coronal_degree, graphs, chunksize=32))
    else:
        degrees = [_coronal_degree(g) for g in graphs]
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    return CensusRow(n=n, counts_by_d=dict(sorted(counts.items())), total=len(graphs))


def _fmt_avg(x: Fraction) -> str:
    # two decimals, except values that print as integers in the table
    if x.denominator == 1:
        return str(x.numerator)
    s = f"{float(x):.2f}"
    return s.rstrip("0").rstrip(".") if s.endswith("0") else s


def format_table(rows: list[CensusRow]) -> str:
    """Aligned text table: one column per order n, one row per d, then totals and averages."""
    max_d = max((max(r.counts_by_d, default=0) for r in rows), default=0)
    header = ["d\\n"] + [str(r.n) for r in rows]
    body = []
    for d in range(1, max_d + 1):
        line = [str(d)]
        for r in rows:
            line.append(str(r.counts_by_d.get(d, 0)) if d <= r.n else "")
        body.append(line)
    body.append(["Total"] + [str(r.total) for r in rows])
    body.append(["Average d"] + [_fmt_avg(r.average_d) for r in rows])
    body.append(["(Average d)/n"] + [_fmt_avg(r.average_d_over_n) for r in rows])
    table = [header] + body
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = []
    for row in table:
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def format_records(rows: list[CensusRow]) -> str:
    out = []
    for r in rows:
        for rec in r.records():
            out.append(json.dumps(rec, sort_keys=True))
        out.append(
            json.dumps(
                {
                    "n": r.n,
                    "total": r.total,
                    "average_d": f"{r.average_d.numerator}/{r.average_d.denominator}",
                },
                sort_keys=True,
            )
        )
    return "\n".join(out) + "\n"
