"""Command-line interface.

Graphs are given as a family expression (``K1``, ``P5``, ``C4``, ``S5``,
``E3`` for the edgeless graph, ``K2,3`` for complete multipartite, ``~G``
for a complement, ``A+B`` for a disjoint union), as ``g6:<string>``, as a
file path, or as ``-`` for standard input.  Files hold graph6 or the
``n m`` / ``u v`` edge-list format.

Exit codes: 0 success, 1 usage, 2 parse error, 3 resource bound,
4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .algebra import RatFunc, render, render_ratfunc
from .assembler import corona_char_poly, decompose
from .census import (
    coronal_degree_census,
    format_records,
    format_table,
    read_graph6_stream,
)
from .closed_forms import (
    coronal_complete_multipartite,
    coronal_path,
    coronal_regular,
)
from .cospectral import (
    MAX_TREE_ORDER,
    find_tree_mates,
    smallest_tree_mates,
    switching_pair,
    verify_corollary10,
)
from .engine import DEFAULT_PATH_BUDGET, char_poly, coronal, coronal_near_regular, coronal_via_schwenk
from .errors import CoronaError, GraphParseError
from .graphs import (
    Graph,
    complement,
    complete,
    complete_multipartite,
    corona,
    corona_label,
    cycle,
    disjoint_union,
    emit_graph6,
    empty,
    parse_edge_list,
    parse_graph6,
    path,
    star,
)
from .roots import RootInterval

EXIT_USAGE = 1


class UsageError(CoronaError):
    exit_code = EXIT_USAGE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# graph input

_FAMILY = re.compile(r"^([KPCSE])(\d+(?:,\d+)*)$")


def _family(expr: str) -> Graph:
    expr = expr.strip()
    if not expr:
        raise GraphParseError("empty graph expression")
    if "+" in expr:
        parts = [p for p in expr.split("+")]
        g = _family(parts[0])
        for p in parts[1:]:
            g = disjoint_union(g, _family(p))
        return g
    if expr.startswith("~"):
        return complement(_family(expr[1:]))
    m = _FAMILY.match(expr)
    if not m:
        raise GraphParseError(f"unrecognized graph expression {expr!r}")
    kind, nums = m.group(1), [int(x) for x in m.group(2).split(",")]
    try:
        if len(nums) > 1:
            if kind != "K":
                raise GraphParseError(f"only K takes a part list, got {expr!r}")
            return complete_multipartite(nums)
        n = nums[0]
        return {"K": complete, "P": path, "C": cycle, "S": star, "E": empty}[kind](n)
    except ValueError as exc:
        raise GraphParseError(f"{expr!r}: {exc}") from None


def _parse_text(text: str, fmt: str) -> Graph:
    if fmt == "auto":
        first = next((ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
        fmt = "edgelist" if re.fullmatch(r"\s*\d+\s+\d+\s*", first) else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphParseError(f"expected one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


def load_graph(spec: str, fmt: str = "auto") -> Graph:
    if spec == "-":
        return _parse_text(sys.stdin.read(), fmt)
    if spec.startswith("g6:"):
        return parse_graph6(spec[3:])
    p = Path(spec)
    if p.is_file():
        return _parse_text(p.read_text(encoding="utf-8"), fmt)
    return _family(spec)


# output helpers

def _fmt_root(r: RootInterval, digits: int) -> str:
    return f"{float(r.midpoint):.{digits}g}"


def _interval_text(r: RootInterval) -> str:
    return f"[{r.lo}, {r.hi}]"


def _roots_json(roots) -> dict:
    return {
        "roots": [float(r.midpoint) for r in roots],
        "multiplicities": [r.multiplicity for r in roots],
        "intervals": [[str(r.lo), str(r.hi)] for r in roots],
    }


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


# subcommands

def cmd_charpoly(args) -> int:
    g = load_graph(args.graph, args.format)
    f = char_poly(g)
    if args.json_lines:
        _emit({"graph6": emit_graph6(g), "polynomial": render(f)})
    else:
        print(render(f, "\\lambda" if args.tex else "x", tex=args.tex))
    return 0


def _is_path(g: Graph) -> bool:
    return g.is_tree() and max(g.degrees(), default=0) <= 2


def _multipartite_parts(g: Graph) -> list[int] | None:
    """Part sizes if g is complete multipartite (its complement is a union of cliques)."""
    comp = complement(g)
    nb = comp.neighbors()
    seen, parts = set(), []
    for v in range(g.n):
        if v in seen:
            continue
        cls = nb[v] | {v}
        for u in cls:
            if nb[u] | {u} != cls:
                return None
        seen |= cls
        parts.append(len(cls))
    return parts


def _closed_form(g: Graph, family: str | None) -> RatFunc:
    if family in (None, "regular") and g.is_regular():
        return coronal_regular(g.n, g.degrees()[0])
    if family in (None, "path") and _is_path(g):
        return coronal_path(g.n)
    if family in (None, "multipartite"):
        parts = _multipartite_parts(g)
        if parts is not None:
            return coronal_complete_multipartite(sorted(parts))
    wanted = family or "regular, path or complete multipartite"
    raise UsageError(f"closed-form method unavailable: graph is not {wanted}")


def cmd_coronal(args) -> int:
    g = load_graph(args.graph, args.format)
    if g.n < 1:
        raise UsageError("the coronal needs a nonempty graph")
    if args.method == "generic":
        chi = coronal(g).chi
    elif args.method == "schwenk":
        chi = coronal_via_schwenk(g, args.budget).chi
    elif args.method == "near-regular":
        r = args.r if args.r is not None else max(set(g.degrees()), key=g.degrees().count)
        chi = coronal_near_regular(g, r).chi
    else:
        chi = _closed_form(g, args.family)
    if args.json_lines:
        _emit(
            {
                "graph6": emit_graph6(g),
                "numerator": render(chi.num),
                "denominator": render(chi.den),
                "d": chi.d,
            }
        )
    else:
        var = "\\lambda" if args.tex else "x"
        print(render_ratfunc(chi, var, tex=args.tex))
        print(f"d = {chi.d}")
    return 0


def cmd_corona(args) -> int:
    g = load_graph(args.g, args.format)
    h = load_graph(args.h, args.format)
    if g.n < 1 or h.n < 1:
        raise UsageError("corona needs two nonempty graphs")
    verify = not args.no_verify
    if args.edges:
        m = g.n
        for u, v in sorted(corona(g, h).edges):
            print(f"{_one_indexed_label(u, m)} {_one_indexed_label(v, m)}")
        return 0
    report = decompose(g, h, verify=verify) if (args.spectrum or args.decompose) else None
    cp = report.char_poly if report else corona_char_poly(g, h, verify=verify)
    var = "\\lambda" if args.tex else "x"
    if args.json_lines:
        rec = {
            "graph6": emit_graph6(corona(g, h)),
            "polynomial": render(cp.total),
            "numerator": render(cp.coronal.chi.num),
            "denominator": render(cp.coronal.chi.den),
            "d": cp.coronal.d,
        }
        if report:
            rec.update(_roots_json(report.all_roots))
        if args.decompose:
            rec["old"] = _roots_json(report.old_roots)
            rec["new"] = [
                {"mu": float(grp.mu.midpoint), "mu_multiplicity": grp.mu.multiplicity, **_roots_json(grp.roots)}
                for grp in report.new_groups
            ]
        _emit(rec)
        return 0
    print(render(cp.total, var, tex=args.tex))
    if args.spectrum:
        print(f"spectrum ({report.total_multiplicity} eigenvalues):")
        for r in report.all_roots:
            print(f"  {_fmt_root(r, args.digits)}  x{r.multiplicity}  {_interval_text(r)}")
    if args.decompose:
        print(f"coronal of H: {render_ratfunc(cp.coronal.chi)}  (d = {cp.coronal.d})")
        print(f"old eigenvalues (roots of g = {render(cp.coronal.g)}, each x|G| = x{report.m}):")
        if not report.old_roots:
            print("  none")
        for r in report.old_roots:
            print(f"  {_fmt_root(r, args.digits)}  x{r.multiplicity}")
        print("new eigenvalues (solutions of x - chi_H(x) = mu):")
        for grp in report.new_groups:
            vals = ", ".join(
                _fmt_root(r, args.digits) + (f" (x{r.multiplicity})" if r.multiplicity > 1 else "")
                for r in grp.roots
            )
            print(f"  mu = {_fmt_root(grp.mu, args.digits)} (x{grp.mu.multiplicity}): {vals}")
        if report.stacked:
            stacked = ", ".join(_fmt_root(r, args.digits) for r in report.stacked)
            print(f"note: eigenvalues both old and new: {stacked}")
    return 0


def _one_indexed_label(v: int, m: int) -> int:
    # 0-indexed v = i + m*k  ->  1-indexed label (i+1) + m*k
    return corona_label(v % m + 1, v // m, m)


def _parse_orders(values: list[str]) -> list[int]:
    out = []
    for v in values:
        if "-" in v:
            lo, hi = v.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(v))
    return out


def cmd_census(args) -> int:
    try:
        orders = _parse_orders(args.orders)
    except ValueError:
        raise UsageError(f"bad order list {args.orders!r}") from None
    if args.from_graph6:
        if len(orders) != 1:
            raise UsageError("--from-graph6 takes exactly one order")
        if args.from_graph6 == "-":
            graphs = list(read_graph6_stream(sys.stdin))
        else:
            with open(args.from_graph6, encoding="ascii") as fh:
                graphs = list(read_graph6_stream(fh))
        rows = [coronal_degree_census(orders[0], graphs, jobs=args.jobs)]
    else:
        rows = [coronal_degree_census(n, jobs=args.jobs) for n in orders]
    if args.json_lines:
        sys.stdout.write(format_records(rows))
    else:
        sys.stdout.write(format_table(rows))
    return 0


def cmd_cospectral(args) -> int:
    if args.action == "tree-mates":
        if args.order:
            order, pairs = args.order, find_tree_mates(args.order)
        else:
            order, pairs = smallest_tree_mates(args.max_order)
        if not args.json_lines:
            print(f"order {order}: {len(pairs)} pair(s)" if order else "no pairs found")
        for p in pairs:
            print(p.record() if args.json_lines else f"{emit_graph6(p.g1)} {emit_graph6(p.g2)} {render(p.certificate)}")
        return 0
    if args.action == "verify":
        if len(args.graphs) not in (3, 4):
            raise UsageError("verify takes G1 G2 H1 [H2]")
        g1, g2, h1 = (load_graph(s, args.format) for s in args.graphs[:3])
        h2 = load_graph(args.graphs[3], args.format) if len(args.graphs) == 4 else h1
        report = verify_corollary10(g1, g2, h1, h2, strict=False)
        if args.json_lines:
            _emit(
                {
                    "premise_a": report.premise_a,
                    "conclusion_a": report.conclusion_a,
                    "premise_b": report.premise_b,
                    "conclusion_b": report.conclusion_b,
                    "ok": report.ok,
                }
            )
        else:
            for line in report.lines():
                print(line)
            print("PASS" if report.ok else "FAIL")
        return 0 if report.ok else 4
    if args.action == "switching":
        if args.graphs:
            if len(args.graphs) != 2:
                raise UsageError("switching takes two trees T1 T2 (or none for the smallest mate pair)")
            t1, t2 = (load_graph(s, args.format) for s in args.graphs)
        else:
            _, pairs = smallest_tree_mates(args.max_order)
            if not pairs:
                raise UsageError(f"no tree mates up to order {args.max_order}")
            t1, t2 = pairs[0].g1, pairs[0].g2
        try:
            pair = switching_pair(t1, t2)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.json_lines:
            print(pair.record())
        else:
            print(f"Sw(T1) = {emit_graph6(pair.g1)}")
            print(f"Sw(T2) = {emit_graph6(pair.g2)}")
            print(f"regular of degree {t1.n - 1}; cospectral; coronal {render_ratfunc(coronal(pair.g1).chi)}")
            print(f"isomorphic: {'yes' if pair.isomorphic else 'no'}")
        return 0
    raise UsageError(f"unknown action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corona-spectra", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")
        p.add_argument("--json-lines", action="store_true", help="one JSON record per result")
        p.add_argument("--tex", action="store_true", help="TeX output in the variable lambda")

    p = sub.add_parser("charpoly", help="characteristic polynomial")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("coronal", help="reduced coronal and its denominator degree d")
    p.add_argument("graph")
    p.add_argument("--method", choices=["generic", "schwenk", "near-regular", "closed-form"], default="generic")
    p.add_argument("--family", choices=["regular", "path", "multipartite"])
    p.add_argument("--r", type=int, help="reference degree for --method near-regular")
    p.add_argument("--budget", type=int, default=DEFAULT_PATH_BUDGET, help="path budget for --method schwenk")
    common(p)
    p.set_defaults(func=cmd_coronal)

    p = sub.add_parser("corona", help="characteristic polynomial and spectrum of G o H")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--spectrum", action="store_true")
    p.add_argument("--decompose", action="store_true")
    p.add_argument("--edges", action="store_true", help="print the corona's edges in 1-indexed corona labels")
    p.add_argument("--no-verify", action="store_true", help="skip the direct-construction cross-check")
    p.add_argument("--digits", type=int, default=12)
    common(p)
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("census", help="distribution of the coronal denominator degree")
    p.add_argument("orders", nargs="+", help="orders, e.g. 5 or 1-7")
    p.add_argument("--from-graph6", metavar="FILE", help="read the graphs from a graph6 stream ('-' for stdin)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json-lines", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("cospectral", help="cospectral pair machinery")
    p.add_argument("action", choices=["tree-mates", "verify", "switching"])
    p.add_argument("graphs", nargs="*")
    p.add_argument("--order", type=int)
    p.add_argument("--max-order", type=int, default=MAX_TREE_ORDER)
    p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")
    p.add_argument("--json-lines", action="store_true")
    p.set_defaults(func=cmd_cospectral)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CoronaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
