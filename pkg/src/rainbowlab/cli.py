"""Command-line interface.

Exit codes: 0 success/pass, 1 usage or input error, 2 mathematical negative
(violation or counterexample), 3 search budget exhausted without proof.

Coloring files::

    graph complete 5        # or: graph bipartite2 N
    0 1 3                   # <a> <b> <color>, one line per edge
    ...

Bipartite left vertices are written ``u`` and ``v``; columns by their 0-based
index. Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bounds
from .colorings import Coloring, canonicalize
from .constraints import Constraint, eq1_stats, named, verify
from .construct import construct_k2n
from .errors import RainbowLabError, StructuralError
from .graphs import BIPARTITE2, COMPLETE, GraphSpec, edge_index, endpoints
from .search import (Budget, census, default_threads, implication_scan, min_colors_bb,
                     min_colors_exhaustive)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_BUDGET = 3


# ---------------------------------------------------------------------------
# Coloring files
# ---------------------------------------------------------------------------

def parse_coloring(text: str) -> Coloring:
    spec = None
    colors: Optional[list] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if spec is None:
            if len(parts) != 3 or parts[0] != "graph" or parts[1] not in (COMPLETE, BIPARTITE2):
                raise StructuralError(f"line {lineno}: expected 'graph complete N' or "
                                      f"'graph bipartite2 N', got {line!r}")
            try:
                spec = GraphSpec(parts[1], int(parts[2]))
            except ValueError:
                raise StructuralError(f"line {lineno}: bad graph size {parts[2]!r}") from None
            colors = [None] * spec.edge_count
            continue
        if len(parts) != 3:
            raise StructuralError(f"line {lineno}: expected '<a> <b> <color>', got {line!r}")
        a = spec.vertex_from_label(parts[0])
        b = spec.vertex_from_label(parts[1])
        e = edge_index(spec, a, b)
        if not parts[2].isdigit():
            raise StructuralError(f"line {lineno}: color must be a nonnegative integer")
        if colors[e] is not None:
            raise StructuralError(f"line {lineno}: edge {parts[0]}-{parts[1]} listed twice")
        colors[e] = int(parts[2])
    if spec is None:
        raise StructuralError("empty coloring file")
    missing = [e for e, c in enumerate(colors) if c is None]
    if missing:
        a, b = endpoints(spec, missing[0])
        raise StructuralError(f"{len(missing)} edge(s) missing, first "
                              f"{spec.vertex_label(a)}-{spec.vertex_label(b)}")
    return Coloring(spec, colors)


def format_coloring(c: Coloring) -> str:
    c = canonicalize(c)
    spec = c.spec
    lines = [f"graph {spec.kind} {spec.n}"]
    for e, col in enumerate(c.colors):
        a, b = endpoints(spec, e)
        lines.append(f"{spec.vertex_label(a)} {spec.vertex_label(b)} {col}")
    return "\n".join(lines) + "\n"


def read_coloring(path: str) -> Coloring:
    if path == "-":
        return parse_coloring(sys.stdin.read())
    try:
        return parse_coloring(Path(path).read_text())
    except OSError as exc:
        raise StructuralError(f"cannot read {path}: {exc.strerror}") from None


def write_coloring(c: Coloring, path: str) -> None:
    text = format_coloring(c)
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _edge_label(spec: GraphSpec, e: int) -> str:
    a, b = endpoints(spec, e)
    return f"{spec.vertex_label(a)}-{spec.vertex_label(b)}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    c = read_coloring(args.coloring)
    k = named(args.constraint)
    verdict = verify(c, k)
    if args.stats and c.spec.kind == BIPARTITE2:
        st = eq1_stats(c)
        print(f"shared: {st.shared} symdiff: {st.symdiff} union: {st.union} "
              f"eq1: {str(st.eq1_holds).lower()} eq2: {str(st.eq2_holds).lower()}")
    if verdict.passed:
        print(f"pass {k.name}")
        return EXIT_OK
    w = verdict.witness
    print(f"fail {k.name}")
    print(f"witness: {' '.join(_edge_label(c.spec, e) for e in w.edges)}")
    print(f"observed: {w.observed}")
    print(f"required: {w.required}")
    return EXIT_NEGATIVE


def cmd_construct(args) -> int:
    c = construct_k2n(args.k2n)
    if args.output:
        write_coloring(c, args.output)
    print(f"colors: {c.num_colors}", file=sys.stderr if args.output == "-" else sys.stdout)
    return EXIT_OK


def cmd_search(args) -> int:
    spec = GraphSpec.parse(args.graph)
    k = named(args.constraint)
    if args.engine == "exhaustive":
        res = min_colors_exhaustive(spec, k)
    else:
        budget = Budget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)
        threads = args.threads or default_threads()
        res = min_colors_bb(spec, k, budget, threads=threads)
    print(f"min_colors: {res.min_colors} proven: {str(res.proven_optimal).lower()}")
    print(f"nodes_explored: {res.nodes_explored}")
    print(f"elapsed: {res.elapsed:.3f}s", file=sys.stderr)
    if args.output:
        write_coloring(res.optimal, args.output)
    return EXIT_OK if res.proven_optimal else EXIT_BUDGET


def _parse_constraints(text: str) -> list[Constraint]:
    return [named(tok) for tok in text.split(",") if tok.strip()]


def cmd_census(args) -> int:
    spec = GraphSpec.parse(args.graph)
    ks = _parse_constraints(args.constraints)
    rep = census(spec, ks)
    names = [k.name for k in ks]
    r = len(ks)
    if args.format == "csv":
        print("a,b,pass_a,pass_b,total,a_subset_b,counterexample")
        for i in range(r):
            for j in range(r):
                cex = rep.counterexamples.get((i, j))
                seq = " ".join(map(str, cex.colors)) if cex else ""
                print(f"{names[i]},{names[j]},{rep.pass_counts[i]},{rep.pass_counts[j]},"
                      f"{rep.total},{int(rep.contains[i][j])},{seq}")
        return EXIT_OK
    print(f"graph: {spec}  partitions: {rep.total}")
    width = max(len(x) for x in names + ["constraint"])
    print(f"{'constraint':<{width}}  pass_count")
    for name, cnt in zip(names, rep.pass_counts):
        print(f"{name:<{width}}  {cnt}")
    print()
    print("containment (row passes => column passes):")
    print(" " * width + "  " + "  ".join(f"{x:>{width}}" for x in names))
    for i in range(r):
        cells = "  ".join(f"{('yes' if rep.contains[i][j] else 'no'):>{width}}" for j in range(r))
        print(f"{names[i]:<{width}}  {cells}")
    for (i, j), cex in sorted(rep.counterexamples.items()):
        print(f"counterexample {names[i]} !=> {names[j]}: {' '.join(map(str, cex.colors))}")
    return EXIT_OK


def cmd_scan(args) -> int:
    spec = GraphSpec.parse(args.graph)
    a, b = named(args.src), named(args.dst)
    cex = implication_scan(spec, a, b)
    if cex is None:
        print("implication holds")
        return EXIT_OK
    sys.stdout.write(f"# counterexample: passes {a.name}, fails {b.name}\n")
    sys.stdout.write(format_coloring(cex))
    return EXIT_NEGATIVE


def _q(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def cmd_bounds(args) -> int:
    rows = bounds.bound_table(args.n_from, args.n_to)
    header = ["n", "claimed", "claimed_ceil", "eq3_root", "eq3_ceil",
              "axenovich", "toth", "proper_case", "lemma_value", "flag"]
    table = [[str(r.n), _q(r.claimed), str(r.claimed_ceil), f"{r.eq3_root:.9f}",
              str(r.eq3_ceil), f"{r.axenovich:.9f}", str(r.toth), str(r.proper_case),
              str(r.lemma_value), str(int(r.discrepancy))] for r in rows]
    if args.format == "csv":
        print(",".join(header))
        for row in table:
            print(",".join(row))
        return EXIT_OK
    widths = [max(len(h), *(len(row[i]) for row in table)) for i, h in enumerate(header)]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in table:
        print("  ".join(x.rjust(w) for x, w in zip(row, widths)))
    print()
    print(bounds.TABLE_FOOTER)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rainbowlab",
                description="Exact checks for (p,q) and (H,q) edge colorings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check a coloring file against a constraint")
    v.add_argument("--coloring", required=True, help="coloring file, or - for stdin")
    v.add_argument("--constraint", required=True, help="c59, b235, b247, pc3 or sfe3")
    v.add_argument("--stats", action="store_true", help="also print u/v palette statistics")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="build the ceil(3n/2)-color K_{2,n} coloring")
    c.add_argument("--k2n", type=int, required=True, metavar="N")
    c.add_argument("-o", "--output", help="write the coloring here (- for stdout)")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="exact minimum number of colors")
    s.add_argument("--graph", required=True, help="complete:N or bipartite2:N")
    s.add_argument("--constraint", required=True)
    s.add_argument("--engine", choices=("bb", "exhaustive"), default="bb")
    s.add_argument("--max-nodes", type=int, default=10**8)
    s.add_argument("--max-seconds", type=float, default=None)
    s.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $RAINBOWLAB_THREADS or all cores)")
    s.add_argument("-o", "--output", help="write the optimal coloring here")
    s.set_defaults(func=cmd_search)

    ce = sub.add_parser("census", help="evaluate constraints on every edge partition")
    ce.add_argument("--graph", required=True)
    ce.add_argument("--constraints", required=True, help="comma-separated names")
    ce.add_argument("--format", choices=("table", "csv"), default="table")
    ce.set_defaults(func=cmd_census)

    sc = sub.add_parser("scan", help="look for a coloring passing one constraint but not another")
    sc.add_argument("--graph", required=True)
    sc.add_argument("--from", dest="src", required=True)
    sc.add_argument("--to", dest="dst", required=True)
    sc.set_defaults(func=cmd_scan)

    b = sub.add_parser("bounds", help="table of the closed-form bounds")
    b.add_argument("--from", dest="n_from", type=int, required=True)
    b.add_argument("--to", dest="n_to", type=int, required=True)
    b.add_argument("--format", choices=("table", "csv"), default="table")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RainbowLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
