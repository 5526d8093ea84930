"""Command-line front end.

Every subcommand writes a single JSON document to stdout (or ``--out``);
diagnostics go to stderr.  Exit codes: 0 success, 1 input/infeasibility
error, 2 conjecture violation found, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .bipartite import lemma1_cut, lemma2_extract
from .census import bn_inequality_check, edwards_check, rademacher_check, stats
from .constructions import (
    mubayi_upper,
    prism_blowup,
    prism_spec_from_string,
    s_graph,
    s_graph_book_number,
)
from .formats import Graph6ParseError, read_graphs, to_graph6
from .graph import Graph, GraphInputError
from .search import (
    THRESHOLD_MODES,
    SearchParams,
    SearchRefused,
    classical_suite,
    default_workers,
    stress_search,
    verify_conjecture,
)
from .surgery import (
    SurgeryInfeasible,
    TriPartition,
    UndefinedValue,
    exact_partition,
    partition_from_extraction,
    to_G1,
    to_G2,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bookgraph", description="Book numbers, triangle counts and extremal searches.")
    p.add_argument("--out", help="write JSON here instead of stdout")
    # --out is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write JSON here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build an extremal construction")
    csub = c.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for name in ("s-graph", "mubayi-upper"):
        k = csub.add_parser(name, parents=[common])
        k.add_argument("--b", type=_nonneg, required=True)
        k.add_argument("--n", type=_positive, required=True)
    k = csub.add_parser("prism", help="3-prism blow-up with given part sizes", parents=[common])
    k.add_argument("--sizes", "--parts", dest="parts", required=True, help="six sizes U1,U2,U3,V1,V2,V3")

    for name, hlp in (("stats", "triangle and book census"), ("cut", "best neighborhood bipartition")):
        s = sub.add_parser(name, help=hlp, parents=[common])
        s.add_argument("input", nargs="?", default="-", help="graph6 or edge-list JSON file (default stdin)")

    e = sub.add_parser("extract", help="induced bipartite extraction", parents=[common])
    e.add_argument("input", nargs="?", default="-")
    e.add_argument("--c", type=_fraction, required=True)
    e.add_argument("--b-cap", type=_nonneg, required=True)

    s = sub.add_parser("surgery", help="G -> G1 -> G2 transformations", parents=[common])
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--partition", help="partition JSON file or inline JSON {A, B, C}")
    s.add_argument("--partition-from", choices=("extract", "exact"), help="derive the partition instead")
    s.add_argument("--c", type=_fraction, default=Fraction(1, 10), help="c for --partition-from extract")
    s.add_argument("--b-cap", type=_nonneg, required=True)
    s.add_argument("--stage", choices=("g1", "g2", "both"), default="both")

    for name in ("verify", "stress"):
        hlp = "exhaustive check" if name == "verify" else "randomized counterexample hunt"
        v = sub.add_parser(name, help=hlp, parents=[common])
        v.add_argument("--n", type=_positive, required=True)
        v.add_argument("--b", type=_nonneg, required=True, dest="b_cap")
        v.add_argument("--threshold-mode", choices=THRESHOLD_MODES, default="floor_quarter")
        v.add_argument("--include-balanced", action="store_true", help="keep the balanced complete bipartite graph")
        v.add_argument("--workers", type=_positive, default=default_workers())
        v.add_argument("--seed", type=_nonneg, default=0)
        if name == "verify":
            v.add_argument("--allow-large", action="store_true", help="lift the n <= 10 guard rail")
        else:
            v.add_argument("--iterations", type=_nonneg, default=100000)
            v.add_argument("--restart-every", type=_nonneg, default=0, help="iterations per restart (0: single run)")

    u = sub.add_parser("suite", help="classical triangle/book lower bounds on all classes", parents=[common])
    u.add_argument("--n-max", type=_positive, default=6)
    u.add_argument("--workers", type=_positive, default=default_workers())
    u.add_argument("--allow-large", action="store_true")
    return p


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _one_graph(path: str) -> Graph:
    graphs = read_graphs(_read_text(path))
    if len(graphs) != 1:
        raise GraphInputError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _graph_stats(g: Graph) -> dict:
    d = stats(g)
    d["bn_holds"] = bn_inequality_check(g)[2]
    d["rademacher"] = rademacher_check(g)
    d["edwards"] = edwards_check(g)
    d["graph6"] = to_graph6(g)
    return d


def _construct(args) -> dict:
    if args.kind == "s-graph":
        g = s_graph(args.b, args.n)
        extra = {"b": args.b, "expected_book": s_graph_book_number(args.b, args.n)}
    elif args.kind == "mubayi-upper":
        up = mubayi_upper(args.b, args.n)
        g = up.graph
        extra = {"b": args.b, "expected_triangles": up.expected_triangles, "metadata": up.metadata}
    else:
        g = prism_blowup(prism_spec_from_string(args.parts))
        extra = {}
    st = stats(g)
    out = {
        "graph6": to_graph6(g),
        "n": g.n,
        "edges": g.m,
        "triangles": st["triangles"],
        "book": st["book_number"],
    }
    out.update(extra)
    return out


def _load_partition(text: str) -> TriPartition:
    text = text.strip()
    if not text.startswith("{"):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    return TriPartition.from_json(text)


def _surgery(args) -> dict:
    g = _one_graph(args.input)
    if args.partition:
        p = _load_partition(args.partition)
    elif args.partition_from == "exact":
        p = exact_partition(g)
    elif args.partition_from == "extract":
        p = partition_from_extraction(g, args.c, args.b_cap)
    else:
        raise GraphInputError("give --partition or --partition-from")
    out = {"partition": p.to_json()}
    cur = g
    if args.stage in ("g1", "both"):
        cur, rep = to_G1(cur, p, args.b_cap)
        out["g1"] = {"graph6": to_graph6(cur), "report": rep.to_json()}
    if args.stage in ("g2", "both"):
        cur, rep = to_G2(cur, p, args.b_cap)
        out["g2"] = {"graph6": to_graph6(cur), "report": rep.to_json()}
    return out


def _search_params(args, mode: str) -> SearchParams:
    return SearchParams(
        n=args.n,
        b_cap=args.b_cap,
        edge_threshold_mode=args.threshold_mode,
        exclude_balanced_bipartite=not args.include_balanced,
        mode=mode,
        stress_iterations=getattr(args, "iterations", 0),
        seed=args.seed,
        allow_large=getattr(args, "allow_large", False),
        restart_every=getattr(args, "restart_every", 0),
    )


def run(args) -> tuple:
    """Dispatch; returns ``(payload, exit_code)``."""
    cmd = args.command
    if cmd == "construct":
        return _construct(args), EXIT_OK
    if cmd == "stats":
        graphs = read_graphs(_read_text(args.input))
        if not graphs:
            raise GraphInputError("no graphs in input")
        res = [_graph_stats(g) for g in graphs]
        return (res[0] if len(res) == 1 else res), EXIT_OK
    if cmd == "cut":
        return lemma1_cut(_one_graph(args.input)).to_json(), EXIT_OK
    if cmd == "extract":
        return lemma2_extract(_one_graph(args.input), args.c, args.b_cap).to_json(), EXIT_OK
    if cmd == "surgery":
        return _surgery(args), EXIT_OK
    if cmd in ("verify", "stress"):
        params = _search_params(args, "exhaustive" if cmd == "verify" else "stress")
        fn = verify_conjecture if cmd == "verify" else stress_search
        cert = fn(params, workers=args.workers)
        return cert.to_json(), EXIT_VIOLATION if cert.violation else EXIT_OK
    if cmd == "suite":
        res = classical_suite(args.n_max, workers=args.workers, allow_large=args.allow_large)
        failed = any(res[k]["status"] != "pass" for k in ("rademacher", "edwards"))
        return {"n_max": args.n_max, "results": res}, EXIT_ERROR if failed else EXIT_OK
    raise GraphInputError(f"unknown command {cmd!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = run(args)
    except (GraphInputError, Graph6ParseError, SurgeryInfeasible, UndefinedValue, SearchRefused) as exc:
        print(f"bookgraph {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"bookgraph {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
