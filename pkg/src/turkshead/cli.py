"""Command-line interface: ``turkshead <subcommand> ...``.

Exit codes: 0 success, 1 a mathematical disagreement was found, 2 usage
error (argparse's own convention), 3 I/O error.
"""

import argparse
import json
import sys

from . import coloring, determinant, graphs, numbertheory, sequences, survey, transfer
from .braid import build_thk, coloring_matrix

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(lo):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    return parse


def _emit(obj, as_json, text):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_det(args):
    methods = determinant.METHODS if args.method == "all" else (args.method,)
    values = determinant.determinants(args.m, args.n, methods)
    if not values:
        raise UsageError(f"method {args.method!r} does not apply to "
                         f"THK({args.m}, {args.n})")
    distinct = set(values.values())
    value = next(iter(values.values()))
    _emit({"m": args.m, "n": args.n, "determinant": str(value),
           "methods": {k: str(v) for k, v in values.items()},
           "agree": len(distinct) == 1},
          args.json, str(value))
    if len(distinct) != 1:
        print(f"methods disagree: {values}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_g(args):
    g = transfer.G(args.m, args.n)
    _emit({"m": g.m, "n": g.n, "g": str(g.value),
           "cofactor": str(g.cofactor),
           "square_witness": None if g.root is None else str(g.root)},
          args.json, str(g.value))
    return EXIT_OK


def cmd_color(args):
    d = build_thk(args.m, args.n)
    ns = coloring.nullspace_mod_p(coloring_matrix(d), args.p)
    cap = args.enumerate_cap
    found = []
    for vec in coloring.iter_colorings(d, args.p):
        if len(found) >= cap:
            break
        found.append(vec)
    rows = [{"colors": list(v.colors), "heterogeneous": v.heterogeneous}
            for v in found]
    text = [f"nullspace dimension {ns.dimension} mod {args.p}"]
    text += [" ".join(map(str, v.colors)) + ("" if v.heterogeneous else "  *repeat*")
             for v in found]
    _emit({"m": args.m, "n": args.n, "p": args.p,
           "nullspace_dimension": ns.dimension, "colorings": rows},
          args.json, "\n".join(text))
    return EXIT_OK


def cmd_hk(args):
    d = build_thk(args.m, args.n)
    det = determinant.knot_determinant(d).value
    p = args.p
    if p is None:
        if not numbertheory.is_prime(det).is_prime:
            _emit({"m": args.m, "n": args.n, "determinant": str(det),
                   "status": "not-applicable"}, args.json,
                  f"determinant {det} is not prime: not applicable")
            return EXIT_OK
        p = det
    if p > survey.HK_SKIP_THRESHOLD and not args.force:
        _emit({"m": args.m, "n": args.n, "p": p, "status": "skipped"},
              args.json, f"p = {p} above {survey.HK_SKIP_THRESHOLD}; use --force")
        return EXIT_OK
    try:
        verdict = coloring.hk_verify(d, p, determinant=det)
    except coloring.NotColorableError as exc:
        raise UsageError(str(exc))
    out = {"m": args.m, "n": args.n, **verdict.to_json()}
    text = (f"p = {p}: {verdict.colorings_checked} colorings checked, "
            + ("heterogeneous" if verdict.heterogeneous
               else f"repeated color {verdict.witness}"))
    _emit(out, args.json, text)
    prime_knot = d.component_count == 1 and numbertheory.is_prime(det).is_prime
    return EXIT_DISAGREE if prime_knot and p == det and not verdict.heterogeneous \
        else EXIT_OK


def cmd_graph(args):
    d = build_thk(args.m, args.n)
    g = graphs.build_checkerboard(d, args.shading)
    out = g.to_json()
    if args.trees:
        out["spanning_trees"] = str(graphs.spanning_tree_count(g))
    if args.json:
        print(json.dumps(out))
    else:
        print(f"{g.vertex_count} vertices, {g.num_edges} edges")
        print(" ".join(f"{u}-{v}" for u, v in g.edges))
        if args.trees:
            print(f"spanning trees: {out['spanning_trees']}")
    return EXIT_OK


def cmd_diagram(args):
    print(json.dumps(build_thk(args.m, args.n).to_json()))
    return EXIT_OK


def cmd_poly(args):
    if args.kind == "g":
        p = transfer.charpoly(transfer.build_Am(args.m))
    else:
        p = transfer.dm(args.m)
    if args.power is not None:
        p = transfer.power_poly(p, args.power)
    _emit({"m": args.m, "kind": args.kind, "power": args.power,
           "coefficients": [str(c) for c in p.coeffs]}, args.json, str(p))
    return EXIT_OK


def cmd_seq(args):
    fn = {"pell": sequences.pell, "lucas": sequences.lucas,
          "fib": sequences.fibonacci}.get(args.name)
    if args.name == "delannoy":
        if args.row is None:
            raise UsageError("seq delannoy needs --row")
        values = list(sequences.delannoy_row(args.row))
    elif args.k is not None:
        values = [fn(args.k)]
    elif args.upto is not None:
        lo = 0 if args.name == "lucas" else 1
        values = [fn(k) for k in range(lo, args.upto + 1)]
    else:
        raise UsageError(f"seq {args.name} needs --k or --upto")
    _emit([str(v) for v in values], args.json, " ".join(map(str, values)))
    return EXIT_OK


def cmd_prime(args):
    try:
        v = int(args.value)
    except ValueError:
        raise UsageError(f"not a decimal integer: {args.value!r}")
    if v < 0:
        raise UsageError("value must be >= 0")
    verdict = numbertheory.is_prime(v)
    text = verdict.status
    if verdict.factor is not None:
        text += f" (factor {verdict.factor})"
    if verdict.status == "probable-prime":
        text += f" ({verdict.rounds} rounds)"
    _emit(verdict.to_json(), args.json, text)
    return EXIT_OK


def cmd_pell_primes(args):
    found = numbertheory.pell_prime_scan(args.max_m)
    _emit(found, args.json, " ".join(map(str, found)))
    return EXIT_OK


def cmd_verify_gdet(args):
    rows = survey.run_gdet(args.max_m, args.max_n, args.workers)
    if args.json:
        print(json.dumps([r.__dict__ for r in rows], indent=2))
    else:
        for r in rows:
            print(f"{r.m:3d} {r.n:3d}  {'agree' if r.agree else 'DISAGREE'}  {r.det}")
    return EXIT_OK if all(r.agree for r in rows) else EXIT_DISAGREE


def cmd_survey(args):
    records = survey.run_survey(args.max_m, args.max_n, force=args.force,
                                workers=args.workers)
    fmt = {"table": survey.to_table, "csv": survey.to_csv,
           "json": survey.to_json}[args.format]
    sys.stdout.write(fmt(records))
    return EXIT_DISAGREE if any(r.failed for r in records) else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="turkshead",
        description="Exact computations for Turk's Head knots THK(m, n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def mn(p, m_min=2):
        p.add_argument("--m", type=_positive(m_min), required=True)
        p.add_argument("--n", type=_positive(2), required=True)

    def js(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("det", help="knot determinant")
    mn(p)
    p.add_argument("--method", choices=("all",) + determinant.METHODS, default="all")
    js(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("g", help="conjectural determinant G(m, n), odd m")
    p.add_argument("--m", type=_positive(3), required=True)
    p.add_argument("--n", type=_positive(1), required=True)
    js(p)
    p.set_defaults(func=cmd_g)

    p = sub.add_parser("color", help="Fox p-colorings up to translation")
    mn(p)
    p.add_argument("--p", type=_positive(2), required=True)
    p.add_argument("--enumerate-cap", type=_positive(0), default=10)
    js(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("hk", help="Harary-Kauffman heterogeneity check")
    mn(p)
    p.add_argument("--p", type=_positive(2), default=None,
                   help="modulus (default: the determinant, when prime)")
    p.add_argument("--force", action="store_true",
                   help=f"enumerate even when p > {survey.HK_SKIP_THRESHOLD}")
    js(p)
    p.set_defaults(func=cmd_hk)

    p = sub.add_parser("graph", help="checkerboard graph")
    mn(p)
    p.add_argument("--trees", action="store_true", help="count spanning trees")
    p.add_argument("--shading", choices=("auto", "primary", "dual"), default="auto")
    js(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("diagram", help="diagram as JSON")
    mn(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("poly", help="d_m (or g_m) coefficients, ascending")
    p.add_argument("--m", type=_positive(2), required=True)
    p.add_argument("--power", type=_positive(1), default=None)
    p.add_argument("--kind", choices=("d", "g"), default="d")
    js(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("seq", help="Pell, Lucas, Fibonacci, Delannoy numbers")
    p.add_argument("name", choices=("pell", "lucas", "fib", "delannoy"))
    p.add_argument("--k", type=_positive(0))
    p.add_argument("--upto", type=_positive(0))
    p.add_argument("--row", type=_positive(0))
    js(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("prime", help="primality verdict")
    p.add_argument("value")
    js(p)
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("pell-primes", help="indices m with P_m prime")
    p.add_argument("--max-m", type=_positive(1), default=numbertheory.PELL_SCAN_DEFAULT)
    js(p)
    p.set_defaults(func=cmd_pell_primes)

    p = sub.add_parser("verify-gdet", help="compare G(m, n) with the determinant")
    p.add_argument("--max-m", type=_positive(3), required=True)
    p.add_argument("--max-n", type=_positive(2), required=True)
    p.add_argument("--workers", type=_positive(1), default=None)
    js(p)
    p.set_defaults(func=cmd_verify_gdet)

    p = sub.add_parser("survey", help="per-(m, n) survey table")
    p.add_argument("--max-m", type=_positive(2), required=True)
    p.add_argument("--max-n", type=_positive(2), required=True)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--force", action="store_true",
                   help="run HK enumeration for every prime determinant")
    p.add_argument("--workers", type=_positive(1), default=None,
                   help=f"process count (default: CPUs, capped by ${survey.WORKERS_ENV})")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
