"""Command-line interface: ``signed-tutte <command> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 bad input.
"""

from __future__ import annotations

import argparse
import sys
import time

from .checks import SUITE_NAMES, run_suite
from .fixtures import KFAMILY_WRITHE, kfamily_graph, kfamily_tutte
from .knot import DiagramError, bracket_statesum, bracket_via_tutte, jones, parse_pd, tait_graph
from .quotient import canonical, kauffman_specialize
from .ring import ParseError, UsageError, parse_laurent, parse_poly, poly_substitute
from .sgraph import GraphError, SignedGraph, format_graph, parse_graph
from .tensor import TensorSpec, substitution_maps, tensor_graph, thickening
from .tutte import tctl, tutte_activity, tutte_delcon, verify_tctl_system

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class VerificationFailed(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _looks_like_graph(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0] == "v"
    return False


def _emit(text):
    sys.stdout.write(str(text).rstrip("\n") + "\n")


def _form(p, form):
    return canonical(p) if form == "canonical" else p


# ---------------------------------------------------------------- commands


def cmd_tutte(args):
    g = parse_graph(_read(args.graph))
    p = tutte_activity(g) if args.method == "activity" else tutte_delcon(g)
    _emit(_form(p, args.form))


def cmd_tctl(args):
    n = parse_graph(_read(args.graph))
    pair = tctl(n, args.edge)
    _emit(f"T_L: {_form(pair.t_l, args.form)}")
    _emit(f"T_C: {_form(pair.t_c, args.form)}")
    if args.check and not verify_tctl_system(n, args.edge, pair):
        raise VerificationFailed("T_L, T_C do not satisfy the linear system")


def cmd_tensor(args):
    text = _read(args.m)
    t_m = tutte_activity(parse_graph(text)) if _looks_like_graph(text) else parse_poly(text)
    n = parse_graph(_read(args.n))
    maps = substitution_maps(n, args.edge, args.sign)
    for _ in range(args.repeat):
        t_m = poly_substitute(t_m, maps)
    _emit(_form(t_m, args.form))


def _load_pd(path):
    return parse_pd(_read(path))


def cmd_bracket(args):
    if args.graph:
        b = bracket_via_tutte(parse_graph(_read(args.graph), extra={"w"})[0])
    else:
        pd = _load_pd(args.pd)
        if args.method == "statesum":
            b = bracket_statesum(pd, bound=args.bound)
        else:
            b = bracket_via_tutte(tait_graph(pd, args.shading).graph)
    _emit(b)
    if args.breadth:
        _emit(f"breadth {b.breadth()}")


def cmd_jones(args):
    if args.bracket:
        if args.writhe is None:
            raise UsageError("--writhe is required with --bracket")
        b, w = parse_laurent(_read(args.bracket), "A"), args.writhe
    elif args.graph:
        g, found = parse_graph(_read(args.graph), extra={"w"})
        w = args.writhe if args.writhe is not None else (int(found["w"][0]) if "w" in found else None)
        if w is None:
            raise UsageError("writhe missing: add a 'w' line or pass --writhe")
        b = bracket_via_tutte(g)
    else:
        tait = tait_graph(_load_pd(args.pd), args.shading)
        b, w = bracket_via_tutte(tait.graph), tait.writhe
    v = jones(b, w)
    _emit(v)
    if args.breadth:
        _emit(f"breadth {v.breadth()}")


def cmd_pd2graph(args):
    tait = tait_graph(_load_pd(args.pd), args.shading)
    _emit(format_graph(tait.graph) + f"w {tait.writhe}")


def kfamily_jones(k):
    if k < 3 or k % 2 == 0:
        raise UsageError("the k-family is defined for odd k >= 3")
    return jones(kauffman_specialize(kfamily_tutte(k)), KFAMILY_WRITHE)


def cmd_kfamily(args):
    v = kfamily_jones(args.k)
    _emit(v)
    if args.breadth:
        _emit(f"breadth {v.breadth()}")


def cmd_verify(args):
    suites = SUITE_NAMES if args.suite == "all" else (args.suite,)
    failed = False
    for name in suites:
        t0 = time.perf_counter()
        report = run_suite(name, args.cases, seed=args.seed, size=args.size, threads=args.threads)
        status = "PASS" if report.ok else "FAIL"
        _emit(f"{status} {name}: {report.cases} cases, {len(report.failures)} failures ({time.perf_counter() - t0:.2f}s)")
        for line in report.failures[:10]:
            print("  " + line, file=sys.stderr)
        failed |= not report.ok
    if failed:
        raise VerificationFailed("some suites failed")


def _parse_range(text):
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def _bench_row(k, edges, subst, direct):
    (vs, ts), d = subst, direct
    if d is None:
        return f"{k:>3} {edges:>6} {ts:>10.3f} {'skipped':>10} {'-':>6}"
    vd, td = d
    return f"{k:>3} {edges:>6} {ts:>10.3f} {td:>10.3f} {str(vs == vd):>6}"


def cmd_bench(args):
    _emit(f"{'k':>3} {'edges':>6} {'subst_s':>10} {'direct_s':>10} {'agree':>6}")
    triangle = SignedGraph.from_list(3, [(0, 1, "+", 1), (1, 2, "+", 2), (2, 0, "+", 3)])
    for k in _parse_range(args.k):
        if args.family == "kfamily":
            if k < 3 or k % 2 == 0:
                print(f"skipping k={k}: odd k >= 3 only", file=sys.stderr)
                continue
            edges = 2 * k * k + 1
            subst = _timed(lambda: kfamily_jones(k))
            direct = None
            if edges <= args.direct_max_edges:
                direct = _timed(lambda: jones(bracket_via_tutte(kfamily_graph(k)), KFAMILY_WRITHE))
        else:
            n, e = thickening(k, "+")
            edges = 3 * k
            subst = _timed(lambda: kauffman_specialize(poly_substitute(tutte_activity(triangle), substitution_maps(n, e, "+"))))
            direct = None
            if edges <= args.direct_max_edges:
                direct = _timed(lambda: bracket_via_tutte(tensor_graph(TensorSpec(triangle, "+", n, e))))
        _emit(_bench_row(k, edges, subst, direct))


# ---------------------------------------------------------------- parser


def build_parser():
    p = argparse.ArgumentParser(prog="signed-tutte", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker processes for verify suites")
    sub = p.add_subparsers(dest="command", required=True)

    def form(sp):
        sp.add_argument("--form", choices=("raw", "canonical"), default="raw")

    sp = sub.add_parser("tutte", help="signed Tutte polynomial of a graph file")
    sp.add_argument("graph")
    sp.add_argument("--method", choices=("activity", "delcon"), default="activity")
    form(sp)
    sp.set_defaults(func=cmd_tutte)

    sp = sub.add_parser("tctl", help="T_L and T_C for a distinguished edge")
    sp.add_argument("graph")
    sp.add_argument("--edge", type=int, required=True)
    sp.add_argument("--check", action="store_true", help="also verify the linear system")
    form(sp)
    sp.set_defaults(func=cmd_tctl)

    sp = sub.add_parser("tensor", help="substitute a pointed graph into a polynomial or graph")
    sp.add_argument("m", help="polynomial file or graph file")
    sp.add_argument("n", help="graph file of the pointed graph")
    sp.add_argument("--sign", choices=("+", "-"), required=True)
    sp.add_argument("--edge", type=int, required=True)
    sp.add_argument("--repeat", type=int, default=1)
    form(sp)
    sp.set_defaults(func=cmd_tensor)

    def pd_input(sp):
        sp.add_argument("pd", nargs="?", help="PD code file")
        sp.add_argument("--shading", choices=("default", "dual"), default="default")
        sp.add_argument("--breadth", action="store_true")

    sp = sub.add_parser("bracket", help="Kauffman bracket of a PD code or Tait graph")
    pd_input(sp)
    sp.add_argument("--graph", help="Tait graph file instead of a PD code")
    sp.add_argument("--method", choices=("tutte", "statesum"), default="tutte")
    sp.add_argument("--bound", type=int, default=20, help="crossing limit for the state sum")
    sp.set_defaults(func=cmd_bracket)

    sp = sub.add_parser("jones", help="Jones polynomial")
    pd_input(sp)
    sp.add_argument("--graph", help="Tait graph file (writhe from its 'w' line or --writhe)")
    sp.add_argument("--bracket", help="bracket polynomial file in A")
    sp.add_argument("--writhe", type=int)
    sp.set_defaults(func=cmd_jones)

    sp = sub.add_parser("pd2graph", help="Tait graph of a PD code, with a trailing writhe line")
    sp.add_argument("pd")
    sp.add_argument("--shading", choices=("default", "dual"), default="default")
    sp.set_defaults(func=cmd_pd2graph)

    sp = sub.add_parser("kfamily", help="Jones polynomial of the odd-k family member")
    sp.add_argument("k", type=int)
    sp.add_argument("--breadth", action="store_true")
    sp.set_defaults(func=cmd_kfamily)

    sp = sub.add_parser("verify", help="run randomised property suites")
    sp.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=50)
    sp.add_argument("--size", type=int, help="suite-specific size (permutations, crossings, max k)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="substitution versus direct enumeration timings")
    sp.add_argument("--family", choices=("thickening", "kfamily"), default="kfamily")
    sp.add_argument("--k", default="3-9", help="e.g. 3-9 or 3,5,7")
    sp.add_argument("--direct-max-edges", type=int, default=24)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    if getattr(args, "command", None) in ("bracket", "jones") and not (
        args.pd or args.graph or getattr(args, "bracket", None)
    ):
        parser.error("give a PD file, --graph or --bracket")
    try:
        args.func(args)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, GraphError, DiagramError, OSError, ArithmeticError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
