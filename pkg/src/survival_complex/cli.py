"""Command line interface.

Exit codes: 0 ok, 1 bad input, 2 a size cap was hit, 3 an invariant failed.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import complex as cx
from . import monomial as mono
from .analysis import analyze, run_checks
from .builder import build_general, build_planar, build_slab, slab_axis
from .errors import CapExceeded, InvariantViolation, SurvivalError
from .fibre import decompose
from .textio import emit_dot, emit_report, format_facets, format_ideal, parse_ideal, parse_socle_spec

EXIT_INPUT, EXIT_CAP, EXIT_INVARIANT = 1, 2, 3


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _vertex_cap(args):
    if args.max_vertices is not None:
        return args.max_vertices
    env = os.environ.get("SURVIVAL_MAX_VERTICES")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SurvivalError(f"SURVIVAL_MAX_VERTICES={env!r} is not an integer") from None
    return mono.DEFAULT_MAX_VERTICES


def _complex(args):
    ideal = parse_ideal(_read(args.file)).ideal()
    ring = mono.enumerate_survivors(ideal, max_vertices=_vertex_cap(args))
    return cx.build_complex(ring, max_edges=args.max_edges)


def cmd_analyze(args, out):
    ideal = parse_ideal(_read(args.file)).ideal()
    report = analyze(ideal, max_vertices=_vertex_cap(args), max_edges=args.max_edges)
    out.write(emit_report(report, "json" if args.json else args.format).decode())
    return 0


def cmd_facets(args, out):
    c = _complex(args)
    out.write(format_facets(cx.facets(c, max_facets=args.max_facets), c.vertices))
    return 0


def cmd_export_dot(args, out):
    out.write(emit_dot(_complex(args), args.graph).decode())
    return 0


def cmd_build(args, out):
    spec = parse_socle_spec(args.socle)
    if args.alg == "general":
        ring = build_general(spec)
    elif args.alg == "planar":
        ring = build_planar(spec)
    else:
        axis = slab_axis(spec)
        if len(axis.eligible) > 1:
            names = spec.context.names
            others = ", ".join(names[i] for i in axis.eligible[1:])
            out.write(f"# slab axis {names[axis.index]} (also eligible: {others})\n")
        ring = build_slab(spec)
    out.write(format_ideal(ring.ideal))
    return 0


def cmd_decompose(args, out):
    fac = decompose(_complex(args), max_vertices=_vertex_cap(args))
    out.write("\n".join(format_ideal(f.ideal) for f in fac.factors))
    return 0


def cmd_check(args, out):
    results = run_checks(_complex(args), max_facets=args.max_facets)
    failed = 0
    for name, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}" + ("" if ok or not detail else f"  ({detail})") + "\n")
        failed += not ok
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_INVARIANT if failed else 0


class _ArgParser(argparse.ArgumentParser):
    # usage errors are input errors; argparse's default 2 is reserved for caps
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-vertices", type=int, default=None,
                      help=f"survivor cap (default {mono.DEFAULT_MAX_VERTICES}, env SURVIVAL_MAX_VERTICES)")
    caps.add_argument("--max-edges", type=int, default=cx.DEFAULT_MAX_EDGES)
    caps.add_argument("--max-facets", type=int, default=cx.DEFAULT_MAX_FACETS)

    p = _ArgParser(prog="survival", description="Survival complexes of Artinian monomial rings.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[caps], help="print the analysis report")
    a.add_argument("file", help="ideal document, or - for stdin")
    a.add_argument("--format", choices=["text", "json"], default="text")
    a.add_argument("--json", action="store_true", help="same as --format json")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("facets", parents=[caps], help="list the maximal faces")
    f.add_argument("file")
    f.set_defaults(func=cmd_facets)

    d = sub.add_parser("export-dot", parents=[caps], help="write the 1-skeleton or zero-divisor graph as DOT")
    d.add_argument("file")
    d.add_argument("--graph", choices=["skeleton", "zero_divisor"], default="skeleton")
    d.set_defaults(func=cmd_export_dot)

    b = sub.add_parser("build", parents=[caps], help="build an ideal with a prescribed socle")
    b.add_argument("--alg", choices=["general", "planar", "slab"], required=True)
    b.add_argument("--socle", required=True, help='monomial list, e.g. "x^2*y^2, x^3, y^4"')
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("decompose", parents=[caps], help="split into fibre-product factors")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    k = sub.add_parser("check", parents=[caps], help="run the invariant suite on one ideal")
    k.add_argument("file")
    k.set_defaults(func=cmd_check)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except (SurvivalError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
