"""Command-line front end.

One executable, `mzeta`, with a subcommand per module: zeta-series
evaluation, the rationality tests, Witt and lambda operations, universal
polynomial tables, the surface-measure harness, and the self-check suite.
JSON output is byte-stable for identical invocations (sorted keys, no
timestamps); text output is rendered from the same report objects.  Domain
errors exit 1 with a machine-readable JSON body; usage errors exit 2.

Universal polynomial tables are cached under MZETA_CACHE_DIR (default
~/.cache/mzeta).
"""

import argparse
import json
import sys

from .errors import DegreeCutoffError, InvalidInputError, ToolkitError
from .lambda_rings import (
    LambdaElement,
    WittElement,
    adams,
    opposite_sigma,
    witt_lambda,
    witt_mul,
)
from .measures import SurfaceData, boundedness_check, irrationality_harness
from .motivic import MotivicModel, parse_variety, specialize
from .rationality import (
    GroupSeries,
    hankel_test,
    pade_reconstruct,
    periodic_ratio_test,
)
from .rings import poly_to_json
from .series import series_from_json
from .symfunc import (
    newton_polynomial,
    universal_P,
    universal_Q,
    witt_product_coeff,
)

_MAX_N = 8
_MAX_MN = 10


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True), file=args.out)
    else:
        print(text, file=args.out)
    return 0


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InvalidInputError("cannot read %s: %s" % (path, e.strerror))
    except ValueError as e:
        raise InvalidInputError("%s is not valid JSON: %s" % (path, e))


def _parse_assignment(text):
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        if not sep:
            raise InvalidInputError(
                "assignments look like L=3, got %r" % item
            )
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise InvalidInputError("assignment value %r is not an integer" % value)
    if not out:
        raise InvalidInputError("empty assignment")
    return out


def _cmd_zeta(args):
    expr = parse_variety(args.expr)
    model = MotivicModel(expr, increment=args.curve_increment)
    f = model.zeta_series(args.terms)
    payload = {"expr": str(expr), "terms": args.terms, "series": f.to_json()}
    lines = ["zeta series of %s to %d terms:" % (expr, args.terms), str(f)]
    if args.rational:
        form = model.rational_form()
        payload["rational"] = form.to_json()
        lines.append("closed form: %s" % form)
    if args.specialize:
        assignment = _parse_assignment(args.specialize)
        image = specialize(f, assignment)
        payload["specialized"] = {
            "assignment": {k: v for k, v in sorted(assignment.items())},
            "series": image.to_json(),
        }
        lines.append(
            "specialized at %s: %s"
            % (
                ", ".join("%s=%d" % kv for kv in sorted(assignment.items())),
                image,
            )
        )
    return _emit(args, payload, "\n".join(lines))


def _cmd_hankel(args):
    f = series_from_json(_load_json(args.series))
    report = hankel_test(f, args.m_max, args.offset_max)
    return _emit(args, report.to_json(), str(report))


def _cmd_pade(args):
    f = series_from_json(_load_json(args.series))
    result = pade_reconstruct(f, args.den_deg)
    return _emit(args, result.to_json(), str(result))


def _cmd_witness(args):
    gs = GroupSeries.from_json(_load_json(args.series))
    verdict = periodic_ratio_test(gs, args.max_period, args.max_offset)
    return _emit(args, verdict.to_json(), str(verdict))


def _cmd_lambda_op(args):
    op = args.op
    if op in ("lambda", "witt-lambda", "psi") and args.k is None:
        raise InvalidInputError("--op %s needs --k" % op)
    if op == "witt-mul":
        if len(args.inputs) != 2:
            raise InvalidInputError("witt-mul takes exactly two series files")
        f = WittElement(series_from_json(_load_json(args.inputs[0])))
        g = WittElement(series_from_json(_load_json(args.inputs[1])))
        result = witt_mul(f, g)
        return _emit(args, result.to_json(), str(result))
    if len(args.inputs) != 1:
        raise InvalidInputError("--op %s takes one input file" % op)
    f = series_from_json(_load_json(args.inputs[0]))
    if op in ("lambda", "witt-lambda"):
        result = witt_lambda(args.k, WittElement(f))
        return _emit(args, result.to_json(), str(result))
    # sigma and psi read the file as lambda data: coeffs[i] = lambda^i(x)
    x = LambdaElement.from_series(f)
    if op == "sigma":
        sigma = opposite_sigma(x, args.k)
        payload = sigma.to_json()
        return _emit(args, payload, str(sigma))
    value = adams(args.k, x)
    payload = {"psi": args.k, "value": x.ring.elem_to_json(value)}
    return _emit(args, payload, x.ring.elem_str(value))


def _cmd_universal(args):
    which = args.which
    if which == "Q":
        if args.m is None:
            raise InvalidInputError("--which Q needs --m")
        if args.m < 1 or args.n < 1:
            raise InvalidInputError("indices must be positive")
        if args.m * args.n > _MAX_MN and not args.force:
            raise DegreeCutoffError(
                "m*n = %d exceeds the default cutoff %d; pass --force to "
                "compute anyway" % (args.m * args.n, _MAX_MN)
            )
        poly = universal_Q(args.m, args.n)
    else:
        if args.n < 1:
            raise InvalidInputError("--n must be positive")
        if args.n > _MAX_N and not args.force:
            raise DegreeCutoffError(
                "n = %d exceeds the default cutoff %d; pass --force to "
                "compute anyway" % (args.n, _MAX_N)
            )
        if which == "P":
            poly = universal_P(args.n)
        elif which == "newton":
            poly = newton_polynomial(args.n)
        else:
            poly = witt_product_coeff(args.n)
    payload = {
        "which": which,
        "n": args.n,
        "poly": poly_to_json(poly),
        "text": str(poly),
    }
    if which == "Q":
        payload["m"] = args.m
    return _emit(args, payload, str(poly))


def _cmd_measure(args):
    if args.surface_file:
        surface = SurfaceData.from_json(_load_json(args.surface_file))
    elif args.surface:
        surface = SurfaceData.from_text(args.surface)
    else:
        raise InvalidInputError("give --surface or --surface-file")
    report = irrationality_harness(
        surface, args.n, args.sym_max, args.max_period, args.max_offset
    )
    payload = report.to_json()
    if report.applicable and report.n == 1:
        payload["boundedness"] = boundedness_check(report.sequence, 1).to_json()
    if not args.witness:
        payload.pop("witness", None)
    text = str(report)
    if not args.witness:
        text = "\n".join(
            line for line in text.splitlines() if "witness search" not in line
        )
    return _emit(args, payload, text)


def _cmd_suite(args):
    from . import suite

    if args.list:
        names = suite.check_names()
        if args.format == "json":
            print(json.dumps(list(names), indent=2), file=args.out)
        else:
            for name in names:
                print(name, file=args.out)
        return 0
    names = args.only if args.only else None
    outcomes = suite.run_checks(names=names, seed=args.seed)
    failed = [o for o in outcomes if not o.ok]
    if args.format == "json":
        payload = {
            "seed": args.seed,
            "passed": len(outcomes) - len(failed),
            "failed": len(failed),
            "checks": [o.to_json() for o in outcomes],
        }
        print(json.dumps(payload, indent=2, sort_keys=True), file=args.out)
    else:
        for o in outcomes:
            print(str(o), file=args.out)
        print(
            "%d checks: %d passed, %d failed"
            % (len(outcomes), len(outcomes) - len(failed), len(failed)),
            file=args.out,
        )
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mzeta",
        description="Zeta series, lambda operations, and rationality tests "
        "over exact coefficient rings.",
        epilog="Universal polynomial tables are cached in MZETA_CACHE_DIR "
        "(default ~/.cache/mzeta).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("json", "text"), default="text",
            help="output encoding (default text)",
        )

    p = sub.add_parser(
        "zeta",
        help="zeta series of a variety expression",
        description="Grammar: point | A(n) | P(n) | Gm(d) | Curve(g) | "
        "Prod(e,e) | Disj(e,e) | VB(e,r) | PB(e,r).",
    )
    p.add_argument("expr", help='variety expression, e.g. "P(2)"')
    p.add_argument("--terms", type=int, required=True, help="number of coefficients")
    p.add_argument("--rational", action="store_true", help="also emit the closed form")
    p.add_argument(
        "--specialize", metavar="L=3,...",
        help="substitute integers for symbols ('*' sets a default)",
    )
    p.add_argument(
        "--curve-increment", choices=("J", "X"), default="J",
        help="symbol multiplying L^k in the stable curve recursion",
    )
    add_format(p)
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("hankel", help="shifted Hankel determinant grid of a series")
    p.add_argument("series", help="series JSON file")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--offset-max", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_hankel)

    p = sub.add_parser("pade", help="rational reconstruction over a field")
    p.add_argument("series", help="series JSON file over the rationals")
    p.add_argument("--den-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_pade)

    p = sub.add_parser("witness", help="periodic-ratio witness search")
    p.add_argument("series", help="group-series JSON file")
    p.add_argument("--max-period", type=int, required=True)
    p.add_argument("--max-offset", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser(
        "lambda-op",
        help="Witt-ring and lambda operations on series files",
        description="lambda/witt-lambda treat the file as a Witt element; "
        "sigma and psi treat coefficient i as lambda^i of an element.",
    )
    p.add_argument(
        "--op", required=True,
        choices=("lambda", "sigma", "psi", "witt-mul", "witt-lambda"),
    )
    p.add_argument("--k", type=int, help="operation index")
    p.add_argument("inputs", nargs="+", help="series JSON file(s)")
    add_format(p)
    p.set_defaults(func=_cmd_lambda_op)

    p = sub.add_parser("universal", help="universal symmetric-function polynomials")
    p.add_argument("--which", required=True, choices=("P", "Q", "newton", "witt"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="first index of Q")
    p.add_argument(
        "--force", action="store_true",
        help="compute past the default degree cutoffs",
    )
    add_format(p)
    p.set_defaults(func=_cmd_universal)

    p = sub.add_parser("measure", help="surface measure sequence and harness")
    p.add_argument("--surface", help='compact form, e.g. "q=2,pg=1,P=1,1,1,1"')
    p.add_argument("--surface-file", help="surface data as a JSON file")
    p.add_argument("--n", type=int, default=1, help="measure index (default 1)")
    p.add_argument("--sym-max", type=int, required=True, help="exhibit bound M")
    p.add_argument(
        "--witness", action="store_true",
        help="include the periodic-ratio search result",
    )
    p.add_argument("--max-period", type=int, default=4)
    p.add_argument("--max-offset", type=int, default=6)
    add_format(p)
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("suite", help="named self-checks from the documentation")
    p.add_argument(
        "--paper-checks", action="store_true",
        help="run the full battery (default action)",
    )
    p.add_argument("--list", action="store_true", help="list check names")
    p.add_argument("--only", action="append", metavar="NAME", help="run one check")
    p.add_argument("--seed", type=int, default=1729, help="randomized-check seed")
    add_format(p)
    p.set_defaults(func=_cmd_suite)

    return parser


def run(argv=None, out=None):
    """Parse argv, execute, and return the exit code (0 ok, 1 domain, 2 usage)."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    args.out = out
    try:
        return args.func(args)
    except ToolkitError as e:
        print(json.dumps({"error": e.payload()}, indent=2, sort_keys=True), file=out)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
