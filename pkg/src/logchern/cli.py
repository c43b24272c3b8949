"""Command line front end.

Problem files are JSON documents::

    {
      "name": "quadric cone",
      "n": 3,
      "variables": ["x0", "x1", "x2", "x3"],
      "divisors": [{"name": "D", "poly": "x0*x1 - x2^2"}],
      "decomposition": ["D1", "D2"],              (optional)
      "vector_field": [["0", "0", "0", "0"], ...],  (optional, (n+1) x (n+1))
      "singular_points": {"D": [["0", "0", "0", "1"]]},  (optional; "C" for D1 ∩ D2)
      "options": {"chart": 3, "probes": false, "coordinate_change": false}
    }

Exit codes: 0 success, 2 input error, 3 failed mathematical precondition,
4 verification failure under the default convention.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import chow, milnor, theorems
from .chow import DivisorOnPn
from .errors import InputError, LogChernError, PreconditionError
from .indices import VectorFieldPn
from .polyarith import HomogPoly, parse_poly

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


# -- problem files ---------------------------------------------------------


def _rational(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def problem_from_dict(doc):
    try:
        n = int(doc["n"])
        variables = tuple(doc.get("variables") or [f"x{i}" for i in range(n + 1)])
        if len(variables) != n + 1:
            raise InputError(f"P^{n} needs {n + 1} variables, got {len(variables)}")
        divisors = {}
        for entry in doc["divisors"]:
            name = entry["name"]
            if name in divisors:
                raise InputError(f"divisor {name!r} defined twice")
            divisors[name] = DivisorOnPn(name, HomogPoly.from_poly(
                parse_poly(entry["poly"], variables)))
        degrees = {D.name: D.degree for D in divisors.values()}
        decomposition = doc.get("decomposition")
        if decomposition is not None:
            decomposition = tuple(decomposition)
            if len(decomposition) != 2:
                raise InputError("a decomposition names exactly two divisors")
        field = None
        if doc.get("vector_field") is not None:
            rows = doc["vector_field"]
            if len(rows) != n + 1 or any(len(r) != n + 1 for r in rows):
                raise InputError(f"vector field must be a {n + 1} x {n + 1} matrix")
            field = VectorFieldPn(tuple(tuple(_rational(a) for a in r) for r in rows))
        points = {}
        for key, plist in (doc.get("singular_points") or {}).items():
            if key != "C" and key not in degrees:
                raise InputError(f"singular points given for unknown divisor {key!r}")
            for p in plist:
                if len(p) != n + 1:
                    raise InputError(f"point {p} needs {n + 1} coordinates")
            points[key] = [tuple(_rational(a) for a in p) for p in plist]
        options = doc.get("options") or {}
        chart = options.get("chart")
        if chart is not None and not 0 <= int(chart) <= n:
            raise InputError(f"chart index {chart} out of range")
        return theorems.ProblemSpec(
            n=n,
            divisors=divisors,
            decomposition=decomposition,
            field=field,
            singular_points=points,
            chart=None if chart is None else int(chart),
            allow_change=bool(options.get("coordinate_change", False)),
            probes=bool(options.get("probes", False)),
            target=options.get("target"),
            name=str(doc.get("name", "")),
        )
    except KeyError as exc:
        raise InputError(f"missing key {exc.args[0]!r} in problem file") from None
    except (TypeError, AttributeError) as exc:
        raise InputError(f"malformed problem file: {exc}") from None


def load_problem(path):
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    return problem_from_dict(doc)


# -- report documents --------------------------------------------------------


def encode(value):
    """Numbers become strings ("p/q" for non-integers); containers recurse."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else \
            f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return str(value)


def point_text(point):
    return "[" + ":".join(str(a) for a in point) + "]"


def verification_document(report, spec=None):
    doc = {
        "formula": report.formula,
        "lhs": report.lhs,
        "rhs_variants": report.rhs_variants,
        "residuals": report.residuals,
        "verdicts": report.verdicts,
        "default_variant": report.default_variant,
        "passed": report.passed,
        "ledger": [
            {"quantity": e.quantity, "value": e.value, "route": e.route}
            for e in report.ledger
        ],
        "notes": list(report.notes),
    }
    if spec is not None:
        doc["problem"] = spec.name
    return encode(doc)


def milnor_document(name, report):
    route = report.route
    doc = {
        "divisor": name,
        "total": report.total,
        "certified_complete": report.certified_complete,
        "per_point": [
            {"point": point_text(c.point), "local_milnor": c.local_milnor, "chart": c.chart}
            for c in report.per_point
        ],
        "route": None if route is None else {
            "chart": route.chart,
            "coordinate_change": route.change is not None,
            "algebra_dimension": route.algebra_dim,
        },
    }
    return encode(doc)


def chow_document(n, degrees):
    log = chow.log_chern_class(n, degrees)
    doc = {
        "n": n,
        "degrees": list(degrees),
        "log_chern_class": list(log.coeffs),
        "top_coefficient": log.top(),
    }
    if len(degrees) == 1:
        d = degrees[0]
        doc["twisted_top_chern"] = chow.twisted_top_chern(n, d)
        doc["signed_twisted_top_chern"] = (-1) ** n * chow.twisted_top_chern(n, d)
    else:
        probe = theorems.sigma_probe(n, *degrees)
        doc["sigma_n"] = probe["sigma_n"]
        doc["signed_sigma_sum"] = probe["signed-sigma-sum"]
        doc["sigma_n_matches"] = probe["sigma_n"] == log.top()
        doc["signed_sigma_sum_matches"] = probe["signed-sigma-sum"] == log.top()
    return encode(doc)


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _text_lines(doc, indent=""):
    lines = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text_lines(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(indent + "  - " + ", ".join(f"{k}={item[k]}" for k in sorted(item)))
        elif isinstance(value, list):
            lines.append(f"{indent}{key}: " + ", ".join(str(v) for v in value))
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def render(doc, as_json):
    return dumps(doc) if as_json else "\n".join(_text_lines(doc)) + "\n"


# -- commands ----------------------------------------------------------------


def cmd_milnor(args, spec):
    name = args.divisor or spec.single_divisor().name
    if name == "C":
        dec = spec.decomposition_pair()
        points = spec.singular_points.get("C", [])
        report = milnor.certify_icis_points(dec.D1.F, dec.D2.F, points,
                                            spec.chart, spec.allow_change)
    else:
        if name not in spec.divisors:
            raise InputError(f"no divisor named {name!r}")
        points = spec.singular_points.get(name, [])
        report = milnor.certify_points(spec.divisors[name].F, points,
                                       spec.chart, spec.allow_change)
    return milnor_document(name, report), EXIT_OK


def cmd_euler(args, spec):
    doc = {"n": spec.n, "chi_projective_space": theorems.euler_projective_space(spec.n)}
    hyper = {}
    for D in spec.divisors.values():
        mu, _ = theorems.divisor_milnor(spec, D)
        hyper[D.name] = {"milnor_total": mu, "chi": theorems.euler_hypersurface(D, mu)}
    doc["divisors"] = hyper
    if spec.decomposition is not None:
        dec = spec.decomposition_pair()
        muC, _ = theorems.intersection_milnor(spec, dec)
        doc["C"] = {"milnor_total": muC, "chi": theorems.euler_intersection_curve(dec, muC)}
    chi, ledger = theorems.euler_complement(spec)
    doc["chi_complement"] = chi
    doc["ledger"] = [{"quantity": e.quantity, "value": e.value, "route": e.route}
                     for e in ledger]
    return encode(doc), EXIT_OK


def cmd_verify(args, spec):
    report = theorems.verify(spec, args.formula)
    return verification_document(report, spec), (EXIT_OK if report.passed else EXIT_VERIFY)


def cmd_chow(args):
    return chow_document(args.n, args.degrees), EXIT_OK


def cmd_oracle(args):
    weights = [_rational(w) for w in args.weights]
    value = milnor.milnor_orlik_oracle(weights, _rational(args.degree))
    return encode({"weights": weights, "degree": _rational(args.degree),
                   "milnor_number": value}), EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--chart", type=int, default=None, help="affine chart index")
    common.add_argument("--probes", action="store_true", help="add sign-convention probes")
    common.add_argument("--coordinate-change", action="store_true",
                        help="allow a linear change of coordinates when no chart works")

    parser = argparse.ArgumentParser(prog="logchern", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("milnor", parents=[common], help="Milnor numbers of a divisor or of C")
    p.add_argument("file")
    p.add_argument("--divisor", default=None)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristics")
    p.add_argument("file")

    p = sub.add_parser("verify", parents=[common], help="verify an identity")
    p.add_argument("file")
    p.add_argument("formula", choices=sorted(theorems.FORMULAS))

    p = sub.add_parser("chow", parents=[common], help="log Chern class on P^n")
    p.add_argument("n", type=int)
    p.add_argument("degrees", type=int, nargs="+")

    p = sub.add_parser("oracle", parents=[common], help="weighted homogeneous Milnor number")
    p.add_argument("--weights", nargs="+", required=True)
    p.add_argument("--degree", required=True)
    return parser


def _apply_flags(spec, args):
    if args.chart is not None:
        if not 0 <= args.chart <= spec.n:
            raise InputError(f"chart index {args.chart} out of range")
        spec.chart = args.chart
    spec.probes = spec.probes or args.probes
    spec.allow_change = spec.allow_change or args.coordinate_change
    return spec


def run(argv=None):
    """Run the CLI; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), ""
    as_json = args.json
    try:
        if args.command in ("chow", "oracle"):
            doc, code = (cmd_chow if args.command == "chow" else cmd_oracle)(args)
        else:
            spec = _apply_flags(load_problem(args.file), args)
            handler = {"milnor": cmd_milnor, "euler": cmd_euler, "verify": cmd_verify}
            doc, code = handler[args.command](args, spec)
    except InputError as exc:
        return EXIT_INPUT, render({"error": {"code": exc.code, "message": str(exc)}}, as_json)
    except (PreconditionError, LogChernError) as exc:
        return EXIT_PRECONDITION, render(
            {"error": {"code": exc.code, "message": str(exc)}}, as_json)
    return code, render(doc, as_json)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    code, text = run(argv)
    if text:
        # JSON documents, errors included, always go to stdout
        to_stdout = code in (EXIT_OK, EXIT_VERIFY) or "--json" in argv
        (sys.stdout if to_stdout else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
