"""Command line interface: ``ratmotion analyze | generate | trajectory``."""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from ._backend import exact, fmt
from .analysis import analyze_inverse, predicted_degree
from .construct import FAMILIES
from .expr import ParseError, format_motion, parse_motion
from .motion import MotionError, StudyViolation, trajectory, validate
from .quat_poly import InconsistencyError

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_INCONSISTENT = 0, 1, 2, 3


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _point(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("point needs four homogeneous coordinates x0,x1,x2,x3")
    return tuple(_rational(p) for p in parts)


# -- analyze -----------------------------------------------------------------------

def _summary(report):
    lines = [f"n={report['n']} m={report['m']} e={report['e']} predicted={report['predicted']}"]
    if "oracle" in report:
        lines.append(f"oracle={report['oracle']} (seed {report['seed']})")
    for cert in report["certificates"]:
        z = cert["z"]
        lines.append(f"ruling: z={z[0]:+.6g}{z[1]:+.6g}j multiplicity={cert['multiplicity']} "
                     f"residual={cert['left_ruling_residual']:.2e} coincident={cert['coincident']}")
    return lines


def cmd_analyze(args):
    motion = validate(parse_motion(_read(args.file)))
    kw = dict(oracle_trials=args.oracle, seed=args.seed)
    report = predicted_degree(motion, **kw).to_json()
    if args.inverse:
        report["inverse"] = analyze_inverse(motion, **kw).to_json()
    if args.json:
        json.dump(report, sys.stdout, indent=2)
        print()
    else:
        print("\n".join(_summary(report)))
        if args.inverse:
            print("inverse: " + "; ".join(_summary(report["inverse"])))
    return EXIT_OK


# -- generate --------------------------------------------------------------------

def _params(items):
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValueError(f"parameter must be key=value: {item!r}")
        out[key] = parse_motion(value)
    return out


_DEFAULTS = {
    "exceptional": {"R": "t-k", "E": "j", "H": "t-i"},
    "planar": {"R": "t-k", "D": "t*i+j"},
}

_KEYS = {
    "cardan": (),
    "oldham": (),
    "darboux": ("D",),
    "vertical-darboux": ("a",),
    "wunderlich": ("f", "G"),
    "exceptional": ("R", "E", "H"),
    "planar": ("R", "D", "F", "H"),
}


def _real_param(p):
    q = p.primal
    if not p.dual.is_zero() or not q.is_real():
        raise ValueError("parameter must be a real polynomial")
    return q.scalar_part()


def cmd_generate(args):
    family = args.family
    params = {k: parse_motion(v) for k, v in _DEFAULTS.get(family, {}).items()}
    params.update(_params(args.params))
    unknown = set(params) - set(_KEYS[family])
    if unknown:
        raise ValueError(f"unknown parameter(s) for {family}: {', '.join(sorted(unknown))}")
    if family == "vertical-darboux" and "a" in params:
        params["a"] = _real_param(params["a"])
    if family == "wunderlich" and "f" in params:
        params["f"] = _real_param(params["f"])
    motion = FAMILIES[family](**params)
    print(format_motion(motion))
    return EXIT_OK


# -- trajectory ------------------------------------------------------------------

def cmd_trajectory(args):
    if args.samples < 1:
        raise ValueError("samples must be positive")
    motion = validate(parse_motion(_read(args.file)))
    traj = trajectory(motion, args.point)
    lo, hi = args.t_from, args.t_to
    step = (hi - lo) / (args.samples - 1) if args.samples > 1 else 0
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["t", "x", "y", "z"])
    for k in range(args.samples):
        t = exact(lo + step * k)
        x0, *xs = traj(t)
        if not x0:
            what = "all coordinates vanish" if not any(xs) else "point at infinity"
            print(f"warning: skipping t={fmt(t)}: {what}", file=sys.stderr)
            continue
        affine = [x / x0 for x in xs]
        if args.exact:
            writer.writerow([fmt(t)] + [fmt(v) for v in affine])
        else:
            writer.writerow([repr(float(t))] + [repr(float(v)) for v in affine])
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="ratmotion",
                                     description="Trajectory degrees of rational rigid body motions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report n, m, e and the predicted trajectory degree")
    p.add_argument("file", help="expression file, or - for stdin")
    p.add_argument("--oracle", type=int, metavar="N", help="compare with N sampled trajectories")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inverse", action="store_true", help="also analyze the inverse motion")
    p.add_argument("--json", action="store_true", help="emit the full JSON report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="print a named example motion")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", metavar="KEY=EXPR")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("trajectory", help="sample the trajectory of a point as CSV")
    p.add_argument("file", help="expression file, or - for stdin")
    p.add_argument("--point", type=_point, required=True, metavar="x0,x1,x2,x3")
    p.add_argument("--from", dest="t_from", type=_rational, default=Fraction(-1))
    p.add_argument("--to", dest="t_to", type=_rational, default=Fraction(1))
    p.add_argument("--samples", type=int, default=21)
    p.add_argument("--exact", action="store_true", help="write exact rationals p/q")
    p.set_defaults(func=cmd_trajectory)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StudyViolation as exc:
        print(f"invalid motion: {exc}", file=sys.stderr)
        print(f"defect: {json.dumps(exc.defect.to_json())}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (MotionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
