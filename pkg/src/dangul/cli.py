"""Command-line interface: ``dangul <verb> ...``."""
import argparse
import json
import sys

from . import bijections as bij
from .canonical_orient import ddm_orient, pseudo_ddm_orient
from .counting import F_d, F_pd_prime, brown_t, brown_q
from .draw import map_svg, mobile_svg
from .generate import generate_maps
from .map_core import PlanarMap, girth, INFINITE
from .mobiles import Mobile, excess
from .orientation import WeightedBiorientation, dual, dual_map, class_of
from .verify import verify, report_lines, all_passed, check_orientation_fixture


def _load(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(args, value, text=None):
    if args.format == "json":
        print(json.dumps(value, sort_keys=True))
    else:
        print(text if text is not None else json.dumps(value, indent=1, sort_keys=True))


def _write_svg(path, svg):
    if path:
        with open(path, "w") as fh:
            fh.write(svg)


def cmd_series(args):
    if args.p is None:
        s = F_d(args.d, args.order)
    else:
        s = F_pd_prime(args.p, args.d, args.order)
    coeffs = list(s)
    _emit(args, coeffs, "\n".join(str(c) for c in coeffs))


def cmd_brown(args):
    value = (brown_t if args.family == "t" else brown_q)(args.p, args.n)
    _emit(args, value, str(value))


def cmd_girth(args):
    g = girth(PlanarMap.from_dict(_load(args.map)))
    value = "infinite" if g is INFINITE else g
    _emit(args, value, str(value))


def cmd_orient(args):
    m = PlanarMap.from_dict(_load(args.map))
    if args.p is None:
        b = ddm_orient(m, args.d)
    else:
        b = pseudo_ddm_orient(m, args.p, args.d)
    if b is None:
        print("no d/(d-2)-orientation: girth is below d", file=sys.stderr)
        return 1
    _write_svg(args.svg, map_svg(b.map, b.ingoing))
    _emit(args, b.to_dict())
    return 0


def cmd_close(args):
    t = Mobile.from_dict(_load(args.mobile))
    delta = excess(t)
    if delta < 0:
        b = bij.phi_minus_inverse(t)
    elif delta > 0:
        b = bij.phi_plus_inverse(t)
    else:
        b = bij.phi_zero_inverse(t)
    _write_svg(args.svg, map_svg(b.map, b.ingoing))
    _emit(args, b.to_dict())


def cmd_open(args):
    b = WeightedBiorientation.from_dict(_load(args.orientation))
    mode = args.mode
    if mode == "auto":
        classes = class_of(b)
        if "B~0" in classes:
            mode = "zero"
        elif "B~" in classes:
            mode = "minus"
        elif "B" in classes:
            mode = "plus"
        else:
            print("biorientation is in none of the classes B, B~, B~0", file=sys.stderr)
            return 1
    fn = {"plus": bij.phi_plus, "minus": bij.phi_minus, "zero": bij.phi_zero}[mode]
    t = fn(b)
    _write_svg(args.svg, mobile_svg(t))
    _emit(args, t.to_dict())
    return 0


def cmd_dual(args):
    data = _load(args.input)
    if "dir" in data:
        _emit(args, dual(WeightedBiorientation.from_dict(data)).to_dict())
    else:
        _emit(args, dual_map(PlanarMap.from_dict(data)).to_dict())


def cmd_verify(args):
    if args.fixture:
        records = [check_orientation_fixture(_load(args.fixture))]
    else:
        records = verify(args.d, args.p, args.n_max)
    for line in report_lines(records):
        print(line)
    return 0 if all_passed(records) else 1


def cmd_generate(args):
    maps = generate_maps(args.d, args.d, args.max_faces, min_girth=args.girth)
    if args.girth is not None:
        maps = [m for m in maps if girth(m) == args.girth]
    if args.count:
        _emit(args, len(maps), str(len(maps)))
    else:
        for m in maps:
            print(json.dumps(m.to_dict(), sort_keys=True))


def build_parser():
    parser = argparse.ArgumentParser(prog="dangul")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("series", parents=[common],
                       help="coefficients of F_d, or of F'_{p,d} with --p")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("brown", parents=[common], help="closed-form counts t_{p,n} or q_{p,n}")
    p.add_argument("--family", choices=["t", "q"], required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_brown)

    p = sub.add_parser("girth", parents=[common], help="girth of a map given as JSON")
    p.add_argument("map")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("orient", parents=[common],
                       help="minimal d/(d-2)-orientation (pseudo with --p)")
    p.add_argument("map")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("close", parents=[common], help="biorientation of a weighted mobile")
    p.add_argument("mobile")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("open", parents=[common], help="mobile of a biorientation")
    p.add_argument("orientation")
    p.add_argument("--mode", choices=["auto", "plus", "minus", "zero"], default="auto")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_open)

    p = sub.add_parser("dual", parents=[common], help="dual map or dual orientation")
    p.add_argument("input")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("verify", parents=[common], help="run the cross-validation suites")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--p", type=int)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--fixture", help="check a stored orientation fixture instead")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="corner-rooted d-angulations")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-faces", type=int, required=True)
    p.add_argument("--girth", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except KeyError as exc:
        print("error: missing field %s in the input" % exc, file=sys.stderr)
        return 2
    except TypeError as exc:
        print("error: malformed input (%s)" % exc, file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
