"""Command-line interface.

Exit codes: 0 on success, 2 on typed domain errors, 1 on IO or usage errors.
Complex literals are written as "re,im" (a bare real is also accepted).
"""

import argparse
import sys

from .errors import ChdynError
from .families import McMullenParams
from .lemmas import (
    check_annulus_bound,
    check_normalize_roundtrip,
    check_small_disk_bound,
    check_symmetry,
    check_uniform_convergence,
)
from .plane import (
    DYNAMICAL_CH,
    DYNAMICAL_MCMULLEN,
    PARAMETER_CH,
    PARAMETER_MCMULLEN,
    PlaneSpec,
    _json_value,
    render_dynamical_plane,
    render_parameter_plane,
    report_document,
    write_csv,
    write_ppm,
    write_report,
)
from .special import RealBracket, find_a_q, find_a_star, q0_cycle
from .trichotomy import classify_mcmullen, classify_ra


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def parse_complex(s):
    parts = s.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're,im', got {s!r}")


def parse_res(s):
    try:
        nx, ny = s.lower().split("x")
        return int(nx), int(ny)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected '<nx>x<ny>', got {s!r}")


def parse_bracket(s):
    try:
        lo, hi = (float(x) for x in s.split(","))
        return RealBracket(lo, hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'lo,hi', got {s!r}")


def _add_family_args(p, needs_geometry):
    p.add_argument("--family", choices=["ch", "mcmullen"], required=True)
    p.add_argument("--a", type=parse_complex, help="family parameter (ch)")
    p.add_argument("--lambda", dest="lam", type=parse_complex, help="perturbation (mcmullen)")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--max-iter", type=int, default=200)
    if needs_geometry:
        p.add_argument("--center", type=parse_complex, default=0j)
        p.add_argument("--width", type=float, required=True)
        p.add_argument("--height", type=float, default=None)
        p.add_argument("--res", type=parse_res, default=(256, 256))
        p.add_argument("--out", required=True)
        p.add_argument("--csv", default=None, help="also dump raw cells to this CSV path")
        p.add_argument("--workers", type=int, default=1)


def build_parser():
    top = _Parser(prog="chdyn", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    _add_family_args(sub.add_parser("render-dyn", help="render a dynamical plane"), True)
    _add_family_args(sub.add_parser("render-param", help="render a parameter plane"), True)
    _add_family_args(sub.add_parser("classify", help="classify one critical orbit"), False)
    sub.choices["classify"].add_argument("--out", default=None)

    fs = sub.add_parser("find-special", help="locate a distinguished real parameter")
    fs.add_argument("--target", choices=["a-star", "a-q", "q0"], required=True)
    fs.add_argument("--bracket", type=parse_bracket, default=None)
    fs.add_argument("--a", type=float, default=0.0, help="parameter for the q0 target")
    fs.add_argument("--out", default=None)

    vf = sub.add_parser("verify", help="run a quantitative-check suite")
    vf.add_argument(
        "--suite",
        choices=["symmetry", "annulus", "smalldisk", "converge", "normalize", "all"],
        required=True,
    )
    vf.add_argument("--a", type=parse_complex, default=None)
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--out", default=None)
    return top


def _emit(doc_obj, out):
    doc = report_document(doc_obj)
    text = _json_value(doc)
    print(text)
    if out:
        write_report(doc_obj, out)
    return doc


def _dyn_spec(args, kind):
    nx, ny = args.res
    mcm = None
    if kind == DYNAMICAL_MCMULLEN:
        if args.lam is None:
            raise ChdynError("mcmullen family needs --lambda")
        mcm = McMullenParams(args.n, args.d, args.lam)
    elif args.a is None:
        raise ChdynError("ch family needs --a")
    return PlaneSpec(
        center=args.center, width=args.width, height=args.height, nx=nx, ny=ny,
        kind=kind, max_iter=args.max_iter, a=args.a, mcm=mcm,
        param_n=args.n, param_d=args.d,
    )


def _cmd_render(args, parameter_plane):
    if parameter_plane:
        kind = PARAMETER_CH if args.family == "ch" else PARAMETER_MCMULLEN
        nx, ny = args.res
        spec = PlaneSpec(
            center=args.center, width=args.width, height=args.height, nx=nx, ny=ny,
            kind=kind, max_iter=args.max_iter, param_n=args.n, param_d=args.d,
        )
        grid = render_parameter_plane(spec, workers=args.workers)
    else:
        kind = DYNAMICAL_CH if args.family == "ch" else DYNAMICAL_MCMULLEN
        grid = render_dynamical_plane(_dyn_spec(args, kind), workers=args.workers)
    write_ppm(grid, args.out)
    if args.csv:
        write_csv(grid, args.csv)
    print(f"wrote {args.out}")


def _cmd_classify(args):
    if args.family == "ch":
        if args.a is None:
            raise ChdynError("ch family needs --a")
        rep = classify_ra(args.a, max_iter=args.max_iter)
    else:
        if args.lam is None:
            raise ChdynError("mcmullen family needs --lambda")
        rep = classify_mcmullen(McMullenParams(args.n, args.d, args.lam), max_iter=args.max_iter)
    _emit(rep, args.out)


def _cmd_find_special(args):
    if args.target == "q0":
        q0, q_inf = q0_cycle(args.a, bracket=args.bracket)
        doc = {"kind": "q0", "a": args.a, "q0": q0, "q_inf": q_inf}
        print(_json_value(doc))
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(_json_value(doc) + "\n")
        return
    res = find_a_q(args.bracket) if args.target == "a-q" else find_a_star(args.bracket)
    _emit(res, args.out)


_SUITES = {
    "symmetry": lambda a, seed: check_symmetry(a if a is not None else 0.7 + 0.2j, seed=seed),
    "annulus": lambda a, seed: check_annulus_bound(a if a is not None else 1e-6, seed=seed),
    "smalldisk": lambda a, seed: check_small_disk_bound(a if a is not None else 1e-6, seed=seed),
    "converge": lambda a, seed: check_uniform_convergence(a if a is not None else 1e-4),
    "normalize": lambda a, seed: check_normalize_roundtrip(seed=seed),
}


def _cmd_verify(args):
    suites = list(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in suites:
        res = _SUITES[name](args.a, args.seed)
        _emit(res, args.out if len(suites) == 1 else None)
        ok &= res.passed
    if not ok:
        raise ChdynError("verification suite failed")


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "render-dyn":
            _cmd_render(args, parameter_plane=False)
        elif args.command == "render-param":
            _cmd_render(args, parameter_plane=True)
        elif args.command == "classify":
            _cmd_classify(args)
        elif args.command == "find-special":
            _cmd_find_special(args)
        elif args.command == "verify":
            _cmd_verify(args)
    except ChdynError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
