"""Command line entry point: ``skeinlab compute|vassiliev|verify|reconstruct``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .determine import reconstruct_polynomial, theorem_window
from .errors import SkeinlabError
from .harness import (DEFAULT_A, LOOP_FACTOR, VerifyConfig, bundled_table, dumps,
                      exit_status, format_summary, load_table, run_verification)
from .notation import parse_notation
from .polyring import _half_integer_twice, format_coef
from .skein import dubrovnik, homfly, jones
from .vassiliev import derivatives, family_polynomial, invariant_family

FAMILIES = ("jones", "homfly", "dubrovnik")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def half_integer(text: str) -> Fraction:
    try:
        value = Fraction(text)
        _half_integer_twice(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a half-integer: {text}") from exc
    return value


def _family_a(args):
    if args.family == "jones":
        if args.a is not None:
            raise SystemExit("the jones family takes no --a")
        return None
    if args.a is None:
        raise SystemExit(f"--a is required for {args.family}")
    return args.a


def cmd_compute(args) -> int:
    d = parse_notation(args.notation)
    if args.poly == "jones":
        print(jones(d))
    elif args.poly == "homfly":
        P = homfly(d)
        print(P if args.a is None else family_polynomial(d, "homfly", args.a))
    else:
        D, Y = dubrovnik(d)
        if args.a is None:
            print(f"D = {D}")
            print(f"Y = {Y}")
        else:
            print(family_polynomial(d, "dubrovnik", args.a))
    return 0


def cmd_vassiliev(args) -> int:
    d = parse_notation(args.notation)
    seq = invariant_family(d, args.family, _family_a(args), args.n)
    for j, v in enumerate(seq.values):
        print(f"{j:>4}  {format_coef(v)}")
    return 0


def cmd_reconstruct(args) -> int:
    d = parse_notation(args.notation)
    a = _family_a(args)
    F = family_polynomial(d, args.family, a)
    window = theorem_window(d, args.family, a).on(args.lattice)
    if window.info.get("divided_by"):
        # the theorem window of a split picture bounds V / (q + 1/q)^(g-1)
        base = F.divide_exact(LOOP_FACTOR ** window.info["divided_by"])
        rebuilt = reconstruct_polynomial(window, derivatives(base, window.K))
        rebuilt = rebuilt * LOOP_FACTOR ** window.info["divided_by"]
    else:
        rebuilt = reconstruct_polynomial(window, derivatives(F, window.K))
    print(f"N = {window.N}, data points = {len(window.exponents)} ({args.lattice} lattice)")
    print(f"reconstructed: {rebuilt}")
    print(f"computed:      {F}")
    same = rebuilt == F
    print("match" if same else "MISMATCH")
    return 0 if same else 1


def cmd_verify(args) -> int:
    entries = load_table(args.table) if args.table else bundled_table()
    config = VerifyConfig(families=tuple(args.families), a_values=tuple(args.a),
                          jmax=args.jmax, workers=args.workers)
    report = run_verification(entries, config)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(report))
    print(format_summary(report))
    return exit_status(report)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skeinlab", description="Exact link polynomials and their "
                "Taylor invariants under t = e^x.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="print a polynomial")
    c.add_argument("notation")
    c.add_argument("--poly", choices=FAMILIES, default="jones")
    c.add_argument("--a", type=half_integer, help="specialize at alpha = t^a")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("vassiliev", help="print Taylor coefficients v_0..v_n")
    v.add_argument("notation")
    v.add_argument("--family", choices=FAMILIES, default="jones")
    v.add_argument("--a", type=half_integer)
    v.add_argument("--n", type=int, default=6)
    v.set_defaults(func=cmd_vassiliev)

    r = sub.add_parser("reconstruct", help="rebuild a polynomial from its first invariants")
    r.add_argument("notation")
    r.add_argument("--family", choices=FAMILIES, default="jones")
    r.add_argument("--a", type=half_integer)
    r.add_argument("--lattice", choices=("coarse", "fine"), default="fine")
    r.set_defaults(func=cmd_reconstruct)

    w = sub.add_parser("verify", help="run the determination checks over a census")
    w.add_argument("--table", help="JSON census (default: the bundled one)")
    w.add_argument("--families", nargs="+", choices=FAMILIES, default=list(FAMILIES))
    w.add_argument("--a", nargs="+", type=half_integer, default=list(DEFAULT_A))
    w.add_argument("--jmax", type=int)
    w.add_argument("--workers", type=int, default=1)
    w.add_argument("--out", help="write the JSON report here")
    w.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:    # usage errors and --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"skeinlab: error: {exc.code}", file=sys.stderr)
            return 2
        raise
    except (SkeinlabError, ValueError, OSError) as exc:
        print(f"skeinlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
