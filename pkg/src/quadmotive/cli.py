"""Command line: datasheet / galois / cusp / table with JSON and CSV output."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from mpmath import mp

from . import cusp as cuspmod
from . import galois as galoismod
from .quadfield import FieldError, make_field, narrow_class_number
from .realisation import GENERATORS, datasheet, epsilon_tilde_exponent
from .zeta import zeta_minus1

USAGE_EXIT = 64
IO_EXIT = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; we reserve 2 for domain errors
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _build_parser() -> _Parser:
    p = _Parser(prog="quadmotive", description="Exact invariants of real quadratic fields")
    sub = p.add_subparsers(dest="command", required=True)

    ds = sub.add_parser("datasheet", parents=[], help="full invariant record for one D")
    ds.add_argument("--D", type=int, required=True)
    ds.add_argument("--json", action="store_true")
    ds.add_argument("--precision", type=int, default=None)
    ds.add_argument("--generator", choices=list(GENERATORS), default=GENERATORS[0])
    ds.add_argument("--force", action="store_true", help="skip the narrow-class-number check")
    ds.set_defaults(func=cmd_datasheet)

    ga = sub.add_parser("galois", help="Frobenius matrix mod l^n")
    ga.add_argument("--D", type=int, required=True)
    ga.add_argument("--p", type=int, required=True)
    ga.add_argument("--l", type=int, required=True)
    ga.add_argument("--n", type=int, required=True)
    ga.add_argument("--dim", type=int, choices=(2, 3), default=2)
    ga.add_argument("--flip-root", action="store_true")
    ga.add_argument("--verify", type=int, choices=(1, 2), default=None, metavar="K")
    ga.add_argument("--generator", choices=list(GENERATORS), default=GENERATORS[0])
    ga.set_defaults(func=cmd_galois)

    cu = sub.add_parser("cusp", help="resolution cycle, intersection matrix, cohomology")
    cu.add_argument("--D", type=int, required=True)
    cu.add_argument("--generator", choices=list(GENERATORS), default=GENERATORS[0])
    cu.set_defaults(func=cmd_cusp)

    ta = sub.add_parser("table", help="one CSV row per admissible D in a range")
    ta.add_argument("--D-from", dest="d_from", type=int, required=True)
    ta.add_argument("--D-to", dest="d_to", type=int, required=True)
    ta.add_argument("--csv", type=str, default=None, metavar="PATH")
    ta.add_argument("--generator", choices=list(GENERATORS), default=GENERATORS[0])
    ta.set_defaults(func=cmd_table)

    return p


def _precision(args) -> int:
    if getattr(args, "precision", None) is not None:
        digits = args.precision
    else:
        env = os.environ.get("KCE_PRECISION")
        digits = 50 if env is None else int(env)
    if digits < 1:
        raise ValueError(f"precision must be >= 1, got {digits}")
    return digits


def _frac(x) -> str:
    return str(x)


def _num(x, digits: int) -> str:
    with mp.workdps(digits):
        return mp.nstr(x, digits)


def _datasheet_doc(sheet, digits: int) -> dict:
    return {
        "D": sheet.D,
        "h_plus": sheet.h_plus,
        "eps0": {
            "a": _frac(sheet.eps0.a),
            "b": _frac(sheet.eps0.b),
            "numeric": _num(sheet.eps0_numeric, digits),
        },
        "norm_eps0": sheet.norm_eps0,
        "eps": {
            "a": _frac(sheet.eps.a),
            "b": _frac(sheet.eps.b),
            "numeric": _num(sheet.eps_numeric, digits),
        },
        "zeta_minus1": _frac(sheet.zeta_minus1),
        "volume": _frac(sheet.volume),
        "self_cup": _frac(sheet.self_cup),
        "normalizer": _frac(sheet.normalizer),
        "q_exponent": _frac(sheet.q_exponent),
        "hodge_class": {
            "coeff": _frac(sheet.hodge.coeff),
            "numeric": _num(sheet.hodge.numeric, digits),
            "basis": sheet.hodge.basis_note,
        },
        "cusp": {
            "cycle": list(sheet.cycle.b),
            "n": sheet.cycle.n,
            "negative_definite": sheet.negative_definite,
            "minors": [_frac(x) for x in sheet.minors],
        },
        "boundary_cohomology": {
            "rank": sheet.cohomology.rank,
            "h1": {"dim": sheet.cohomology.h1[0], "weight": sheet.cohomology.h1[1]},
            "h2": {"dim": sheet.cohomology.h2[0], "weight": sheet.cohomology.h2[1]},
            "h3": {"dim": sheet.cohomology.h3[0], "weight": sheet.cohomology.h3[1]},
        },
        "gauss_sum": {
            "value": {
                "re": _num(sheet.gauss_sum.real, digits),
                "im": _num(sheet.gauss_sum.imag, digits),
            },
            "error": _num(sheet.gauss_error, digits),
        },
        "motive_summands": list(sheet.motive_summands),
        "conventions": {
            "generator": sheet.generator,
            "orientation": sheet.orientation,
            "precision": sheet.precision,
        },
    }


def cmd_datasheet(args) -> int:
    digits = _precision(args)
    sheet = datasheet(args.D, precision=digits, generator=args.generator, force=args.force)
    doc = _datasheet_doc(sheet, digits)
    if args.json:
        print(json.dumps(doc, indent=2))
        return 0
    print(f"D = {doc['D']}   (h+ = {doc['h_plus']})")
    print(f"eps0 = {sheet.eps0}   norm {doc['norm_eps0']}   ~ {doc['eps0']['numeric']}")
    print(f"eps  = {sheet.eps}   ~ {doc['eps']['numeric']}")
    print(f"zeta_F(-1) = {doc['zeta_minus1']}   volume = {doc['volume']}   "
          f"self-cup = {doc['self_cup']}   normalizer = {doc['normalizer']}")
    print(f"q exponent of the normalized unit = {doc['q_exponent']}")
    print(f"Hodge class = {doc['hodge_class']['coeff']} * log(eps) "
          f"~ {doc['hodge_class']['numeric']}   [basis {doc['hodge_class']['basis']}]")
    print(f"cusp cycle = {tuple(sheet.cycle.b)}   n = {sheet.cycle.n}   "
          f"negative definite: {doc['cusp']['negative_definite']}")
    print(f"minors = {', '.join(doc['cusp']['minors'])}")
    coh = doc["boundary_cohomology"]
    print(f"boundary cohomology: rank {coh['rank']}, "
          f"h1 dim {coh['h1']['dim']} wt {coh['h1']['weight']}, "
          f"h2 dim {coh['h2']['dim']} wt {coh['h2']['weight']}, "
          f"h3 dim {coh['h3']['dim']} wt {coh['h3']['weight']}")
    print(f"gauss sum = {doc['gauss_sum']['value']['re']} "
          f"(error {doc['gauss_sum']['error']})")
    print(f"motive = {' + '.join(doc['motive_summands'])}")
    print(f"conventions: generator {doc['conventions']['generator']}, "
          f"orientation {doc['conventions']['orientation']}, "
          f"precision {doc['conventions']['precision']}")
    return 0


def cmd_galois(args) -> int:
    build = galoismod.frobenius_matrix if args.dim == 2 else galoismod.frobenius_matrix_3d
    mat = build(args.D, args.p, args.l, args.n,
                flip_root=args.flip_root, generator=args.generator)
    doc = {
        "D": args.D,
        "p": mat.p,
        "l": mat.l,
        "n": mat.n,
        "modulus": mat.modulus,
        "dim": mat.dim,
        "matrix": [list(row) for row in mat.entries],
        "tau": mat.tau,
        "chi": mat.chi,
        "determinant": mat.determinant(),
        "sqrt_choice": mat.sqrt_choice,
        "zeta": mat.zeta_repr,
        "zeta_convention": mat.zeta_convention,
        "generator": mat.generator,
        "flip_root": args.flip_root,
    }
    if args.verify is not None:
        ok = galoismod.verify_power_law(args.D, args.p, args.l, args.n, args.verify,
                                        flip_root=args.flip_root, generator=args.generator)
        doc["verify"] = {"k": args.verify, "ok": ok}
    print(json.dumps(doc, indent=2))
    return 0


def cmd_cusp(args) -> int:
    cycle = cuspmod.cusp_cycle(args.D)
    mat = cuspmod.intersection_matrix(cycle)
    cert = cuspmod.is_negative_definite(mat)
    coh = cuspmod.boundary_cohomology(cycle)
    doc = {
        "D": args.D,
        "cycle": list(cycle.b),
        "n": cycle.n,
        "intersection_matrix": [[_frac(x) for x in row] for row in mat.entries],
        "negative_definite": cert.negative_definite,
        "minors": [_frac(x) for x in cert.minors],
        "cohomology": {
            "rank": coh.rank,
            "kernel": [[_frac(x) for x in vec] for vec in coh.kernel],
            "h1": {"dim": coh.h1[0], "weight": coh.h1[1]},
            "h2": {"dim": coh.h2[0], "weight": coh.h2[1]},
            "h3": {"dim": coh.h3[0], "weight": coh.h3[1]},
        },
    }
    print(json.dumps(doc, indent=2))
    return 0


def cmd_table(args) -> int:
    rows = []
    for d in range(args.d_from, args.d_to + 1):
        try:
            make_field(d)
        except FieldError as exc:
            print(f"skip D={d}: {type(exc).__name__}: {exc}", file=sys.stderr)
            continue
        cycle = cuspmod.cusp_cycle(d)
        rows.append([
            d,
            narrow_class_number(d),
            _frac(zeta_minus1(d)),
            cycle.n,
            "(" + ",".join(str(b) for b in cycle.b) + ")",
            _frac(epsilon_tilde_exponent(d, args.generator)),
        ])
    header = ["D", "h_plus", "zeta_minus1", "n", "cycle", "q_exponent"]
    if args.csv is not None:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)
    else:
        w = csv.writer(sys.stdout)
        w.writerow(header)
        w.writerows(rows)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return IO_EXIT
    except (FieldError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
