"""Command-line entry point: ``twistcalc <subcommand> ...``.

Results are written to standard output as canonical JSON (compact, keys in
a fixed order).  Errors go to standard error; usage errors exit with 2 and
domain errors with the code of their exception class.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import __version__, combin, steinberg
from .budget import load_budget
from .classes import check_laws
from .errors import TwistcalcError
from .graded import GradedDims, frobenius_stretch, make_Er, sym_hilbert, tensor
from .twist_engine import ExtTable, bifunctor_decomposition, fit_polynomial, param_decomposition, untwist, untwist_general


class UsageError(Exception):
    pass


def canonical(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _load_json(arg: str) -> Any:
    """Inline JSON, ``@path``, or a path to an existing file."""
    text = arg
    if arg.startswith("@"):
        path = arg[1:]
    elif not arg.lstrip().startswith(("{", "[")) and os.path.exists(arg):
        path = arg
    else:
        path = None
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {arg!r}: {exc.msg}") from None


def _graded(arg: str) -> GradedDims:
    data = _load_json(arg)
    if not isinstance(data, dict):
        raise UsageError("graded dimensions must be a JSON object like {\"0\":1,\"2\":1}")
    try:
        return GradedDims.from_json(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad graded dimensions: {exc}") from None


def _table(arg: str) -> ExtTable:
    data = _load_json(arg)
    if not isinstance(data, dict) or "d" not in data:
        raise UsageError("an Ext table needs keys \"d\" and \"entries\"")
    try:
        return ExtTable.from_json(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad Ext table: {exc}") from None


def _prime(text: str) -> int:
    p = _nonneg(text)
    if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{text} is not a prime")
    return p


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers") from None


def _table_text(obj: Any) -> str:
    """Human-readable rendering for ``--format table``."""
    if isinstance(obj, dict) and all(isinstance(k, str) and k.isdigit() for k in obj):
        return "\n".join(f"{k:>6}  {v}" for k, v in obj.items()) or "(zero)"
    return json.dumps(obj, indent=2, ensure_ascii=False)


# command handlers ---------------------------------------------------------


def cmd_er(args) -> Any:
    return make_Er(args.p, args.r).to_json()


def cmd_tensor(args) -> Any:
    return tensor(_graded(args.a), _graded(args.b)).to_json()


def cmd_stretch(args) -> Any:
    return frobenius_stretch(_graded(args.a), args.p).to_json()


def cmd_sym_hilbert(args) -> Any:
    return sym_hilbert(args.dim, args.shifts, args.coh, args.poly).to_json()


def cmd_decompose(args) -> Any:
    E = _graded(args.param)
    if args.bifunctor:
        if args.p is None:
            raise UsageError("--bifunctor needs --p")
        return bifunctor_decomposition(args.d, E, args.p, "target" if args.target else "source").to_json()
    return param_decomposition(args.d, E).to_json()


def cmd_untwist(args) -> Any:
    table = _table(args.table)
    if args.param is not None:
        if args.p is not None or args.r is not None:
            raise UsageError("give either --param or --p/--r")
        return untwist_general(table, _graded(args.param), args.sparse).to_json()
    if args.p is None or args.r is None:
        raise UsageError("untwist needs --p and --r (or --param)")
    return untwist(table, args.p, args.r, args.sparse, args.method).to_json()


def cmd_fit(args) -> Any:
    table = _table(args.table)
    poly = fit_polynomial(table, args.p, range(args.rmax + 1), args.sparse, args.degree_bound)
    return {"coefficients": poly.to_json(), "polynomial": str(poly), "degree": poly.degree}


def cmd_classes(args) -> Any:
    report = check_laws(args.d, args.l, args.p, args.degs)
    out = report.to_json()
    if not report.ok:
        args._exit = 1
    return out


def cmd_steinberg(args) -> Any:
    word = steinberg.parse_word(args.word)
    if args.action == "orbit":
        orbit = steinberg.orbit_mod_u(word, args.u)
        return {"orbit": [list(w) for w in orbit], "rendered": [steinberg.format_word(w) for w in orbit]}
    if args.action == "qshifts":
        shifts = steinberg.q_shifts(word, args.u)
        return {"qshifts": [q.to_json() for q in shifts], "rendered": steinberg.format_qshifts(shifts)}
    if args.head is None or args.tail is None:
        raise UsageError("goodshift needs --head and --tail")
    found = steinberg.find_good_shift(word, args.u, args.head, args.tail)
    return {"shift": found.to_json() if found else None}


def cmd_oracle(args) -> Any:
    from .schur_oracle import ParseError, oracle_ext, oracle_table, parse

    budget = load_budget(args.config)
    try:
        left = parse(args.left)
        right = parse(args.right) if getattr(args, "right", None) else None
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    if args.action == "ext":
        if right is None:
            raise UsageError("oracle ext needs --right")
        return oracle_ext(left, right, args.p, args.maxdeg, args.n, args.q, budget).to_json()
    if left.degree(args.p) != args.d:
        raise UsageError(f"{left} has degree {left.degree(args.p)}, not --d {args.d}")
    return oracle_table(left, args.family, args.p, args.maxdeg, args.n, budget).to_json()


def cmd_crosscheck(args) -> Any:
    from .schur_oracle import ParseError, crosscheck, parse

    try:
        left = parse(args.left)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    return crosscheck(left, args.family, args.p, args.r, args.maxdeg, load_budget(args.config)).to_json()


def cmd_selftest(args) -> Any:
    from .acceptance import run_all

    results = run_all(quick=args.quick, seed=args.seed, budget=load_budget(args.config))
    for res in results:
        print(res.line(), file=sys.stderr)
    if not all(r.ok for r in results):
        args._exit = 1
    return {"passed": sum(r.ok for r in results), "total": len(results), "results": [r.to_json() for r in results]}


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def shared(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the global flags without overriding values given before them
        opts = argparse.ArgumentParser(add_help=False)
        default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        opts.add_argument("--seed", type=int, default=default(0), help="seed for randomized checks")
        opts.add_argument("--config", default=default(None), help="JSON file with a \"budget\" object")
        opts.add_argument("--format", choices=("json", "table"), default=default("json"))
        return opts

    common = shared(True)
    parser = argparse.ArgumentParser(prog="twistcalc", description=__doc__.splitlines()[0], parents=[shared(False)])
    parser.add_argument("--version", action="version", version=f"twistcalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(handler=handler)
        return sp

    sp = add("er", cmd_er, "graded dimensions of E_r")
    sp.add_argument("--p", type=_prime, required=True)
    sp.add_argument("--r", type=_nonneg, required=True)

    sp = add("tensor", cmd_tensor, "graded tensor product")
    sp.add_argument("--a", required=True, help="GradedDims JSON, inline or @file")
    sp.add_argument("--b", required=True)

    sp = add("stretch", cmd_stretch, "multiply degrees by p")
    sp.add_argument("--a", required=True)
    sp.add_argument("--p", type=_prime, required=True)

    sp = add("sym-hilbert", cmd_sym_hilbert, "bigraded Hilbert series of a symmetric algebra")
    sp.add_argument("--dim", type=_positive, required=True, help="generators per shift degree")
    sp.add_argument("--shifts", type=_int_list, required=True, help="comma-separated even degrees")
    sp.add_argument("--coh", type=int, required=True, help="cohomological truncation")
    sp.add_argument("--poly", type=int, required=True, help="polynomial truncation")

    sp = add("decompose", cmd_decompose, "parametrized decomposition")
    sp.add_argument("--d", type=_nonneg, required=True)
    sp.add_argument("--param", required=True, help="GradedDims JSON")
    sp.add_argument("--bifunctor", action="store_true")
    sp.add_argument("--p", type=_prime)
    form = sp.add_mutually_exclusive_group()
    form.add_argument("--source", action="store_true")
    form.add_argument("--target", action="store_true")

    sp = add("untwist", cmd_untwist, "Ext of a twisted pair from its untwisted table")
    sp.add_argument("--table", required=True, help="ExtTable JSON, inline or @file")
    sp.add_argument("--p", type=_prime)
    sp.add_argument("--r", type=_nonneg)
    sp.add_argument("--param", help="GradedDims JSON of a general parameter space")
    sp.add_argument("--sparse", action="store_true", help="treat missing entries as zero")
    sp.add_argument("--method", choices=("grouped", "direct"), default="grouped")

    sp = add("fit", cmd_fit, "dimension polynomial in q = p^r")
    sp.add_argument("--table", required=True)
    sp.add_argument("--p", type=_prime, required=True)
    sp.add_argument("--rmax", type=_nonneg, required=True)
    sp.add_argument("--sparse", action="store_true")
    sp.add_argument("--degree-bound", type=_nonneg, dest="degree_bound")

    sp = add("classes", cmd_classes, "universal class symbol laws")
    csub = sp.add_subparsers(dest="action", required=True, metavar="ACTION")
    cp = csub.add_parser("check", parents=[common])
    cp.add_argument("--d", type=_nonneg, required=True)
    cp.add_argument("--l", type=_positive, required=True)
    cp.add_argument("--p", type=_prime, required=True)
    cp.add_argument("--degs", type=_int_list, help="basis degrees of the parameter space")

    sp = add("steinberg", cmd_steinberg, "twist orbits and q-shifts of Steinberg words")
    ssub = sp.add_subparsers(dest="action", required=True, metavar="ACTION")
    for action in ("orbit", "qshifts", "goodshift"):
        ap = ssub.add_parser(action, parents=[common])
        ap.add_argument("--u", type=_positive, required=True)
        ap.add_argument("--word", required=True, help='comma-joined labels, "1" is trivial')
        if action == "goodshift":
            ap.add_argument("--head", type=_nonneg)
            ap.add_argument("--tail", type=_nonneg)

    sp = add("oracle", cmd_oracle, "brute-force Ext over Schur algebras")
    osub = sp.add_subparsers(dest="action", required=True, metavar="ACTION")
    ep = osub.add_parser("ext", parents=[common])
    ep.add_argument("--p", type=_prime, required=True)
    ep.add_argument("--n", type=_positive)
    ep.add_argument("--q", type=_positive, help="field size, a power of p")
    ep.add_argument("--left", required=True)
    ep.add_argument("--right", required=True)
    ep.add_argument("--maxdeg", type=_nonneg, required=True)
    tp = osub.add_parser("table", parents=[common])
    tp.add_argument("--d", type=_positive, required=True)
    tp.add_argument("--p", type=_prime, required=True)
    tp.add_argument("--n", type=_positive)
    tp.add_argument("--left", required=True)
    tp.add_argument("--family", choices=("Id", "Sym", "Div", "Ext"), required=True)
    tp.add_argument("--maxdeg", type=_nonneg, required=True)

    sp = add("crosscheck", cmd_crosscheck, "engine against oracle on a twisted pair")
    sp.add_argument("--left", required=True)
    sp.add_argument("--family", choices=("Id", "Sym", "Div", "Ext"), required=True)
    sp.add_argument("--p", type=_prime, required=True)
    sp.add_argument("--r", type=_nonneg, required=True)
    sp.add_argument("--maxdeg", type=_nonneg, required=True)

    sp = add("selftest", cmd_selftest, "run the acceptance suite")
    sp.add_argument("--quick", action="store_true", help="skip the slowest cases")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args._exit = 0
    try:
        if getattr(args, "q", None) is not None:
            from .schur_oracle.gf import field

            field(args.q)
        result = args.handler(args)
    except UsageError as exc:
        print(f"twistcalc {args.command}: {exc}", file=sys.stderr)
        return 2
    except TwistcalcError as exc:
        print(f"twistcalc {args.command}: {exc.name}: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, ArithmeticError) as exc:
        print(f"twistcalc {args.command}: {exc}", file=sys.stderr)
        return 2
    out = _table_text(result) if args.format == "table" else canonical(result)
    print(out)
    return args._exit


if __name__ == "__main__":
    sys.exit(main())
