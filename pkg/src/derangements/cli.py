"""Command-line entry point.

Every command prints one JSON document on stdout (sorted keys, so reruns are
byte-identical).  Exit codes: 0 success, 1 a verification row failed,
2 malformed input, 3 a resource cap was hit.
"""
from __future__ import annotations

import argparse
import json
import os
import platform
import sys
import time

from . import __version__, atlas, registry
from .affine import AffineError, AffinePair, analyze_affine, affine_corpus
from .analysis import analyze
from .gf import FieldError
from .numtheory import (
    TABLE2_EXPECTED, divisor_case, factorize, gcd_qpow, nagell_check, ppd, solve_prime_power_eq,
    table2_check, table2_sweep, table2_value,
)
from .perm import (
    DEFAULT_MAX_INDEX, DEFAULT_MAX_ORDER, CapExceeded, GroupError, PermGroup, coset_action,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


# -- commands ------------------------------------------------------------------

def cmd_analyze(args) -> int:
    g = PermGroup.from_json(_load_json(args.group))
    if args.subgroup:
        h = PermGroup.from_json(_load_json(args.subgroup))
        if h.degree != g.degree:
            raise GroupError(f"field 'degree': subgroup acts on {h.degree} points, group on {g.degree}")
        g = coset_action(g, h.generators).induced
    _emit(analyze(g).to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    scopes = ["table1", "table4", "affine", "nt"] if args.scope == "all" else [args.scope]
    rows = []
    for scope in scopes:
        rows.extend(registry.run_scope(scope, include_large=args.include_large, jobs=args.jobs))
    rows.sort(key=lambda r: r.row_id)
    counts = registry.summary(rows)
    _emit({"scope": args.scope, "rows": [r.to_json() for r in rows], "summary": counts})
    print(f"{counts['pass']}/{counts['fail']}/{counts['skipped']} passed/failed/skipped",
          file=sys.stderr)
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def cmd_atlas(args) -> int:
    if args.list:
        _emit([e.to_json() for e in atlas.catalog()])
        return EXIT_OK
    if not args.family or not args.action:
        raise InputError("atlas needs --family and --action (or --list)")
    try:
        g = atlas.build_action(args.family, args.q, args.action)
    except KeyError as exc:
        raise InputError(f"unknown action: {exc}") from None
    _emit(g.to_json())
    return EXIT_OK


def cmd_nt(args) -> int:
    sub = args.nt_command
    if sub == "ppd":
        _emit(ppd(args.q, args.e).to_json())
    elif sub == "table2":
        if args.sweep is not None:
            got = table2_sweep(args.sweep)
            _emit({"max_q": args.sweep,
                   "exceptions": {k: [list(t) for t in v] for k, v in got.items()},
                   "matches_reference": got == TABLE2_EXPECTED if args.sweep == 50 else None})
        else:
            if args.row is None or args.q is None:
                raise InputError("nt table2 needs --sweep N, or --row, --eps and --q")
            _emit({"row": args.row, "eps": args.eps, "q": args.q,
                   "value": table2_value(args.row, args.eps, args.q),
                   "prime_power": table2_check(args.row, args.eps, args.q)})
    elif sub == "nagell":
        _emit(nagell_check(args.q).to_json())
    elif sub == "prime-power-eq":
        _emit([s.to_json() for s in solve_prime_power_eq(args.bound_base, args.bound_exp)])
    elif sub == "gcd":
        _emit({"q": args.q, "n": args.n, "m": args.m,
               "gcd": gcd_qpow(args.q, args.n, args.m, args.sign_n, args.sign_m)})
    elif sub == "divisor-case":
        _emit(divisor_case(args.q, args.a, args.eps, args.b, args.delta).to_json())
    elif sub == "factor":
        _emit(factorize(args.n).to_json())
    return EXIT_OK


def cmd_affine(args) -> int:
    if args.builtin:
        named = {p.name: p for p in affine_corpus()}
        if args.builtin not in named:
            raise InputError(f"unknown builtin {args.builtin!r}; choose from {sorted(named)}")
        pair = named[args.builtin]
    elif args.file:
        pair = AffinePair.from_json(_load_json(args.file))
    else:
        raise InputError("affine needs a matrix-group FILE or --builtin NAME")
    _emit(analyze_affine(pair).to_json())
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def _sign(text):
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError("sign must be + or -")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="derangements", allow_abbrev=False,
                                description="Derangement orders in finite permutation groups and the prime-power star property.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--max-order", type=int, default=None,
                   help=f"largest group order to enumerate (default {DEFAULT_MAX_ORDER}, "
                        "env DERANGEMENTS_MAX_ORDER)")
    p.add_argument("--max-degree", type=int, default=None,
                   help=f"largest coset-action degree (default {DEFAULT_MAX_INDEX}, "
                        "env DERANGEMENTS_MAX_DEGREE)")
    p.add_argument("--meta", action="store_true", help="print runtime info on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="derangement report for a permutation group file")
    a.add_argument("group")
    a.add_argument("--subgroup", help="analyze the action on the cosets of this subgroup")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="regression sweep over the classification tables")
    v.add_argument("scope", choices=["table1", "table4", "affine", "nt", "all"])
    v.add_argument("--include-large", action="store_true",
                   help="also build the instances of order above 10^6")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for table rows")
    v.set_defaults(func=cmd_verify)

    at = sub.add_parser("atlas", help="emit a named permutation action as group JSON")
    at.add_argument("--family", help="L2, PGL2, GammaL2, L3 or M11")
    at.add_argument("--q", type=int)
    at.add_argument("--action", help="P1, P2, D_split, D_nonsplit, S4, L2(11)")
    at.add_argument("--list", action="store_true", help="print the catalog instead")
    at.set_defaults(func=cmd_atlas)

    n = sub.add_parser("nt", help="number-theory checks")
    nsub = n.add_subparsers(dest="nt_command", required=True)
    x = nsub.add_parser("ppd", help="primitive prime divisors of q^e - 1")
    x.add_argument("--q", type=int, required=True)
    x.add_argument("--e", type=int, required=True)
    x = nsub.add_parser("table2", help="which of the seven cyclotomic-type expressions N(q) are prime powers")
    x.add_argument("--sweep", type=int, help="list exceptions for prime powers q <= N")
    x.add_argument("--row")
    x.add_argument("--eps", type=_sign, default=1)
    x.add_argument("--q", type=int)
    x = nsub.add_parser("nagell", help="solve q^2+q+1 = (3,q-1) r^e")
    x.add_argument("--q", type=int, required=True)
    x = nsub.add_parser("prime-power-eq", help="solutions of r^m + 1 = s^n")
    x.add_argument("--bound-base", type=int, default=99)
    x.add_argument("--bound-exp", type=int, default=20)
    x = nsub.add_parser("gcd", help="gcd(q^n +- 1, q^m +- 1) by formula")
    x.add_argument("--q", type=int, required=True)
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--m", type=int, required=True)
    x.add_argument("--sign-n", type=_sign, default=-1)
    x.add_argument("--sign-m", type=_sign, default=-1)
    x = nsub.add_parser("divisor-case", help="odd prime divisors of q^a - eps outside q^b - delta")
    x.add_argument("--q", type=int, required=True)
    x.add_argument("--a", type=int, required=True)
    x.add_argument("--eps", type=_sign, default=1)
    x.add_argument("--b", type=int, required=True)
    x.add_argument("--delta", type=_sign, default=1)
    x = nsub.add_parser("factor", help="prime factorization")
    x.add_argument("--n", type=int, required=True)
    n.set_defaults(func=cmd_nt)

    af = sub.add_parser("affine", help="report for an affine group V:H from a matrix-group file")
    af.add_argument("file", nargs="?")
    af.add_argument("--builtin", help="name of a corpus pair, e.g. ASL2(3)")
    af.set_defaults(func=cmd_affine)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_order is not None:
        os.environ["DERANGEMENTS_MAX_ORDER"] = str(args.max_order)
    if args.max_degree is not None:
        os.environ["DERANGEMENTS_MAX_DEGREE"] = str(args.max_degree)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_CAP
    except (GroupError, AffineError, FieldError, InputError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    if args.meta:
        meta = {"seconds": round(time.perf_counter() - start, 3), "python": platform.python_version(),
                "version": __version__, "exit": code}
        print(json.dumps(meta, sort_keys=True), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
