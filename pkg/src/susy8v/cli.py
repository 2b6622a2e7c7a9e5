"""Command-line entry point ``susy8v``."""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import mpmath

from . import errors
from .exact import MPolyX, RatZeta

EXIT_OK, EXIT_USAGE, EXIT_CONTRACT, EXIT_SIZE = 0, 2, 3, 4

NUM_SUITES = ("span", "schrodinger", "tep", "trt", "qd", "tz")
NUM_LIMITS = {"tz": 45, "span": 30, "schrodinger": 15, "tep": 20, "trt": 20, "qd": 20}


class ContractFailed(Exception):
    """Raised by a subcommand whose checks ran but did not all hold."""

    def __init__(self, payload):
        super().__init__("contract violated")
        self.payload = payload


# rendering


def _render_value(value) -> dict:
    if isinstance(value, RatZeta):
        num, den = value.coeff_lists()
        return {"text": str(value), "num": [str(c) for c in num], "den": [str(c) for c in den]}
    if isinstance(value, Fraction):
        return {"text": str(value)}
    return {"text": str(value)}


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=1, sort_keys=True) if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out)


# compute


def cmd_compute(args) -> int:
    from .tsystem import KIndex, Tnk, Yseq, family_eval

    if args.what == "t":
        _need(args, "k")
        value = Tnk(KIndex.for_t(args.k)).value
        payload = {"object": "t", "k": args.k, **_render_value(value)}
    elif args.what == "T":
        _need(args, "k", "n")
        value = Tnk((tuple(args.k), args.n)).value
        payload = {"object": "T", "k": args.k, "n": args.n, "m": 2 * args.n - sum(args.k), **_render_value(value)}
    elif args.what == "Y":
        if args.k is None or len(args.k) != 1:
            raise errors.InvalidIndex("compute Y needs exactly one -k value")
        value = Yseq(args.k[0])
        payload = {"object": "Y", "k": args.k[0], **_render_value(value)}
    else:
        _need(args, "n")
        if not args.name:
            raise errors.InvalidIndex("compute family needs a family name")
        value = family_eval(args.name, args.n)
        if not isinstance(value, (RatZeta, MPolyX, Fraction)):
            value = RatZeta(value)
        payload = {"object": "family", "family": args.name, "n": args.n, **_render_value(value)}
    _emit(args, payload, payload["text"])
    return EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise errors.InvalidIndex(f"missing -{missing[0]}")
    if "k" in names and len(args.k) != 4:
        raise errors.InvalidIndex("-k needs four integers")


# lattice


def cmd_lattice(args) -> int:
    from .lattice import build, load, persist, to_json
    from .tsystem import tk

    if args.action == "build":
        store = build(args.box)
        counts = Counter(p.split(":")[0] for _, p in store.entries.values())
        if args.out:
            persist(store, args.out)
            payload = {"box": [list(b) for b in store.box], "cells": len(store), "provenance": dict(sorted(counts.items())), "file": args.out}
            text = f"{len(store)} cells written to {args.out}"
            args.out = None
            _emit(args, payload, text)
        else:
            print(json.dumps(to_json(store), indent=1))
        return EXIT_OK
    if not args.infile:
        raise errors.InvalidIndex("lattice verify needs --in FILE")
    store = load(args.infile)
    mismatched, skipped = [], []
    for k in sorted(store.entries):
        try:
            if tk(k) != store.get(k):
                mismatched.append(list(k))
        except errors.SizeBound:
            skipped.append(list(k))
    payload = {"file": args.infile, "cells": len(store), "mismatched": mismatched, "skipped": skipped, "pass": not mismatched}
    text = f"{len(store) - len(mismatched) - len(skipped)}/{len(store)} entries match determinants, {len(skipped)} beyond the size bound, {len(mismatched)} mismatched"
    _emit(args, payload, text)
    if mismatched:
        raise ContractFailed(payload)
    return EXIT_OK


# pvi


def cmd_pvi(args) -> int:
    from .painleve import evi_residual, factor_match_tqf, lattice_params, lattice_state, pvi_residual
    from .lattice import load

    l = tuple(args.l)
    if len(l) != 4:
        raise errors.InvalidIndex("-l needs four integers")
    state = lattice_state(l)
    if args.action == "q":
        payload = {"l": list(l), "params": [str(v) for v in lattice_params(l)], **_render_value(state.q)}
        _emit(args, payload, payload["text"])
        return EXIT_OK
    if args.action == "verify-evi":
        py = pvi_residual(state.q, lattice_params(l)).is_zero()
        evi = evi_residual(state).is_zero()
        payload = {"l": list(l), "pvi_zero": py, "evi_zero": evi, "pass": py and evi}
        _emit(args, payload, f"pvi residual {'0' if py else 'nonzero'}, evi residual {'0' if evi else 'nonzero'}")
        if not payload["pass"]:
            raise ContractFailed(payload)
        return EXIT_OK
    store = load(args.lattice) if args.lattice else None
    ok = factor_match_tqf(l, store)
    payload = {"l": list(l), "source": "lattice" if store else "determinant", "pass": ok}
    _emit(args, payload, "factors match" if ok else "factors do not match")
    if not ok:
        raise ContractFailed(payload)
    return EXIT_OK


# numerics


def num_residual(suite: str, tau, digits: int, seed: int = 0) -> mpmath.mpf:
    from .modnum import ModularPoint, schrodinger_check, span_check, tep_check, trt_qd_check, tz_residual
    from itertools import product

    if suite == "tz":
        return tz_residual(ModularPoint(tau, digits))
    if suite == "span":
        return max(span_check(n, tau, digits=digits, seed=seed)["deviation"] for n in (1, 2))
    if suite == "schrodinger":
        cases = ((1, (0, 1, 1, -1)), (1, (0, 0, 0, 0)))
        return max(schrodinger_check(n, k, tau, digits=digits, seed=seed)["deviation"] for n, k in cases)
    if suite == "tep":
        return tep_check(tau, digits)["residual"]
    key = "trt" if suite == "trt" else "qd"
    return max(trt_qd_check(l, tau, digits=digits)[key] for l in product(range(-1, 2), repeat=4))


def cmd_num(args) -> int:
    tau = mpmath.mpc(args.tau[0], args.tau[1])
    residual = num_residual(args.suite, tau, args.digits, args.seed)
    ok = bool(residual < mpmath.mpf(10) ** -NUM_LIMITS[args.suite])
    payload = {"suite": args.suite, "tau": args.tau, "digits": args.digits, "residual": mpmath.nstr(residual, 5), "pass": ok}
    _emit(args, payload, f"{args.suite}: residual {payload['residual']} ({'pass' if ok else 'FAIL'})")
    if not ok:
        raise ContractFailed(payload)
    return EXIT_OK


# verify-all


def cmd_verify_all(args) -> int:
    from .acceptance import STANDARD_TAUS, run_all

    taus = (mpmath.mpc(args.tau[0], args.tau[1]),) if args.tau else STANDARD_TAUS
    results = run_all(radius=args.box, digits=args.digits, seed=args.seed, taus=taus, jobs=args.jobs)
    payload = {"box": args.box, "digits": args.digits, "checks": [r.as_json() for r in results], "pass": all(r.passed for r in results)}
    _emit(args, payload, "\n".join(r.line() for r in results))
    if not payload["pass"]:
        raise ContractFailed(payload)
    return EXIT_OK


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="susy8v", description="Exact T-system, Painleve VI tau functions and modular numerics.")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common], help="print an exact object")
    compute.add_argument("what", choices=("t", "T", "Y", "family"))
    compute.add_argument("name", nargs="?", help="family name for 'compute family'")
    compute.add_argument("-k", type=int, nargs="+")
    compute.add_argument("-n", type=int)
    compute.set_defaults(func=cmd_compute)

    lattice = sub.add_parser("lattice", parents=[common], help="build or verify a lattice file")
    lattice.add_argument("action", choices=("build", "verify"))
    lattice.add_argument("--box", type=int, default=1)
    lattice.add_argument("--in", dest="infile", metavar="FILE")
    lattice.set_defaults(func=cmd_lattice)

    pvi = sub.add_parser("pvi", parents=[common], help="Painleve VI orbit of the Picard solution")
    pvi.add_argument("action", choices=("q", "verify-evi", "factor-match"))
    pvi.add_argument("-l", type=int, nargs=4, required=True)
    pvi.add_argument("--lattice", metavar="FILE")
    pvi.set_defaults(func=cmd_pvi)

    num = sub.add_parser("num", parents=[common], help="numeric verification suites")
    num.add_argument("action", choices=("verify",))
    num.add_argument("--suite", choices=NUM_SUITES, required=True)
    num.add_argument("--tau", nargs=2, default=["0", "1.1"], metavar=("RE", "IM"))
    num.add_argument("--digits", type=int, default=60)
    num.set_defaults(func=cmd_num)

    verify = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    verify.add_argument("--box", type=int, default=2)
    verify.add_argument("--digits", type=int, default=60)
    verify.add_argument("--tau", nargs=2, metavar=("RE", "IM"))
    verify.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ContractFailed:
        return EXIT_CONTRACT
    except errors.SizeBound as exc:
        print(f"size bound: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (errors.InvalidIndex, errors.FormatError, errors.DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except errors.Susy8vError as exc:
        print(f"contract violation: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
