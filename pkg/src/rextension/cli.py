"""JSON-first command line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 formula/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from . import counting as ct
from .errors import RExtensionError, VerificationError
from .gf import PrimeField, as_poly, find_primitive, is_primitive, primitive_polys
from .hankel import count_fullrank_hankel, enumerate_fullrank_hankel
from .lfsr import feedback_blocks, transition_from_multiseq, verify_lfsr, LfsrSpec
from .multiseq import RVector, component_sequence, extension_dimension, minimal_poly_oracle
from .rroad import backward_traverse, road
from .synthesis import ChoiceScript, PolyLadder, random_choices, synthesize

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_MISMATCH = 0, 1, 2, 3
PERIOD_CHECK_LIMIT = 1 << 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _prime(text: str) -> int:
    q = int(text)
    try:
        PrimeField(q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return q


def _rvec(text: str) -> RVector:
    try:
        return RVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _load_json(path: str) -> Any:
    return json.loads(Path(path).read_text())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--output", "-o", help="write JSON here instead of stdout")

    parser = _Parser(prog="rextension", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("primpoly", parents=[common], help="least primitive polynomial of a degree")
    p.add_argument("--q", type=_prime, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--all", action="store_true", help="list every primitive polynomial of the degree")

    p = sub.add_parser("road", parents=[common], help="R-road and backward traversal")
    p.add_argument("--R", type=_rvec, required=True, help="comma list, e.g. 3,2,5,4,1")

    def add_count_kinds(parent: argparse.ArgumentParser, with_oracle_flag: bool) -> None:
        kinds = parent.add_subparsers(dest="kind", required=True, parser_class=_Parser)
        specs = {
            "multiseq": [("--m", _positive), ("--n", _positive), ("--l", _nonneg)],
            "extension": [("--n", _positive), ("--R", _rvec)],
            "extension-total": [("--m", _positive), ("--r", _positive), ("--n", _positive)],
            "lfsr": [("--m", _positive), ("--b", _positive)],
            "hankel": [("--n", _positive)],
        }
        for kind, flags in specs.items():
            k = kinds.add_parser(kind, parents=[common])
            k.add_argument("--q", type=_prime, required=True)
            for flag, typ in flags:
                k.add_argument(flag, type=typ, required=True)
            if kind in ("extension", "extension-total", "lfsr"):
                k.add_argument("--poly", help="primitive polynomial for the oracle (default: least primitive)")
            if with_oracle_flag:
                k.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
            k.add_argument("--jobs", type=_positive, default=1, help="worker processes for the oracle")

    add_count_kinds(sub.add_parser("count", help="evaluate a counting formula"), True)
    add_count_kinds(sub.add_parser("oracle", help="run a brute-force oracle only"), False)

    synth = sub.add_parser("synth", help="synthesize multisequences or LFSRs")
    skinds = synth.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for kind in ("multiseq", "lfsr"):
        k = skinds.add_parser(kind, parents=[common])
        k.add_argument("--q", type=_prime, required=True)
        if kind == "multiseq":
            k.add_argument("--R", type=_rvec, required=True)
            k.add_argument("--n", type=_positive, required=True)
        else:
            k.add_argument("--m", type=_positive, required=True)
            k.add_argument("--b", type=_positive, required=True)
            k.add_argument("--poly", help="characteristic polynomial (default: least primitive)")
            k.add_argument("--period", action="store_true", help="force the period walk")
        k.add_argument("--ladder", help="JSON file {degree: polynomial}")
        group = k.add_mutually_exclusive_group(required=True)
        group.add_argument("--choices", help="ChoiceScript JSON file")
        group.add_argument("--seed", type=int, help="seed for random choices")

    verify = sub.add_parser("verify", help="verify an LFSR specification")
    vkinds = verify.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    k = vkinds.add_parser("lfsr", parents=[common])
    k.add_argument("--spec", required=True, help="LfsrSpec JSON file")
    k.add_argument("--poly", required=True)
    k.add_argument("--period", action="store_true", help="also measure the period")
    return parser


# -- commands -------------------------------------------------------------------


def _poly_json(p) -> dict[str, Any]:
    return {"text": str(p), "coeffs": list(p.coeffs)}


def cmd_primpoly(args) -> tuple[dict[str, Any], int]:
    out: dict[str, Any] = {"q": args.q, "n": args.n, "poly": _poly_json(find_primitive(args.q, args.n))}
    if args.all:
        out["all"] = [_poly_json(p) for p in primitive_polys(args.q, args.n)]
    return out, EXIT_OK


def cmd_road(args) -> tuple[dict[str, Any], int]:
    return {
        "R": list(args.R),
        "road": [list(G) for G in road(args.R)],
        "backward": [{"G": list(G), "active": c} for G, c in backward_traverse(args.R)],
    }, EXIT_OK


def _oracle_poly(args, n: int):
    text = getattr(args, "poly", None)
    return ct.default_poly(args.q, n, as_poly(text, args.q) if text else None)


def _count_values(args, run_formula: bool, run_oracle: bool) -> tuple[dict[str, Any], int | None, int | None]:
    q, kind, jobs = args.q, args.kind, args.jobs
    formula = oracle = None
    if kind == "multiseq":
        params = {"q": q, "m": args.m, "n": args.n, "l": args.l}
        if run_formula:
            formula = ct.count_by_dimension(args.l, args.m, args.n, q)
        if run_oracle:
            oracle = ct.oracle_by_dimension(args.l, args.m, args.n, q, jobs=jobs)
    elif kind == "extension":
        params = {"q": q, "n": args.n, "R": list(args.R)}
        if run_formula:
            formula = ct.count_max_extension(args.R, args.n, q)
        if run_oracle:
            p = _oracle_poly(args, args.n)
            params["poly"] = str(p)
            oracle = ct.oracle_max_extension(args.R, p, jobs=jobs)
    elif kind == "extension-total":
        params = {"q": q, "m": args.m, "r": args.r, "n": args.n}
        if run_formula:
            formula = ct.count_Nr(args.m, args.r, args.n, q)
        if run_oracle:
            p = _oracle_poly(args, args.n)
            params["poly"] = str(p)
            oracle = ct.oracle_Nr(args.m, args.r, p, jobs=jobs)
    elif kind == "lfsr":
        params = {"q": q, "m": args.m, "b": args.b}
        if run_formula:
            formula = ct.count_lfsr(args.m, args.b, q)
        if run_oracle:
            p = _oracle_poly(args, args.m * args.b)
            params["poly"] = str(p)
            oracle = ct.oracle_lfsr(args.m, args.b, p, jobs=jobs)
    else:
        params = {"q": q, "n": args.n}
        if run_formula:
            formula = count_fullrank_hankel(q, args.n)
        if run_oracle:
            oracle = enumerate_fullrank_hankel(q, args.n, jobs=jobs)
    return params, formula, oracle


def cmd_count(args) -> tuple[dict[str, Any], int]:
    params, formula, oracle = _count_values(args, True, args.oracle)
    report = ct.CountReport(formula, oracle, params)
    return report.to_json(), EXIT_MISMATCH if report.match is False else EXIT_OK


def cmd_oracle(args) -> tuple[dict[str, Any], int]:
    params, _, oracle = _count_values(args, False, True)
    return {"oracle": oracle, "parameters": params}, EXIT_OK


def _ladder(args, lo: int, hi: int, overrides=None) -> PolyLadder:
    if args.ladder:
        ladder = PolyLadder.from_json(_load_json(args.ladder), args.q)
        polys = {d: ladder.polys[d] for d in ladder.polys}
        for d in range(lo, hi + 1):
            polys.setdefault(d, find_primitive(args.q, d))
        polys.update(overrides or {})
        return PolyLadder(args.q, polys)
    return PolyLadder.default(args.q, lo, hi, overrides)


def _choices(args, R: RVector, n: int) -> ChoiceScript:
    if args.choices:
        return ChoiceScript.from_json(_load_json(args.choices), args.q)
    return random_choices(args.q, R, n, args.seed)


def _synth_common(args, R: RVector, n: int, overrides=None):
    if n < R.r:
        raise UsageError(f"n={n} must be at least r={R.r}")
    lo = n - R.r + R.m
    ladder = _ladder(args, lo, n, overrides)
    choices = _choices(args, R, n)
    s = synthesize(args.q, R, n, ladder, choices, verify=True)
    dim = extension_dimension(s, R)
    comp_ok = all(
        minimal_poly_oracle(component_sequence(s, i, 2 * n), args.q) == s.minpoly
        for i in range(s.m)
        if any(s.state.row(i))
    )
    verification = {
        "extension_dimension": dim,
        "r": R.r,
        "minpoly_primitive": is_primitive(s.minpoly),
        "component_minpolys_match": comp_ok,
        "ok": dim == R.r and comp_ok and is_primitive(s.minpoly),
    }
    payload = {
        "inputs": {"q": args.q, "R": list(R), "n": n},
        "ladder": {str(d): _poly_json(ladder[d]) for d in range(lo, n + 1)},
        "seed": args.seed,
        "choices": choices.to_json(),
        "multiseq": s.to_json(),
        "verification": verification,
    }
    return s, payload


def cmd_synth(args) -> tuple[dict[str, Any], int]:
    if args.kind == "multiseq":
        _, payload = _synth_common(args, args.R, args.n)
        return payload, EXIT_OK if payload["verification"]["ok"] else EXIT_VERIFY
    m, b, n = args.m, args.b, args.m * args.b
    overrides = None
    if args.poly:
        p = as_poly(args.poly, args.q)
        if p.degree != n or not is_primitive(p):
            raise UsageError(f"--poly must be primitive of degree m*b = {n}")
        overrides = {n: p}
    s, payload = _synth_common(args, RVector([b] * m), n, overrides)
    mc = transition_from_multiseq(s)
    spec = feedback_blocks(mc)
    check_period = args.period or args.q**n - 1 <= PERIOD_CHECK_LIMIT
    report = verify_lfsr(spec, s.minpoly, check_period=check_period)
    payload["inputs"].update({"m": m, "b": b})
    payload["lfsr"] = spec.to_json()
    payload["transition"] = mc.mat.to_json()
    payload["verification"]["lfsr"] = report.to_json()
    payload["verification"]["ok"] = payload["verification"]["ok"] and report.ok
    return payload, EXIT_OK if payload["verification"]["ok"] else EXIT_VERIFY


def cmd_verify(args) -> tuple[dict[str, Any], int]:
    spec = LfsrSpec.from_json(_load_json(args.spec))
    p = as_poly(args.poly, spec.q)
    report = verify_lfsr(spec, p, check_period=args.period)
    return {"spec": spec.to_json(), "poly": _poly_json(p), "report": report.to_json()}, (
        EXIT_OK if report.ok else EXIT_VERIFY
    )


COMMANDS = {
    "primpoly": cmd_primpoly,
    "road": cmd_road,
    "count": cmd_count,
    "oracle": cmd_oracle,
    "synth": cmd_synth,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = COMMANDS[args.command](args)
    except VerificationError as exc:
        print(f"rextension: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, RExtensionError, ValueError, OSError, KeyError) as exc:
        print(f"rextension: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {"version": __version__, "command": " ".join(filter(None, [args.command, getattr(args, "kind", None)])), **payload}
    text = json.dumps(payload, indent=2 if args.pretty else None, sort_keys=False)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())
