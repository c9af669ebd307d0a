"""Command-line entry point.

Coalitions and witnesses use 1-based codeword numbers on the command line and
in all printed output.  Exit codes: 0 success/pass, 1 property failure or
contract violation, 2 usage error or uncovered alphabet, 3 enumeration cap
exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import code as code_mod
from .code import Code, CodeError, desc, parse, parse_pattern, serialize
from .construct import (
    ConstructionSpec, Family, UncoveredAlphabetError, build_cdm_d1, build_from_spec,
    check_condisesc_screen, check_equi8_screen, check_infinity_conditions,
    check_mod6_conditions, check_spec_screen, compose_to_binary, select_parameters,
)
from .trace import (
    TraceError, attack_transcript, simulate_attack, trace_mippc, trace_qary, trace_report,
    trace_ssc,
)
from .verify import (
    DEFAULT_CAP, EnumerationCapExceeded, check_pairwise_shortened, has_forbidden_type_iv,
    is_mippc, is_separable, is_smippc, max_code_size_bound, render_report,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _read_code(path: str) -> Code:
    return parse(Path(path).read_text(encoding="utf-8"))


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _index_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        spec = select_parameters(args.q)
    except UncoveredAlphabetError:
        print(f"error: q={args.q}: q ≡ 3,4 (mod 6) not covered by any known construction", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = build_from_spec(spec)
    bound = max_code_size_bound(args.q)
    # q = 2 is optimal by exhaustion; the bound 5 is not attained
    optimal = code.M == bound or spec.family is Family.BINARY_Q2
    text = serialize(code, comments=[str(spec)])
    if args.out:
        _write(args.out, text)
    print(f"M={code.M} bound={bound} optimal={'yes' if optimal else 'no'}")
    return EXIT_OK


_PROPERTIES = {
    "sc": lambda c, t, cap: is_separable(c, t, cap),
    "mippc": lambda c, t, cap: is_mippc(c, t, cap),
    "smippc": lambda c, t, cap: is_smippc(c, t, cap),
    "type4": lambda c, t, cap: has_forbidden_type_iv(c),
    "pairwise": lambda c, t, cap: check_pairwise_shortened(c),
}


def cmd_verify(args: argparse.Namespace) -> int:
    code = _read_code(args.input)
    try:
        verdict = _PROPERTIES[args.property](code, args.t, args.cap)
    except EnumerationCapExceeded as exc:
        print(f"{args.property.upper()} t={args.t} RESULT=cap WITNESS=-")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.report:
        print(render_report(code, verdict))
    print(verdict.summary())
    return EXIT_OK if verdict.holds else EXIT_FAIL


def _run_tracer(code: Code, r: code_mod.Pattern, t: int, alg: str, cap: int):
    if alg == "ssc":
        return trace_ssc(code, r, t)
    if alg == "mippc":
        return trace_mippc(code, r, t, cap)
    return trace_qary(code, r, cap)


def cmd_attack(args: argparse.Namespace) -> int:
    code = _read_code(args.input)
    if args.alg == "ssc" and code.q != 2:
        print("error: alg=ssc needs a binary code; compose it first", file=sys.stderr)
        return EXIT_USAGE
    coalition = [k - 1 for k in args.coalition]
    if any(not 0 <= k < code.M for k in coalition):
        print(f"error: coalition indices must lie in 1..{code.M}", file=sys.stderr)
        return EXIT_USAGE
    if code.q == 2:
        stats, r = simulate_attack(code, coalition)
    else:
        stats, r = None, desc(code, coalition)
    print(attack_transcript(coalition, stats, r))
    try:
        result = _run_tracer(code, r, args.t, args.alg, args.cap)
    except (TraceError, EnumerationCapExceeded) as exc:
        print(trace_report(args.alg, args.t, None, error=True))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(trace_report(args.alg, args.t, result))
    members = result if isinstance(result, tuple) else result.members
    if isinstance(result, tuple) or not result.overflow:
        if members and set(members) <= set(coalition):
            return EXIT_OK
    return EXIT_FAIL


def cmd_trace(args: argparse.Namespace) -> int:
    code = _read_code(args.input)
    if args.alg == "ssc" and code.q != 2:
        print("error: alg=ssc needs a binary code; compose it first", file=sys.stderr)
        return EXIT_USAGE
    r = parse_pattern(Path(args.pattern).read_text(encoding="utf-8"), code.q)
    try:
        result = _run_tracer(code, r, args.t, args.alg, args.cap)
    except (TraceError, EnumerationCapExceeded) as exc:
        print(trace_report(args.alg, args.t, None, error=True))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(trace_report(args.alg, args.t, result))
    return EXIT_OK


def cmd_compose(args: argparse.Namespace) -> int:
    code = _read_code(args.input)
    out = compose_to_binary(code)
    _write(args.out, serialize(out, comments=[f"binary composition of a ({code.n},{code.M},{code.q}) code"]))
    print(f"n={out.n} M={out.M} q=2")
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    try:
        print(max_code_size_bound(args.q))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_screen(args: argparse.Namespace) -> int:
    q = args.q
    try:
        if args.A1 is None:
            spec = select_parameters(q)
            result = check_spec_screen(spec)
            print(spec)
        elif q % 6 in (1, 5):
            result = check_mod6_conditions(q, args.A1)
            print(ConstructionSpec(q, Family.MOD6_15, tuple(args.A1)))
            if result:
                cdm = build_cdm_d1(q)
                print(f"separable-screen={'pass' if check_equi8_screen(cdm, args.A1, q) else 'fail'} "
                      f"type4-screen={'pass' if check_condisesc_screen(cdm, args.A1, q) else 'fail'}")
        else:
            if args.m is None:
                print("error: --m is required for q ≡ 0,2 (mod 6)", file=sys.stderr)
                return EXIT_USAGE
            result = check_infinity_conditions(q - 1, args.A1, args.m)
            print(ConstructionSpec(q, Family.INF_MOD6_0 if q % 6 == 0 else Family.INF_MOD6_2,
                                   tuple(args.A1), args.m % (q - 1)))
    except (UncoveredAlphabetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"SCREEN RESULT={'pass' if result else 'fail'} REASON={result.reason}")
    return EXIT_OK if result else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smippc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an optimal 2-SMIPPC(3, M, q)")
    c.add_argument("--q", type=int, required=True, help="alphabet size, q ≡ 0,1,2,5 (mod 6)")
    c.add_argument("--out", help="write the code file here")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="brute-force a code property")
    v.add_argument("--in", dest="input", required=True, help="code file")
    v.add_argument("--property", choices=sorted(_PROPERTIES), required=True)
    v.add_argument("--t", type=int, default=2, help="coalition bound (default 2)")
    v.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"max |R ∩ C| before giving up (default {DEFAULT_CAP})")
    v.add_argument("--report", action="store_true", help="print a text report before the verdict line")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("attack", help="simulate an averaging attack and trace the colluders")
    a.add_argument("--in", dest="input", required=True, help="code file")
    a.add_argument("--coalition", type=_index_list, required=True, help="1-based indices, e.g. 1,2")
    a.add_argument("--t", type=int, default=2, help="coalition bound (default 2)")
    a.add_argument("--alg", choices=("ssc", "mippc", "qary"), default="ssc")
    a.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap for brute-force tracers")
    a.set_defaults(func=cmd_attack)

    tr = sub.add_parser("trace", help="trace colluders from an observed pattern file")
    tr.add_argument("--in", dest="input", required=True, help="code file")
    tr.add_argument("--pattern", required=True, help="pattern file: one comma list (or *) per position")
    tr.add_argument("--t", type=int, default=2, help="coalition bound (default 2)")
    tr.add_argument("--alg", choices=("ssc", "mippc", "qary"), default="ssc")
    tr.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap for brute-force tracers")
    tr.set_defaults(func=cmd_trace)

    co = sub.add_parser("compose", help="map a q-ary code to a binary code of length nq")
    co.add_argument("--in", dest="input", required=True, help="q-ary code file")
    co.add_argument("--out", required=True, help="binary code file")
    co.set_defaults(func=cmd_compose)

    b = sub.add_parser("bound", help="print the size bound q² + q(q-1)/2")
    b.add_argument("--q", type=int, required=True)
    b.set_defaults(func=cmd_bound)

    s = sub.add_parser("screen", help="run the sufficient-condition screens")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--A1", type=_index_list, help="explicit A1 (default: the dispatch table's)")
    s.add_argument("--m", type=int, help="infinity-column offset for q ≡ 0,2 (mod 6)")
    s.set_defaults(func=cmd_screen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, CodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
