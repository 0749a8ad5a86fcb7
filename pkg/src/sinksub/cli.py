"""Command-line front end.

Exit status: 0 on success, 1 when a verification or audit fails, 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import sys

from . import additive as add
from .explorer import duality_report, scan_additive, summarize
from .nimcore import SubtractionSet, grundy_sequence
from .period import HorizonExhausted, detect_period, format_word
from .render import render_family
from .verifier import AuditFailure, audit_tables, format_audit, verify_mex_consistency
from .words import parse_word


class UsageError(Exception):
    pass


def _game_options(p: argparse.ArgumentParser, convention=True) -> None:
    p.add_argument("--set", dest="moves", help="comma-separated moves, e.g. 2,5")
    p.add_argument("--m", type=int)
    p.add_argument("--delta", type=int)
    if convention:
        p.add_argument("--convention", choices=["sink", "wall"], default="sink")


def _moves(args) -> SubtractionSet:
    has_set = args.moves is not None
    has_md = args.m is not None or args.delta is not None
    if has_set and has_md:
        raise UsageError("--set and --m/--delta are mutually exclusive")
    if has_set:
        try:
            return SubtractionSet.parse(args.moves)
        except ValueError as e:
            raise UsageError(f"bad --set: {e}") from e
    return SubtractionSet(_params(args).moves)


def _params(args) -> add.AdditiveParams:
    if getattr(args, "moves", None) is not None:
        raise UsageError("this command takes --m and --delta, not --set")
    if args.m is None or args.delta is None:
        raise UsageError("need both --m and --delta (or --set)")
    if args.m < 1 or args.delta < 1:
        raise UsageError("--m and --delta must be positive")
    return add.reduce_params(args.m, args.delta)


def cmd_nimseq(args, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    seq = grundy_sequence(_moves(args), args.convention, args.count)
    print(" ".join(map(str, seq.tolist())), file=out)
    return 0


def cmd_period(args, out) -> int:
    info = detect_period(_moves(args), args.convention, args.horizon)
    print(f"preperiod={info.preperiod} period={info.period} word={info.word}", file=out)
    return 0


def cmd_additive(args, out) -> int:
    p = _params(args)
    period = add.period_formula(p)
    fields = [f"case={p.case.value}"]
    if p.case is add.Case.I:
        fields += [f"d={p.d}", f"a={p.a}"]
    else:
        fields += [f"k={p.k}"]
    fields.append(f"p={period}")
    if p.case is add.Case.II:
        blocks = add.product_structure(p.m, p.k) if p.delta < 2 * p.m else "-"
        fields.append(f"blocks={blocks}")
    word = add.candidate_word(p)
    status = 0
    if args.check:
        bad = verify_mex_consistency(word, p)
        fields.append("verified=pass" if not bad else "verified=fail")
        status = 1 if bad else 0
    print(" ".join(fields), file=out)
    if args.word:
        print(word.runlength(), file=out)
    return status


def cmd_verify(args, out) -> int:
    word = parse_word(args.word)
    if len(word) == 0:
        raise UsageError("--word is empty")
    bad = verify_mex_consistency(word, _moves(args))
    if not bad:
        print("pass", file=out)
        return 0
    v = bad[0]
    print(f"fail position={v.position} expected={v.expected} found={v.found}", file=out)
    return 1


def cmd_audit(args, out) -> int:
    if args.k is not None:
        if args.delta is not None:
            raise UsageError("--k and --delta are mutually exclusive")
        if args.m is None or not 1 <= args.k < args.m:
            raise UsageError("need --m and 1 <= --k < --m")
        args.delta = args.m + args.k
    p = _params(args)
    if p.case is not add.Case.II or p.delta >= 2 * p.m:
        raise UsageError("audit needs m < delta < 2m")
    try:
        records = audit_tables(p)
    except AuditFailure as e:
        print(f"fail {e}", file=out)
        return 1
    if args.trace:
        print(format_audit(records), file=out)
    print(f"pass factors={len(records)}", file=out)
    return 0


def cmd_scan(args, out) -> int:
    if args.m_max < 1 or args.delta_max < 1:
        raise UsageError("--m-max and --delta-max must be positive")
    target = args.out if args.out != "-" else out
    rows = scan_additive(args.m_max, args.delta_max, target, args.jobs)
    if args.out != "-":
        print(summarize(rows), file=out)
    return 0 if all(r.match for r in rows) else 1


def cmd_duality(args, out) -> int:
    print(duality_report(_moves(args), args.horizon).format(), file=out)
    return 0


def cmd_render(args, out) -> int:
    if args.mode == "per_k" and args.m < 2:
        raise UsageError("per_k needs --m >= 2")
    if args.mode == "per_delta_class" and args.d is None:
        raise UsageError("per_delta_class needs --d")
    if args.scale < 1:
        raise UsageError("--scale must be positive")
    data = render_family(args.m, args.mode, args.scale, args.out, args.d, args.layers)
    print(f"wrote {args.out} ({len(data)} bytes)", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sinksub", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("nimseq", help="print nim-values")
    _game_options(p)
    p.add_argument("--count", type=int, default=20)
    p.set_defaults(func=cmd_nimseq)

    p = sub.add_parser("period", help="detect pre-period and period")
    _game_options(p)
    p.add_argument("--horizon", type=int)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("additive", help="parameters, period formula and word for S(m, delta)")
    _game_options(p, convention=False)
    p.add_argument("--check", action="store_true", help="verify the word against the recurrence")
    p.add_argument("--word", action="store_true", help="also print the run-length word")
    p.set_defaults(func=cmd_additive)

    p = sub.add_parser("verify", help="check a word against the sink recurrence")
    _game_options(p, convention=False)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="factor-level reachability / anti-collision audit")
    _game_options(p, convention=False)
    p.add_argument("--k", type=int)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("scan", help="scan the additive family, write CSV")
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--delta-max", type=int, default=51)
    p.add_argument("--out", default="-")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (0 = all cores)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("duality", help="compare sink and wall periods")
    _game_options(p, convention=False)
    p.add_argument("--horizon", type=int)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("render", help="write a PPM raster of period words")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=["per_k", "per_delta_class"], default="per_k")
    p.add_argument("--d", type=int)
    p.add_argument("--layers", type=int, default=4)
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"{ap.prog} {args.verb}: error: {e}", file=sys.stderr)
        return 2
    except HorizonExhausted as e:
        print(f"HorizonExhausted: {e}", file=sys.stderr)
        return 1
    except (add.WrongCase, add.UnsupportedDelta) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
