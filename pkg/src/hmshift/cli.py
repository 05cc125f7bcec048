"""Command-line front end.

Exit codes: 0 verified / holds, 1 a finding (bound violation, refuted step,
failed predicate under ``--expect``), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .compression import ProcedureInvariantError, ff_compress
from .extremal import HypothesisError, construct_cross_extremal, construct_hm, construct_star, cross_bound, ekr_bound, hm_bound
from .famtext import ParseError, is_cross_text, parse_cross, parse_family, write_cross, write_family
from .setfamily import (
    common_intersection,
    is_cross_intersecting,
    is_intersecting,
    is_shifted,
    shadow,
    shift_ij,
    shift_to_shifted,
)
from .verify import replay_theorem1, replay_theorem2, search_max_cross, search_max_ekr, search_max_hm
from .verify.search import MODES

FAMILY_PREDICATES = ("intersecting", "shifted", "empty-intersection")
CROSS_PREDICATES = ("cross", "shadow-containment")


class UsageError(Exception):
    pass


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _emit(payload: dict, source: str) -> None:
    payload = {**payload, "tool": {"name": "hmshift", "version": __version__}, "input_digest": _digest(source)}
    print(json.dumps(payload, sort_keys=False))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_output(text: str, out: str | None, summary: dict, source: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    _emit({**summary, "output": out}, source)


def cmd_construct(args) -> int:
    if args.kind == "star":
        text = write_family(construct_star(args.n, args.k))
    elif args.kind == "hm":
        text = write_family(construct_hm(args.n, args.k))
    else:
        text = write_cross(construct_cross_extremal(args.n, args.k))
    _write_output(text, args.output, {"command": "construct", "kind": args.kind, "n": args.n, "k": args.k},
                  f"construct {args.kind} {args.n} {args.k}")
    return 0


def cmd_check(args) -> int:
    preds = [p.strip() for p in args.predicates.split(",") if p.strip()]
    for p in preds:
        if p not in FAMILY_PREDICATES + CROSS_PREDICATES:
            raise UsageError(f"unknown predicate {p!r}; choose from {', '.join(FAMILY_PREDICATES + CROSS_PREDICATES)}")
    if any(p in CROSS_PREDICATES for p in preds) and not args.instance:
        raise UsageError("cross and shadow-containment need --instance")
    if any(p in FAMILY_PREDICATES for p in preds) and not args.family:
        raise UsageError("intersecting, shifted and empty-intersection need --family")
    source = ""
    verdicts: dict[str, bool] = {}
    if args.family:
        text = _read(args.family)
        source += text
        fam = parse_family(text)
        for p in preds:
            if p == "intersecting":
                verdicts[p] = is_intersecting(fam)
            elif p == "shifted":
                verdicts[p] = is_shifted(fam)
            elif p == "empty-intersection":
                verdicts[p] = not common_intersection(fam)
    if args.instance:
        text = _read(args.instance)
        source += text
        inst = parse_cross(text)
        for p in preds:
            if p == "cross":
                verdicts[p] = is_cross_intersecting(inst.a, inst.b)
            elif p == "shadow-containment":
                verdicts[p] = shadow(inst.b).issubset(inst.a)
    _emit({"command": "check", "verdicts": verdicts}, source)
    return 1 if args.expect and not all(verdicts.values()) else 0


def cmd_shift(args) -> int:
    text = _read(args.family)
    fam = parse_family(text)
    trace = None
    if args.pair:
        out = shift_ij(fam, tuple(args.pair))
    else:
        out, trace = shift_to_shifted(fam)
    if args.trace:
        if trace is None:
            raise UsageError("--trace records shift_to_shifted runs; drop --pair")
        Path(args.trace).write_text(trace.to_text())
    _write_output(write_family(out), args.output,
                  {"command": "shift", "size": len(out), "shifted": is_shifted(out)}, text)
    return 0


def cmd_compress(args) -> int:
    text = _read(args.family)
    fam = parse_family(text)
    res = ff_compress(fam)
    if args.trace:
        Path(args.trace).write_text(res.trace.to_text())
    summary = {
        "command": "compress",
        "input_size": len(fam),
        "output_size": len(res.output),
        "relabel_triggered": res.relabel_triggered,
        "detected_pair": res.detected_pair,
    }
    _write_output(write_family(res.output), args.output, summary, text)
    return 0


def bounds_payload(n: int, k: int) -> dict:
    payload: dict = {}
    reasons: dict[str, str] = {}
    for name, fn in (("hm", hm_bound), ("ekr", ekr_bound), ("cross", cross_bound)):
        try:
            payload[name] = fn(n, k)
        except HypothesisError as exc:
            reasons[name] = str(exc)
    if reasons:
        payload["reasons"] = reasons
    return payload


def cmd_bounds(args) -> int:
    _emit(bounds_payload(args.n, args.k), f"bounds {args.n} {args.k}")
    return 0


def cmd_search(args) -> int:
    fn = {"hm": search_max_hm, "ekr": search_max_ekr, "cross": search_max_cross}[args.problem]
    report = fn(args.n, args.k, args.mode, workers=args.workers)
    payload = report.to_dict()
    if args.workers <= 1:
        # single-worker output must be byte-stable
        payload.pop("elapsed_s")
    _emit(payload, f"search {args.problem} {args.n} {args.k} {args.mode}")
    return 0 if report.verdict == "equal" and not report.witness_problems else 1


def cmd_replay(args) -> int:
    if bool(args.instance) == bool(args.family):
        raise UsageError("give exactly one of --instance or --family")
    text = _read(args.instance or args.family)
    if args.instance:
        if not is_cross_text(text):
            raise UsageError("--instance expects a file with [A] and [B] sections")
        report = replay_theorem2(parse_cross(text))
    else:
        report = replay_theorem1(parse_family(text))
    _emit({"command": "replay", **report.to_dict()}, text)
    return 0 if report.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hmshift", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hmshift {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write an extremal family")
    p.add_argument("kind", choices=("star", "hm", "cross"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="evaluate predicates on a family or cross instance")
    p.add_argument("--family")
    p.add_argument("--instance")
    p.add_argument("--predicates", required=True,
                   help="comma list of " + ", ".join(FAMILY_PREDICATES + CROSS_PREDICATES))
    p.add_argument("--expect", action="store_true", help="exit 1 unless every predicate holds")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("shift", help="apply one shift or shift to a fixpoint")
    p.add_argument("--family", required=True)
    p.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"))
    p.add_argument("-o", "--output")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("compress", help="shifted image preserving empty common intersection")
    p.add_argument("--family", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("bounds", help="closed-form bounds as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exact maximisation")
    p.add_argument("problem", choices=("hm", "ekr", "cross"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="bnb")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("replay", help="replay the induction on an instance")
    p.add_argument("--instance")
    p.add_argument("--family", help="shifted family; replays the reduction through element 1")
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError, OverflowError) as exc:
        print(f"hmshift {args.command}: {exc}", file=sys.stderr)
        return 2
    except ProcedureInvariantError as exc:
        print(f"hmshift {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
