"""Command-line front end.

Exit status: 0 when every requested check holds, 1 when one fails (the
witness is in the report), 2 for usage, input or bound errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import axioms as ax
from .carrier import CarrierError
from .closure import closure_tract, fusion_closure, sigma_closure, truncate3
from .fmatroids import (FMatroidError, check_dual_pair, check_minor_props, check_supp_lemma,
                        check_wedge_closure, certify_perfection, certify_strong_perfection)
from .hyperfields import check_hap, check_stringency_equivalence
from .io import InputError, resolve_fmatroid, resolve_hyperfield, resolve_tract
from .matroids import MatroidError
from .tract import AxiomReport, OutOfBoundError

CHECKS = {
    "T1": lambda t, b: ax.check_tract_axioms(t, b)[0],
    "T2": lambda t, b: ax.check_tract_axioms(t, b)[1],
    "T3": lambda t, b: ax.check_tract_axioms(t, b)[2],
    "I": ax.check_idyll,
    "F": ax.check_fusion,
    "SF": ax.check_strong_fusion,
    "MSF": ax.check_msf,
    "MSF'": ax.check_msf_prime,
    "INV": ax.check_involution,
    "FFPT": ax.check_ffpt_decomposition,
}
DEFAULT_CHECKS = "T1,T2,T3,I,F,SF,MSF"


class UsageError(ValueError):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tractlab",
                                description="Exact checks for tracts, hyperfields and F-matroids.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, help_, tract=False, hyperfield=False, fmatroid=False, bound=False,
             coord=False):
        sp = sub.add_parser(name, help=help_)
        if tract:
            sp.add_argument("--tract", required=True,
                            help="builtin:NAME (sign, sign_product, gf2, gf3, gf5, gf7, p_prime) or a JSON path")
        if hyperfield:
            sp.add_argument("--hyperfield", required=True,
                            help="builtin:NAME (sign, sign_product, gf2, gf3, gf5, gf7) or a JSON path")
        if fmatroid:
            sp.add_argument("--fmatroid", required=True,
                            help="builtin:NAME (u12_sign, u23_sign, u23_gf3, u24_sign, u12_gf2) or a JSON path")
        if bound:
            sp.add_argument("--bound", type=_positive, default=6, help="norm bound (default 6)")
        if coord:
            sp.add_argument("--coord-bound", type=_positive, default=2,
                            help="per-coordinate norm bound (default 2)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--jobs", type=_positive, default=None,
                        help="worker count (default $TRACTLAB_JOBS or 1)")
        return sp

    a = verb("axioms", "check tract axioms exhaustively up to a norm bound", tract=True, bound=True)
    a.add_argument("--check", default=DEFAULT_CHECKS,
                   help=f"comma-separated subset of {', '.join(CHECKS)} (default {DEFAULT_CHECKS})")
    verb("closure", "fusion closure of the 3-term truncation", tract=True, bound=True)
    verb("sigma", "iterated MSF-type closure and its MSF check", tract=True, bound=True)
    verb("stringent", "stringency versus SF", hyperfield=True, bound=True)
    verb("hap", "fusion closure of the 3-term pasture versus the hyperfield tract",
         hyperfield=True, bound=True)
    verb("perfect", "vectors against covectors", fmatroid=True)
    verb("strong-perfect", "generalized vectors against generalized covectors",
         fmatroid=True, coord=True)
    verb("wedge-check", "wedge closure of generalized covectors", fmatroid=True, coord=True)
    verb("minors-check", "minor propositions and the support lemma", fmatroid=True, coord=True)
    verb("demo", "rerun every worked example and print a scorecard")
    return p


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("TRACTLAB_JOBS")
    if env is None:
        return 1
    try:
        return _positive(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"TRACTLAB_JOBS: {exc}") from None


def _report_text(rep: AxiomReport) -> list[str]:
    lines = [rep.summary()]
    w4 = rep.detail.get("msf_witness") if rep.detail else None
    if w4:
        parts = ", ".join(f"{k}={v}" for k, v in w4.items())
        lines.append(f"  least witness with |alpha+beta| >= 4: {parts}")
    return lines


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _reports(args, head: dict, reps: list[AxiomReport]) -> int:
    ok = all(r.holds for r in reps)
    payload = dict(head, ok=ok, reports=[r.to_json() for r in reps])
    lines = [ln for r in reps for ln in _report_text(r)]
    _emit(args, payload, lines)
    return 0 if ok else 1


def _counts_by_norm(counts) -> dict:
    out: dict = {}
    for c in counts:
        out[str(sum(c))] = out.get(str(sum(c)), 0) + 1
    return dict(sorted(out.items(), key=lambda kv: int(kv[0])))


def cmd_axioms(args) -> int:
    names = [c.strip() for c in args.check.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown or not names:
        raise UsageError(f"unknown check(s) {', '.join(unknown) or '(none)'}; choose from {', '.join(CHECKS)}")
    t = resolve_tract(args.tract)
    reps = [CHECKS[c](t, args.bound) for c in names]
    return _reports(args, {"verb": "axioms", "tract": t.name, "bound": args.bound}, reps)


def cmd_closure(args) -> int:
    t = resolve_tract(args.tract)
    closed = fusion_closure(truncate3(t), args.bound)
    members = sorted(closed.members, key=lambda c: (sum(c), c))
    payload = {"verb": "closure", "tract": t.name, "bound": args.bound,
               "size": len(members), "by_norm": _counts_by_norm(members),
               "members": [[[t.carrier.units[i], k] for i, k in enumerate(c) if k] for c in members]}
    lines = [f"fusion closure of trunc3({t.name}) up to norm {args.bound}: {len(members)} null sums",
             "by norm: " + ", ".join(f"{k}:{v}" for k, v in payload["by_norm"].items())]
    if t.null.covers(args.bound):
        same = closed.members == t.null_table(args.bound)
        payload["equals_tract"] = same
        lines.append(f"equals the null set of {t.name}: {'yes' if same else 'no'}")
    _emit(args, payload, lines)
    return 0


def cmd_sigma(args) -> int:
    t = resolve_tract(args.tract)
    oracle, stages = sigma_closure(t, args.bound, return_stages=True)
    rep = ax.check_msf(closure_tract(t, oracle), args.bound)
    fixed = oracle.members == t.null_table(args.bound)
    payload = {"verb": "sigma", "tract": t.name, "bound": args.bound, "stages": stages,
               "fixed_point_is_input": fixed, "ok": rep.holds, "reports": [rep.to_json()]}
    lines = [f"sigma({t.name}) up to norm {args.bound}: stage sizes {stages}",
             f"unchanged from the input: {'yes' if fixed else 'no'}"] + _report_text(rep)
    _emit(args, payload, lines)
    return 0 if rep.holds else 1


def cmd_stringent(args) -> int:
    h = resolve_hyperfield(args.hyperfield)
    rep = check_stringency_equivalence(h, args.bound)
    head = {"verb": "stringent", "hyperfield": h.name, "bound": args.bound,
            "stringent": rep.detail["stringent"], "SF": rep.detail["SF"]}
    return _reports(args, head, [rep])


def cmd_hap(args) -> int:
    h = resolve_hyperfield(args.hyperfield)
    return _reports(args, {"verb": "hap", "hyperfield": h.name, "bound": args.bound},
                    [check_hap(h, args.bound)])


def _load_fm(args):
    fm = resolve_fmatroid(args.fmatroid)
    dp = check_dual_pair(fm)
    return fm, dp


def _certificate(args, claim_fn, verb: str) -> int:
    fm, dp = _load_fm(args)
    if not dp.holds:
        return _reports(args, {"verb": verb, "fmatroid": fm.name}, [dp])
    rep = claim_fn(fm)
    cert = rep.detail["certificate"]
    payload = dict(cert, witness=rep.to_json()["witness"], vectors=rep.detail["vectors"],
                   covectors=rep.detail["covectors"], fmatroid=fm.name)
    lines = [f"{cert['claim']} of {fm.name}: {cert['verdict']} "
             f"(coord bound {cert['coord_bound']}, {rep.detail['vectors']} vectors, "
             f"{rep.detail['covectors']} covectors, {cert['pairs_checked']} pairs, "
             f"oracle bound {cert['oracle_bound']})"]
    if rep.witness:
        lines.append(rep.summary())
    _emit(args, payload, lines)
    return 0 if rep.holds else 1


def cmd_perfect(args) -> int:
    return _certificate(args, certify_perfection, "perfect")


def cmd_strong_perfect(args) -> int:
    return _certificate(args, lambda fm: certify_strong_perfection(fm, args.coord_bound),
                        "strong-perfect")


def cmd_wedge(args) -> int:
    fm, dp = _load_fm(args)
    reps = [dp] if not dp.holds else [check_wedge_closure(fm, args.coord_bound)]
    return _reports(args, {"verb": "wedge-check", "fmatroid": fm.name,
                           "coord_bound": args.coord_bound}, reps)


def cmd_minors(args) -> int:
    fm, dp = _load_fm(args)
    reps = [dp] if not dp.holds else [check_minor_props(fm, args.coord_bound),
                                       check_supp_lemma(fm, args.coord_bound)]
    return _reports(args, {"verb": "minors-check", "fmatroid": fm.name,
                           "coord_bound": args.coord_bound}, reps)


def cmd_demo(args) -> int:
    from .scorecard import run_all
    results = run_all()
    ok = all(r.passed for r in results)
    payload = {"verb": "demo", "ok": ok,
               "criteria": [{"number": r.number, "title": r.title, "passed": r.passed,
                             "checks": [{"check": lbl, "passed": p} for lbl, p, _ in r.checks]}
                            for r in results]}
    passed = sum(r.passed for r in results)
    lines = [r.line() for r in results] + [f"{passed}/{len(results)} criteria pass"]
    _emit(args, payload, lines)
    return 0 if ok else 1


COMMANDS = {
    "axioms": cmd_axioms, "closure": cmd_closure, "sigma": cmd_sigma,
    "stringent": cmd_stringent, "hap": cmd_hap, "perfect": cmd_perfect,
    "strong-perfect": cmd_strong_perfect, "wedge-check": cmd_wedge,
    "minors-check": cmd_minors, "demo": cmd_demo,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _jobs(args)  # accepted for interface stability; all runs are single-process
        return COMMANDS[args.verb](args)
    except (UsageError, InputError, OutOfBoundError, CarrierError, MatroidError,
            FMatroidError, ValueError) as exc:
        sys.stderr.write(f"tractlab {args.verb}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
