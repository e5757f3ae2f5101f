"""Command-line interface.

Exit codes: 0 success, 1 computation error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import hochschild, invariants
from .algebra import FiniteAlgebra
from .classify import audit_verdict, classify
from .dsl import emit_dot, emit_presentation, load_source
from .errors import ParseError, SsbError, ValidationError
from .families import looks_like_family, parse_family
from .verify import DEFAULT_CHARS, run_suite


def _build_from_source(src, char, len_bound):
    pres = load_source(src, char)
    return FiniteAlgebra.build(pres, len_bound=len_bound)


def _spec_name(src, char):
    if looks_like_family(src):
        return str(parse_family(src, 0 if char is None else char))
    return src


def _invariant_report(alg, spec_name):
    report = {
        "spec": spec_name,
        "char": alg.presentation.char,
        "dimension": alg.dim,
        "cartan": invariants.cartan_matrix(alg),
        "cartan_invariants": invariants.cartan_invariants(alg),
        "cartan_det": invariants.cartan_determinant(alg),
        "centre_dim": invariants.centre(alg).dim,
        "hh": {"0": hochschild.hh_dim(alg, 0), "1": hochschild.hh_dim(alg, 1)},
    }
    if alg.presentation.char > 0:
        Z = invariants.centre(alg)
        perp = invariants.kulshammer_perp(alg, 1)
        report["kulshammer"] = {
            "kappa_dim": invariants.commutator_subspace(alg).dim,
            "t1_perp_dim": perp.dim,
            "radical_profile": invariants.quotient_radical_profile(Z, perp),
        }
    return report


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=str))
    else:
        for line in text_lines:
            print(line)


def cmd_build(args):
    alg = _build_from_source(args.source, args.char, args.len_bound)
    if args.dot:
        print(emit_dot(alg.quiver), end="")
        return 0
    payload = {"spec": _spec_name(args.source, args.char),
               "char": alg.presentation.char, "dimension": alg.dim,
               "basis_size": alg.dim}
    _emit(args, payload, [
        f"built algebra of dimension {alg.dim} over characteristic "
        f"{alg.presentation.char}",
        emit_presentation(alg.presentation).rstrip()])
    return 0


def cmd_invariants(args):
    alg = _build_from_source(args.source, args.char, args.len_bound)
    report = _invariant_report(alg, _spec_name(args.source, args.char))
    lines = [f"{k}: {v}" for k, v in report.items()]
    _emit(args, report, lines)
    return 0


def cmd_hh(args):
    alg = _build_from_source(args.source, args.char, args.len_bound)
    table = hochschild.hh_table(alg, args.max_degree)
    payload = {"spec": _spec_name(args.source, args.char),
               "char": alg.presentation.char,
               "hh": {str(k): v for k, v in table.items()}}
    _emit(args, payload, [f"HH^{k} = {v}" for k, v in table.items()])
    return 0


def cmd_classify(args):
    char = args.char if args.char is not None else 0
    x = parse_family(args.first, char)
    y = parse_family(args.second, char)
    verdict = classify(args.relation, x, y, char)
    payload = verdict.to_json()
    if args.audit:
        payload["audit"] = audit_verdict(verdict, x, y, char)
    lines = [f"relation: {verdict.relation}", f"result: {verdict.result}"]
    for k, v in verdict.evidence.items():
        lines.append(f"{k}: {v}")
    for fact in verdict.cited_facts:
        lines.append(f"cites [{fact['key']}]: {fact['claim']}")
    if args.audit:
        lines.append(f"audit: {payload['audit']}")
    _emit(args, payload, lines)
    return 0


def cmd_verify(args):
    if args.suite != "paper-suite":
        raise ValidationError(f"unknown verification suite {args.suite!r}")
    chars = DEFAULT_CHARS
    if args.chars:
        chars = tuple(int(c) for c in args.chars.split(","))
    ok = run_suite(maxv=args.max, chars=chars)
    return 0 if ok else 1


def make_parser():
    ap = argparse.ArgumentParser(
        prog="ssb",
        description="workbench for symmetric special biserial algebras with "
                    "at most one non-uniserial projective")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_len=True):
        p.add_argument("--char", type=int, default=None,
                       help="characteristic for family specs (default 0)")
        p.add_argument("--json", action="store_true")
        if with_len:
            p.add_argument("--len-bound", type=int,
                           default=_env_len_bound(),
                           help="path-length bound for the closure "
                                "(env SSB_LEN_BOUND)")

    b = sub.add_parser("build", help="build an algebra, optionally emit DOT")
    b.add_argument("source")
    b.add_argument("--dot", action="store_true")
    common(b)
    b.set_defaults(fn=cmd_build)

    i = sub.add_parser("invariants", help="full invariant report")
    i.add_argument("source")
    common(i)
    i.set_defaults(fn=cmd_invariants)

    h = sub.add_parser("hh", help="Hochschild cohomology dimensions")
    h.add_argument("source")
    h.add_argument("--max-degree", type=int, default=1)
    common(h)
    h.set_defaults(fn=cmd_hh)

    c = sub.add_parser("classify", help="decide an equivalence relation")
    c.add_argument("relation", choices=["derived", "stable", "iso"])
    c.add_argument("first")
    c.add_argument("second")
    c.add_argument("--audit", action="store_true",
                   help="recompute the separating invariant numerically")
    common(c, with_len=False)
    c.set_defaults(fn=cmd_classify)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("--max", type=int, default=3)
    v.add_argument("--chars", type=str, default=None)
    v.set_defaults(fn=cmd_verify)
    return ap


def _env_len_bound():
    raw = os.environ.get("SSB_LEN_BOUND")
    return int(raw) if raw else None


def main(argv=None):
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SsbError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
