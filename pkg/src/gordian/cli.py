"""Command-line interface: ``gordian <subcommand> ...`` or ``python3 -m gordian``.

Exit codes: 0 on success, 1 for invalid input, 2 when a certificate fails
verification.  ``--json`` switches any subcommand to JSON output with sorted
keys.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from gordian import adjacency, certificate, signature
from gordian.torus import InvalidKnotError, TorusKnot, normalize, unknotting_number


class UsageError(Exception):
    """Invalid command-line input; reported on one line with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        raise UsageError(message)


def _fraction_text(x: Fraction) -> str:
    return str(x)


def _knot(p: int, q: int) -> TorusKnot:
    return normalize(p, q)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_sig(args) -> int:
    knot = _knot(args.p, args.q)
    theta = signature.parse_angle(args.theta)
    value = signature.lt_signature(knot, theta)
    payload = {"knot": str(knot), "theta": signature.format_fraction(theta), "signature": value,
               "regular": signature.is_regular(knot, theta)}
    _emit(args, payload, str(value))
    return 0


def cmd_profile(args) -> int:
    knot = _knot(args.p, args.q)
    prof = signature.signature_profile(knot)
    lines = [f"{knot}: {len(prof.breakpoints)} breakpoints"]
    for lo, hi, value in prof.intervals():
        lines.append(f"  ({_fraction_text(lo)}, {_fraction_text(hi)})  {value}")
    _emit(args, prof.to_json(), "\n".join(lines))
    return 0


def cmd_unknot(args) -> int:
    knot = _knot(args.p, args.q)
    u = unknotting_number(knot)
    _emit(args, {"knot": str(knot), "unknotting_number": u}, str(u))
    return 0


def _verdict_text(v: adjacency.AdjacencyVerdict) -> str:
    text = f"{v.status} ({v.notion}; {v.provenance})"
    witness = v.detail.get("witness")
    if witness:
        text += f" witness theta={witness['theta']} sigma1={witness['sigma1']} sigma2={witness['sigma2']}"
    elif "reason" in v.detail:
        text += f" {v.detail['reason']}"
    if v.note:
        text += f"\nnote: {v.note}"
    return text


def cmd_adjacent(args) -> int:
    t1, t2 = _knot(args.p, args.q), _knot(args.r, args.s)
    if args.notion == "algebraic":
        verdict = adjacency.check_algebraic_adjacency(t1, t2, args.depth)
    else:
        verdict = adjacency.check_gordian_adjacency(t1, t2)
    payload = {"T1": str(t1), "T2": str(t2), **verdict.to_json()}
    _emit(args, payload, f"{t1} <= {t2}: {_verdict_text(verdict)}")
    return 0


def cmd_distance(args) -> int:
    t1, t2 = _knot(args.p, args.q), _knot(args.r, args.s)
    if args.budget is not None and args.budget < 0:
        raise UsageError("--budget must be nonnegative")
    bounds = adjacency.distance_bounds(t1, t2, args.budget)
    up = bounds.upper_provenance
    text = f"lower {bounds.lower}\nupper {bounds.upper}"
    if up.get("kind") in ("common_neighbor", "direct"):
        text += f" ({up['kind'].replace('_', ' ')} {up['neighbor']})"
    _emit(args, {"T1": str(t1), "T2": str(t2), **bounds.to_json()}, text)
    return 0


def cmd_cbar(args) -> int:
    bound = adjacency.cbar_upper_bound(args.a, args.b)
    lo, hi = adjacency.cbar_trivial_bracket(args.a, args.b)
    payload = {"a": args.a, "b": args.b, "cbar_upper_bound": _fraction_text(bound),
               "trivial_lower": _fraction_text(lo), "trivial_upper": _fraction_text(hi)}
    _emit(args, payload, _fraction_text(bound))
    return 0


def cmd_certify(args) -> int:
    if args.construction != "prop21":
        raise UsageError(f"unknown construction {args.construction!r}")
    cert = certificate.generate_prop21_certificate(args.k)
    text = cert.dumps()
    if args.output == "-":
        sys.stdout.write(text)
        return 0
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    m = certificate.prop21_target(args.k)
    summary = {"output": args.output, "steps": len(cert.steps),
               "crossing_changes": cert.declared_crossing_changes,
               "from": str(normalize(2, 2 * args.k + 1)), "to": str(normalize(3, m))}
    _emit(args, summary, f"wrote {args.output}: {summary['from']} -> {summary['to']}, "
                         f"{summary['crossing_changes']} crossing changes, {summary['steps']} steps")
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            cert = certificate.Certificate.loads(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    except certificate.CertificateFormatError as exc:
        payload = {"valid": False, "reason": str(exc), "failed_step": None}
        _emit(args, payload, f"INVALID: {exc}")
        return 2
    report = certificate.verify_certificate(cert)
    if report.valid:
        text = (f"VALID: {report.initial_closure or 'unrecognized'} -> "
                f"{report.final_closure or 'unrecognized'}, {report.crossing_changes} crossing changes "
                f"({report.negative_to_positive} negative-to-positive, "
                f"{report.positive_to_negative} positive-to-negative)")
    else:
        text = f"INVALID: {report.reason}"
    _emit(args, report.to_json(), text)
    return 0 if report.valid else 2


def cmd_scan_index23(args) -> int:
    if args.max_m < 1 or args.max_n < 1:
        raise UsageError("--max-m and --max-n must be positive")
    rows = []
    for n in range(1, args.max_n + 1, 2):
        for m in range(1, args.max_m + 1):
            if m % 3 == 0:
                continue
            t1, t2 = normalize(2, n), normalize(3, m)
            v = adjacency.check_gordian_adjacency(t1, t2)
            rows.append({"n": n, "m": m, "T1": str(t1), "T2": str(t2), "status": v.status,
                         "provenance": v.provenance,
                         "criterion": adjacency.index23_criterion(n, m)})
    rows.sort(key=lambda r: (r["n"], r["m"]))
    lines = [f"T(2,{r['n']}) <= T(3,{r['m']}): {r['status']} ({r['provenance']})" for r in rows]
    _emit(args, rows, "\n".join(lines))
    return 0


def cmd_scan_defect(args) -> int:
    if args.max_u < 1:
        raise UsageError("--max-u must be positive")
    found = adjacency.index2_candidate_scan(args.max_u)
    _emit(args, [str(k) for k in found], "\n".join(str(k) for k in found))
    return 0


def cmd_compare_notions(args) -> int:
    t1, t2 = _knot(args.p, args.q), _knot(args.r, args.s)
    result = adjacency.compare_notions(t1, t2, args.depth)
    text = (f"{t1} vs {t2}\n"
            f"gordian: {_verdict_text(adjacency.check_gordian_adjacency(t1, t2))}\n"
            f"algebraic-derivable: {str(result['algebraic_derivable']).lower()}\n"
            f"notions diverge: {str(result['diverge']).lower()}")
    _emit(args, result, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    parser = _Parser(prog="gordian", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def knot_args(p, names=("p", "q")):
        for name in names:
            p.add_argument(name, type=int)

    p = sub.add_parser("sig", parents=[common], help="Levine-Tristram signature")
    knot_args(p)
    p.add_argument("--theta", required=True, help="angle as a reduced fraction a/b")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("profile", parents=[common], help="signature profile")
    knot_args(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("unknot", parents=[common], help="unknotting number")
    knot_args(p)
    p.set_defaults(func=cmd_unknot)

    p = sub.add_parser("adjacent", parents=[common], help="is T(p,q) adjacent to T(r,s)?")
    knot_args(p, ("p", "q", "r", "s"))
    p.add_argument("--notion", choices=("gordian", "algebraic"), default="gordian")
    p.add_argument("--depth", type=int, default=4, help="rule applications for --notion algebraic")
    p.set_defaults(func=cmd_adjacent)

    p = sub.add_parser("distance", parents=[common], help="Gordian distance bounds")
    knot_args(p, ("p", "q", "r", "s"))
    p.add_argument("--budget", type=int, default=None, help="max u of common neighbors searched")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("cbar", parents=[common], help="signature upper bound on cbar(a,b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_cbar)

    p = sub.add_parser("certify", parents=[common], help="generate a crossing-change certificate")
    p.add_argument("construction", choices=("prop21",))
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output", required=True, help="output file, or - for stdout")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", parents=[common], help="replay a certificate file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan-index23", parents=[common], help="T(2,n) vs T(3,m) truth table")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, default=31)
    p.set_defaults(func=cmd_scan_index23)

    p = sub.add_parser("scan-defect", parents=[common], help="torus knots with zero signature defect")
    p.add_argument("--max-u", type=int, required=True)
    p.set_defaults(func=cmd_scan_defect)

    p = sub.add_parser("compare-notions", parents=[common], help="Gordian vs algebraic adjacency")
    knot_args(p, ("p", "q", "r", "s"))
    p.add_argument("--depth", type=int, default=4)
    p.set_defaults(func=cmd_compare_notions)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, InvalidKnotError, signature.InvalidAngleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
