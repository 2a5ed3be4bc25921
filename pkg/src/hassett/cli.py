"""Command-line surface with machine-readable output.

Contract shared by every subcommand:

* data goes to stdout, diagnostics to stderr;
* exit code 0 means every check passed, 1 means some check failed,
  2 means the invocation itself was invalid;
* identical argument vectors produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._version import __version__
from .constructions import Mode, build_generic, generic_slots
from .criteria import conjecture_sweep, discriminant_report
from .verifier import (
    Certificate,
    CertificateError,
    certificate_for,
    corollary20_certificate,
    verify_corollary20,
    verify_witness,
)

MAX_D = 10**12


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _render_discriminant(report, out) -> None:
    factors = " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in report.factorization
    ) or "1"
    witness = report.double_star_witness
    print(f"d = {report.d}", file=out)
    print(f"  star (*):        {_flag(report.star)}", file=out)
    print(
        f"  double star (**): {_flag(report.double_star)}"
        + (f" (m = {witness})" if witness is not None else ""),
        file=out,
    )
    print(f"  associated K3:   {_flag(report.k3_admissible)}", file=out)
    print(f"  factorization:   {factors}", file=out)


def cmd_check_d(args) -> int:
    d = args.d
    if not 1 <= d <= MAX_D:
        return _fail_usage(f"d must lie in [1, {MAX_D}], got {d}")
    report = discriminant_report(d)
    if args.json:
        print(json.dumps(report.to_dict(), separators=(",", ":")))
    else:
        _render_discriminant(report, sys.stdout)
    return 0 if report.star else 1


def _parse_params_file(path: str, targets: list[int]) -> str | None:
    """Validate explicit slot parameters against the targets; None if fine."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        return f"cannot read params file: {exc}"
    except json.JSONDecodeError as exc:
        return f"params file is not valid JSON (line {exc.lineno}): {exc.msg}"
    ns = doc.get("n") if isinstance(doc, dict) else None
    if not isinstance(ns, list) or not all(isinstance(x, int) for x in ns):
        return "params file must be an object {\"n\": [int, ...]}"
    if len(ns) != len(targets):
        return f"params file lists {len(ns)} parameters for {len(targets)} targets"
    for d, n in zip(targets, ns):
        if d - 6 * n not in (0, 2):
            return f"parameter n={n} is inconsistent with d={d} (d - 6n must be 0 or 2)"
    return None


def cmd_intersect(args) -> int:
    targets = args.d
    for d in targets:
        if not 1 <= d <= MAX_D:
            return _fail_usage(f"d must lie in [1, {MAX_D}], got {d}")
    if args.params is not None:
        problem = _parse_params_file(args.params, targets)
        if problem is not None:
            return _fail_usage(problem)
    try:
        generic_slots(targets)
    except ValueError as exc:
        return _fail_usage(str(exc))
    mode = Mode.STRICT if args.mode == "strict" else Mode.GOAL
    outcome = build_generic(targets, mode)
    reference = (
        outcome.realized_gram - outcome.gram_delta
        if outcome.gram_delta is not None
        else None
    )
    report = verify_witness(outcome.basis, targets, reference=reference)
    cert = certificate_for(outcome.basis, tuple(targets), report)
    if args.json:
        print(cert.to_json())
    else:
        print(f"mode:    {mode.value}")
        print(f"status:  {outcome.status.value}")
        if outcome.detail:
            print(f"note:    {outcome.detail}", file=sys.stderr)
        print(f"verdict: {report.verdict}")
        if report.failure_reasons:
            print("reasons: " + ", ".join(report.failure_reasons))
        discs = ", ".join(str(l.realized_d) for l in report.labellings)
        print(f"labelling discriminants: {discs}")
    return 0 if report.verdict == "PASS" else 1


def cmd_corollary20(args) -> int:
    witness, reports = verify_corollary20()
    cert = corollary20_certificate()
    all_star = all(r.star for r in reports)
    all_k3 = all(r.k3_admissible for r in reports)
    if args.json:
        doc = {
            "discriminants": [r.to_dict() for r in reports],
            "certificate": json.loads(cert.to_json()),
        }
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(f"{'d':>6}  {'star':>4}  {'m':>4}  {'K3':>3}")
        for r in reports:
            m = "-" if r.double_star_witness is None else str(r.double_star_witness)
            print(f"{r.d:>6}  {_flag(r.star):>4}  {m:>4}  {_flag(r.k3_admissible):>3}")
        crit = witness.criterion
        print(f"witness rank:      {len(witness.labellings) + 1}")
        print(f"contains h2:       {_flag(crit.contains_h_squared)}")
        print(f"positive definite: {_flag(crit.positive_definite)}")
        print(f"saturated:         {_flag(crit.saturated)}")
        print(f"minimum norm:      {crit.minimum_norm}")
        print(f"verdict:           {witness.verdict}")
        if witness.failure_reasons:
            print("reasons:           " + ", ".join(witness.failure_reasons))
    passed = witness.verdict == "PASS" and all_star and all_k3
    return 0 if passed else 1


def cmd_sweep_conjecture(args) -> int:
    limit = args.limit
    if not 1 <= limit <= MAX_D:
        return _fail_usage(f"limit must lie in [1, {MAX_D}], got {limit}")
    rows = conjecture_sweep(limit)
    lines = ["d,k,s,admissible"]
    lines += [f"{d},{k},{s},{'true' if ok else 'false'}" for d, k, s, ok in rows]
    text = "\n".join(lines) + "\n"
    if args.csv is not None:
        try:
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            return _fail_usage(f"cannot write CSV: {exc}")
        print(f"wrote {len(rows)} rows to {args.csv}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    bad = [d for d, _, _, ok in rows if not ok]
    if bad:
        print(f"counterexamples found: {bad}", file=sys.stderr)
        return 1
    return 0


def cmd_verify_file(args) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        return _fail_usage(f"cannot read certificate: {exc}")
    try:
        cert = Certificate.from_json(text)
    except CertificateError as exc:
        return _fail_usage(str(exc))
    report = cert.reverify()
    if args.json:
        print(json.dumps(report.to_dict(), separators=(",", ":")))
    else:
        print(f"verdict: {report.verdict}")
        if report.failure_reasons:
            print("reasons: " + ", ".join(report.failure_reasons))
        discs = ", ".join(str(l.realized_d) for l in report.labellings)
        print(f"labelling discriminants: {discs}")
    return 0 if report.verdict == "PASS" else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hassett",
        description="Exact lattice certificates for intersections of Hassett divisors.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-d", help="classify one discriminant")
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_d)

    p = sub.add_parser("intersect", help="build and verify a witness for given discriminants")
    p.add_argument("d", type=int, nargs="+")
    p.add_argument("--mode", choices=("goal", "strict"), default="goal")
    p.add_argument("--params", metavar="FILE", help="JSON file with explicit slot parameters")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("corollary20", help="verify the bundled 20-divisor configuration")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_corollary20)

    p = sub.add_parser("sweep-conjecture", help="scan conjecture-shaped discriminants")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_sweep_conjecture)

    p = sub.add_parser("verify-file", help="re-verify a certificate JSON file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_file)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
