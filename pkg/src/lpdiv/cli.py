"""Command-line interface: point counts, L-polynomials, exponential sums,
and the divisibility/conjecture verifiers, with deterministic table or JSON
reports.

Exit codes: 0 success (findings included), 1 usage or input errors, 2 for a
theorem-oracle violation (those indicate bugs, not discoveries)."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .curves import base_field_size, count_points, count_series, curve_from_json_dict, genus, gsum
from .decomp import (
    CounterexampleReport,
    DivisibilityReport,
    DkReport,
    GsumTable,
    Verdict,
    check_main_theorem_lpolys,
    counterexample_f3,
    gsum_invariance_scan,
    verify_conjecture_dk,
)
from .finite_fields import DEFAULT_MAX_M
from .intpoly import format_poly
from .zeta import LPolynomial, lpoly_from_counts

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    curve: str | None = None
    lc: str | None = None
    ld: str | None = None
    k: int | None = None
    m: int | None = None
    horizon: int | None = None
    threads: int | None = None
    fmt: str = "json"
    max_m: int = DEFAULT_MAX_M

    def require(self, **fields):
        for name, flag in fields.items():
            if getattr(self, name) is None:
                raise UsageError(f"{self.command} requires {flag}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lpdiv", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, help_, curve=False, lpair=False, k=False, m=False, horizon=False):
        p = sub.add_parser(name, help=help_)
        if curve:
            p.add_argument("--curve", required=True, help="curve JSON file")
        if lpair:
            p.add_argument("--lc", required=True, help="L-polynomial JSON file (divisor side)")
            p.add_argument("--ld", required=True, help="L-polynomial JSON file (dividend side)")
        if k:
            p.add_argument("--k", type=int, required=True)
        if m:
            p.add_argument("--m", type=int, required=True)
        if horizon:
            p.add_argument("--horizon", type=int, default=None)
        p.add_argument("--threads", type=int, default=None, help="parallel workers (default: CPU count)")
        p.add_argument("--format", dest="fmt", choices=("table", "json"), default="json")
        p.add_argument("--max-m", dest="max_m", type=int, default=DEFAULT_MAX_M,
                       help="enumeration bound override")
        return p

    add("count", "exact point count of a curve over F_{q^m}", curve=True, m=True)
    add("lpoly", "L-polynomial of a curve from exhaustive counts", curve=True, horizon=True)
    add("gsum", "exponential sum of x^(2^k+1)+x^(-1) over GF(2^m)*", k=True, m=True)
    add("verify-dk", "divisibility and quotient structure for the k-th family member", k=True, horizon=True)
    add("check-div", "divisibility criterion on two L-polynomial files", lpair=True, k=True, horizon=True)
    add("scan-gsum", "gcd-dependence scan of the exponential sums (k, m up to bounds)", k=True, m=True)
    add("counterexample", "verify the fixed F_3 counterexample pair")
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        curve=getattr(ns, "curve", None),
        lc=getattr(ns, "lc", None),
        ld=getattr(ns, "ld", None),
        k=getattr(ns, "k", None),
        m=getattr(ns, "m", None),
        horizon=getattr(ns, "horizon", None),
        threads=ns.threads,
        fmt=ns.fmt,
        max_m=ns.max_m,
    )


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def emit_report(report, fmt: str = "json") -> str:
    """Deterministic serialization; json mode is byte-stable across runs."""
    if fmt == "json":
        obj = report.to_json_dict() if hasattr(report, "to_json_dict") else report
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return _to_table(report)


def _to_table(report) -> str:
    if isinstance(report, DivisibilityReport):
        lines = [
            f"divisibility check  k={report.k}  q={report.q}  horizon={report.horizon}",
            f"  L_C = {format_poly(report.lc.poly)}",
            f"  L_D = {format_poly(report.ld.poly)}",
        ]
        if report.hyp1_first_fail is None:
            lines.append(f"  hyp 1: counts equal for all m <= {report.horizon} with {report.k} | m excluded")
        else:
            lines.append(f"  hyp 1: FAILS at m = {report.hyp1_first_fail}")
        lines.append(f"  hyp 2: k-th power roots distinct (squarefree): {report.hyp2_squarefree}")
        q_str = format_poly(report.quotient) if report.quotient is not None else "-"
        lines.append(f"  divides: {report.divides}   quotient: {q_str}   in Z[t^k]: {report.quotient_in_tk}")
        lines.append(f"  verdict: {report.verdict.value}")
        return "\n".join(lines) + "\n"
    if isinstance(report, DkReport):
        lines = [
            f"family member k={report.k}  genus={report.genus}  counts to m={report.horizon}",
            f"  L = {format_poly(report.lpoly.poly)}",
            f"  L(k=1) = {format_poly(report.d1_lpoly.poly)}",
            f"  divides: {report.divides}",
        ]
        if report.quotient is not None:
            lines.append(f"  quotient: {format_poly(report.quotient)}")
        st = report.structure
        lines.append(f"  structure: {st.kind}" + (
            "  " + " * ".join(
                f"({format_poly(part)})(t^{p})" for part, p in zip(st.parts, st.primes)
            ) if st.parts else ""))
        lines.append(f"  2-ranks: L {report.lpoly_two_rank}, quotient {report.quotient_two_rank}")
        return "\n".join(lines) + "\n"
    if isinstance(report, GsumTable):
        width = max(len(str(v)) for _, _, v in report.entries) + 1
        header = "k\\m " + "".join(str(m).rjust(width) for m in range(1, report.m_max + 1))
        lines = [header]
        values = {(k, m): v for k, m, v in report.entries}
        for k in range(1, report.k_max + 1):
            lines.append(
                f"{k:<4}" + "".join(str(values[(k, m)]).rjust(width) for m in range(1, report.m_max + 1))
            )
        if report.mismatches:
            lines.append("mismatches: " + ", ".join(f"(k={k}, m={m})" for k, m in report.mismatches))
        else:
            lines.append("all (k, m) consistent with the gcd rule")
        return "\n".join(lines) + "\n"
    if isinstance(report, CounterexampleReport):
        rows = [
            ("both polynomials are valid L-polynomials", report.valid_lpolys),
            (f"counts equal for m <= {report.horizon} coprime to 6", report.counts_equal_coprime_to_6),
            (f"counts differ at m = 2 (s_2: {report.s2_values[0]} vs {report.s2_values[1]})",
             report.counts_differ_at_m2),
            ("L_C does not divide L_D", report.not_divisible),
            ("extensions of L_C stay squarefree (n <= 12)", report.extensions_squarefree),
        ]
        lines = [f"F_3 counterexample: L_C = {format_poly(report.lc.poly)}, L_D = {format_poly(report.ld.poly)}"]
        lines += [f"  [{'PASS' if ok else 'FAIL'}] {text}" for text, ok in rows]
        lines.append(f"  overall: {'PASS' if report.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"
    if isinstance(report, LPolynomial):
        return (
            f"q = {report.q}\ng = {report.g}\nL(t) = {format_poly(report.poly)}\n"
        )
    if isinstance(report, dict):
        return "\n".join(f"{k} = {v}" for k, v in report.items()) + "\n"
    return str(report) + "\n"


def run(config: RunConfig) -> int:
    """Execute one command; prints the report and returns the exit status."""
    cmd = config.command
    if cmd == "count":
        curve = curve_from_json_dict(_load_json(config.curve))
        n = count_points(curve, config.m, threads=config.threads, max_m=config.max_m)
        payload = {
            "schema": 1, "type": "point_count",
            "q": base_field_size(curve), "m": config.m, "count": n,
        }
        sys.stdout.write(emit_report(payload, config.fmt))
        return EXIT_OK
    if cmd == "lpoly":
        curve = curve_from_json_dict(_load_json(config.curve))
        g = genus(curve)
        horizon = max(config.horizon or 0, g, 1)
        counts = count_series(curve, horizon, threads=config.threads, max_m=config.max_m).counts
        lp = lpoly_from_counts(base_field_size(curve), g, counts)
        if config.fmt == "json":
            payload = {"schema": 1, "type": "lpolynomial", **lp.to_json_dict(),
                       "poly": format_poly(lp.poly, spaced=False)}
            sys.stdout.write(emit_report(payload, "json"))
        else:
            sys.stdout.write(emit_report(lp, "table"))
        return EXIT_OK
    if cmd == "gsum":
        value = gsum(config.k, config.m, threads=config.threads, max_m=config.max_m)
        payload = {"schema": 1, "type": "gsum", "k": config.k, "m": config.m, "value": value}
        sys.stdout.write(emit_report(payload, config.fmt))
        return EXIT_OK
    if cmd == "verify-dk":
        if config.k >= 6:
            sys.stderr.write(
                f"note: k = {config.k} needs counts up to m = {2 ** (config.k - 1) + 1}; "
                "this is a long-running job\n"
            )
        report = verify_conjecture_dk(
            config.k, config.horizon, threads=config.threads, max_m=config.max_m
        )
        sys.stdout.write(emit_report(report, config.fmt))
        return EXIT_OK
    if cmd == "check-div":
        lc = LPolynomial.from_json_dict(_load_json(config.lc))
        ld = LPolynomial.from_json_dict(_load_json(config.ld))
        horizon = config.horizon or max(2 * (lc.g + ld.g), 1)
        report = check_main_theorem_lpolys(lc, ld, config.k, horizon)
        sys.stdout.write(emit_report(report, config.fmt))
        return EXIT_VIOLATION if report.verdict is Verdict.VIOLATION else EXIT_OK
    if cmd == "scan-gsum":
        table = gsum_invariance_scan(config.k, config.m, threads=config.threads, max_m=config.max_m)
        sys.stdout.write(emit_report(table, config.fmt))
        return EXIT_OK
    if cmd == "counterexample":
        report = counterexample_f3()
        sys.stdout.write(emit_report(report, config.fmt))
        return EXIT_OK if report.ok else EXIT_VIOLATION
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    try:
        config = parse_config(argv if argv is not None else sys.argv[1:])
        return run(config)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
