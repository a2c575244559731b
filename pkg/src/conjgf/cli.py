"""Command-line surface: build groups, print generating functions, run
equivalence and isoclinism queries, verify the table of normalized
invariants, and cross-check against the brute-force oracle.

All mathematical output is exact and deterministic; wall-clock timing is
segregated under a "timing" key so the serialized results can be compared
byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field

from . import families
from .analysis import conjugacy_data
from .closed_forms import table_row
from .errors import ConjGFError
from .genfun import (
    a_of_t,
    alpha_coefficient,
    b_of_t,
    beta_coefficient,
    gf_equal,
    normalize,
)
from .groups import certify
from .groupspec import load_group_spec
from .isoclinism import are_isoclinic
from .oracle import alpha_brute, beta_brute
from .ratfun import partial_fractions

VERIFY_PRIMES = (2, 3, 5)


@dataclass
class RunReport:
    """Everything one command did: inputs, exact results, checks, timing."""

    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def check(self, name: str, passed: bool, expected=None, actual=None) -> None:
        entry = {"name": name, "passed": bool(passed)}
        if not passed:
            entry["expected"] = str(expected)
            entry["actual"] = str(actual)
        self.checks.append(entry)

    @property
    def ok(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": self.checks,
            "timing": self.timing,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    def render(self) -> str:
        lines = [f"command: {self.command}"]
        for key, value in sorted(self.inputs.items()):
            lines.append(f"  {key}: {value}")
        lines.append("results:")
        lines.extend(_render_value(self.results, indent=2))
        if self.checks:
            lines.append("checks:")
            for c in self.checks:
                mark = "PASS" if c["passed"] else "FAIL"
                extra = "" if c["passed"] else f"  expected={c['expected']} actual={c['actual']}"
                lines.append(f"  [{mark}] {c['name']}{extra}")
        return "\n".join(lines)


def _render_value(value, indent: int) -> list[str]:
    pad = " " * indent
    out = []
    if isinstance(value, dict):
        for key in value:
            sub = value[key]
            if isinstance(sub, (dict, list)):
                out.append(f"{pad}{key}:")
                out.extend(_render_value(sub, indent + 2))
            else:
                out.append(f"{pad}{key}: {sub}")
    elif isinstance(value, list):
        for sub in value:
            out.append(f"{pad}- {sub}")
    else:
        out.append(f"{pad}{value}")
    return out


def _gf_payload(gf, want_pf: bool, human: dict | None = None) -> dict:
    payload = gf.to_payload()
    payload["display"] = str(gf)
    if want_pf:
        pf = partial_fractions(gf)
        payload["partial_fractions"] = pf.to_payload()
        payload["partial_fractions_display"] = str(pf)
    return payload


def cmd_genfun(args) -> RunReport:
    report = RunReport("genfun", {"spec": args.spec, "which": args.which,
                                  "normalized": args.normalized,
                                  "partial_fractions": args.partial_fractions,
                                  "coefficients": args.coefficients})
    t0 = time.perf_counter()
    g = load_group_spec(args.spec)
    report.results["group"] = {"label": g.label, "order": g.order}
    which = args.which
    if which in ("A", "both"):
        gf = a_of_t(g)
        if args.normalized:
            gf = normalize(gf, g.order)
        report.results["A"] = _gf_payload(gf, args.partial_fractions)
        if args.coefficients:
            report.results["alpha"] = [alpha_coefficient(g, n) for n in range(args.coefficients + 1)]
    if which in ("B", "both"):
        gf = b_of_t(g)
        if args.normalized:
            gf = normalize(gf, g.order)
        report.results["B"] = _gf_payload(gf, args.partial_fractions)
        if args.coefficients:
            report.results["beta"] = [beta_coefficient(g, n) for n in range(args.coefficients + 1)]
    report.timing["seconds"] = time.perf_counter() - t0
    return report


def cmd_certify(args) -> RunReport:
    report = RunReport("certify", {"spec": args.spec})
    t0 = time.perf_counter()
    g = load_group_spec(args.spec)
    cert = certify(g)
    report.results["group"] = {"label": g.label, "order": g.order}
    report.results["certificate"] = [
        {"check": c.name, "status": c.status, "detail": c.detail} for c in cert.checks
    ]
    report.check("certificate", cert.ok, "all checks pass", cert.first_failure())
    report.timing["seconds"] = time.perf_counter() - t0
    return report


def _admissible_families(p: int) -> list[str]:
    if p == 2:
        return ["abelian"] + list(families.GAMMA_FAMILIES)
    return ["abelian"] + list(families.PHI_FAMILIES)


def cmd_verify_table(args) -> RunReport:
    primes = args.p or [2, 3]
    report = RunReport("verify-table", {"primes": primes})
    t0 = time.perf_counter()
    for p in primes:
        if p not in VERIFY_PRIMES:
            report.check(f"p={p} admissible", False, f"p in {VERIFY_PRIMES}", p)
            continue
        for family in _admissible_families(p):
            name = f"{family}(p={p})"
            try:
                g = families.stem_group(family, p)
                expected_a, expected_b = table_row(family, p)
                got_a = normalize(a_of_t(g), g.order)
                got_b = normalize(b_of_t(g), g.order)
                report.check(f"{name} A", gf_equal(got_a, expected_a), expected_a, got_a)
                report.check(f"{name} B", gf_equal(got_b, expected_b), expected_b, got_b)
            except ConjGFError as exc:
                report.check(name, False, "construction + table match", repr(exc))
    report.results["rows_checked"] = len(report.checks)
    report.results["rows_failed"] = sum(1 for c in report.checks if not c["passed"])
    report.timing["seconds"] = time.perf_counter() - t0
    return report


def cmd_equiv(args) -> RunReport:
    report = RunReport("equiv", {"spec1": args.spec1, "spec2": args.spec2, "mode": args.mode})
    t0 = time.perf_counter()
    g = load_group_spec(args.spec1)
    h = load_group_spec(args.spec2)
    report.results["groups"] = [
        {"label": g.label, "order": g.order},
        {"label": h.label, "order": h.order},
    ]
    if args.mode == "A":
        verdict = gf_equal(a_of_t(g), a_of_t(h))
        report.results["a_equivalent"] = verdict
        report.results["class_equations"] = [
            list(conjugacy_data(g).class_equation),
            list(conjugacy_data(h).class_equation),
        ]
    elif args.mode == "B":
        verdict = gf_equal(b_of_t(g), b_of_t(h))
        report.results["b_equivalent"] = verdict
    else:
        witness = are_isoclinic(g, h)
        verdict = witness is not None
        report.results["isoclinic"] = verdict
        if witness is not None:
            report.results["witness"] = {
                "theta": list(witness.theta),
                "phi": {str(k): v for k, v in sorted(witness.phi.items())},
                "verified": witness.verify(g, h),
            }
    report.timing["seconds"] = time.perf_counter() - t0
    return report


def cmd_oracle(args) -> RunReport:
    report = RunReport("oracle", {"spec": args.spec, "n_max": args.n_max})
    t0 = time.perf_counter()
    g = load_group_spec(args.spec)
    report.results["group"] = {"label": g.label, "order": g.order}
    rows = []
    for n in range(args.n_max + 1):
        a_oracle = alpha_brute(g, n)
        b_oracle = beta_brute(g, n)
        a_series = alpha_coefficient(g, n)
        b_series = beta_coefficient(g, n)
        rows.append({
            "n": n,
            "alpha_brute": a_oracle.count, "alpha_series": a_series,
            "beta_brute": b_oracle.count, "beta_series": b_series,
            "records": [a_oracle.record(), b_oracle.record()],
        })
        report.check(f"alpha n={n}", a_oracle.count == a_series, a_series, a_oracle.count)
        report.check(f"beta n={n}", b_oracle.count == b_series, b_series, b_oracle.count)
    report.results["table"] = rows
    report.timing["seconds"] = time.perf_counter() - t0
    return report


def _bench_rows(labels: list[str], n_max: int) -> list[dict]:
    catalog = dict(families.small_catalog())
    rows = []
    for label in labels:
        g = catalog[label]
        hist = conjugacy_data(g).z_histogram
        for n in range(1, n_max + 1):
            t0 = time.perf_counter_ns()
            count = alpha_coefficient(g, n)
            nanos = time.perf_counter_ns() - t0
            rows.append({"strategy": "eq1_histogram", "group": label, "order": g.order,
                         "n": n, "count": count, "nanos": nanos, "work": len(hist)})

            t0 = time.perf_counter_ns()
            brute = alpha_brute(g, n)
            nanos = time.perf_counter_ns() - t0
            rows.append({"strategy": "brute_alpha", "group": label, "order": g.order,
                         "n": n, "count": brute.count, "nanos": nanos,
                         "work": brute.tuples_visited})

            stats: dict = {}
            t0 = time.perf_counter_ns()
            value = b_of_t(g, stats=stats).coefficient(n)
            nanos = time.perf_counter_ns() - t0
            work = stats.get("classes_processed", 0) + stats.get("subgroups_built", 0)
            rows.append({"strategy": "eq4_recursion", "group": label, "order": g.order,
                         "n": n, "count": int(value), "nanos": nanos, "work": max(work, 1)})

            t0 = time.perf_counter_ns()
            bbrute = beta_brute(g, n)
            nanos = time.perf_counter_ns() - t0
            rows.append({"strategy": "brute_beta", "group": label, "order": g.order,
                         "n": n, "count": bbrute.count, "nanos": nanos,
                         "work": bbrute.tuples_visited})
    return rows


def cmd_bench(args) -> RunReport:
    labels = args.groups or ["S3", "D8", "Q8", "D16", "D32"]
    report = RunReport("bench", {"groups": labels, "n_max": args.n_max, "out": args.out})
    t0 = time.perf_counter()
    rows = _bench_rows(labels, args.n_max)
    report.results["rows"] = len(rows)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(
                fh, fieldnames=["strategy", "group", "order", "n", "count", "nanos", "work"]
            )
            writer.writeheader()
            writer.writerows(rows)
        report.results["csv"] = args.out
    else:
        report.results["table"] = rows
    d32 = {(r["strategy"], r["n"]): r for r in rows if r["group"] == "D32"}
    if ("eq1_histogram", 2) in d32 and ("brute_alpha", 2) in d32:
        ratio = d32[("brute_alpha", 2)]["work"] / d32[("eq1_histogram", 2)]["work"]
        report.results["d32_n2_work_ratio"] = ratio
        report.check("D32 n=2 eq1 at least 100x cheaper by work", ratio >= 100, ">= 100", ratio)
    report.timing["seconds"] = time.perf_counter() - t0
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conjgf",
        description="Exact A/B generating functions for simultaneous conjugacy classes",
    )
    parser.add_argument("--json", action="store_true", help="emit the machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genfun", help="compute A and/or B for a group-spec file")
    p.add_argument("spec")
    p.add_argument("--which", choices=["A", "B", "both"], default="both")
    p.add_argument("--normalized", action="store_true", help="substitute t -> t/|G|")
    p.add_argument("--partial-fractions", action="store_true", dest="partial_fractions")
    p.add_argument("--coefficients", type=int, default=0, metavar="N",
                   help="also print the series coefficients up to n = N")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("certify", help="run the group-axiom certificate")
    p.add_argument("spec")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-table", help="rebuild stem groups and verify the table of normalized invariants")
    p.add_argument("--p", type=int, action="append", help="prime to verify (repeatable; default 2 and 3)")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("equiv", help="A/B-equivalence or isoclinism of two groups")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.add_argument("--mode", choices=["A", "B", "isoclinic"], required=True)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("oracle", help="brute-force orbit counts vs series coefficients")
    p.add_argument("spec")
    p.add_argument("--n-max", type=int, default=2, dest="n_max")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="work/time comparison of the counting strategies")
    p.add_argument("--groups", nargs="*", help="catalog labels (default: S3 D8 Q8 D16 D32)")
    p.add_argument("--n-max", type=int, default=2, dest="n_max")
    p.add_argument("--out", help="write benchmark CSV here")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report: RunReport = args.func(args)
    except ConjGFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.render())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
