"""Command-line front end.

    cyclicweights --p 17 --s 1 --m 2 --h 4 --e 4 closed --format text
    cyclicweights --p 3 --s 2 --m 2 --h 8 --e 4 verify
    cyclicweights oracles --suite lemma31 --max-r 169

Exit codes: 0 success/agreement, 1 disagreement or failed suite,
2 invalid parameters, 3 compute budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import oracles
from .chars import periods_closed_N2
from .closedform import closed_weight_distribution, pi_trace, select_case
from .code import (
    DEFAULT_MAX_PAIRS,
    BudgetExceeded,
    CodeParams,
    ParameterError,
    WeightDistribution,
    brute_weight_distribution,
    code_params,
    format_enumerator,
    parse_enumerator,
)
from .curve import primary_pi
from .ffield import format_coeffs, parse_coeffs

EXIT_OK, EXIT_DISAGREE, EXIT_PARAMS, EXIT_BUDGET = 0, 1, 2, 3
JSON_SAFE = 2**53 - 1

__all__ = ["RunReport", "format_enumerator", "parse_enumerator", "main"]


@dataclass
class RunReport:
    params: dict[str, Any]
    method: str
    distribution: WeightDistribution
    case: str | None = None
    eta: tuple[int, int] | None = None
    pi: tuple[int, int] | str | None = None
    pi_trace: int | None = None
    agreement: bool | None = None
    elapsed_ms: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def enumerator(self) -> str:
        return format_enumerator(self.distribution)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "params": self.params,
            "case": self.case,
            "eta": list(self.eta) if self.eta else None,
            "pi": list(self.pi) if isinstance(self.pi, tuple) else self.pi,
            "pi_trace": self.pi_trace,
            "distribution": [{"weight": w, "count": c} for w, c in self.distribution.items()],
            "enumerator": self.enumerator,
            "method": self.method,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.method == "verify":
            out["agreement"] = self.agreement
        return _json_safe(out)

    def to_text(self) -> str:
        return self.enumerator


def _json_safe(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE else obj
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def _params_echo(params: CodeParams) -> dict[str, Any]:
    ctx = params.ctx
    return {
        "p": params.p, "s": params.s, "m": params.m, "h": params.h, "e": params.e,
        "q": params.q, "r": params.r, "n": params.n, "N": params.N,
        "modulus": format_coeffs(ctx.modulus),
        "generator": format_coeffs(ctx.coeffs(ctx.gen)),
    }


def _closed_metadata(params: CodeParams) -> dict[str, Any]:
    if (params.e, params.N) != (4, 2) or params.p == 2:
        return {}
    if params.p % 4 == 1:
        pi = primary_pi(params.p)
        pi_out: tuple[int, int] | str = (pi.re, pi.im)
    else:
        pi_out = "i*sqrt(p)"
    return {
        "case": select_case(params).name,
        "eta": periods_closed_N2(params.p, params.s, params.m),
        "pi": pi_out,
        "pi_trace": pi_trace(params),
    }


def build_params(args) -> CodeParams:
    missing = [k for k in ("p", "s", "m", "h", "e") if getattr(args, k) is None]
    if missing:
        raise ParameterError("missing " + ", ".join("--" + k for k in missing))
    return code_params(
        args.p, args.s, args.m, args.h, args.e,
        modulus=parse_coeffs(args.modulus) if args.modulus else None,
        generator=parse_coeffs(args.generator) if args.generator else None,
    )


def _require_closed_form(args) -> None:
    # e is known before any field is built; N is checked once params exist
    if args.e is not None and args.e != 4:
        raise ParameterError("closed form requires e=4, N=2")


def cmd_closed(args) -> RunReport:
    _require_closed_form(args)
    params = build_params(args)
    t0 = time.perf_counter()
    dist = closed_weight_distribution(params)
    elapsed = (time.perf_counter() - t0) * 1e3
    return RunReport(_params_echo(params), "closed", dist, elapsed_ms=elapsed, **_closed_metadata(params))


def _budget(args) -> int | None:
    return None if getattr(args, "force", False) else DEFAULT_MAX_PAIRS


def cmd_brute(args) -> RunReport:
    params = build_params(args)
    t0 = time.perf_counter()
    dist = brute_weight_distribution(params, jobs=args.jobs, max_pairs=_budget(args))
    elapsed = (time.perf_counter() - t0) * 1e3
    return RunReport(_params_echo(params), "brute", dist, elapsed_ms=elapsed, **_closed_metadata(params))


def cmd_verify(args) -> RunReport:
    _require_closed_form(args)
    params = build_params(args)
    t0 = time.perf_counter()
    closed = closed_weight_distribution(params)
    brute = brute_weight_distribution(params, jobs=args.jobs, max_pairs=_budget(args))
    elapsed = (time.perf_counter() - t0) * 1e3
    report = RunReport(
        _params_echo(params), "verify", closed, agreement=closed == brute,
        elapsed_ms=elapsed, **_closed_metadata(params),
    )
    report.extra["brute"] = brute
    return report


def cmd_oracles(args) -> list[oracles.SuiteResult]:
    names = list(oracles.SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        if name == "lemma31":
            results.append(oracles.lemma31(max_r=args.max_r))
        elif name == "lemma32":
            results.append(oracles.lemma32(max_card=args.max_card))
        elif name == "periods":
            results.append(oracles.periods(max_r=args.max_r_periods))
        else:
            results.append(oracles.SUITES[name]())
    return results


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicweights",
        description="Weight distributions of the cyclic codes C(q,m,h,e), q = p^s.",
    )
    for flag in ("p", "s", "m", "h", "e"):
        parser.add_argument(f"--{flag}", type=int)
    parser.add_argument("--modulus", help="field modulus, constant term first, e.g. 2,1,1")
    parser.add_argument("--generator", help="primitive element as coefficients, constant first")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("closed", "closed-form distribution (e=4, N=2)"),
        ("brute", "exhaustive enumeration of all codewords"),
        ("verify", "run both engines and compare"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if name != "closed":
            sp.add_argument("--jobs", type=int, default=1)
            sp.add_argument("--force", action="store_true", help="ignore the enumeration budget")

    sp = sub.add_parser("oracles", help="run the desk-scale property suites")
    sp.add_argument("--suite", choices=(*oracles.SUITES, "all"), default="all")
    sp.add_argument("--max-r", type=int, default=169, help="largest field for lemma31")
    sp.add_argument("--max-card", type=int, default=10_000, help="largest field for lemma32")
    sp.add_argument("--max-r-periods", type=int, default=1000, help="largest field for periods")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "oracles":
            results = cmd_oracles(args)
            if args.format == "json":
                print(json.dumps([
                    {"suite": r.name, "passed": r.passed, "failed": r.failed, "failures": r.failures}
                    for r in results
                ], indent=2))
            else:
                for r in results:
                    print(r.line())
                    for label in r.failures:
                        print("  " + label, file=sys.stderr)
            return EXIT_OK if all(r.ok for r in results) else EXIT_DISAGREE
        handler = {"closed": cmd_closed, "brute": cmd_brute, "verify": cmd_verify}[args.command]
        report = handler(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS

    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    elif report.method == "verify":
        print(f"closed: {report.enumerator}")
        print(f"brute:  {format_enumerator(report.extra['brute'])}")
        print(f"agreement: {str(report.agreement).lower()}")
    else:
        print(report.to_text())
    if report.method == "verify" and not report.agreement:
        return EXIT_DISAGREE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
