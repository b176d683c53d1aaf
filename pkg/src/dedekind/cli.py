"""Command-line front end.

Subcommands: ``check``, ``eisenstein``, ``radical``, ``transform``,
``ramify``.  Exit codes: 0 when a verdict was computed (the verdict
itself lives in the report, so pipelines can tell "computed NOT_CLOSED"
from "failed to compute"), 2 for malformed input, 3 for precondition
failures (inseparable input, uncertified irreducibility in strict mode,
non-integral coefficients, ...).

Output is text by default or JSON with ``--output json``; both encode
the same data and all elements are rendered in the canonical grammars,
so reports can be parsed back.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .criterion import (
    DedekindReport,
    EisensteinResult,
    RadicalTransform,
    RamificationReport,
    dedekind_test,
    dedekind_test_m_form,
    ershov_test,
    is_nu_eisenstein,
    radical_test,
    radical_transform,
    ramification_report,
)
from .errors import DegreeCapExceeded, ParseError, PreconditionError
from .grammar import parse_descriptor, parse_element, parse_poly

__all__ = ["RunConfig", "parse_config", "run", "main"]


@dataclass(frozen=True)
class RunConfig:
    """A validated invocation, with field/poly specs in canonical form."""

    command: str
    field: str
    poly: str | None = None
    n: int | None = None
    a: str | None = None
    mode: str = "assert"
    output: str = "text"

    def canonical_argv(self) -> list[str]:
        argv = [self.command, "--field", self.field]
        if self.poly is not None:
            argv += ["--poly", self.poly]
        if self.n is not None:
            argv += ["--n", str(self.n)]
        if self.a is not None:
            argv += ["--a", self.a]
        argv += ["--mode", self.mode, "--output", self.output]
        return argv


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedekind",
        description="Decide whether the ring generated by a root of f over a "
        "valuation ring is integrally closed.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", required=True, help="valuation descriptor, e.g. qp:2 or lex:F2")
    common.add_argument("--mode", choices=("strict", "assert"), default="assert",
                        help="irreducibility handling (default: assert)")
    common.add_argument("--output", choices=("text", "json"), default="text")

    poly_arg = argparse.ArgumentParser(add_help=False)
    poly_arg.add_argument("--poly", required=True, help='polynomial in x, e.g. "x^2 - 5"')

    radical_args = argparse.ArgumentParser(add_help=False)
    radical_args.add_argument("--n", required=True, type=int, help="exponent of x^n - a")
    radical_args.add_argument("--a", required=True, help="radicand (a base-field element)")

    sub.add_parser("check", parents=[common, poly_arg],
                   help="run the closedness test with certificates")
    sub.add_parser("eisenstein", parents=[common, poly_arg],
                   help="test the Eisenstein-type condition")
    sub.add_parser("ramify", parents=[common, poly_arg],
                   help="closedness test plus ramification table (input must be CLOSED)")
    sub.add_parser("radical", parents=[common, radical_args],
                   help="closedness test for x^n - a")
    sub.add_parser("transform", parents=[common, radical_args],
                   help="rewrite x^n - a as an Eisenstein-type radical")
    return parser


def parse_config(argv=None) -> RunConfig:
    """Parse and validate arguments; specs are re-rendered canonically."""
    ns = _build_parser().parse_args(argv)
    field = parse_descriptor(ns.field)
    poly = getattr(ns, "poly", None)
    n = getattr(ns, "n", None)
    a = getattr(ns, "a", None)
    if poly is not None:
        poly = str(parse_poly(field, poly))
    if a is not None:
        a = str(parse_element(field, a))
    return RunConfig(
        command=ns.command,
        field=field.spec_string(),
        poly=poly,
        n=n,
        a=a,
        mode=ns.mode,
        output=ns.output,
    )


def _json_int(n: int):
    return n if -(2**63) < n < 2**63 else str(n)


def _certificate_payload(report: DedekindReport) -> list[dict]:
    out = []
    for c in report.certificates:
        out.append(
            {
                "phi": str(c.phi),
                "l": _json_int(c.l),
                "r": str(c.r),
                "r_value": str(c.r_value),
                "passes": c.passes,
            }
        )
    return out


def _ramification_payload(ram: RamificationReport, report: DedekindReport) -> dict:
    rows = []
    for row in ram.rows:
        entry = {"phi": str(row.phi), "e": _json_int(row.e), "f": _json_int(row.f)}
        if row.e >= 2 and report.sigma is not None:
            # informational only: the value of phi_i at a root, sigma / l_i
            entry["root_value"] = f"{report.sigma}/{row.e}"
        rows.append(entry)
    return {"s": _json_int(ram.s), "rows": rows, "total": _json_int(ram.total)}


def _report_payload(config: RunConfig, report: DedekindReport) -> dict:
    witnesses = {}
    ersh = ershov_test(report.f, mode="assert")
    assert ersh.closed == report.closed
    if ersh.pi is not None:
        witnesses["pi"] = str(ersh.pi)
        witnesses["T"] = str(ersh.T)
    if report.sigma is not None and report.repeated_indices:
        m = dedekind_test_m_form(report.f, mode="assert")
        assert m.closed == report.closed
        witnesses["M"] = str(m.M)
    ram = None
    if report.closed:
        ram = _ramification_payload(ramification_report(report), report)
    return {
        "field": config.field,
        "poly": str(report.f),
        "verdict": report.verdict.value,
        "sigma": None if report.sigma is None else str(report.sigma),
        "separable": report.separable,
        "irreducibility": report.irreducibility.value,
        "factors": _certificate_payload(report),
        "witnesses": witnesses,
        "ramification": ram,
    }


def _relation(a, b) -> str:
    if a == b:
        return "="
    return ">" if a > b else "<"


def _report_text(payload: dict, report: DedekindReport) -> str:
    lines = [
        f"field: {payload['field']}",
        f"poly: {payload['poly']}",
        f"separable: {str(payload['separable']).lower()}",
        f"irreducibility: {payload['irreducibility']}",
        f"sigma: {payload['sigma'] if payload['sigma'] is not None else 'none'}",
    ]
    for i, c in enumerate(report.certificates, start=1):
        lines.append(f"factor {i}: phi = {c.phi}, l = {c.l}")
        value_line = f"  r = {c.r}, nuG(r) = {c.r_value}"
        if c.l >= 2 and report.sigma is not None:
            rel = _relation(c.r_value, report.sigma)
            value_line += f" {rel} sigma = {report.sigma}"
            value_line += "  [ok]" if c.passes else "  [FAIL]"
        lines.append(value_line)
    wit = payload["witnesses"]
    if "pi" in wit:
        lines.append(f"witness: pi = {wit['pi']}, T = {wit['T']}")
    if "M" in wit:
        lines.append(f"witness: M = {wit['M']}")
    if payload["ramification"] is not None:
        ram = payload["ramification"]
        lines.append(f"extensions: s = {ram['s']}, sum(e*f) = {ram['total']}")
        for i, row in enumerate(ram["rows"], start=1):
            extra = f", value at root = {row['root_value']}" if "root_value" in row else ""
            lines.append(f"  omega {i}: e = {row['e']}, f = {row['f']} (phi = {row['phi']}{extra})")
    lines.append(f"verdict: {payload['verdict']}")
    return "\n".join(lines)


def _eisenstein_payload(config: RunConfig, result: EisensteinResult, poly_text: str) -> dict:
    return {
        "field": config.field,
        "poly": poly_text,
        "eisenstein": result.eisenstein,
        "reason": result.reason.value,
        "sigma": None if result.sigma is None else str(result.sigma),
        "witness": None
        if result.psi is None
        else {"psi": str(result.psi), "r": str(result.r), "r_value": str(result.r_value)},
    }


def _eisenstein_text(payload: dict) -> str:
    lines = [
        f"field: {payload['field']}",
        f"poly: {payload['poly']}",
        f"sigma: {payload['sigma'] if payload['sigma'] is not None else 'none'}",
    ]
    if payload["witness"] is not None:
        w = payload["witness"]
        lines.append(f"psi = {w['psi']}, r = {w['r']}, nuG(r) = {w['r_value']}")
    lines.append(f"eisenstein: {str(payload['eisenstein']).lower()}")
    if not payload["eisenstein"]:
        lines.append(f"reason: {payload['reason']}")
    return "\n".join(lines)


def _transform_payload(config: RunConfig, t: RadicalTransform) -> dict:
    return {
        "field": config.field,
        "n": _json_int(config.n),
        "a": config.a,
        "u": _json_int(t.u),
        "v": _json_int(t.v),
        "A": str(t.A),
        "g": str(t.g),
        "eisenstein": t.eisenstein,
    }


def _transform_text(payload: dict) -> str:
    return "\n".join(
        [
            f"field: {payload['field']}",
            f"input: x^{payload['n']} - ({payload['a']})",
            f"u = {payload['u']}, v = {payload['v']}",
            f"A = {payload['A']}",
            f"g = {payload['g']}",
            f"eisenstein: {str(payload['eisenstein']).lower()}",
        ]
    )


def run(config: RunConfig, out=None) -> int:
    """Execute a validated config; prints the report, returns the exit code."""
    out = out if out is not None else sys.stdout
    field = parse_descriptor(config.field)
    if config.command in ("check", "ramify"):
        f = parse_poly(field, config.poly)
        report = dedekind_test(f, mode=config.mode)
        if config.command == "ramify":
            ramification_report(report)  # raises on NOT_CLOSED inputs
        payload = _report_payload(config, report)
        text = _report_text(payload, report)
    elif config.command == "eisenstein":
        f = parse_poly(field, config.poly)
        result = is_nu_eisenstein(f)
        payload = _eisenstein_payload(config, result, str(f))
        text = _eisenstein_text(payload)
    elif config.command == "radical":
        a = parse_element(field, config.a)
        report = radical_test(config.n, a, mode=config.mode)
        payload = _report_payload(config, report)
        payload["n"] = _json_int(config.n)
        payload["a"] = config.a
        text = _report_text(payload, report)
    elif config.command == "transform":
        a = parse_element(field, config.a)
        t = radical_transform(config.n, a)
        payload = _transform_payload(config, t)
        text = _transform_text(payload)
    else:  # pragma: no cover - argparse restricts the choices
        raise ParseError(f"unknown command {config.command!r}")
    if config.output == "json":
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(text, file=out)
    return 0


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return run(config)
    except (ParseError, DegreeCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
