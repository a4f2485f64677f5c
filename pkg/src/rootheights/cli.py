"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.
Caps may be overridden through ROOTHEIGHTS_WEYL_ORDER_CAP and
ROOTHEIGHTS_PARTITION_CAP; explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence, TextIO

from .errors import CapExceededError, DomainError, RootHeightsError
from .fseries import coefficient, xi_series
from .identities import (
    ClaimRecord,
    VerificationReport,
    conjugate_partition,
    constant_term_report,
    duality_report,
    exponents_from_heights,
    exponents_from_kostka,
    fact1_report,
    fact2_report,
    kostka_theta,
    oracle_report,
    verify_prop1,
)
from .rootsys import DEFAULT_WEYL_ORDER_CAP, RootSystem, root_system
from .tpoly import TPoly
from .vecpart import DEFAULT_PARTITION_CAP, xi_coefficient_comb

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

WEYL_CAP_ENV = "ROOTHEIGHTS_WEYL_ORDER_CAP"
PARTITION_CAP_ENV = "ROOTHEIGHTS_PARTITION_CAP"

TARGETS = ("prop1", "oracle", "fact1", "fact2", "duality", "constant-term", "all")
# Targets that need the Weyl-sum Kostka-Foulkes polynomial.
WEYL_TARGETS = {"duality", "constant-term", "all"}


@dataclass(frozen=True)
class CliConfig:
    command: str
    family: str
    rank: int
    verify_target: str | None = None
    height_bound: int | None = None
    gamma: tuple[int, ...] | None = None
    format: str = "json"
    slow: bool = False
    weyl_order_cap: int = DEFAULT_WEYL_ORDER_CAP
    partition_cap: int = DEFAULT_PARTITION_CAP


class UsageError(RootHeightsError):
    pass


def _parse_gamma(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{name} must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootheights",
        description="Root systems, the truncated xi expansion, and exponent/height identities.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, help="Cartan type letter A-G")
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--height-bound", type=int, default=None)
    common.add_argument("--slow", action="store_true", help="allow E-type Weyl sums")
    common.add_argument("--weyl-order-cap", type=int, default=None)
    common.add_argument("--partition-cap", type=int, default=None)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="list positive roots")
    sub.add_parser("exponents", parents=[common], help="exponents from heights and from K_theta,0")
    xi = sub.add_parser("xi-coeff", parents=[common], help="coefficient of e^-gamma in xi")
    xi.add_argument("--gamma", required=True, type=_parse_gamma, help="e.g. 1,1")
    ver = sub.add_parser("verify", parents=[common], help="check identities")
    ver.add_argument("--target", required=True, choices=TARGETS)
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    weyl_cap = args.weyl_order_cap or _env_cap(WEYL_CAP_ENV, DEFAULT_WEYL_ORDER_CAP)
    part_cap = args.partition_cap or _env_cap(PARTITION_CAP_ENV, DEFAULT_PARTITION_CAP)
    return CliConfig(
        command=args.command,
        family=args.family.upper(),
        rank=args.rank,
        verify_target=getattr(args, "target", None),
        height_bound=args.height_bound,
        gamma=getattr(args, "gamma", None),
        format=args.format,
        slow=args.slow,
        weyl_order_cap=weyl_cap,
        partition_cap=part_cap,
    )



def _value_json(v: Any) -> Any:
    if isinstance(v, TPoly):
        return v.to_list()
    if isinstance(v, dict):
        return {k: _value_json(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_value_json(x) for x in v]
    return v


def _record_json(rec: ClaimRecord) -> dict[str, Any]:
    out: dict[str, Any] = {"id": rec.claim_id}
    out.update({k: _value_json(v) for k, v in rec.inputs.items()})
    out["expected"] = _value_json(rec.expected)
    out["computed"] = _value_json(rec.computed)
    out["pass"] = rec.passed
    if isinstance(rec.expected, TPoly) and isinstance(rec.computed, TPoly):
        out["annotation"] = {"expected": rec.expected.pretty(), "computed": rec.computed.pretty()}
    return out


def _tsv_cell(v: Any) -> str:
    v = _value_json(v)
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit_report(report: VerificationReport, fmt: str) -> str:
    """Render a report; timing metadata is left out so output is reproducible."""
    if fmt == "json":
        doc = {
            "system": report.system,
            "pass": report.passed,
            "claims": [_record_json(r) for r in report.records],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    if fmt == "tsv":
        lines = []
        for rec in report.records:
            inputs = ";".join(f"{k}={_tsv_cell(v)}" for k, v in rec.inputs.items())
            cells = [report.system, rec.claim_id, inputs, _tsv_cell(rec.expected), _tsv_cell(rec.computed)]
            cells.append("pass" if rec.passed else "FAIL")
            lines.append("\t".join(cells))
        return "".join(line + "\n" for line in lines)
    raise DomainError(f"unknown format {fmt!r}")


def _emit_table(rows: list[dict[str, Any]], fmt: str, header: dict[str, Any]) -> str:
    if fmt == "json":
        return json.dumps({**header, "rows": rows}, separators=(",", ":")) + "\n"
    return "".join("\t".join(_tsv_cell(v) for v in row.values()) + "\n" for row in rows)


def _needs_slow(system: RootSystem) -> bool:
    return system.label.startswith("E")


def _check_slow(config: CliConfig, system: RootSystem) -> None:
    if _needs_slow(system) and not config.slow:
        raise UsageError(f"Weyl-sum checks for {system.label} are in the slow tier; pass --slow")


def _verify(config: CliConfig, system: RootSystem) -> VerificationReport:
    target = config.verify_target
    pcap, wcap = config.partition_cap, config.weyl_order_cap
    report = VerificationReport(system.label)
    if target in WEYL_TARGETS:
        _check_slow(config, system)
    kostka = None
    if target in WEYL_TARGETS:
        kostka = kostka_theta(system, weyl_order_cap=wcap, partition_cap=pcap)
    if target in ("prop1", "all"):
        report.extend(verify_prop1(system, pcap))
    if target in ("oracle", "all"):
        report.extend(oracle_report(system, pcap))
    if target in ("fact1", "all"):
        report.extend(fact1_report(system, pcap))
    if target in ("fact2", "all"):
        report.extend(fact2_report(system, pcap))
    if target in ("duality", "all"):
        report.extend(duality_report(system, kostka))
    if target in ("constant-term", "all"):
        report.extend(constant_term_report(system, kostka, partition_cap=pcap))
    return report


def run(config: CliConfig, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    system = root_system(config.family, config.rank)
    if config.command == "roots":
        rows = [{"root": list(r), "height": r.height} for r in system.positive_roots]
        header = {
            "system": system.label,
            "theta": list(system.theta),
            "rho": [str(x) for x in system.rho],
            "height_counts": list(system.height_counts),
        }
        out.write(_emit_table(rows, config.format, header))
        return EXIT_OK
    if config.command == "exponents":
        heights = exponents_from_heights(system)
        doc: dict[str, Any] = {
            "system": system.label,
            "height_counts": list(system.height_counts),
            "exponents_from_heights": list(heights),
            "dual_partition": list(conjugate_partition(system.height_counts)),
        }
        if not _needs_slow(system) or config.slow:
            k = kostka_theta(system, config.weyl_order_cap, config.partition_cap)
            doc["kostka_theta"] = k.to_list()
            doc["exponents_from_kostka"] = list(exponents_from_kostka(k))
        if config.format == "json":
            out.write(json.dumps(doc, separators=(",", ":")) + "\n")
        else:
            out.write("".join(f"{k}\t{_tsv_cell(v)}\n" for k, v in doc.items()))
        return EXIT_OK
    if config.command == "xi-coeff":
        gamma = config.gamma
        if gamma is None or len(gamma) != system.rank:
            raise UsageError(f"--gamma needs {system.rank} comma-separated coordinates")
        if any(g < 0 for g in gamma):
            raise UsageError("--gamma must lie in Q+ (nonnegative coordinates)")
        comb = xi_coefficient_comb(gamma, system, config.partition_cap)
        bound = config.height_bound if config.height_bound is not None else sum(gamma)
        if bound < sum(gamma):
            raise UsageError(f"--height-bound {bound} is below the height of gamma")
        series = coefficient(xi_series(system, bound), gamma)
        doc = {
            "system": system.label,
            "gamma": list(gamma),
            "coeff": comb.to_list(),
            "pass": comb == series,
            "annotation": comb.pretty(),
        }
        if config.format == "json":
            out.write(json.dumps(doc, separators=(",", ":")) + "\n")
        else:
            out.write(f"{system.label}\t{_tsv_cell(gamma)}\t{_tsv_cell(comb)}\n")
        return EXIT_OK if comb == series else EXIT_FAIL
    report = _verify(config, system)
    out.write(emit_report(report, config.format))
    return EXIT_OK if report.passed else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return run(config)
    except (DomainError, UsageError) as exc:
        parser.print_usage(sys.stderr)
        print(f"rootheights: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"rootheights: {exc.cap_name} exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
