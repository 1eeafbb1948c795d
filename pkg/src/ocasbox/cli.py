"""Command line entry point: ``ocasbox {search,analyze,rule-info,classify}``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Sequence

from .boolfun import (
    anf,
    degree,
    from_rule_number,
    is_balanced,
    is_bipermutive,
    is_linear,
    nonlinearity,
    rule_polynomial,
)
from .ca import is_oca_pair, latin_square
from .codes import classify_code
from .errors import OcaError
from .lcs import lcs_code, span_basis
from .sbox import from_oca, is_bijective, sbox_degree, sbox_nonlinearity
from .search import (
    MAX_DIAMETER,
    MIN_DIAMETER,
    SearchReport,
    check_diameter,
    default_workers,
    generator_label,
    run_search,
)

log = logging.getLogger("ocasbox")


@dataclass
class CliConfig:
    command: str
    diameter: Optional[int] = None
    rules: tuple[int, ...] = ()
    workers: int = 1
    output: Optional[Path] = None
    input: Optional[Path] = None
    format: str = "table"


def rule_number(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal or 0x-hex integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"rule numbers are nonnegative, got {value}")
    return value


def diameter(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not MIN_DIAMETER <= d <= MAX_DIAMETER:
        raise argparse.ArgumentTypeError(f"diameter must be in [{MIN_DIAMETER}, {MAX_DIAMETER}], got {d}")
    return d


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ocasbox", description="S-boxes from orthogonal cellular automata."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="exhaustive search over bipermutive rule pairs")
    s.add_argument("-d", "--diameter", type=diameter, required=True)
    s.add_argument("-w", "--workers", type=int, default=None,
                   help="worker processes (default: $OCASBOX_WORKERS or 1)")
    s.add_argument("-o", "--output", type=Path, help="write the report to this file")
    s.add_argument("-f", "--format", choices=["json", "csv", "table"], default=None,
                   help="report format (default: json with --output, table otherwise)")

    a = sub.add_parser("analyze", help="analyze one pair of rules")
    a.add_argument("-d", "--diameter", type=int, required=True)
    a.add_argument("rules", type=rule_number, nargs=2, metavar="RULE")

    r = sub.add_parser("rule-info", help="describe a single local rule")
    r.add_argument("-d", "--diameter", type=int, required=True)
    r.add_argument("rule", type=rule_number)

    c = sub.add_parser("classify", help="re-classify and re-aggregate a saved JSON report")
    c.add_argument("-i", "--input", type=Path, required=True)
    c.add_argument("-f", "--format", choices=["json", "csv", "table"], default="table")
    c.add_argument("-o", "--output", type=Path)
    return parser


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def _render(report: SearchReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    return report.format_table()


def cmd_search(cfg: CliConfig) -> int:
    check_diameter(cfg.diameter)
    if cfg.output is None:
        sys.stdout.write(_render(run_search(cfg.diameter, cfg.workers), cfg.format))
        return 0
    # open first so an unwritable path fails before the search runs
    with cfg.output.open("w") as fh:
        report = run_search(cfg.diameter, cfg.workers)
        fh.write(_render(report, cfg.format))
    sys.stdout.write(report.format_table())
    return 0


def cmd_classify(cfg: CliConfig) -> int:
    report = SearchReport.from_json(cfg.input.read_text())
    reclassified = []
    for rec in report.records:
        code = span_basis(rec.lcs_basis, 2 * (rec.d - 1))
        reclassified.append(replace(rec, classification=classify_code(code)))
    report.records = reclassified
    _emit(_render(report, cfg.format), cfg.output)
    return 0


def _rule_lines(rule, label: str) -> list[str]:
    g = is_bipermutive(rule) if rule.n_vars >= 2 else None
    lines = [
        f"{label}: rule {rule.number} (0x{rule.number:x}), d={rule.n_vars}",
        f"  truth table: {''.join(map(str, rule.bits))}",
        f"  ANF: {anf(rule)}",
        f"  degree: {degree(rule)}",
        f"  balanced: {'yes' if is_balanced(rule) else 'no'}",
        f"  nonlinearity: {nonlinearity(rule)}",
    ]
    if g is None:
        lines.append("  bipermutive: no")
    else:
        lines.append(f"  bipermutive: yes, generating function {anf(g)}")
        if is_linear(rule):
            lines.append(f"  linear, polynomial: {rule_polynomial(rule)}")
    return lines


def cmd_rule_info(cfg: CliConfig) -> int:
    rule = from_rule_number(cfg.rules[0], cfg.diameter)
    print("\n".join(_rule_lines(rule, "rule")))
    return 0


def cmd_analyze(cfg: CliConfig) -> int:
    f, g = (from_rule_number(r, cfg.diameter) for r in cfg.rules)
    out = _rule_lines(f, "f") + _rule_lines(g, "g")
    for name, rule in (("f", f), ("g", g)):
        if rule.n_vars < 2 or is_bipermutive(rule) is None:
            print("\n".join(out))
            print(f"error: {name} = rule {rule.number} is not bipermutive", file=sys.stderr)
            return 2
    if not is_oca_pair(f, g):
        out.append("orthogonal: no (not orthogonal)")
        print("\n".join(out))
        return 0
    H = from_oca(f, g)
    code = lcs_code(H)
    c = classify_code(code)
    out += [
        "orthogonal: yes",
        f"latin square f:\n{latin_square(f).to_text()}",
        f"latin square g:\n{latin_square(g).to_text()}",
        f"S-box (n={H.n}): {H.to_hex()}",
        f"  bijective: {'yes' if is_bijective(H) else 'no'}",
        f"  nonlinearity: {sbox_nonlinearity(H)}",
        f"  degree: {sbox_degree(H)}",
        f"  LCS dimension: {code.dimension}",
        "  LCS basis:",
        *(f"    {row}" for row in code.rows_as_bits()),
        f"  polynomial code: {'yes' if c.is_polynomial else 'no'}",
        f"  generator: {generator_label(c)}",
        f"  cyclic: {'yes' if c.is_cyclic else 'no'}",
    ]
    print("\n".join(out))
    return 0


COMMANDS = {
    "search": cmd_search,
    "analyze": cmd_analyze,
    "rule-info": cmd_rule_info,
    "classify": cmd_classify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        workers = getattr(args, "workers", None)
        if workers is None:
            workers = default_workers()
        if workers < 1:
            parser.error(f"--workers must be positive, got {workers}")
        fmt = getattr(args, "format", None)
        if fmt is None:
            fmt = "json" if getattr(args, "output", None) else "table"
        rules = tuple(getattr(args, "rules", ()) or ())
        if args.command == "rule-info":
            rules = (args.rule,)
        cfg = CliConfig(
            command=args.command,
            diameter=getattr(args, "diameter", None),
            rules=rules,
            workers=workers,
            output=getattr(args, "output", None),
            input=getattr(args, "input", None),
            format=fmt,
        )
        return COMMANDS[args.command](cfg)
    except OcaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
