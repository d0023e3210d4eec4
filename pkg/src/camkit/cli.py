"""Command-line front end.

Subcommands: ``describe`` chart data, ``audit`` dump files, ``eval`` a
labeled corpus, ``simulate`` a screen-reader transcript. Payloads go to
stdout in the declared format; diagnostics go to stderr only.

Exit codes: 0 success, 2 input or schema error, 3 partial processing
failure, 64 usage. ``--fail-on-inaccessible`` exits 1 when an audit finds
an inaccessible chart, for CI gating.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Sequence

from .audit import (
    AccessibilityStatus,
    LabelsError,
    accessibility_agreement,
    aggregate_stats,
    audit_screen,
    build_report,
    evaluate_corpus,
    load_labels_csv,
)
from .chartdata import ChartDataError, load_chart_file, load_registry_file
from .hierarchy import DumpError, parse_dump_file, walk
from .phrasing import DescriptorConfig
from .simulator import simulate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PARTIAL = 3
EXIT_USAGE = 64

CONFIG_ENV_VAR = "CAM_CONFIG"

_CONFIG_TYPES = {
    "max_read_entries": int,
    "half_tolerance": float,
    "flat_epsilon": float,
    "proximity_px": int,
    "repaired_rain_bands": bool,
}


class CliInputError(Exception):
    """Input problem that maps to exit code 2."""


@dataclass
class CliConfig:
    max_read_entries: int = 7
    half_tolerance: float = 0.05
    flat_epsilon: float = 0.0
    proximity_px: int = 120
    repaired_rain_bands: bool = False

    def __post_init__(self) -> None:
        # DescriptorConfig owns the validity rules for its two fields.
        self.descriptor_config()
        if self.flat_epsilon < 0:
            raise ValueError("flat_epsilon cannot be negative")
        if self.proximity_px < 0:
            raise ValueError("proximity_px cannot be negative")

    def descriptor_config(self) -> DescriptorConfig:
        return DescriptorConfig(
            max_read_entries=self.max_read_entries,
            half_tolerance=self.half_tolerance,
        )


class _Parser(argparse.ArgumentParser):
    """argparse parser that reports usage problems with exit code 64."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_config_file(path: str) -> dict:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliInputError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliInputError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise CliInputError(f"config file {path} must hold a JSON object")
    for key, value in obj.items():
        expected = _CONFIG_TYPES.get(key)
        if expected is None:
            raise CliInputError(f"config file {path}: unknown setting {key!r}")
        if expected is bool:
            ok = isinstance(value, bool)
        elif expected is int:
            ok = isinstance(value, int) and not isinstance(value, bool)
        else:
            ok = isinstance(value, (int, float)) and not isinstance(value, bool)
        if not ok:
            raise CliInputError(
                f"config file {path}: setting {key!r} expects {expected.__name__}"
            )
    return obj


def _resolve_config(args: argparse.Namespace) -> CliConfig:
    """Layer settings: defaults, then config file, then explicit flags."""
    values = {f.name: f.default for f in fields(CliConfig)}
    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if config_path:
        values.update(_load_config_file(config_path))
    overrides = {
        "max_read_entries": args.max_read,
        "half_tolerance": args.half_tolerance,
        "flat_epsilon": args.flat_epsilon,
        "proximity_px": args.proximity_px,
        "repaired_rain_bands": args.repaired_rain_bands,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return CliConfig(**values)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc


def build_parser() -> _Parser:
    parser = _Parser(
        prog="cam",
        description=(
            "Chart accessibility toolkit: generate spoken chart summaries, "
            "audit UI dumps for inaccessible charts, score audits against "
            "labeled corpora, and simulate screen-reader transcripts."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help=f"JSON settings file (default: ${CONFIG_ENV_VAR})")
    common.add_argument("--max-read", type=int, metavar="N",
                        help="entries read individually before grouping into others")
    common.add_argument("--half-tolerance", type=float, metavar="T",
                        help="band around 0.5 spoken as 'approximately half'")
    common.add_argument("--flat-epsilon", type=float, metavar="E",
                        help="endpoint move treated as sideways rather than a trend")
    common.add_argument("--proximity-px", type=int, metavar="PX",
                        help="how far below a chart counts as a nearby description")
    common.add_argument("--repaired-rain-bands", action="store_true", default=None,
                        help="use the gap-free rainfall wording table")

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    describe = commands.add_parser(
        "describe", parents=[common], help="print the summary for a chart-data JSON file"
    )
    describe.add_argument("input", metavar="CHART_JSON")

    audit = commands.add_parser(
        "audit", parents=[common], help="audit dump files and print a JSON report"
    )
    audit.add_argument("dumps", metavar="DUMP_XML", nargs="+")
    audit.add_argument("--fail-on-inaccessible", action="store_true",
                       help="exit 1 when any chart is inaccessible (CI gating)")
    audit.add_argument("--report-dir", metavar="DIR",
                       help="also write CSV findings and figures to this directory")

    evaluate = commands.add_parser(
        "eval", parents=[common], help="score audits of a dump directory against labels"
    )
    evaluate.add_argument("dump_dir", metavar="DUMP_DIR")
    evaluate.add_argument("labels_csv", metavar="LABELS_CSV")
    evaluate.add_argument("--report-dir", metavar="DIR",
                          help="also write CSV metrics and figures to this directory")

    sim = commands.add_parser(
        "simulate", parents=[common],
        help="print the screen-reader transcript for a dump, one utterance per line",
    )
    sim.add_argument("dump", metavar="DUMP_XML")
    sim.add_argument("registry", metavar="REGISTRY_JSON")
    return parser


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _cmd_describe(args: argparse.Namespace, config: CliConfig) -> int:
    try:
        descriptor = load_chart_file(
            args.input,
            config.descriptor_config(),
            config.flat_epsilon,
            config.repaired_rain_bands,
        )
    except ChartDataError as exc:
        _say(f"cam describe: {exc}")
        return EXIT_INPUT
    print(descriptor.describe())
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace, config: CliConfig) -> int:
    audits = []
    errors = []
    for dump_path in args.dumps:
        try:
            root = parse_dump_file(dump_path)
        except (DumpError, OSError) as exc:
            errors.append((str(dump_path), str(exc)))
            _say(f"cam audit: {dump_path}: {exc}")
            continue
        audits.append(audit_screen(root, config.proximity_px, source_file=str(dump_path)))
    report = build_report(audits, errors)
    print(json.dumps(report, indent=2))
    if args.report_dir:
        from .report import write_audit_report

        for path in write_audit_report(audits, args.report_dir):
            _say(f"cam audit: wrote {path}")
    if errors:
        return EXIT_PARTIAL
    found_inaccessible = any(
        status is AccessibilityStatus.INACCESSIBLE
        for audit in audits
        for _, status in audit.candidates
    )
    if args.fail_on_inaccessible and found_inaccessible:
        return 1
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace, config: CliConfig) -> int:
    dump_dir = Path(args.dump_dir)
    if not dump_dir.is_dir():
        _say(f"cam eval: {dump_dir} is not a directory")
        return EXIT_INPUT
    dumps = sorted(dump_dir.glob("*.xml"))
    if not dumps:
        _say(f"cam eval: no .xml dumps found in {dump_dir}")
        return EXIT_INPUT
    try:
        labels = load_labels_csv(args.labels_csv)
    except (LabelsError, OSError) as exc:
        _say(f"cam eval: {exc}")
        return EXIT_INPUT

    labeled = {label.source_file for label in labels}
    dump_names = [p.name for p in dumps]
    missing = sorted(set(dump_names) - labeled)
    spare = sorted(labeled - set(dump_names))
    if missing or spare:
        if missing:
            _say(f"cam eval: dumps without labels: {', '.join(missing)}")
        if spare:
            _say(f"cam eval: labels without dumps: {', '.join(spare)}")
        return EXIT_INPUT

    audits = []
    for path in dumps:
        try:
            root = parse_dump_file(path)
        except DumpError as exc:
            _say(f"cam eval: {path}: {exc}")
            return EXIT_INPUT
        audits.append(audit_screen(root, config.proximity_px, source_file=path.name))

    metrics = evaluate_corpus(audits, labels)
    payload = {
        "chart_presence": metrics.to_dict(),
        "aggregate": aggregate_stats(audits).to_dict(),
        "accessibility_agreement": accessibility_agreement(audits, labels),
    }
    print(json.dumps(payload, indent=2))
    if args.report_dir:
        from .report import write_eval_report

        for path in write_eval_report(payload, args.report_dir):
            _say(f"cam eval: wrote {path}")
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace, config: CliConfig) -> int:
    try:
        root = parse_dump_file(args.dump)
    except (DumpError, OSError) as exc:
        _say(f"cam simulate: {args.dump}: {exc}")
        return EXIT_INPUT
    try:
        registry = load_registry_file(
            args.registry,
            config.descriptor_config(),
            config.flat_epsilon,
            config.repaired_rain_bands,
        )
    except ChartDataError as exc:
        _say(f"cam simulate: {exc}")
        return EXIT_INPUT

    present = {node.resource_id for node in walk(root) if node.resource_id}
    for resource_id in sorted(registry.resource_ids() - present):
        _say(f"cam simulate: warning: binding {resource_id!r} matches no node in {args.dump}")

    for utterance in simulate(root, registry):
        spoken = " ".join(utterance.spoken_text.split("\n"))
        print(f"[{utterance.source.value}] {spoken}")
    return EXIT_OK


_COMMANDS = {
    "describe": _cmd_describe,
    "audit": _cmd_audit,
    "eval": _cmd_eval,
    "simulate": _cmd_simulate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
    except CliInputError as exc:
        _say(f"cam: {exc}")
        return EXIT_INPUT
    return _COMMANDS[args.command](args, config)


if __name__ == "__main__":
    sys.exit(main())
