"""Command-line entry point: ``commentlint [options] PATH...``.

Exit status: 0 on success, 1 when ``--fail-threshold`` is set and overall
adherence is below it, 2 on configuration or I/O errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, TextIO

from .catalog import DEFAULT_PRESETS, Catalog, Rule, SchemaError, UnknownPreset, load_catalog, resolve_preset, rules_for
from .checks import Finding, evaluate_comment
from .comment_model import Dialect
from .extraction import ExtractionError, Language, decode_source, extract_class_comments, language_for_path
from .report import FORMATS, aggregate, serialize

EXIT_OK, EXIT_BELOW_THRESHOLD, EXIT_CONFIG = 0, 1, 2
RULES_ENV = "COMMENTLINT_RULES"
_EXTENSION = {Language.JAVA: ".java", Language.PYTHON: ".py"}


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    paths: list[str]
    preset_name: str | None = None
    language_filter: str = "auto"
    rule_catalog_path: str | None = None
    output_format: str = "text"
    fail_threshold: float | None = None
    jobs: int = 1
    env: dict[str, str] = field(default_factory=lambda: dict(os.environ))

    def __post_init__(self) -> None:
        if self.fail_threshold is not None and not 0.0 <= self.fail_threshold <= 1.0:
            raise ConfigError(f"fail threshold must be in [0, 1], got {self.fail_threshold}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown format {self.output_format!r}")
        if self.language_filter not in ("auto", "java", "python"):
            raise ConfigError(f"unknown language {self.language_filter!r}")
        if self.jobs < 1:
            raise ConfigError("--jobs must be at least 1")


@dataclass(frozen=True)
class _Plan:
    rules: tuple[Rule, ...]
    dialect: Dialect | None


def _load_catalog(config: RunConfig) -> Catalog:
    path = config.rule_catalog_path or config.env.get(RULES_ENV)
    if not path:
        return load_catalog("")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"{path}: cannot read rule catalog: {exc}") from None
    try:
        return load_catalog(text)
    except SchemaError as exc:
        raise ConfigError(f"{path}:{exc.line}: {exc.message}") from None


def _plans(config: RunConfig, catalog: Catalog) -> dict[Language, _Plan]:
    wanted = None if config.language_filter == "auto" else Language(config.language_filter)
    if config.preset_name:
        preset = resolve_preset(config.preset_name, catalog)
        if wanted is not None and wanted is not preset.language:
            raise ConfigError(f"preset {preset.name!r} is for {preset.language}, not {wanted}")
        return {preset.language: _Plan(tuple(rules_for(preset, catalog)), preset.dialect)}
    plans = {}
    for language, name in DEFAULT_PRESETS.items():
        if wanted in (None, language):
            preset = resolve_preset(name, catalog)
            plans[language] = _Plan(tuple(rules_for(preset, catalog)), preset.dialect)
    return plans


def _collect(paths: Sequence[str], languages: set[Language]) -> list[tuple[str, Language | None]]:
    """Files to scan with their language; explicit files are kept even if unrecognized."""
    files: dict[str, Language | None] = {}
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            for child in sorted(path.rglob("*")):
                lang = language_for_path(child)
                if lang in languages and child.is_file():
                    files[str(child)] = lang
        elif path.is_file():
            lang = language_for_path(path)
            if lang is None and len(languages) == 1:
                lang = next(iter(languages))
            files[str(path)] = lang
        else:
            raise ConfigError(f"{raw}: no such file or directory")
    return sorted(files.items())


def _process(job: tuple[str, Language | None, _Plan | None]) -> tuple[list[Finding], list[str]]:
    path, language, plan = job
    if plan is None:
        return [], [f"{path}:0: skipped: no rules for this file type"]
    try:
        unit = decode_source(path, language)
    except ExtractionError as exc:
        return [], [f"{exc.path}:{exc.line}: {exc.message}"]
    diagnostics: list = []
    findings: list[Finding] = []
    for record in extract_class_comments(unit, diagnostics):
        findings.extend(evaluate_comment(plan.rules, record, plan.dialect))
    return findings, [f"warning: {d}" for d in diagnostics]


def run(config: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Scan ``config.paths`` and write the report; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        catalog = _load_catalog(config)
        plans = _plans(config, catalog)
        files = _collect(config.paths, set(plans))
    except (ConfigError, UnknownPreset) as exc:
        print(f"commentlint: error: {exc}", file=stderr)
        return EXIT_CONFIG

    jobs = [(path, lang, plans.get(lang) if lang else None) for path, lang in files]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_process, jobs, chunksize=max(1, len(jobs) // (4 * config.jobs))))
    else:
        results = [_process(job) for job in jobs]

    findings: list[Finding] = []
    for file_findings, messages in results:
        findings.extend(file_findings)
        for message in messages:
            print(message, file=stderr)

    all_rules = {r.id: r for plan in plans.values() for r in plan.rules}
    report = aggregate(findings, all_rules.values())
    payload = serialize(report, config.output_format)
    buffer = getattr(stdout, "buffer", None)
    if buffer is not None:
        stdout.flush()
        buffer.write(payload)
        buffer.flush()
    else:
        stdout.write(payload.decode("utf-8"))

    adherence = report.adherence
    if config.fail_threshold is not None and adherence is not None and adherence < config.fail_threshold:
        print(
            f"commentlint: adherence {adherence:.3f} is below threshold {config.fail_threshold:.3f}",
            file=stderr,
        )
        return EXIT_BELOW_THRESHOLD
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commentlint",
        description="Check class comments against coding-style guideline rules.",
    )
    parser.add_argument("paths", nargs="+", metavar="PATH", help="files or directories to scan")
    parser.add_argument("--preset", metavar="NAME", help="project or guideline preset (e.g. hadoop, pandas, oracle)")
    parser.add_argument("--lang", choices=("auto", "java", "python"), default="auto")
    parser.add_argument("--rules", metavar="FILE", help=f"extra rule catalog document (fallback: ${RULES_ENV})")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--fail-threshold", type=float, metavar="F", help="exit 1 when overall adherence is below F")
    parser.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes (default 1)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            paths=args.paths,
            preset_name=args.preset,
            language_filter=args.lang,
            rule_catalog_path=args.rules,
            output_format=args.format,
            fail_threshold=args.fail_threshold,
            jobs=args.jobs,
        )
    except ConfigError as exc:
        print(f"commentlint: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return run(config)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); nothing left to report
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
