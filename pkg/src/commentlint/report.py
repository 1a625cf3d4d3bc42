"""Adherence reports: aggregation, merging and serialization."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .catalog import Rule, RuleCategory
from .checks import Finding, Verdict

SCHEMA = "commentlint/1"
FORMATS = ("text", "json", "csv")
CSV_HEADER = ("file", "line", "class", "rule_id", "category", "source", "verdict", "evidence")
STANDARD, PROJECT_SPECIFIC = "Standard", "ProjectSpecific"


@dataclass(frozen=True)
class Counts:
    followed: int = 0
    violated: int = 0
    not_applicable: int = 0

    @property
    def total(self) -> int:
        return self.followed + self.violated + self.not_applicable

    @property
    def adherence(self) -> float | None:
        """followed / (followed + violated); ``None`` when no rule applied."""
        applied = self.followed + self.violated
        return self.followed / applied if applied else None

    def __add__(self, other: Counts) -> Counts:
        return Counts(
            self.followed + other.followed,
            self.violated + other.violated,
            self.not_applicable + other.not_applicable,
        )

    @classmethod
    def of(cls, verdict: Verdict) -> Counts:
        return cls(
            int(verdict is Verdict.FOLLOWED),
            int(verdict is Verdict.VIOLATED),
            int(verdict is Verdict.NOT_APPLICABLE),
        )

    def as_dict(self) -> dict:
        return {
            "followed": self.followed,
            "violated": self.violated,
            "not_applicable": self.not_applicable,
            "adherence": self.adherence,
        }


@dataclass(frozen=True)
class CommentEntry:
    file: str
    line: int
    class_qualified_name: str
    counts: Counts

    @property
    def key(self) -> tuple[str, int, str]:
        return (self.file, self.line, self.class_qualified_name)

    @property
    def distribution(self) -> tuple[float, float, float]:
        n = self.counts.total
        return (self.counts.followed / n, self.counts.violated / n, self.counts.not_applicable / n)


@dataclass(frozen=True)
class AdherenceReport:
    per_comment: tuple[CommentEntry, ...] = ()
    per_category: Mapping[RuleCategory, Counts] = field(default_factory=dict)
    per_source: Mapping[str, Counts] = field(default_factory=dict)
    per_rule: Mapping[str, Counts] = field(default_factory=dict)
    project_distribution: tuple[float, float, float] = (0.0, 0.0, 0.0)
    totals: Counts = Counts()
    findings: tuple[Finding, ...] = ()

    @property
    def adherence(self) -> float | None:
        return self.totals.adherence


def _sum_maps(maps: Iterable[Mapping], keys: Iterable) -> dict:
    out = {k: Counts() for k in keys}
    for m in maps:
        for k, v in m.items():
            out[k] = out.get(k, Counts()) + v
    return out


def _distribution(entries: Iterable[CommentEntry]) -> tuple[float, float, float]:
    rows = [e.distribution for e in entries]
    if not rows:
        return (0.0, 0.0, 0.0)
    # fsum over a fixed order keeps the mean independent of how the corpus was split
    return tuple(math.fsum(sorted(col)) / len(rows) for col in zip(*rows))


def _build(
    entries: Iterable[CommentEntry],
    per_category: dict,
    per_source: dict,
    per_rule: dict,
    findings: Iterable[Finding],
) -> AdherenceReport:
    ordered = tuple(sorted(entries, key=lambda e: e.key))
    totals = sum((e.counts for e in ordered), Counts())
    return AdherenceReport(
        per_comment=ordered,
        per_category={c: per_category.get(c, Counts()) for c in RuleCategory},
        per_source={k: per_source.get(k, Counts()) for k in (STANDARD, PROJECT_SPECIFIC)},
        per_rule=dict(sorted(per_rule.items())),
        project_distribution=_distribution(ordered),
        totals=totals,
        findings=tuple(sorted(findings, key=lambda f: f.sort_key)),
    )


def aggregate(findings: Iterable[Finding], rules: Iterable[Rule] = ()) -> AdherenceReport:
    """Summarize ``findings``.

    Every rule in ``rules`` gets a per-rule row, even if it produced no
    finding. The project distribution is the mean over comments of each
    comment's (followed, violated, not applicable) shares.
    """
    findings = list(findings)
    comments: dict[tuple, Counts] = {}
    per_category: dict = {}
    per_source: dict = {}
    per_rule: dict = {r.id: Counts() for r in rules}
    for f in findings:
        one = Counts.of(f.verdict)
        key = (f.file, f.line, f.class_qualified_name)
        comments[key] = comments.get(key, Counts()) + one
        per_category[f.category] = per_category.get(f.category, Counts()) + one
        side = PROJECT_SPECIFIC if f.source.is_project_specific else STANDARD
        per_source[side] = per_source.get(side, Counts()) + one
        per_rule[f.rule_id] = per_rule.get(f.rule_id, Counts()) + one
    entries = [CommentEntry(*key, counts) for key, counts in comments.items()]
    return _build(entries, per_category, per_source, per_rule, findings)


def merge(a: AdherenceReport, b: AdherenceReport) -> AdherenceReport:
    """Combine two partial reports, e.g. from different files or workers."""
    comments: dict[tuple, Counts] = {}
    for e in a.per_comment + b.per_comment:
        comments[e.key] = comments.get(e.key, Counts()) + e.counts
    return _build(
        [CommentEntry(*key, counts) for key, counts in comments.items()],
        _sum_maps((a.per_category, b.per_category), ()),
        _sum_maps((a.per_source, b.per_source), ()),
        _sum_maps((a.per_rule, b.per_rule), ()),
        a.findings + b.findings,
    )


# ---------------------------------------------------------------------------
# serialization


def _finding_dict(f: Finding) -> dict:
    return {
        "file": f.file,
        "line": f.line,
        "class": f.class_qualified_name,
        "rule_id": f.rule_id,
        "category": f.category.value,
        "source": str(f.source),
        "verdict": f.verdict.value,
        "evidence": f.evidence,
    }


def to_dict(report: AdherenceReport) -> dict:
    f, v, na = report.project_distribution
    return {
        "schema": SCHEMA,
        "totals": report.totals.as_dict(),
        "project_distribution": {"followed": f, "violated": v, "not_applicable": na},
        "per_category": {c.value: n.as_dict() for c, n in report.per_category.items()},
        "per_source": {k: n.as_dict() for k, n in report.per_source.items()},
        "per_rule": {k: n.as_dict() for k, n in report.per_rule.items()},
        "comments": [
            {"file": e.file, "line": e.line, "class": e.class_qualified_name, **e.counts.as_dict()}
            for e in report.per_comment
        ],
        "findings": [_finding_dict(x) for x in report.findings],
    }


def _pct(x: float | None) -> str:
    return "n/a" if x is None else f"{100 * x:5.1f}%"


def _table(header: tuple[str, ...], rows: list[tuple]) -> list[str]:
    cells = [tuple(str(c) for c in header)] + [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths)))
    return [fmt(cells[0]), "  ".join("-" * w for w in widths)] + [fmt(r) for r in cells[1:]]


def _text(report: AdherenceReport) -> str:
    out = []
    f, v, na = report.project_distribution
    out.append(f"Class comments: {len(report.per_comment)}    findings: {report.totals.total}")
    out.append(f"Overall adherence: {_pct(report.adherence).strip()}")
    out.append("")
    out.append("Share of rules per comment (mean)")
    out += _table(("", "followed", "violated", "not applicable"), [("all comments", _pct(f), _pct(v), _pct(na))])
    out.append("")
    out.append("Rule types followed or not")
    counts_row = lambda name, c: (name, c.followed, c.violated, c.not_applicable, _pct(c.adherence))
    out += _table(
        ("category", "followed", "violated", "n/a", "adherence"),
        [counts_row(c.value, n) for c, n in report.per_category.items()],
    )
    out.append("")
    out += _table(
        ("source", "followed", "violated", "n/a", "adherence"),
        [counts_row(k, n) for k, n in report.per_source.items()],
    )
    if report.per_rule:
        out.append("")
        out += _table(
            ("rule", "followed", "violated", "n/a", "adherence"),
            [counts_row(k, n) for k, n in report.per_rule.items()],
        )
    violations = [x for x in report.findings if x.verdict is Verdict.VIOLATED]
    if violations:
        out.append("")
        out.append("Violations")
        for x in violations:
            out.append(f"{x.file}:{x.line}: {x.class_qualified_name}: {x.rule_id}: {x.evidence}")
    return "\n".join(out) + "\n"


def serialize(report: AdherenceReport, fmt: str = "json") -> bytes:
    """Render ``report`` as ``json``, ``csv`` or ``text``; same report, same bytes."""
    if fmt == "json":
        return (json.dumps(to_dict(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for x in report.findings:
            d = _finding_dict(x)
            writer.writerow([d[k] for k in CSV_HEADER])
        return buf.getvalue().encode("utf-8")
    if fmt == "text":
        return _text(report).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
