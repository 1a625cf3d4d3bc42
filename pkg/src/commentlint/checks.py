"""Rule evaluation: one verdict per (class comment, rule)."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from . import predicates
from .catalog import GuidelineSource, Rule, RuleCategory
from .comment_model import Dialect, StructuredComment, parse_record
from .extraction import ClassCommentRecord

EVIDENCE_LIMIT = 120


class Verdict(str, enum.Enum):
    FOLLOWED = "Followed"
    VIOLATED = "Violated"
    NOT_APPLICABLE = "NotApplicable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Finding:
    rule_id: str
    class_qualified_name: str
    file: str
    line: int
    verdict: Verdict
    evidence: str
    category: RuleCategory
    source: GuidelineSource

    def __post_init__(self) -> None:
        if self.verdict is Verdict.VIOLATED and not self.evidence:
            raise ValueError(f"{self.rule_id}: a violation needs evidence")

    @property
    def sort_key(self) -> tuple:
        return (self.file, self.line, self.rule_id, self.class_qualified_name)


def _cap(text: str) -> str:
    text = " ".join(text.split())
    return text if len(text) <= EVIDENCE_LIMIT else text[: EVIDENCE_LIMIT - 3] + "..."


def evaluate_rule(rule: Rule, comment: StructuredComment | None, record: ClassCommentRecord) -> Finding:
    """Judge ``record`` (with its parsed ``comment``, or ``None``) against one rule.

    Rules that need more than the record are NotApplicable for classes
    without a comment; rules that need a structured parse are NotApplicable
    for malformed comments.
    """

    def finding(verdict: Verdict, evidence: str) -> Finding:
        return Finding(
            rule_id=rule.id,
            class_qualified_name=record.qualified_name,
            file=record.file,
            line=record.class_line,
            verdict=verdict,
            evidence=_cap(evidence),
            category=rule.category,
            source=rule.source,
        )

    level = rule.level
    if comment is None and level > predicates.RECORD:
        return finding(Verdict.NOT_APPLICABLE, "no class comment")
    if comment is not None and not comment.well_formed and level >= predicates.PARSED:
        return finding(Verdict.NOT_APPLICABLE, "malformed comment")

    gate = predicates.run(rule.applicability, comment, record, rule.params)
    if not gate.holds:
        return finding(Verdict.NOT_APPLICABLE, gate.evidence or f"{rule.applicability} does not hold")
    check = predicates.run(rule.followed, comment, record, rule.params)
    if check.holds:
        return finding(Verdict.FOLLOWED, check.evidence)
    return finding(Verdict.VIOLATED, check.evidence or f"line {record.class_line}: {rule.title} not satisfied")


def evaluate_comment(
    rules: Iterable[Rule], record: ClassCommentRecord, dialect_hint: Dialect | None = None
) -> list[Finding]:
    """One finding per rule for ``record``'s language, in the order given."""
    comment = parse_record(record, dialect_hint)
    return [evaluate_rule(rule, comment, record) for rule in rules if record.language in rule.languages]
