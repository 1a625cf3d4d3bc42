import csv
import io
import json
import math

from hypothesis import given, settings
from hypothesis import strategies as st

from commentlint.catalog import BUILTIN_RULES, ORACLE, GuidelineSource, RuleCategory
from commentlint.checks import Finding, Verdict, evaluate_comment
from commentlint.report import CSV_HEADER, SCHEMA, AdherenceReport, aggregate, merge, serialize
from strategies import records

HADOOP = GuidelineSource.project_specific("hadoop")


def finding(cls, rule, verdict, source=ORACLE, category=RuleCategory.CONTENT, file="A.java"):
    return Finding(rule, cls, file, 1, verdict, "evidence", category, source)


def test_single_comment_arithmetic():
    fs = [finding("A", f"R{i}", Verdict.FOLLOWED) for i in range(8)]
    fs += [finding("A", f"V{i}", Verdict.VIOLATED) for i in range(2)]
    report = aggregate(fs)
    (entry,) = report.per_comment
    assert entry.counts.adherence == 0.8
    assert report.project_distribution == (0.8, 0.2, 0.0)


def test_mean_over_comments():
    report = aggregate([finding("A", "R", Verdict.FOLLOWED), finding("B", "R", Verdict.NOT_APPLICABLE)])
    assert report.project_distribution == (0.5, 0.0, 0.5)
    assert report.per_comment[1].counts.adherence is None


def test_empty_report_serializes():
    report = aggregate([])
    assert report == AdherenceReport(per_category=report.per_category, per_source=report.per_source)
    doc = json.loads(serialize(report, "json"))
    assert doc["schema"] == SCHEMA
    assert doc["totals"] == {"followed": 0, "violated": 0, "not_applicable": 0, "adherence": None}
    assert doc["comments"] == [] and doc["findings"] == []
    assert serialize(report, "csv").decode() == ",".join(CSV_HEADER) + "\n"
    assert b"n/a" in serialize(report, "text")


def test_source_split():
    report = aggregate([finding("A", "HAD-AUTH", Verdict.VIOLATED, HADOOP), finding("A", "ORA-3P", Verdict.FOLLOWED)])
    assert report.per_source["ProjectSpecific"].violated == 1
    assert report.per_source["Standard"].followed == 1


def _findings(recs):
    return [f for i, r in enumerate(recs) for f in evaluate_comment(BUILTIN_RULES, _renamed(r, i))]


def _renamed(record, i):
    from dataclasses import replace

    return replace(record, qualified_name=f"C{i}", class_name=f"C{i}", file=f"f{i % 3}.java")


@settings(max_examples=150)
@given(st.lists(records(), max_size=12))
def test_report_invariants(recs):
    report = aggregate(_findings(recs), BUILTIN_RULES)
    if report.per_comment:
        assert math.isclose(sum(report.project_distribution), 1.0, abs_tol=1e-9)
    assert all(0.0 <= x <= 1.0 for x in report.project_distribution)
    cats = [c for c in report.per_category.values()]
    assert sum((c.total for c in cats)) == report.totals.total
    assert sum(c.total for c in report.per_source.values()) == report.totals.total
    assert sum(c.total for c in report.per_rule.values()) == report.totals.total
    for entry in report.per_comment:
        assert entry.counts.total == sum(entry.class_qualified_name == f.class_qualified_name for f in report.findings)


@settings(max_examples=150)
@given(st.lists(records(), max_size=10), st.randoms(use_true_random=False))
def test_merge_matches_aggregate(recs, rnd):
    fs = _findings(recs)
    rnd.shuffle(fs)
    cut = rnd.randint(0, len(fs))
    a, b = fs[:cut], fs[cut:]
    assert merge(aggregate(a, BUILTIN_RULES), aggregate(b, BUILTIN_RULES)) == aggregate(fs, BUILTIN_RULES)
    assert merge(aggregate(a), aggregate(b)) == merge(aggregate(b), aggregate(a))


@settings(max_examples=50)
@given(st.lists(records(), max_size=8))
def test_serialization_is_stable(recs):
    fs = _findings(recs)
    report = aggregate(fs)
    for fmt in ("json", "csv", "text"):
        assert serialize(report, fmt) == serialize(aggregate(list(reversed(fs))), fmt)
    rows = list(csv.reader(io.StringIO(serialize(report, "csv").decode())))
    assert len(rows) == len(fs) + 1
    keys = [(f["file"], f["line"], f["rule_id"]) for f in json.loads(serialize(report, "json"))["findings"]]
    assert keys == sorted(keys)
