"""Check class comments in Java and Python sources against coding-style guidelines."""

from .catalog import Catalog, GuidelineSource, Preset, Rule, RuleCategory, load_catalog, resolve_preset, rules_for
from .checks import Finding, Verdict, evaluate_comment, evaluate_rule
from .comment_model import Dialect, StructuredComment, parse_javadoc, parse_pydoc
from .extraction import ClassCommentRecord, Language, decode_source, extract_class_comments
from .report import AdherenceReport, aggregate, merge, serialize

__version__ = "0.1.0"

__all__ = [
    "AdherenceReport",
    "Catalog",
    "ClassCommentRecord",
    "Dialect",
    "Finding",
    "GuidelineSource",
    "Language",
    "Preset",
    "Rule",
    "RuleCategory",
    "StructuredComment",
    "Verdict",
    "aggregate",
    "decode_source",
    "evaluate_comment",
    "evaluate_rule",
    "extract_class_comments",
    "load_catalog",
    "merge",
    "parse_javadoc",
    "parse_pydoc",
    "resolve_preset",
    "rules_for",
    "serialize",
]
