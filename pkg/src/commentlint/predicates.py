"""Named predicates that rules refer to.

A catalog rule never carries code; it names an applicability predicate and a
followed predicate from :data:`REGISTRY`. Prefixing a name with ``not:``
negates it, which is how prohibitions ("no @author tags") are expressed.

Each predicate declares the least information it needs:

* ``RECORD``  - only the class record (works for classes without a comment)
* ``COMMENT`` - the raw comment text
* ``PARSED``  - a well-formed structured parse
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Callable, Mapping, NamedTuple

from .comment_model import StructuredComment
from .extraction import ClassCommentRecord, Language

RECORD, COMMENT, PARSED = 0, 1, 2

NEGATION_PREFIX = "not:"

BOGUS_MARKERS = ("FIXME", "XXX", "BROKEN", "HACK")
_BOGUS_RE = re.compile(r"\b(" + "|".join(BOGUS_MARKERS) + r")\b")
_SERIALIZABLE_RE = re.compile(r"\b(?:Serializable|Externalizable)\b")
_USE_RE = re.compile(r"\buse\b", re.IGNORECASE)

# Canonical block tag order; exception and throws share a slot.
TAG_ORDER = {
    "author": 0, "version": 1, "param": 2, "return": 3, "exception": 4,
    "throws": 4, "see": 5, "since": 6, "serial": 7, "deprecated": 8,
}


class Check(NamedTuple):
    holds: bool
    evidence: str = ""


@dataclass(frozen=True)
class Predicate:
    name: str
    fn: Callable[[StructuredComment | None, ClassCommentRecord, Mapping[str, Any]], Check]
    level: int
    doc: str


REGISTRY: dict[str, Predicate] = {}


def predicate(level: int):
    def register(fn):
        REGISTRY[fn.__name__] = Predicate(fn.__name__, fn, level, (fn.__doc__ or "").strip())
        return fn

    return register


def resolve(name: str) -> tuple[Predicate, bool]:
    """Look up ``name``; returns the predicate and whether it is negated."""
    negated = name.startswith(NEGATION_PREFIX)
    base = name[len(NEGATION_PREFIX) :] if negated else name
    try:
        return REGISTRY[base], negated
    except KeyError:
        raise KeyError(name) from None


def is_known(name: str) -> bool:
    try:
        resolve(name)
    except KeyError:
        return False
    return True


def level_of(name: str) -> int:
    return resolve(name)[0].level


def run(name: str, comment: StructuredComment | None, record: ClassCommentRecord, params: Mapping[str, Any]) -> Check:
    pred, negated = resolve(name)
    result = pred.fn(comment, record, params)
    if negated:
        return Check(not result.holds, result.evidence)
    return result


# ---------------------------------------------------------------------------
# helpers


@lru_cache(maxsize=None)
def imperative_lexicon() -> frozenset[str]:
    text = resources.files("commentlint").joinpath("data/imperative_verbs.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower() for line in text.splitlines() if line.strip() and not line.startswith("#")
    )


def _base_forms(word: str) -> list[str]:
    forms = []
    if word.endswith("ies") and len(word) > 3:
        forms.append(word[:-3] + "y")
    if word.endswith("es"):
        forms.append(word[:-2])
    if word.endswith("s"):
        forms.append(word[:-1])
    return forms


def _comment_line(record: ClassCommentRecord, index: int) -> int:
    return record.comment_span[0] + index


def _find_line(comment: StructuredComment, pattern: re.Pattern[str] | str) -> int:
    rx = re.compile(pattern) if isinstance(pattern, str) else pattern
    for i, line in enumerate(comment.raw_lines):
        if rx.search(line):
            return i
    return 0


def _tag_line(comment: StructuredComment, record: ClassCommentRecord, tag: str) -> int:
    return _comment_line(record, _find_line(comment, r"^\s*@" + re.escape(tag) + r"\b"))


def _quote(text: str, limit: int = 40) -> str:
    text = " ".join(text.split())
    return repr(text if len(text) <= limit else text[: limit - 3] + "...")


# ---------------------------------------------------------------------------
# record-level


@predicate(RECORD)
def always(comment, record, params):
    """Always holds."""
    return Check(True, "always applicable")


@predicate(RECORD)
def comment_present(comment, record, params):
    """The class has a documentation comment."""
    if record.comment_present:
        return Check(True, f"comment at lines {record.comment_span[0]}-{record.comment_span[1]}")
    return Check(False, f"no documentation comment before {record.kind} {record.class_name} (line {record.class_line})")


@predicate(RECORD)
def has_public_members(comment, record, params):
    """The class body declares public methods or attributes."""
    names = record.visible_member_names
    if names:
        return Check(True, f"{len(names)} public member(s)")
    return Check(False, "no public members")


# ---------------------------------------------------------------------------
# raw-text level


@predicate(COMMENT)
def comment_well_formed(comment, record, params):
    """The comment delimiters are complete."""
    if comment.well_formed:
        return Check(True, "well-formed")
    return Check(False, "; ".join(comment.diagnostics) or "malformed comment")


@predicate(COMMENT)
def multi_line(comment, record, params):
    """The comment spans two or more lines."""
    lines = record.raw_comment.count("\n") + 1
    return Check(lines >= 2, f"{lines} line(s)")


@predicate(COMMENT)
def lines_within_limit(comment, record, params):
    """Every physical comment line fits in ``limit`` columns (default 80)."""
    limit = int(params.get("limit", 80))
    for i, line in enumerate(record.raw_comment.split("\n")):
        width = len(line.rstrip("\r")) + (record.comment_column if i == 0 else 0)
        if width > limit:
            return Check(False, f"line {_comment_line(record, i)} is {width} characters (limit {limit})")
    return Check(True, f"all lines within {limit} characters")


@predicate(COMMENT)
def gutter_consistent(comment, record, params):
    """Continuation lines share one gutter column.

    Javadoc: every non-blank continuation line starts with ``*`` one column
    right of the opening ``/**``. Python: continuation lines are never
    indented less than the opening quotes and the least-indented line sits
    exactly under them.
    """
    lines = record.raw_comment.split("\n")
    if record.language is Language.JAVA:
        expected = record.comment_column + 1
        for i, line in enumerate(lines[1:], start=1):
            stripped = line.lstrip()
            if not stripped:
                continue
            column = len(line) - len(stripped)
            if not stripped.startswith("*"):
                return Check(False, f"line {_comment_line(record, i)} has no '*' gutter")
            if column != expected:
                return Check(
                    False,
                    f"line {_comment_line(record, i)}: gutter at column {column + 1}, expected {expected + 1}",
                )
        return Check(True, f"gutter at column {expected + 1}")
    expected = record.comment_column
    indents = [(i, len(line) - len(line.lstrip())) for i, line in enumerate(lines[1:], start=1) if line.strip()]
    for i, indent in indents:
        if indent < expected:
            return Check(
                False, f"line {_comment_line(record, i)}: indented to column {indent + 1}, expected {expected + 1}"
            )
    if indents and min(ind for _, ind in indents) != expected:
        i, indent = min(indents, key=lambda p: p[1])
        return Check(False, f"line {_comment_line(record, i)}: indented to column {indent + 1}, expected {expected + 1}")
    return Check(True, f"indentation at column {expected + 1}")


# ---------------------------------------------------------------------------
# parsed-comment level


@predicate(PARSED)
def has_summary(comment, record, params):
    """The comment has summary prose."""
    return Check(bool(comment.summary), "summary present" if comment.summary else "no summary")


@predicate(PARSED)
def has_extended(comment, record, params):
    """Prose follows the summary before any tags or sections."""
    if comment.extended.strip():
        return Check(True, f"extended summary {_quote(comment.extended)}")
    return Check(False, "no extended summary after the short summary")


@predicate(PARSED)
def has_summary_and_extended(comment, record, params):
    """Both a summary and an extended summary exist."""
    ok = bool(comment.summary) and bool(comment.extended.strip())
    return Check(ok, "summary and extended summary present" if ok else "summary or extended summary missing")


@predicate(PARSED)
def blank_line_after_summary(comment, record, params):
    """A blank line separates the summary from the extended summary."""
    if comment.blank_line_after_summary:
        return Check(True, "blank line after summary")
    return Check(False, f"no blank line between summary {_quote(comment.summary)} and extended summary")


@predicate(PARSED)
def summary_starts_with_letter(comment, record, params):
    """The summary begins with a letter."""
    ok = bool(comment.summary) and comment.summary[0].isalpha()
    return Check(ok, f"summary starts with {comment.summary[:1]!r}")


@predicate(PARSED)
def summary_capitalized(comment, record, params):
    """The summary's first character is upper case."""
    if comment.summary[:1].isupper():
        return Check(True, "summary capitalized")
    return Check(False, f"summary starts with lower-case {_quote(comment.first_word)}")


@predicate(PARSED)
def summary_ends_with_period(comment, record, params):
    """The summary ends with a period."""
    if comment.summary.endswith("."):
        return Check(True, "summary ends with '.'")
    return Check(False, f"summary {_quote(comment.summary)} does not end with '.'")


@predicate(PARSED)
def summary_mood_determinable(comment, record, params):
    """The summary's first word is a lexicon verb or its third-person form."""
    word = comment.first_word.lower()
    lexicon = imperative_lexicon()
    if word in lexicon or any(base in lexicon for base in _base_forms(word)):
        return Check(True, f"first word {comment.first_word!r} is a known verb form")
    return Check(False, f"mood of first word {comment.first_word!r} not determinable")


@predicate(PARSED)
def summary_third_person(comment, record, params):
    """The summary's first word is descriptive (third person), not imperative."""
    word = comment.first_word.lower()
    lexicon = imperative_lexicon()
    if word in lexicon:
        return Check(False, f"summary starts with imperative {comment.first_word!r}")
    if any(base in lexicon for base in _base_forms(word)):
        return Check(True, f"summary starts with third-person {comment.first_word!r}")
    return Check(False, f"first word {comment.first_word!r} is not a known third-person verb")


@predicate(PARSED)
def has_bogus_marker(comment, record, params):
    """The comment flags broken code with FIXME, XXX, BROKEN or HACK."""
    m = _BOGUS_RE.search(comment.text)
    if not m:
        return Check(False, "no bogus-code marker")
    return Check(True, f"marker {m.group(1)} at line {_comment_line(record, _find_line(comment, _BOGUS_RE))}")


@predicate(PARSED)
def bogus_marker_is_fixme(comment, record, params):
    """Every bogus-code marker is spelled FIXME."""
    for i, line in enumerate(comment.raw_lines):
        for m in _BOGUS_RE.finditer(line):
            if m.group(1) != "FIXME":
                return Check(False, f"marker {m.group(1)} at line {_comment_line(record, i)} instead of FIXME")
    return Check(True, "markers use FIXME")


@predicate(PARSED)
def has_block_tag(comment, record, params):
    """A block tag named ``tag`` is present."""
    tag = params.get("tag", "")
    if comment.has_tag(tag):
        return Check(True, f"@{tag} at line {_tag_line(comment, record, tag)}")
    return Check(False, f"no @{tag} tag")


@predicate(PARSED)
def serial_context(comment, record, params):
    """The comment has the serial tag or the class declares a serializable marker."""
    tag = params.get("tag", "serial")
    if comment.has_tag(tag):
        return Check(True, f"@{tag} at line {_tag_line(comment, record, tag)}")
    m = _SERIALIZABLE_RE.search(record.declaration)
    if m:
        return Check(True, f"declaration implements {m.group()} (line {record.class_line})")
    return Check(False, f"no @{tag} tag and no serializable marker")


@predicate(PARSED)
def deprecation_names_replacement(comment, record, params):
    """Every @deprecated body points at a replacement via a link or the word 'use'."""
    for body in comment.tag_bodies("deprecated"):
        if not body.strip():
            return Check(False, f"empty @deprecated at line {_tag_line(comment, record, 'deprecated')}")
        if "{@link" not in body and not _USE_RE.search(body):
            return Check(False, f"@deprecated {_quote(body)} names no replacement")
    return Check(True, "@deprecated names a replacement")


@predicate(PARSED)
def multi_paragraph(comment, record, params):
    """The description has at least two paragraphs."""
    n = len(comment.paragraphs)
    return Check(n >= 2, f"{n} paragraph(s)")


@predicate(PARSED)
def paragraphs_marked(comment, record, params):
    """Each paragraph break carries a <p> tag."""
    for k, marked in enumerate(comment.paragraph_markers):
        if not marked:
            start = comment.paragraphs[k + 1]
            return Check(False, f"paragraph {k + 2} {_quote(start)} is not introduced by <p>")
    return Check(True, "all paragraph breaks use <p>")


@predicate(PARSED)
def lists_public_members(comment, record, params):
    """The docstring names every public member or has a Methods/Attributes section."""
    if comment.has_section("Methods", "Attributes"):
        names = [name for name, _ in comment.sections if name in ("Methods", "Attributes")]
        return Check(True, f"{'/'.join(names)} section present")
    missing = [
        name for name in record.visible_member_names if not re.search(r"(?<![\w])" + re.escape(name) + r"(?![\w])", comment.text)
    ]
    if missing:
        return Check(False, "public members not mentioned: " + ", ".join(missing))
    return Check(True, "all public members mentioned")


@predicate(PARSED)
def has_ordered_tags(comment, record, params):
    """At least two distinct block tags with a canonical position are present."""
    names = {tag for tag, _ in comment.block_tags if tag in TAG_ORDER}
    return Check(len(names) >= 2, f"{len(names)} distinct ordered tag(s)")


@predicate(PARSED)
def block_tags_in_order(comment, record, params):
    """Block tags appear in canonical order (author, version, param, return, throws, see, since, serial, deprecated)."""
    last_tag, last_rank = None, -1
    for tag, _ in comment.block_tags:
        rank = TAG_ORDER.get(tag)
        if rank is None:
            continue
        if rank < last_rank:
            return Check(False, f"@{tag} (line {_tag_line(comment, record, tag)}) after @{last_tag}")
        last_tag, last_rank = tag, rank
    return Check(True, "block tags in canonical order")


@predicate(PARSED)
def has_section(comment, record, params):
    """A docstring section named in ``names`` is present."""
    names = tuple(params.get("names", ()))
    if comment.has_section(*names):
        return Check(True, f"section {'/'.join(names)} present")
    return Check(False, f"no {'/'.join(names)} section")


@predicate(PARSED)
def has_usage_example(comment, record, params):
    """The comment shows usage: an Examples section, a <pre> block or {@code}."""
    if comment.has_section("Examples", "Example"):
        return Check(True, "Examples section")
    if comment.html_markers.get("pre") or any(tag == "code" for tag, _ in comment.inline_tags):
        return Check(True, "code example markup")
    return Check(False, "no usage example")
