"""Structured view of a class documentation comment.

Both parsers first strip delimiters and gutters into a plain text, then
carve that text into regions (summary, extended description, block tags,
sections). Every character of the input is labelled with the region that
owns it, which keeps the parse auditable: joining ``segments`` gives the
input back.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field, replace

from .extraction import ClassCommentRecord, Language

__all__ = [
    "Dialect",
    "StructuredComment",
    "detect_python_dialect",
    "parse_javadoc",
    "parse_pydoc",
    "parse_record",
    "split_python_literal",
]


class Dialect(str, enum.Enum):
    JAVADOC = "Javadoc"
    PEP257 = "Pep257"
    NUMPYDOC = "Numpydoc"
    GOOGLEDOC = "GoogleDoc"

    def __str__(self) -> str:
        return self.value


# Region labels for ``StructuredComment.segments``.
DELIMITER = "delimiter"
SUMMARY = "summary"
EXTENDED = "extended"
TAG = "tag"
SECTION = "section"
BLANK = "blank"

MALFORMED_COMMENT = "MalformedComment"
MALFORMED_SECTION = "MalformedSection"

ABBREVIATIONS = ("e.g.", "i.e.", "etc.", "vs.")

NUMPY_SECTIONS = {
    name.lower(): name
    for name in (
        "Parameters", "Returns", "Yields", "Receives", "Other Parameters",
        "Raises", "Warns", "Warnings", "See Also", "Notes", "References",
        "Examples", "Attributes", "Methods",
    )
}
GOOGLE_SECTIONS = {
    name.lower(): name
    for name in (
        "Args", "Arguments", "Attributes", "Example", "Examples",
        "Keyword Args", "Keyword Arguments", "Methods", "Note", "Notes",
        "Other Parameters", "Parameters", "Raises", "References", "Return",
        "Returns", "See Also", "Todo", "Warning", "Warnings", "Warns",
        "Yield", "Yields",
    )
}

HTML_TAGS = frozenset(
    "a b big blockquote br caption code dd div dl dt em h1 h2 h3 h4 h5 h6 hr i "
    "img li ol p pre s small span strong sub sup table tbody td th thead tr tt u ul".split()
)

_INLINE_TAG_RE = re.compile(r"\{@(\w+)\s*([^{}]*)\}")
_HTML_RE = re.compile(r"<([A-Za-z][A-Za-z0-9]*)\b[^<>]*>")
_PARA_SEP_RE = re.compile(
    r"(?P<p><p\s*/?>|<p\s[^<>]*>)|(?P<blank>\n[ \t\r]*\n(?:[ \t\r]*\n)*)", re.IGNORECASE
)
_BLOCK_TAG_LINE_RE = re.compile(r"^\s*@([A-Za-z][\w.-]*)")
_JAVADOC_GUTTER_RE = re.compile(r"^[ \t]*\*+ ?")
_DASHES_RE = re.compile(r"^\s*-+\s*$")
_GOOGLE_HEADER_RE = re.compile(r"^([A-Z][A-Za-z]*(?: [A-Za-z]+){0,2}):\s*$")
_PY_LITERAL_RE = re.compile(r"^([A-Za-z]*)(\"\"\"|'''|\"|')")


@dataclass(frozen=True)
class StructuredComment:
    dialect: Dialect
    text: str
    summary: str = ""
    extended: str = ""
    blank_line_after_summary: bool = False
    paragraphs: tuple[str, ...] = ()
    # One flag per paragraph boundary: True when the boundary carries <p>.
    paragraph_markers: tuple[bool, ...] = ()
    block_tags: tuple[tuple[str, str], ...] = ()
    inline_tags: tuple[tuple[str, str], ...] = ()
    sections: tuple[tuple[str, str], ...] = ()
    html_markers: Counter = field(default_factory=Counter)
    first_word: str = ""
    line_count: int = 0
    raw_lines: tuple[str, ...] = ()
    segments: tuple[tuple[str, str], ...] = ()
    well_formed: bool = True
    diagnostics: tuple[str, ...] = ()

    def has_tag(self, name: str) -> bool:
        return any(tag == name for tag, _ in self.block_tags)

    def tag_bodies(self, name: str) -> list[str]:
        return [body for tag, body in self.block_tags if tag == name]

    def has_section(self, *names: str) -> bool:
        return any(s in names for s, _ in self.sections)



# ---------------------------------------------------------------------------
# shared machinery


class _Stripped:
    """Delimiter-stripped text with a map back into the raw input."""

    def __init__(self, raw: str) -> None:
        self.raw = raw
        self.labels = [BLANK] * len(raw)
        self.chars: list[str] = []
        self.origin: list[int] = []

    def delimiter(self, start: int, end: int) -> None:
        for k in range(start, end):
            self.labels[k] = DELIMITER

    def keep(self, start: int, end: int) -> None:
        self.chars.extend(self.raw[start:end])
        self.origin.extend(range(start, end))

    @property
    def text(self) -> str:
        return "".join(self.chars)

    def label(self, start: int, end: int, kind: str) -> None:
        for k in range(start, end):
            self.labels[self.origin[k]] = kind

    def segments(self) -> tuple[tuple[str, str], ...]:
        out: list[tuple[str, str]] = []
        for ch, kind in zip(self.raw, self.labels):
            if out and out[-1][0] == kind:
                out[-1] = (kind, out[-1][1] + ch)
            else:
                out.append((kind, ch))
        return tuple(out)


def _trim(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return start, end


def _line_starts(text: str) -> list[int]:
    return [0] + [m.end() for m in re.finditer("\n", text)]


def _sentence_end(text: str, start: int, end: int) -> int | None:
    """Offset just past the first sentence-ending period in ``text[start:end]``.

    A period ends a sentence when followed by whitespace or the end of the
    region, is not part of a listed abbreviation and is not inside an
    inline ``{@...}`` tag.
    """
    depth = 0
    for k in range(start, end):
        ch = text[k]
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth = max(0, depth - 1)
        elif ch == "." and depth == 0:
            if k + 1 < end and not text[k + 1].isspace():
                continue
            head = text[start : k + 1].lower()
            if any(
                head.endswith(abbr) and (len(head) == len(abbr) or not head[-len(abbr) - 1].isalpha())
                for abbr in ABBREVIATIONS
            ):
                continue
            return k + 1
    return None


@dataclass
class _Description:
    summary: tuple[int, int] = (0, 0)
    extended: tuple[int, int] = (0, 0)
    blank_after: bool = False
    paragraphs: list[str] = field(default_factory=list)
    markers: list[bool] = field(default_factory=list)


def _paragraphs(text: str, start: int, end: int, html: bool) -> tuple[list[tuple[int, int]], list[bool]]:
    spans: list[tuple[int, int]] = []
    markers: list[bool] = []
    marked = False
    cursor = start
    for m in _PARA_SEP_RE.finditer(text, start, end):
        if m.group("p") and not html:
            continue
        s, e = _trim(text, cursor, m.start())
        if s < e:
            if spans:
                markers.append(marked)
            spans.append((s, e))
            marked = False
        if m.group("p"):
            marked = True
        cursor = m.end()
    s, e = _trim(text, cursor, end)
    if s < e:
        if spans:
            markers.append(marked)
        spans.append((s, e))
    return spans, markers


def _describe(text: str, start: int, end: int, html: bool) -> _Description:
    spans, markers = _paragraphs(text, start, end, html)
    out = _Description(markers=markers)
    out.paragraphs = [" ".join(_strip_markup(text[s:e]).split()) for s, e in spans]
    if not spans:
        return out
    first_start, first_end = spans[0]
    stop = _sentence_end(text, first_start, first_end) or first_end
    out.summary = (first_start, stop)
    ext_start, ext_end = _trim(text, stop, end)
    if ext_start < ext_end:
        out.extended = (ext_start, ext_end)
        out.blank_after = _has_blank_line(text[stop:ext_start])
    return out


def _has_blank_line(gap: str) -> bool:
    return gap.count("\n") >= 2


def _strip_markup(text: str) -> str:
    return _PARA_SEP_RE.sub(lambda m: " " if m.group("p") else m.group(), text)


def _first_word(summary: str) -> str:
    words = summary.split()
    if not words:
        return ""
    return words[0].rstrip(".,;:!?)\"'")


def _html_markers(text: str) -> Counter:
    masked = _INLINE_TAG_RE.sub(lambda m: " " * len(m.group()), text)
    return Counter(
        name.lower() for name in _HTML_RE.findall(masked) if name.lower() in HTML_TAGS
    )


def _inline_tags(text: str) -> tuple[tuple[str, str], ...]:
    return tuple((m.group(1), m.group(2).strip()) for m in _INLINE_TAG_RE.finditer(text))


# ---------------------------------------------------------------------------
# Javadoc


def parse_javadoc(raw: str) -> StructuredComment:
    """Parse a ``/** ... */`` block.

    An unterminated or oddly opened block still parses; it comes back with
    ``well_formed=False`` and a ``MalformedComment`` diagnostic.
    """
    diagnostics: list[str] = []
    opened = raw.startswith("/**")
    closed = len(raw) >= 5 and raw.endswith("*/")
    if not (opened and closed):
        what = "missing '/**' opener" if not opened else "unterminated comment"
        diagnostics.append(f"{MALFORMED_COMMENT}: {what}")

    st = _Stripped(raw)
    body_start = 3 if opened else 0
    while opened and body_start < len(raw) - (2 if closed else 0) and raw[body_start] == "*":
        body_start += 1
    body_end = len(raw) - 2 if closed else len(raw)
    st.delimiter(0, body_start)
    st.delimiter(body_end, len(raw))

    pos = body_start
    for n, line in enumerate(raw[body_start:body_end].split("\n")):
        line_end = pos + len(line)
        if n:
            st.keep(pos - 1, pos)  # the newline
            m = _JAVADOC_GUTTER_RE.match(line)
            if m:
                st.delimiter(pos, pos + m.end())
                pos += m.end()
        st.keep(pos, line_end)
        pos = line_end + 1

    text = st.text
    lines = text.split("\n")
    starts = _line_starts(text)
    tag_line = next((i for i, ln in enumerate(lines) if _BLOCK_TAG_LINE_RE.match(ln)), len(lines))
    desc_end = starts[tag_line] - 1 if tag_line < len(lines) else len(text)
    desc_end = max(desc_end, 0)

    desc = _describe(text, 0, desc_end, html=True)
    tags: list[tuple[str, str]] = []
    tag_regions: list[tuple[int, int]] = []
    i = tag_line
    while i < len(lines):
        j = i + 1
        while j < len(lines) and not _BLOCK_TAG_LINE_RE.match(lines[j]):
            j += 1
        seg_start = starts[i]
        seg_end = starts[j] - 1 if j < len(lines) else len(text)
        m = _BLOCK_TAG_LINE_RE.match(lines[i])
        s, e = _trim(text, seg_start, seg_end)
        body = text[seg_start + m.end() : seg_end]
        tags.append((m.group(1), "\n".join(ln.strip() for ln in body.strip().split("\n"))))
        tag_regions.append((s, e))
        i = j

    st.label(*desc.extended, EXTENDED)
    for s, e in tag_regions:
        st.label(s, e, TAG)
    _label_leftover(st, 0, desc_end)
    st.label(*desc.summary, SUMMARY)

    summary = " ".join(_strip_markup(text[slice(*desc.summary)]).split())
    return StructuredComment(
        dialect=Dialect.JAVADOC,
        text=text,
        summary=summary,
        extended=text[slice(*desc.extended)],
        blank_line_after_summary=desc.blank_after,
        paragraphs=tuple(desc.paragraphs),
        paragraph_markers=tuple(desc.markers),
        block_tags=tuple(tags),
        inline_tags=_inline_tags(text),
        html_markers=_html_markers(text),
        first_word=_first_word(summary),
        line_count=raw.count("\n") + 1,
        raw_lines=tuple(lines),
        segments=st.segments(),
        well_formed=not diagnostics,
        diagnostics=tuple(diagnostics),
    )


def _label_leftover(st: _Stripped, start: int, end: int) -> None:
    """Non-blank description characters outside summary count as extended."""
    text = st.text
    for k in range(start, end):
        if not text[k].isspace() and st.labels[st.origin[k]] == BLANK:
            st.labels[st.origin[k]] = EXTENDED


# ---------------------------------------------------------------------------
# Python docstrings


def detect_python_dialect(raw_body: str, preset_hint: Dialect | None = None) -> Dialect:
    """Guess the docstring convention from section headers."""
    if preset_hint is not None:
        return preset_hint
    lines = raw_body.split("\n")
    for prev, line in zip(lines, lines[1:]):
        if _DASHES_RE.match(line) and prev.strip().lower() in NUMPY_SECTIONS:
            return Dialect.NUMPYDOC
    for line in lines:
        s = line.strip()
        if s.endswith(":") and s[:-1].strip().lower() in GOOGLE_SECTIONS and _GOOGLE_HEADER_RE.match(s):
            return Dialect.GOOGLEDOC
    return Dialect.PEP257


def _indent(line: str) -> int:
    return len(line) - len(line.lstrip())


def parse_pydoc(raw_body: str, dialect: Dialect) -> StructuredComment:
    """Parse docstring content (quotes already removed) under ``dialect``."""
    st = _Stripped(raw_body)
    raw_lines = raw_body.split("\n")
    margins = [_indent(ln) for ln in raw_lines[1:] if ln.strip()]
    margin = min(margins) if margins else 0
    pos = 0
    for n, line in enumerate(raw_lines):
        if n:
            st.keep(pos - 1, pos)
            cut = min(margin, _indent(line))
            st.delimiter(pos, pos + cut)
            st.keep(pos + cut, pos + len(line))
        else:
            st.keep(pos, pos + len(line))
        pos += len(line) + 1

    text = st.text
    lines = text.split("\n")
    starts = _line_starts(text)
    diagnostics: list[str] = []

    if dialect is Dialect.NUMPYDOC:
        headers = _numpy_headers(lines, diagnostics)
    elif dialect is Dialect.GOOGLEDOC:
        headers = _google_headers(lines)
    else:
        headers = []

    sections: list[tuple[str, str]] = []
    regions: list[tuple[int, int]] = []
    for k, (line_no, body_from, name) in enumerate(headers):
        stop_line = headers[k + 1][0] if k + 1 < len(headers) else len(lines)
        seg_end = starts[stop_line] - 1 if stop_line < len(lines) else len(text)
        s, e = _trim(text, starts[line_no], seg_end)
        body_lines = lines[body_from:stop_line]
        sections.append((name, _dedent_block(body_lines)))
        regions.append((s, e))

    desc_end = starts[headers[0][0]] - 1 if headers else len(text)
    desc_end = max(desc_end, 0)
    desc = _describe(text, 0, desc_end, html=False)

    st.label(*desc.extended, EXTENDED)
    for s, e in regions:
        st.label(s, e, SECTION)
    _label_leftover(st, 0, desc_end)
    st.label(*desc.summary, SUMMARY)

    blank_after = desc.blank_after
    summary = " ".join(text[slice(*desc.summary)].split())
    return StructuredComment(
        dialect=dialect,
        text=text,
        summary=summary,
        extended=_dedent_block(text[slice(*desc.extended)].split("\n")) if desc.extended != (0, 0) else "",
        blank_line_after_summary=blank_after,
        paragraphs=tuple(desc.paragraphs),
        paragraph_markers=tuple(desc.markers),
        sections=tuple(sections),
        inline_tags=(),
        html_markers=_html_markers(text),
        first_word=_first_word(summary),
        line_count=raw_body.count("\n") + 1,
        raw_lines=tuple(lines),
        segments=st.segments(),
        diagnostics=tuple(diagnostics),
    )


def _dedent_block(lines: list[str]) -> str:
    body = [ln.rstrip() for ln in lines]
    margin = min((_indent(ln) for ln in body if ln.strip()), default=0)
    return "\n".join(ln[margin:] for ln in body).strip("\n")


def _numpy_headers(lines: list[str], diagnostics: list[str]) -> list[tuple[int, int, str]]:
    """(header line, first body line, canonical name) for dash-underlined headers."""
    headers = []
    for i, line in enumerate(lines):
        if not _DASHES_RE.match(line):
            continue
        above = lines[i - 1] if i else ""
        if not above.strip() or _DASHES_RE.match(above):
            diagnostics.append(f"{MALFORMED_SECTION}: underline on line {i + 1} has no header")
            continue
        name = above.strip()
        headers.append((i - 1, i + 1, NUMPY_SECTIONS.get(name.lower(), name)))
    return headers


def _google_headers(lines: list[str]) -> list[tuple[int, int, str]]:
    margin = min((_indent(ln) for ln in lines[1:] if ln.strip()), default=0)
    headers = []
    for i, line in enumerate(lines):
        if i == 0 or _indent(line) > margin:
            continue
        m = _GOOGLE_HEADER_RE.match(line.strip())
        if not m:
            continue
        name = m.group(1)
        nxt = next((ln for ln in lines[i + 1 :] if ln.strip()), None)
        indented = nxt is not None and _indent(nxt) > _indent(line)
        if name.lower() in GOOGLE_SECTIONS or indented:
            headers.append((i, i + 1, GOOGLE_SECTIONS.get(name.lower(), name)))
    return headers


# ---------------------------------------------------------------------------
# records


def split_python_literal(raw: str) -> tuple[str, str, str]:
    """Split a docstring literal into ``(opening, body, closing)``."""
    m = _PY_LITERAL_RE.match(raw)
    if not m:
        return "", raw, ""
    quote = m.group(2)
    if len(raw) >= m.end() + len(quote) and raw.endswith(quote):
        return raw[: m.end()], raw[m.end() : len(raw) - len(quote)], quote
    return raw[: m.end()], raw[m.end() :], ""


def parse_record(record: ClassCommentRecord, dialect_hint: Dialect | None = None) -> StructuredComment | None:
    """Parse the comment attached to ``record``; ``None`` when it has none."""
    if not record.comment_present:
        return None
    if record.language is Language.JAVA:
        return parse_javadoc(record.raw_comment)
    opening, body, closing = split_python_literal(record.raw_comment)
    comment = parse_pydoc(body, detect_python_dialect(body, dialect_hint))
    if closing:
        return comment
    return _replace_diagnostics(comment, (f"{MALFORMED_COMMENT}: unterminated string literal",))


def _replace_diagnostics(comment: StructuredComment, extra: tuple[str, ...]) -> StructuredComment:
    return replace(comment, well_formed=False, diagnostics=comment.diagnostics + extra)
