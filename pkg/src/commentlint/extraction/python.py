"""Python class/docstring scanner built on the stdlib tokenizer.

Works on tokens rather than an AST so that files which do not compile
(Python 2 syntax, merge debris) still yield the classes seen before the
first lexical error.
"""

from __future__ import annotations

import io
import re
import tokenize
from dataclasses import dataclass, field

from .model import ClassCommentRecord, Diagnostic, SourceUnit

_SKIP = {tokenize.NL, tokenize.COMMENT, tokenize.INDENT, tokenize.DEDENT, tokenize.ENCODING}
_STRING_PREFIX = re.compile(r"^([A-Za-z]*)['\"]")


@dataclass
class _Line:
    level: int
    tokens: list[tokenize.TokenInfo]


@dataclass
class _OpenClass:
    name: str
    qualified: str
    line: int
    body_level: int
    declaration: str
    doc: list[tokenize.TokenInfo] | None = None
    seen_first: bool = False
    members: set[str] = field(default_factory=set)


def _logical_lines(text: str, file: str, diagnostics: list[Diagnostic]) -> list[_Line]:
    lines: list[_Line] = []
    level = 0
    current: list[tokenize.TokenInfo] = []
    current_level = 0
    try:
        for tok in tokenize.generate_tokens(io.StringIO(text).readline):
            if tok.type == tokenize.INDENT:
                level += 1
            elif tok.type == tokenize.DEDENT:
                level -= 1
            if tok.type in _SKIP:
                continue
            if tok.type in (tokenize.NEWLINE, tokenize.ENDMARKER):
                if current:
                    lines.append(_Line(current_level, current))
                current = []
                continue
            if not current:
                current_level = level
            current.append(tok)
    except (tokenize.TokenError, IndentationError, SyntaxError) as exc:
        lineno = exc.args[1][0] if isinstance(exc, tokenize.TokenError) else (exc.lineno or 0)
        diagnostics.append(Diagnostic(file, lineno, f"tokenizer stopped: {exc.args[0]}"))
        if current:
            lines.append(_Line(current_level, current))
    return lines


def _is_doc_literal(tok: tokenize.TokenInfo) -> bool:
    if tok.type != tokenize.STRING:
        return False
    m = _STRING_PREFIX.match(tok.string)
    prefix = m.group(1).lower() if m else ""
    return "b" not in prefix and "f" not in prefix


def _docstring(tokens: list[tokenize.TokenInfo]) -> list[tokenize.TokenInfo] | None:
    """Return the string tokens when ``tokens`` is a bare string-literal statement."""
    strings = []
    for tok in tokens:
        if tok.type == tokenize.OP and tok.string == ";":
            break
        if not _is_doc_literal(tok):
            return None
        strings.append(tok)
    return strings or None


def _header_end(tokens: list[tokenize.TokenInfo]) -> int | None:
    depth = 0
    for i, tok in enumerate(tokens):
        if tok.type != tokenize.OP:
            continue
        if tok.string in "([{":
            depth += 1
        elif tok.string in ")]}":
            depth -= 1
        elif tok.string == ":" and depth == 0:
            return i
    return None


def _assigned_names(tokens: list[tokenize.TokenInfo]) -> list[str]:
    if len(tokens) >= 2 and tokens[0].type == tokenize.NAME and tokens[1].string == ":":
        return [tokens[0].string]
    segments: list[list[tokenize.TokenInfo]] = [[]]
    depth = 0
    for tok in tokens:
        if tok.type == tokenize.OP and tok.string in "([{":
            depth += 1
        elif tok.type == tokenize.OP and tok.string in ")]}":
            depth -= 1
        if depth == 0 and tok.type == tokenize.OP and tok.string == "=":
            segments.append([])
        else:
            segments[-1].append(tok)
    names = []
    for target in segments[:-1]:
        parts = [t for t in target if not (t.type == tokenize.OP and t.string in ",()[]")]
        if parts and all(t.type == tokenize.NAME for t in parts):
            names.extend(t.string for t in parts)
    return names


def _members(tokens: list[tokenize.TokenInfo]) -> list[str]:
    first = tokens[0].string
    if first == "def" and len(tokens) > 1:
        return [tokens[1].string]
    if first == "async" and len(tokens) > 2 and tokens[1].string == "def":
        return [tokens[2].string]
    if tokens[0].type == tokenize.NAME and first not in ("class", "if", "for", "while", "with", "try", "import", "from"):
        return _assigned_names(tokens)
    return []


def scan(unit: SourceUnit, diagnostics: list[Diagnostic]) -> list[ClassCommentRecord]:
    file = str(unit.path)
    text = unit.text
    offsets = [0] + [m.end() for m in re.finditer("\n", text)]

    def offset(pos: tuple[int, int]) -> int:
        return offsets[pos[0] - 1] + pos[1]

    opened: list[_OpenClass] = []
    stack: list[_OpenClass] = []

    for line in _logical_lines(text, file, diagnostics):
        while stack and line.level < stack[-1].body_level:
            stack.pop()
        toks = line.tokens
        if stack and not stack[-1].seen_first:
            stack[-1].seen_first = True
            if line.level == stack[-1].body_level:
                stack[-1].doc = _docstring(toks)
        if stack and line.level == stack[-1].body_level:
            stack[-1].members.update(m for m in _members(toks) if not m.startswith("_"))

        if toks[0].string != "class" or len(toks) < 2 or toks[1].type != tokenize.NAME:
            continue
        end = _header_end(toks)
        if end is None:
            diagnostics.append(Diagnostic(file, toks[0].start[0], f"class {toks[1].string}: header without ':', skipped"))
            continue
        cls = _OpenClass(
            name=toks[1].string,
            qualified=".".join([c.name for c in stack] + [toks[1].string]),
            line=toks[0].start[0],
            body_level=line.level + 1,
            declaration=" ".join(text[offset(toks[0].start) : offset(toks[end].end)].split()),
        )
        opened.append(cls)
        rest = toks[end + 1 :]
        if rest:
            # simple statement body on the header line
            cls.seen_first = True
            cls.doc = _docstring(rest)
        else:
            stack.append(cls)

    records = []
    for cls in opened:
        common = dict(
            class_name=cls.name,
            qualified_name=cls.qualified,
            file=file,
            class_line=cls.line,
            language=unit.language,
            members=cls.members,
            declaration=cls.declaration,
        )
        if not cls.doc:
            records.append(ClassCommentRecord.build(**common))
            continue
        first, last = cls.doc[0], cls.doc[-1]
        records.append(
            ClassCommentRecord.build(
                comment_present=True,
                raw_comment=text[offset(first.start) : offset(last.end)],
                comment_span=(first.start[0], last.end[0]),
                comment_column=first.start[1],
                **common,
            )
        )
    return records
