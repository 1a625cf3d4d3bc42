"""Tolerant Java scanner.

Strings, character literals and non-doc comments are lexed so that keywords
inside them are never mistaken for declarations. Only brace nesting, class
headers and class-body member declarations are interpreted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple

from .model import ClassCommentRecord, Diagnostic, SourceUnit

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<doc>/\*\*(?!/).*?\*/)
    | (?P<block>/\*.*?\*/)
    | (?P<opendoc>/\*\*(?!/).*)
    | (?P<openblock>/\*.*)
    | (?P<line>//[^\n]*)
    | (?P<textblock>\"\"\".*?\"\"\")
    | (?P<string>"(?:\\.|[^"\\\n])*")
    | (?P<char>'(?:\\.|[^'\\\n])*')
    | (?P<badquote>["'][^\n]*)
    | (?P<ident>[A-Za-z_$][\w$]*)
    | (?P<number>\d[\w.]*)
    | (?P<op>.)
    """,
    re.VERBOSE | re.DOTALL,
)

_DECL_KEYWORDS = {"class", "interface", "enum"}
_MODIFIERS = {
    "public", "protected", "private", "static", "final", "abstract",
    "sealed", "non", "strictfp", "transient", "volatile", "synchronized",
    "native", "default",
}


class Token(NamedTuple):
    kind: str
    text: str
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.text)


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens, dropping whitespace."""
    out = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), m.start()))
    return out


@dataclass
class _OpenClass:
    name: str
    qualified: str
    kind: str
    line: int
    depth: int = -1
    doc: Token | None = None
    declaration: str = ""
    members: set[str] = field(default_factory=set)
    in_enum_constants: bool = False


def _is_public(stmt: list[Token], owner: _OpenClass) -> bool:
    words = {t.text for t in stmt if t.kind == "ident"}
    if "public" in words:
        return True
    # interface and annotation members are implicitly public
    return owner.kind in ("interface", "@interface") and "private" not in words


def _member_names(stmt: list[Token], owner: _OpenClass) -> list[str]:
    if not stmt or not _is_public(stmt, owner):
        return []
    texts = [t.text for t in stmt]
    eq = texts.index("=") if "=" in texts else len(texts)
    paren = texts.index("(") if "(" in texts else len(texts)
    if paren < eq:
        prev = stmt[paren - 1] if paren else None
        if prev is None or prev.kind != "ident" or prev.text == owner.name:
            return []
        return [prev.text]
    names = []
    angle = bracket = 0
    for i, tok in enumerate(stmt[: eq + 1] if eq < len(stmt) else stmt + [Token("op", ";", -1)]):
        if tok.text == "<":
            angle += 1
        elif tok.text == ">":
            angle = max(0, angle - 1)
        elif tok.text == "[":
            bracket += 1
        elif tok.text == "]":
            bracket = max(0, bracket - 1)
        elif tok.text in (",", "=", ";") and angle == 0 and bracket == 0 and i:
            prev = stmt[i - 1]
            if prev.kind == "ident" and prev.text not in _MODIFIERS:
                names.append(prev.text)
    # trailing declarators after the first initializer: "int a = 1, b;"
    if eq < len(stmt):
        depth = 0
        for i in range(eq + 1, len(stmt)):
            t = stmt[i].text
            if t in "([{<":
                depth += 1
            elif t in ")]}>":
                depth = max(0, depth - 1)
            elif t == "," and depth == 0 and i + 1 < len(stmt) and stmt[i + 1].kind == "ident":
                names.append(stmt[i + 1].text)
    return names


def scan(unit: SourceUnit, diagnostics: list[Diagnostic]) -> list[ClassCommentRecord]:
    text = unit.text
    file = str(unit.path)
    tokens = tokenize(text)
    n = len(tokens)

    def note(offset: int, message: str) -> None:
        diagnostics.append(Diagnostic(file, unit.line_of(offset), message))

    for tok in tokens:
        if tok.kind in ("opendoc", "openblock"):
            note(tok.start, "unterminated comment")
        elif tok.kind == "badquote":
            note(tok.start, "unterminated literal")

    opened: list[_OpenClass] = []
    stack: list[_OpenClass] = []
    depth = 0
    paren = 0
    pending: Token | None = None
    stmt: list[Token] = []
    prev: Token | None = None
    i = 0

    def body_owner() -> _OpenClass | None:
        if stack and depth == stack[-1].depth:
            return stack[-1]
        return None

    while i < n:
        tok = tokens[i]
        kind, t = tok.kind, tok.text

        if kind in ("doc", "opendoc"):
            pending = tok
            i += 1
            continue
        if kind in ("block", "openblock", "line"):
            i += 1
            continue

        if t == "@" and i + 1 < n and tokens[i + 1].text != "interface":
            # annotation: qualified name plus optional balanced argument list
            j = i + 1
            if j < n and tokens[j].kind == "ident":
                j += 1
                while j + 1 < n and tokens[j].text == "." and tokens[j + 1].kind == "ident":
                    j += 2
            if j < n and tokens[j].text == "(":
                level = 0
                while j < n:
                    if tokens[j].text == "(":
                        level += 1
                    elif tokens[j].text == ")":
                        level -= 1
                        if level == 0:
                            j += 1
                            break
                    j += 1
            prev = tokens[j - 1]
            i = j
            continue

        is_decl = (
            kind == "ident"
            and t in _DECL_KEYWORDS
            and not (prev is not None and prev.text in (".", "::"))
            and i + 1 < n
            and tokens[i + 1].kind == "ident"
        )
        if is_decl:
            decl_kind = "@interface" if t == "interface" and prev is not None and prev.text == "@" else t
            name_tok = tokens[i + 1]
            j = i + 2
            level = 0
            while j < n:
                s = tokens[j].text
                if s in ("(", "<", "["):
                    level += 1
                elif s in (")", ">", "]"):
                    level = max(0, level - 1)
                elif s == "{" and level == 0:
                    break
                elif s in (";", "}") and level == 0:
                    break
                j += 1
            if j >= n or tokens[j].text != "{":
                note(tok.start, f"{t} {name_tok.text}: declaration without a body, skipped")
                pending = None
                prev = tokens[min(j, n - 1)]
                i = j
                continue
            qualified = ".".join([c.name for c in stack] + [name_tok.text])
            start = tokens[i - 1].start if decl_kind == "@interface" else tok.start
            cls = _OpenClass(
                name=name_tok.text,
                qualified=qualified,
                kind=decl_kind,
                line=unit.line_of(tok.start),
                doc=pending,
                declaration=" ".join(text[start : tokens[j].start].split()),
                in_enum_constants=(decl_kind == "enum"),
            )
            opened.append(cls)
            pending = None
            stmt = []
            depth += 1
            cls.depth = depth
            stack.append(cls)
            prev = tokens[j]
            i = j + 1
            continue

        owner = body_owner()
        if t == "{":
            if owner is not None and paren == 0:
                if not owner.in_enum_constants:
                    owner.members.update(_member_names(stmt, owner))
                stmt = []
            depth += 1
        elif t == "}":
            if stack and depth == stack[-1].depth:
                stack.pop()
                paren = 0
            if depth == 0:
                note(tok.start, "unbalanced closing brace")
            else:
                depth -= 1
            stmt = []
        elif t == "(":
            paren += 1
            if owner is not None:
                stmt.append(tok)
        elif t == ")":
            paren = max(0, paren - 1)
            if owner is not None:
                stmt.append(tok)
        elif t == ";":
            if owner is not None and paren == 0:
                if owner.in_enum_constants:
                    owner.in_enum_constants = False
                else:
                    owner.members.update(_member_names(stmt, owner))
                stmt = []
        elif owner is not None:
            stmt.append(tok)

        keeps_doc = (
            (kind == "ident" and t in _MODIFIERS)
            or (t == "-" and prev is not None and prev.text == "non")
            or (t == "@" and i + 1 < n and tokens[i + 1].text == "interface")
        )
        if not keeps_doc:
            pending = None
        prev = tok
        i += 1

    for cls in stack:
        diagnostics.append(Diagnostic(file, cls.line, f"class {cls.name}: body not closed before end of file"))

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
            kind=cls.kind,
        )
        if cls.doc is None:
            records.append(ClassCommentRecord.build(**common))
        else:
            doc = cls.doc
            records.append(
                ClassCommentRecord.build(
                    comment_present=True,
                    raw_comment=doc.text,
                    comment_span=(unit.line_of(doc.start), unit.line_of(doc.end - 1)),
                    comment_column=unit.column_of(doc.start),
                    **common,
                )
            )
    return records
