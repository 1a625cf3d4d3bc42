"""Hypothesis strategies producing class comment records in both languages."""

from __future__ import annotations

from hypothesis import strategies as st

from commentlint.extraction import ClassCommentRecord, Language

WORDS = ["value", "buffer", "the", "a", "pool", "of", "cache", "entries", "map", "for", "data", "e.g.", "{@code x}"]
LEADS = ["Gets", "Get", "Returns", "Return", "manages", "Holds", "Tracks", "Compute", "A", "The", "42", "Shuffle", ""]
JAVA_TAGS = ["author Bob", "version 1", "param x the x", "return it", "throws IOException", "see Other",
             "since 1.0", "serial include", "deprecated use {@link Other}", "deprecated"]
MARKERS = ["", "FIXME broken", "XXX fix", "HACK around", "BROKEN here"]
NUMPY_SECTIONS = ["Parameters", "Attributes", "Methods", "Examples", "Notes"]
MEMBERS = ["get", "put", "size", "value", "clear"]

summaries = st.builds(
    lambda lead, words, dot: " ".join([lead] + words).strip() + ("." if dot else ""),
    st.sampled_from(LEADS),
    st.lists(st.sampled_from(WORDS), max_size=6),
    st.booleans(),
)
paragraphs = st.lists(st.lists(st.sampled_from(WORDS), min_size=1, max_size=30).map(" ".join), max_size=3)


@st.composite
def java_comments(draw) -> str:
    summary = draw(summaries)
    body = [summary] if summary else []
    if draw(st.booleans()) and body:
        body.append(draw(st.sampled_from(MARKERS)))
    for para in draw(paragraphs):
        body.append("<p>" + para if draw(st.booleans()) else para)
        if draw(st.booleans()):
            body.insert(len(body) - 1, "")
    tags = draw(st.lists(st.sampled_from(JAVA_TAGS), max_size=4))
    gutter = draw(st.sampled_from([" * ", " *", "   * ", "* ", ""]))
    lines = ["/**"] + [(gutter + line).rstrip() for line in body] + [gutter + "@" + t for t in tags]
    closing = draw(st.sampled_from([" */", " */", " */", ""]))
    text = "\n".join(lines + ([closing] if closing else []))
    if draw(st.booleans()) and len(lines) == 1:
        text = "/** " + summary + " */"
    return text


@st.composite
def python_comments(draw) -> str:
    summary = draw(summaries)
    body = [summary]
    for para in draw(paragraphs):
        if draw(st.booleans()):
            body.append("")
        body.append(para)
    for name in draw(st.lists(st.sampled_from(NUMPY_SECTIONS), max_size=2, unique=True)):
        body += ["", name, "-" * draw(st.sampled_from([len(name), 3])), draw(st.sampled_from(MEMBERS)) + " : int"]
    indent = draw(st.sampled_from(["    ", "  ", ""]))
    quote = draw(st.sampled_from(['"""', "'''", 'r"""']))
    closing = draw(st.sampled_from(['"""', '"""', ""])) if quote != "'''" else "'''"
    lines = [body[0]] + [(indent + line) if line else "" for line in body[1:]]
    return quote + "\n".join(lines) + ("\n" + indent if len(lines) > 1 else "") + closing


@st.composite
def records(draw, language: Language | None = None) -> ClassCommentRecord:
    language = language or draw(st.sampled_from(list(Language)))
    members = draw(st.lists(st.sampled_from(MEMBERS), max_size=3))
    declaration = draw(st.sampled_from(["class Foo", "class Foo implements Serializable", "class Foo(Base)"]))
    common = dict(class_name="Foo", qualified_name="Foo", file="gen", class_line=50, language=language,
                  members=members, declaration=declaration)
    if not draw(st.integers(0, 9)):
        return ClassCommentRecord.build(**common)
    raw = draw(java_comments() if language is Language.JAVA else python_comments())
    column = draw(st.sampled_from([0, 4]))
    return ClassCommentRecord.build(
        comment_present=True,
        raw_comment=raw,
        comment_span=(10, 10 + raw.count("\n")),
        comment_column=column,
        **common,
    )
