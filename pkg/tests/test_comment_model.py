import re

from hypothesis import given, settings
from hypothesis import strategies as st

from commentlint.comment_model import (
    Dialect,
    detect_python_dialect,
    parse_javadoc,
    parse_pydoc,
    split_python_literal,
)
from strategies import java_comments, python_comments

PY_DIALECTS = [d for d in Dialect if d is not Dialect.JAVADOC]


def test_javadoc_summary_extended_tags():
    c = parse_javadoc("/** Gets X. More detail.\n * @author Bob */")
    assert c.summary == "Gets X."
    assert c.extended == "More detail."
    assert c.block_tags == (("author", "Bob"),)
    assert c.first_word == "Gets"
    assert c.well_formed


def test_javadoc_abbreviation_does_not_end_sentence():
    assert parse_javadoc("/** Parses e.g. files. Then more. */").summary == "Parses e.g. files."


def test_javadoc_paragraph_marker():
    c = parse_javadoc("/** A.<p>B. */")
    assert c.paragraphs == ("A.", "B.")
    assert c.paragraph_markers == (True,)
    assert c.html_markers["p"] == 1


def test_javadoc_unmarked_paragraphs():
    c = parse_javadoc("/**\n * A.\n *\n * B.\n */")
    assert c.paragraphs == ("A.", "B.")
    assert c.paragraph_markers == (False,)


def test_javadoc_inline_tags_do_not_split_sentences():
    c = parse_javadoc("/** Wraps {@link a.b.C}. Rest. */")
    assert c.summary == "Wraps {@link a.b.C}."
    assert ("link", "a.b.C") in c.inline_tags


def test_javadoc_unknown_tags_are_preserved():
    c = parse_javadoc("/**\n * Doc.\n * @custom anything goes\n */")
    assert c.block_tags == (("custom", "anything goes"),)


def test_javadoc_unterminated_is_malformed():
    c = parse_javadoc("/** never closed")
    assert not c.well_formed
    assert any(d.startswith("MalformedComment") for d in c.diagnostics)


def test_numpydoc_sections():
    c = parse_pydoc("Short.\n\nExtended here.\n\nParameters\n----------\nx : int", Dialect.NUMPYDOC)
    assert c.summary == "Short."
    assert c.blank_line_after_summary
    assert c.extended == "Extended here."
    assert c.sections == (("Parameters", "x : int"),)


def test_no_blank_line_after_summary():
    c = parse_pydoc("Short.\nExtended here.", Dialect.PEP257)
    assert not c.blank_line_after_summary
    assert c.extended == "Extended here."


def test_one_line_stub():
    c = parse_pydoc("Do-nothing stub.", Dialect.PEP257)
    assert (c.summary, c.extended, c.sections) == ("Do-nothing stub.", "", ())


def test_dash_line_without_header_is_diagnosed():
    c = parse_pydoc("Short.\n\n----------\nx : int", Dialect.NUMPYDOC)
    assert c.sections == ()
    assert any(d.startswith("MalformedSection") for d in c.diagnostics)


def test_google_sections():
    c = parse_pydoc("Short.\n\nArgs:\n    x: the x.\n\nReturns:\n    y.", Dialect.GOOGLEDOC)
    assert [name for name, _ in c.sections] == ["Args", "Returns"]
    assert c.sections[0][1] == "x: the x."


def test_dialect_detection():
    assert detect_python_dialect("S.\n\nParameters\n----------\nx : int") is Dialect.NUMPYDOC
    assert detect_python_dialect("S.\n\nArgs:\n    x: y") is Dialect.GOOGLEDOC
    assert detect_python_dialect("First paragraph.\n\nSecond paragraph.") is Dialect.PEP257


def test_split_python_literal():
    assert split_python_literal('r"""Body."""') == ('r"""', "Body.", '"""')
    assert split_python_literal("'''Open") == ("'''", "Open", "")


@given(st.text(), st.sampled_from(list(Dialect)))
def test_hint_always_wins(body, hint):
    assert detect_python_dialect(body, hint) is hint


def _check_partition(raw, comment):
    assert "".join(text for _, text in comment.segments) == raw
    for kind, text in comment.segments:
        if kind == "summary" and comment.dialect is Dialect.JAVADOC:
            assert not any(re.match(r"\s*@[A-Za-z]", line) for line in text.splitlines())
        if kind == "summary":
            assert text.strip() not in {name for name, _ in comment.sections}


@settings(max_examples=300)
@given(java_comments())
def test_javadoc_segments_cover_input(raw):
    _check_partition(raw, parse_javadoc(raw))
    assert parse_javadoc(raw) == parse_javadoc(raw)


@settings(max_examples=300)
@given(python_comments(), st.sampled_from(PY_DIALECTS))
def test_pydoc_segments_cover_input(raw, dialect):
    _, body, _ = split_python_literal(raw)
    _check_partition(body, parse_pydoc(body, dialect))


@settings(max_examples=200)
@given(st.text(alphabet=st.sampled_from("ab .\n*/@-:<p>{}"), max_size=80))
def test_arbitrary_text_never_crashes(body):
    _check_partition("/**" + body + "*/", parse_javadoc("/**" + body + "*/"))
    for dialect in PY_DIALECTS:
        _check_partition(body, parse_pydoc(body, dialect))
