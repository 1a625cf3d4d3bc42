import ast
import re
import warnings
from pathlib import Path

import pytest

from commentlint.extraction import (
    EncodingError,
    IoError,
    Language,
    SourceUnit,
    UnknownLanguage,
    decode_source,
    extract_class_comments,
)

EXAMPLES = Path(__file__).resolve().parents[1] / "examples"


def scan(text, language=Language.JAVA, name="Sample.java"):
    diags = []
    records = extract_class_comments(SourceUnit(Path(name), language, text), diags)
    return records, diags


def test_java_doc_comment_is_attached():
    src = "package p;\n\n/**\n * Holds a value.\n */\npublic class Holder {\n  public int get() { return 1; }\n}\n"
    (rec,), diags = scan(src)
    assert rec.qualified_name == "Holder"
    assert rec.class_line == 6
    assert rec.comment_present and rec.comment_span == (3, 5)
    assert rec.raw_comment.startswith("/**") and rec.raw_comment.endswith("*/")
    assert rec.visible_member_names == ("get",)
    assert diags == []


def test_java_annotations_and_modifiers_keep_the_comment():
    src = "/** Doc. */\n@Deprecated\n@SuppressWarnings(\"x\")\npublic final class A {}\n"
    (rec,), _ = scan(src)
    assert rec.comment_present and rec.raw_comment == "/** Doc. */"


def test_java_intervening_code_detaches_the_comment():
    src = "/** Doc. */\nimport x.y;\nclass A {}\n"
    (rec,), _ = scan(src)
    assert not rec.comment_present


def test_java_keywords_inside_strings_and_comments_are_ignored():
    src = (
        'class A {\n  String s = "class Fake {";\n  // class Other {\n'
        "  /* interface I {} */\n  char c = '{';\n  Object o = Foo.class;\n}\n"
    )
    recs, diags = scan(src)
    assert [r.qualified_name for r in recs] == ["A"]
    assert diags == []


def test_java_nested_and_sibling_types():
    src = "class Outer {\n  /** In. */\n  static class Inner {}\n  enum E { X, Y; public int v; }\n}\ninterface Api { void run(); }\n"
    recs, _ = scan(src)
    names = {r.qualified_name: r for r in recs}
    assert list(names) == ["Outer", "Outer.Inner", "Outer.E", "Api"]
    assert names["Outer.Inner"].comment_present
    assert names["Outer.E"].visible_member_names == ("v",)
    assert names["Api"].visible_member_names == ("run",)


def test_java_unterminated_comment_is_reported_not_fatal():
    recs, diags = scan("class A {}\n/** never closed\nclass B {}\n")
    assert [r.qualified_name for r in recs] == ["A"]
    assert any("unterminated comment" in d.message and d.line == 2 for d in diags)


def test_java_serializable_declaration_is_recorded():
    (rec,), _ = scan("public class S implements java.io.Serializable {}\n")
    assert "Serializable" in rec.declaration


def test_python_docstring_and_members():
    src = 'class A(Base):\n    """Doc line.\n\n    More.\n    """\n\n    x = 1\n    _hidden = 2\n\n    def run(self):\n        pass\n'
    (rec,), diags = scan(src, Language.PYTHON, "a.py")
    assert rec.comment_present and rec.comment_span == (2, 5)
    assert rec.comment_column == 4
    assert rec.visible_member_names == ("run", "x")
    assert rec.declaration == "class A(Base):"
    assert diags == []


def test_python_non_docstring_first_statement():
    src = "class A:\n    x = 1\n    '''not a docstring'''\n"
    (rec,), _ = scan(src, Language.PYTHON, "a.py")
    assert not rec.comment_present


def test_python_inline_docstring_and_nested_class():
    src = 'class A: """Inline."""\nclass B:\n    class C:\n        """Inner."""\n'
    recs, _ = scan(src, Language.PYTHON, "a.py")
    assert [(r.qualified_name, r.comment_present) for r in recs] == [("A", True), ("B", False), ("B.C", True)]


def test_python_tokenizer_error_keeps_earlier_classes():
    src = 'class A:\n    """Ok."""\n\nx = (\n'
    recs, diags = scan(src, Language.PYTHON, "a.py")
    assert [r.qualified_name for r in recs] == ["A"]
    assert diags


def test_decode_errors(tmp_path):
    with pytest.raises(UnknownLanguage):
        decode_source(tmp_path / "notes.txt")
    with pytest.raises(IoError):
        decode_source(tmp_path / "missing.py")
    bad = tmp_path / "bad.py"
    bad.write_bytes(b"x = 1\n\xff\n")
    with pytest.raises(EncodingError) as err:
        decode_source(bad)
    assert err.value.line == 2


def test_bom_is_stripped(tmp_path):
    f = tmp_path / "b.py"
    f.write_bytes(b"\xef\xbb\xbfclass A:\n    pass\n")
    assert not decode_source(f).text.startswith("\ufeff")


def test_fixture_class_counts_match_naive_count(corpus):
    # naive oracle: one class per line starting (after modifiers) with a declaration keyword
    decl = re.compile(r"^\s*(?:(?:public|private|protected|static|final|abstract)\s+)*(?:class|interface|enum)\s+\w+", re.M)
    for path in sorted(corpus.rglob("*")):
        if path.suffix not in (".java", ".py"):
            continue
        text = path.read_text(encoding="utf-8")
        assert len(extract_class_comments(decode_source(path))) == len(decl.findall(text)), path


def _ast_classes(tree):
    out = []

    def walk(node, prefix):
        for child in ast.iter_child_nodes(node):
            if isinstance(child, ast.ClassDef):
                name = prefix + child.name
                out.append((name, ast.get_docstring(child, clean=False) is not None))
                walk(child, name + ".")
            else:
                walk(child, prefix)

    walk(tree, "")
    return sorted(out)


@pytest.mark.skipif(not EXAMPLES.is_dir(), reason="examples tree not present")
def test_python_scanner_agrees_with_ast_on_examples():
    checked = 0
    for path in sorted(EXAMPLES.rglob("*.py")):
        text = path.read_text(encoding="utf-8", errors="replace")
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                tree = ast.parse(text)
        except SyntaxError:
            continue
        recs = extract_class_comments(SourceUnit(path, Language.PYTHON, text))
        assert sorted((r.qualified_name, r.comment_present) for r in recs) == _ast_classes(tree), path
        checked += 1
    assert checked > 0
