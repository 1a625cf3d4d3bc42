import csv
import io
import json
import subprocess
import sys

import pytest

from commentlint.cli import RunConfig, main, run

AUTHOR = "package p;\n\n/**\n * Holds a value.\n * @author Bob\n */\npublic class Holder {\n}\n"


def invoke(*args, **config):
    out, err = io.StringIO(), io.StringIO()
    config.setdefault("env", {})
    status = run(RunConfig(paths=[str(a) for a in args], **config), out, err)
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def tree(tmp_path):
    src = tmp_path / "src"
    (src / "pkg").mkdir(parents=True)
    (src / "pkg" / "Holder.java").write_text(AUTHOR)
    (src / "notes.txt").write_text("ignored")
    return src


def test_hadoop_json(tree):
    status, out, _ = invoke(tree, preset_name="hadoop", output_format="json")
    assert status == 0
    doc = json.loads(out)
    auth = [f for f in doc["findings"] if f["rule_id"] == "HAD-AUTH"]
    assert [(f["verdict"], f["source"]) for f in auth] == [("Violated", "ProjectSpecific(hadoop)")]


def test_fail_threshold(tree):
    assert invoke(tree, preset_name="hadoop", fail_threshold=0.99)[0] == 1
    assert invoke(tree, preset_name="hadoop", fail_threshold=0.1)[0] == 0


def test_unknown_preset_and_missing_path(tree):
    status, _, err = invoke(tree, preset_name="nope")
    assert status == 2 and "eclipse" in err and "pytorch" in err
    assert invoke(tree / "missing")[0] == 2


def test_bad_catalog_reports_line(tree, tmp_path):
    bad = tmp_path / "rules.yaml"
    bad.write_text("rules:\n  - id: X\n")
    status, _, err = invoke(tree, rule_catalog_path=str(bad))
    assert status == 2 and f"{bad}:2:" in err
    status, _, _ = invoke(tree, env={"COMMENTLINT_RULES": str(bad)})
    assert status == 2


def test_env_catalog_is_used(tree, tmp_path):
    extra = tmp_path / "rules.yaml"
    extra.write_text(
        "presets:\n  - name: hadoop\n    overrides:\n      - {rule: HAD-AUTH, action: disable}\n"
    )
    _, out, _ = invoke(tree, preset_name="hadoop", output_format="json", env={"COMMENTLINT_RULES": str(extra)})
    assert not [f for f in json.loads(out)["findings"] if f["rule_id"] == "HAD-AUTH"]


def test_bad_file_does_not_abort(tree):
    (tree / "Broken.java").write_bytes(b"class A {}\n\xff\n")
    status, out, err = invoke(tree, preset_name="hadoop", output_format="csv")
    assert status == 0
    assert "Broken.java:2:" in err
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["file", "line", "class", "rule_id", "category", "source", "verdict", "evidence"]
    assert {r[2] for r in rows[1:]} == {"Holder"}


def test_language_filter(tree):
    (tree / "mod.py").write_text('class M:\n    """Holds."""\n')
    _, out, _ = invoke(tree, output_format="json", language_filter="python")
    assert {f["class"] for f in json.loads(out)["findings"]} == {"M"}
    _, out, _ = invoke(tree, output_format="json")
    assert {f["class"] for f in json.loads(out)["findings"]} == {"M", "Holder"}
    assert invoke(tree, preset_name="pandas", language_filter="java")[0] == 2


def test_text_output_and_jobs(corpus):
    _, text, _ = invoke(corpus, output_format="text")
    assert "Rule types followed or not" in text
    one = invoke(corpus, output_format="json", jobs=1)[1]
    assert invoke(corpus, output_format="json", jobs=3)[1] == one


def test_main_rejects_bad_threshold(capsys):
    assert main(["--fail-threshold", "1.5", "."]) == 2


def test_console_entry(tree):
    proc = subprocess.run(
        [sys.executable, "-m", "commentlint", "--preset", "hadoop", "--format", "json", str(tree)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["schema"] == "commentlint/1"
