"""Rule catalog: taxonomy, guideline sources, built-in rules and presets.

Rules are data. Extra rules, preset definitions and per-preset overrides can
be supplied in a YAML document::

    rules:
      - id: ACME-NOVERSION
        category: Content
        source: project:acme
        languages: [java]
        title: no version tags
        anchor: "Do not use @version tags"
        applicability: always
        followed: not:has_block_tag
        params: {tag: version}
        severity: strict
    presets:
      - name: acme
        language: java
        sources: [oracle]
        project_guideline: true
        overrides:
          - {rule: ORA-3P, action: disable}
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Any, Iterator, Mapping

import yaml

from . import predicates
from .comment_model import Dialect
from .extraction import Language

__all__ = [
    "BUILTIN_PRESETS",
    "BUILTIN_RULES",
    "Catalog",
    "GuidelineSource",
    "Preset",
    "Rule",
    "RuleCategory",
    "SchemaError",
    "Severity",
    "UnknownPreset",
    "dump_catalog",
    "load_catalog",
    "resolve_preset",
    "rules_for",
]


class SchemaError(ValueError):
    def __init__(self, message: str, line: int = 0) -> None:
        super().__init__(f"line {line}: {message}" if line else message)
        self.message = message
        self.line = line


class UnknownPreset(KeyError):
    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(name)
        self.name = name
        self.known = known

    def __str__(self) -> str:
        return f"unknown preset {self.name!r}; known presets: {', '.join(self.known)}"


class RuleCategory(str, enum.Enum):
    CONTENT = "Content"
    STRUCTURE = "Structure"
    FORMATTING = "Formatting"
    SYNTAX = "Syntax"
    WRITING_STYLE = "WritingStyle"
    OTHER = "Other"

    def __str__(self) -> str:
        return self.value


class Severity(str, enum.Enum):
    CONVENTION = "convention"
    STRICT = "strict"

    def __str__(self) -> str:
        return self.value


_STANDARD_NAMES = {
    "oracle": "Oracle",
    "googlejava": "GoogleJava",
    "google-java": "GoogleJava",
    "pep257": "Pep257",
    "pep8": "Pep8",
    "numpy": "Numpy",
    "googlepython": "GooglePython",
    "google-python": "GooglePython",
}


@dataclass(frozen=True, order=True)
class GuidelineSource:
    """A standard guideline, or ``ProjectSpecific`` with the project's name."""

    name: str
    project: str = ""

    def __post_init__(self) -> None:
        if self.name == "ProjectSpecific":
            if not self.project:
                raise ValueError("project-specific source needs a project name")
        elif self.name not in _STANDARD_NAMES.values() or self.project:
            raise ValueError(f"unknown guideline source {self.name!r}")

    @property
    def is_project_specific(self) -> bool:
        return self.name == "ProjectSpecific"

    @classmethod
    def project_specific(cls, project: str) -> GuidelineSource:
        return cls("ProjectSpecific", project.lower())

    @classmethod
    def parse(cls, text: str) -> GuidelineSource:
        """Accept ``oracle``, ``Oracle``, ``project:hadoop`` or ``ProjectSpecific(hadoop)``."""
        s = str(text).strip()
        if s.lower().startswith("project:"):
            return cls.project_specific(s.split(":", 1)[1].strip())
        if s.startswith("ProjectSpecific(") and s.endswith(")"):
            return cls.project_specific(s[len("ProjectSpecific(") : -1].strip())
        canonical = _STANDARD_NAMES.get(s.lower())
        if canonical is None:
            raise ValueError(f"unknown guideline source {text!r}")
        return cls(canonical)

    def __str__(self) -> str:
        return f"ProjectSpecific({self.project})" if self.is_project_specific else self.name


ORACLE = GuidelineSource("Oracle")
GOOGLE_JAVA = GuidelineSource("GoogleJava")
PEP257 = GuidelineSource("Pep257")
PEP8 = GuidelineSource("Pep8")
NUMPY = GuidelineSource("Numpy")
GOOGLE_PYTHON = GuidelineSource("GooglePython")
STANDARD_SOURCES = (ORACLE, GOOGLE_JAVA, PEP257, PEP8, NUMPY, GOOGLE_PYTHON)


@dataclass(frozen=True)
class Rule:
    id: str
    category: RuleCategory
    sources: tuple[GuidelineSource, ...]
    languages: tuple[Language, ...]
    title: str
    anchor: str
    applicability: str
    followed: str
    severity: Severity = Severity.CONVENTION
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.sources:
            raise ValueError(f"{self.id}: rule needs at least one source")
        if not self.languages:
            raise ValueError(f"{self.id}: rule needs at least one language")

    @property
    def source(self) -> GuidelineSource:
        return self.sources[0]

    @property
    def level(self) -> int:
        """Least information needed to evaluate the rule (see :mod:`predicates`)."""
        return max(predicates.level_of(self.applicability), predicates.level_of(self.followed))


def _rule(id, category, sources, languages, title, anchor, applicability, followed, severity=Severity.CONVENTION, **params):
    return Rule(
        id=id,
        category=category,
        sources=tuple(sources),
        languages=tuple(languages),
        title=title,
        anchor=anchor,
        applicability=applicability,
        followed=followed,
        severity=severity,
        params=params,
    )


_JAVA = (Language.JAVA,)
_PY = (Language.PYTHON,)
_BOTH = (Language.JAVA, Language.PYTHON)
C = RuleCategory

BUILTIN_RULES: tuple[Rule, ...] = (
    _rule("ORA-3P", C.WRITING_STYLE, [ORACLE], _JAVA,
          "summary verb in third person",
          "Use 3rd person (descriptive), not 2nd person (prescriptive)",
          "summary_mood_determinable", "summary_third_person"),
    _rule("ORA-FIXME", C.SYNTAX, [ORACLE], _JAVA,
          "broken-code markers use FIXME",
          "use FIXME to flag something that is bogus or broken",
          "has_bogus_marker", "bogus_marker_is_fixme"),
    _rule("ORA-SERIAL", C.CONTENT, [ORACLE], _JAVA,
          "serializable classes document their serial form",
          "use @serial tag in class comment",
          "serial_context", "has_block_tag", tag="serial"),
    _rule("ORA-DEPR", C.CONTENT, [ORACLE], _JAVA,
          "deprecated classes name a replacement",
          "for the @deprecated tag, suggest what item to use instead",
          "has_block_tag", "deprecation_names_replacement", tag="deprecated"),
    _rule("SPARK-P", C.SYNTAX, [GuidelineSource.project_specific("spark")], _JAVA,
          "paragraphs separated by <p>",
          "separate the paragraphs with a <p> paragraph tag",
          "multi_paragraph", "paragraphs_marked", Severity.STRICT),
    _rule("HAD-AUTH", C.CONTENT, [GuidelineSource.project_specific("hadoop")], _JAVA,
          "no @author tags",
          "Do not use @author tags",
          "always", "not:has_block_tag", Severity.STRICT, tag="author"),
    _rule("NUM-EXT", C.CONTENT, [NUMPY], _PY,
          "extended summary present",
          "a few sentences giving an extended summary of the class or method after the short (one-line) summary",
          "has_summary", "has_extended"),
    _rule("NUM-BLANK", C.STRUCTURE, [NUMPY], _PY,
          "blank line between short and extended summary",
          "there should be a blank line between the short summary and extended summary",
          "has_summary_and_extended", "blank_line_after_summary"),
    _rule("PEP-LIST", C.CONTENT, [PEP257], _PY,
          "class docstring lists public methods and instance variables",
          "Docstrings for a class should list public methods and instance variables",
          "has_public_members", "lists_public_members"),
    _rule("JD-ORDER", C.STRUCTURE, [ORACLE], _JAVA,
          "block tags in canonical order",
          "Order block tags: @author, @version, @param, @return, @exception/@throws, @see, @since, @serial, @deprecated",
          "has_ordered_tags", "block_tags_in_order"),
    _rule("WS-CAP", C.WRITING_STYLE, STANDARD_SOURCES, _BOTH,
          "summary starts with a capital letter",
          "Begin the summary sentence with a capital letter",
          "summary_starts_with_letter", "summary_capitalized"),
    _rule("WS-PERIOD", C.WRITING_STYLE, [PEP257, ORACLE], _BOTH,
          "summary ends with a period",
          "End the summary sentence with a period",
          "has_summary", "summary_ends_with_period"),
    _rule("FMT-LINELEN", C.FORMATTING, STANDARD_SOURCES, _BOTH,
          "comment lines within the line length limit",
          "Keep comment lines within the line length limit",
          "always", "lines_within_limit", limit=80),
    _rule("FMT-INDENT", C.FORMATTING, STANDARD_SOURCES, _BOTH,
          "continuation lines share the gutter column",
          "Indent every continuation line of a comment to the same gutter column",
          "multi_line", "gutter_consistent"),
    _rule("CNT-PRESENT", C.CONTENT, STANDARD_SOURCES, _BOTH,
          "class has a documentation comment",
          "Write a documentation comment for every class",
          "always", "comment_present"),
)
BUILTIN_IDS = frozenset(r.id for r in BUILTIN_RULES)

OVERRIDE_ACTIONS = ("disable", "invert-to-prohibition")


@dataclass(frozen=True)
class Preset:
    name: str
    language: Language
    sources: tuple[GuidelineSource, ...]
    project_guideline: bool = False
    rule_ids: tuple[str, ...] = ()
    overrides: tuple[tuple[str, str], ...] = ()
    max_line_length: int = 80
    dialect: Dialect | None = None

    @property
    def project_source(self) -> GuidelineSource:
        return GuidelineSource.project_specific(self.name)


def _preset(name, language, sources, project_guideline, **kw) -> Preset:
    return Preset(name=name, language=language, sources=tuple(sources), project_guideline=project_guideline, **kw)


_PEP = (PEP8, PEP257)

# Projects and their guidelines, one row per project of the study.
PROJECT_PRESETS: dict[str, Preset] = {
    p.name: p
    for p in (
        _preset("eclipse", Language.JAVA, [ORACLE], True),
        _preset("hadoop", Language.JAVA, [ORACLE], True),
        _preset("vaadin", Language.JAVA, [ORACLE], True),
        _preset("spark", Language.JAVA, [ORACLE], True),
        _preset("guava", Language.JAVA, [GOOGLE_JAVA], False, max_line_length=100),
        _preset("guice", Language.JAVA, [GOOGLE_JAVA], False, max_line_length=100),
        _preset("django", Language.PYTHON, _PEP, True),
        _preset("requests", Language.PYTHON, _PEP, True),
        _preset("pipenv", Language.PYTHON, _PEP, False),
        _preset("mailpile", Language.PYTHON, _PEP, False),
        _preset("pandas", Language.PYTHON, [NUMPY], True, dialect=Dialect.NUMPYDOC),
        _preset("ipython", Language.PYTHON, [PEP8, PEP257, NUMPY], True),
        _preset("pytorch", Language.PYTHON, [GOOGLE_PYTHON], True, dialect=Dialect.GOOGLEDOC, max_line_length=120),
    )
}

GUIDELINE_PRESETS: dict[str, Preset] = {
    p.name: p
    for p in (
        _preset("oracle", Language.JAVA, [ORACLE], False),
        _preset("google-java", Language.JAVA, [GOOGLE_JAVA], False, max_line_length=100),
        _preset("pep257", Language.PYTHON, [PEP257], False),
        _preset("pep8", Language.PYTHON, [PEP8], False),
        _preset("numpy", Language.PYTHON, [NUMPY], False, dialect=Dialect.NUMPYDOC),
        _preset("google-python", Language.PYTHON, [GOOGLE_PYTHON], False, dialect=Dialect.GOOGLEDOC),
    )
}

BUILTIN_PRESETS: dict[str, Preset] = {**PROJECT_PRESETS, **GUIDELINE_PRESETS}

# Used when no preset is requested.
DEFAULT_PRESETS = {Language.JAVA: "oracle", Language.PYTHON: "pep257"}


@dataclass(frozen=True)
class Catalog:
    """Immutable rule list plus any presets defined by a catalog document."""

    rules: tuple[Rule, ...] = BUILTIN_RULES
    presets: Mapping[str, Preset] = field(default_factory=dict)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __getitem__(self, rule_id: str) -> Rule:
        for rule in self.rules:
            if rule.id == rule_id:
                return rule
        raise KeyError(rule_id)

    def __contains__(self, rule_id: object) -> bool:
        return any(rule.id == rule_id for rule in self.rules)

    @property
    def ids(self) -> list[str]:
        return [r.id for r in self.rules]

    def preset_names(self) -> list[str]:
        return sorted(set(BUILTIN_PRESETS) | set(self.presets))


DEFAULT_CATALOG = Catalog()


# ---------------------------------------------------------------------------
# presets


def resolve_preset(name: str, catalog: Catalog = DEFAULT_CATALOG) -> Preset:
    """Expand a project or guideline name into its rule list.

    Project presets take every rule whose sources include one of the
    project's standard guidelines, plus rules sourced to the project itself.
    """
    key = name.strip().lower()
    base = catalog.presets.get(key) or BUILTIN_PRESETS.get(key)
    if base is None:
        raise UnknownPreset(name, catalog.preset_names())
    project = GuidelineSource.project_specific(base.name)
    ids = tuple(
        r.id
        for r in catalog.rules
        if base.language in r.languages and (project in r.sources or any(s in base.sources for s in r.sources))
    )
    extra = tuple(i for i in base.rule_ids if i not in ids)
    return replace(base, rule_ids=ids + extra)


def rules_for(preset: Preset, catalog: Catalog = DEFAULT_CATALOG) -> list[Rule]:
    """Concrete rules for ``preset`` with overrides and settings applied.

    Each rule's sources are narrowed to the ones that brought it into the
    preset, so ``rule.source`` names the guideline that applies here.
    """
    actions = dict(preset.overrides)
    out = []
    for rule_id in preset.rule_ids:
        rule = catalog[rule_id]
        action = actions.get(rule_id)
        if action == "disable":
            continue
        matching = tuple(s for s in rule.sources if s in preset.sources or s == preset.project_source)
        if matching:
            rule = replace(rule, sources=matching)
        if rule.followed == "lines_within_limit":
            rule = replace(rule, params={**rule.params, "limit": preset.max_line_length})
        if action == "invert-to-prohibition":
            rule = replace(
                rule,
                applicability="always",
                followed=_negate(rule.applicability),
                title=f"no {rule.title}",
            )
        out.append(rule)
    return out


def _negate(name: str) -> str:
    if name.startswith(predicates.NEGATION_PREFIX):
        return name[len(predicates.NEGATION_PREFIX) :]
    return predicates.NEGATION_PREFIX + name


# ---------------------------------------------------------------------------
# catalog documents

_RULE_KEYS = ("id", "category", "source", "languages", "title", "anchor", "applicability", "followed", "severity")
_RULE_OPTIONAL = ("params",)
_PRESET_KEYS = ("name", "language", "sources", "project_guideline", "max_line_length", "dialect", "rules", "overrides")


_SCALARS = yaml.SafeLoader("")


def _to_python(node: yaml.Node) -> tuple[Any, int]:
    """Convert a composed YAML node, keeping the 1-based line of each mapping value."""
    line = node.start_mark.line + 1
    if isinstance(node, yaml.MappingNode):
        out: dict[str, Any] = {}
        lines: dict[str, int] = {}
        for k, v in node.value:
            key, _ = _to_python(k)
            value, _ = _to_python(v)
            if key in out:
                raise SchemaError(f"duplicate key {key!r}", k.start_mark.line + 1)
            out[key] = value
            lines[key] = v.start_mark.line + 1
        out["__lines__"] = lines
        return out, line
    if isinstance(node, yaml.SequenceNode):
        return [_to_python(v)[0] for v in node.value], line
    return _SCALARS.construct_object(node, deep=True), line


def _line(entry: Mapping[str, Any], key: str | None = None) -> int:
    lines = entry.get("__lines__", {})
    if key is not None and key in lines:
        return lines[key]
    return min(lines.values(), default=0)


def _as_list(value: Any) -> list[Any]:
    if value is None:
        return []
    return list(value) if isinstance(value, list) else [value]


def _parse_language(value: Any, line: int) -> Language:
    try:
        return Language(str(value).lower())
    except ValueError:
        raise SchemaError(f"unknown language {value!r}", line) from None


def _parse_rule(entry: Any) -> Rule:
    if not isinstance(entry, dict):
        raise SchemaError("rule entry must be a mapping")
    missing = [k for k in _RULE_KEYS if k not in entry]
    if missing:
        raise SchemaError(f"rule missing keys: {', '.join(missing)}", _line(entry))
    unknown = sorted(set(entry) - set(_RULE_KEYS) - set(_RULE_OPTIONAL) - {"__lines__"})
    if unknown:
        raise SchemaError(f"unknown rule keys: {', '.join(unknown)}", _line(entry, unknown[0]))
    rule_id = str(entry["id"]).strip()
    if not rule_id:
        raise SchemaError("rule id must be non-empty", _line(entry, "id"))
    try:
        category = RuleCategory(entry["category"])
    except ValueError:
        raise SchemaError(f"unknown category {entry['category']!r}", _line(entry, "category")) from None
    try:
        sources = tuple(GuidelineSource.parse(s) for s in _as_list(entry["source"]))
    except ValueError as exc:
        raise SchemaError(str(exc), _line(entry, "source")) from None
    if not sources:
        raise SchemaError("rule needs a source", _line(entry, "source"))
    languages = tuple(_parse_language(v, _line(entry, "languages")) for v in _as_list(entry["languages"]))
    if not languages:
        raise SchemaError("rule needs at least one language", _line(entry, "languages"))
    for key in ("applicability", "followed"):
        if not predicates.is_known(str(entry[key])):
            raise SchemaError(f"unknown predicate {entry[key]!r}", _line(entry, key))
    try:
        severity = Severity(str(entry["severity"]).lower())
    except ValueError:
        raise SchemaError(f"unknown severity {entry['severity']!r}", _line(entry, "severity")) from None
    params = entry.get("params") or {}
    if not isinstance(params, dict):
        raise SchemaError("params must be a mapping", _line(entry, "params"))
    params = {k: v for k, v in params.items() if k != "__lines__"}
    return Rule(
        id=rule_id,
        category=category,
        sources=sources,
        languages=languages,
        title=str(entry["title"]),
        anchor=str(entry["anchor"]),
        applicability=str(entry["applicability"]),
        followed=str(entry["followed"]),
        severity=severity,
        params=params,
    )


def _parse_preset(entry: Any, known_ids: set[str]) -> Preset:
    if not isinstance(entry, dict) or "name" not in entry:
        raise SchemaError("preset entry must be a mapping with a name", _line(entry) if isinstance(entry, dict) else 0)
    unknown = sorted(set(entry) - set(_PRESET_KEYS) - {"__lines__"})
    if unknown:
        raise SchemaError(f"unknown preset keys: {', '.join(unknown)}", _line(entry, unknown[0]))
    name = str(entry["name"]).strip().lower()
    base = BUILTIN_PRESETS.get(name)
    if base is None:
        for key in ("language", "sources"):
            if key not in entry:
                raise SchemaError(f"new preset {name!r} needs {key!r}", _line(entry))
    try:
        sources = (
            tuple(GuidelineSource.parse(s) for s in _as_list(entry["sources"]))
            if "sources" in entry
            else base.sources
        )
    except ValueError as exc:
        raise SchemaError(str(exc), _line(entry, "sources")) from None
    language = _parse_language(entry["language"], _line(entry, "language")) if "language" in entry else base.language
    extra_ids = tuple(str(i) for i in _as_list(entry.get("rules")))
    for rule_id in extra_ids:
        if rule_id not in known_ids:
            raise SchemaError(f"preset {name!r} references unknown rule {rule_id!r}", _line(entry, "rules"))
    overrides = []
    for ov in _as_list(entry.get("overrides")):
        if not isinstance(ov, dict) or "rule" not in ov or "action" not in ov:
            raise SchemaError("override needs 'rule' and 'action'", _line(entry, "overrides"))
        if ov["rule"] not in known_ids:
            raise SchemaError(f"override references unknown rule {ov['rule']!r}", _line(ov, "rule"))
        if ov["action"] not in OVERRIDE_ACTIONS:
            raise SchemaError(f"unknown override action {ov['action']!r}", _line(ov, "action"))
        overrides.append((str(ov["rule"]), str(ov["action"])))
    dialect = None
    if entry.get("dialect") is not None:
        try:
            dialect = Dialect(entry["dialect"])
        except ValueError:
            raise SchemaError(f"unknown dialect {entry['dialect']!r}", _line(entry, "dialect")) from None
    elif base is not None:
        dialect = base.dialect
    max_len = entry.get("max_line_length", base.max_line_length if base else 80)
    if not isinstance(max_len, int) or max_len <= 0:
        raise SchemaError("max_line_length must be a positive integer", _line(entry, "max_line_length"))
    return Preset(
        name=name,
        language=language,
        sources=sources,
        project_guideline=bool(entry.get("project_guideline", base.project_guideline if base else True)),
        rule_ids=(base.rule_ids if base else ()) + extra_ids,
        overrides=(base.overrides if base else ()) + tuple(overrides),
        max_line_length=max_len,
        dialect=dialect,
    )


def load_catalog(document: str = "") -> Catalog:
    """Build a catalog from the built-in rules plus a YAML ``document``.

    Raises:
        SchemaError: malformed YAML, unknown category/predicate/source,
            duplicate rule id. The error carries the offending line.
    """
    try:
        node = yaml.compose(document or "", Loader=yaml.SafeLoader)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise SchemaError(f"invalid YAML: {getattr(exc, 'problem', exc)}", mark.line + 1 if mark else 0) from None
    if node is None:
        return Catalog()
    data, line = _to_python(node)
    if not isinstance(data, dict):
        raise SchemaError("catalog document must be a mapping with 'rules' and/or 'presets'", line)
    unknown = sorted(set(data) - {"rules", "presets", "__lines__"})
    if unknown:
        raise SchemaError(f"unknown top-level keys: {', '.join(unknown)}", _line(data, unknown[0]))

    rules = list(BUILTIN_RULES)
    seen = {r.id: 0 for r in rules}
    for entry in _as_list(data.get("rules")):
        rule = _parse_rule(entry)
        if rule.id in seen:
            where = "built-in" if rule.id in BUILTIN_IDS else f"line {seen[rule.id]}"
            raise SchemaError(f"duplicate rule id {rule.id!r} (already defined: {where})", _line(entry, "id"))
        seen[rule.id] = _line(entry, "id")
        rules.append(rule)

    presets: dict[str, Preset] = {}
    for entry in _as_list(data.get("presets")):
        preset = _parse_preset(entry, set(seen))
        if preset.name in presets:
            raise SchemaError(f"duplicate preset {preset.name!r}", _line(entry, "name"))
        presets[preset.name] = preset
    return Catalog(rules=tuple(rules), presets=presets)


def _rule_document(rule: Rule) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "id": rule.id,
        "category": rule.category.value,
        "source": [_source_text(s) for s in rule.sources],
        "languages": [lang.value for lang in rule.languages],
        "title": rule.title,
        "anchor": rule.anchor,
        "applicability": rule.applicability,
        "followed": rule.followed,
        "severity": rule.severity.value,
    }
    if rule.params:
        doc["params"] = dict(rule.params)
    return doc


def _source_text(source: GuidelineSource) -> str:
    return f"project:{source.project}" if source.is_project_specific else source.name


def _preset_document(preset: Preset) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": preset.name,
        "language": preset.language.value,
        "sources": [_source_text(s) for s in preset.sources],
        "project_guideline": preset.project_guideline,
        "max_line_length": preset.max_line_length,
    }
    if preset.dialect is not None:
        doc["dialect"] = preset.dialect.value
    base = BUILTIN_PRESETS.get(preset.name)
    extra = preset.rule_ids[len(base.rule_ids) :] if base else preset.rule_ids
    if extra:
        doc["rules"] = list(extra)
    overrides = preset.overrides[len(base.overrides) :] if base else preset.overrides
    if overrides:
        doc["overrides"] = [{"rule": r, "action": a} for r, a in overrides]
    return doc


def dump_catalog(catalog: Catalog) -> str:
    """Serialize the non-built-in part of ``catalog`` as a catalog document."""
    data: dict[str, Any] = {}
    extra = [r for r in catalog.rules if r.id not in BUILTIN_IDS]
    if extra:
        data["rules"] = [_rule_document(r) for r in extra]
    if catalog.presets:
        data["presets"] = [_preset_document(p) for p in catalog.presets.values()]
    if not data:
        return ""
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
