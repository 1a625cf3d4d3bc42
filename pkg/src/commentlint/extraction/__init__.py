"""Locate class declarations in Java and Python source and pair them with their doc comments."""

from __future__ import annotations

from pathlib import Path

from .model import (
    ClassCommentRecord,
    Diagnostic,
    EncodingError,
    ExtractionError,
    IoError,
    Language,
    SourceUnit,
    UnknownLanguage,
)

__all__ = [
    "ClassCommentRecord",
    "Diagnostic",
    "EncodingError",
    "ExtractionError",
    "IoError",
    "Language",
    "SourceUnit",
    "UnknownLanguage",
    "decode_source",
    "extract_class_comments",
    "language_for_path",
]

_EXTENSIONS = {".java": Language.JAVA, ".py": Language.PYTHON}


def language_for_path(path: str | Path) -> Language | None:
    return _EXTENSIONS.get(Path(path).suffix.lower())


def decode_source(path: str | Path, language_hint: Language | None = None) -> SourceUnit:
    """Read ``path`` as UTF-8 and wrap it in a :class:`SourceUnit`.

    The language comes from ``language_hint`` when given, otherwise from the
    file extension.

    Raises:
        UnknownLanguage: no hint and the extension is not ``.java``/``.py``.
        IoError: the file cannot be read.
        EncodingError: the bytes are not valid UTF-8.
    """
    path = Path(path)
    language = language_hint or language_for_path(path)
    if language is None:
        raise UnknownLanguage(path, f"cannot infer language from extension {path.suffix!r}")
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise IoError(path, exc.strerror or str(exc)) from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise EncodingError(path, f"invalid UTF-8 at byte {exc.start}", line=line) from exc
    if text.startswith("\ufeff"):
        text = text[1:]
    return SourceUnit(path=path, language=language, text=text)


def extract_class_comments(
    unit: SourceUnit, diagnostics: list[Diagnostic] | None = None
) -> list[ClassCommentRecord]:
    """Return one record per class declaration in ``unit``, in source order.

    Regions the scanner cannot make sense of are skipped; a note is appended
    to ``diagnostics`` when a list is supplied.
    """
    from . import java, python

    sink: list[Diagnostic] = [] if diagnostics is None else diagnostics
    if unit.language is Language.JAVA:
        return java.scan(unit, sink)
    return python.scan(unit, sink)
