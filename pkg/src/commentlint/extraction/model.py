from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path


class Language(str, enum.Enum):
    JAVA = "java"
    PYTHON = "python"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Diagnostic:
    """A non-fatal problem tied to a file position."""

    file: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"{self.file}:{self.line}: {self.message}"


class ExtractionError(Exception):
    """Per-file failure while reading source. Corpus runs report it and move on."""

    def __init__(self, path: str | Path, message: str, line: int = 0) -> None:
        super().__init__(f"{path}:{line}: {message}")
        self.path = Path(path)
        self.line = line
        self.message = message


class IoError(ExtractionError):
    pass


class EncodingError(ExtractionError):
    pass


class UnknownLanguage(ExtractionError):
    pass


@dataclass(frozen=True)
class SourceUnit:
    path: Path
    language: Language
    text: str

    @cached_property
    def _line_starts(self) -> list[int]:
        starts = [0]
        for i, ch in enumerate(self.text):
            if ch == "\n":
                starts.append(i + 1)
        return starts

    def line_of(self, offset: int) -> int:
        """1-based line number of character ``offset``."""
        return bisect.bisect_right(self._line_starts, offset)

    def column_of(self, offset: int) -> int:
        """0-based column of character ``offset``."""
        return offset - self._line_starts[self.line_of(offset) - 1]


@dataclass(frozen=True)
class ClassCommentRecord:
    class_name: str
    qualified_name: str
    file: str
    class_line: int
    language: Language
    comment_present: bool = False
    raw_comment: str = ""
    comment_span: tuple[int, int] = (0, 0)
    # Column where the comment's opening delimiter (or string prefix) starts.
    comment_column: int = 0
    visible_member_names: tuple[str, ...] = ()
    # Header text from the class keyword up to the body opener.
    declaration: str = ""
    kind: str = "class"

    def __post_init__(self) -> None:
        if self.comment_present:
            if not self.raw_comment:
                raise ValueError("present comment must have text")
            if self.comment_span[0] < 1 or self.comment_span[0] > self.comment_span[1]:
                raise ValueError(f"bad comment span {self.comment_span}")
        elif self.raw_comment or self.comment_span != (0, 0):
            raise ValueError("absent comment must be empty with span (0, 0)")
        names = self.visible_member_names
        if list(names) != sorted(set(names)):
            raise ValueError("visible_member_names must be sorted and unique")

    @classmethod
    def build(cls, members: set[str] | list[str] = (), **kw) -> ClassCommentRecord:
        return cls(visible_member_names=tuple(sorted(set(members))), **kw)
