"""Exception types raised across the package.

Row-level ingest errors carry the 0-based data row index so callers can
point at the offending line; lexicon errors carry the 1-based file line.
"""

from __future__ import annotations


class ConcernScanError(Exception):
    """Base class for every error this package raises deliberately."""


class FileNotReadable(ConcernScanError):
    def __init__(self, path, reason: str = ""):
        self.path = str(path)
        msg = f"cannot read {self.path}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class MissingColumn(ConcernScanError):
    def __init__(self, name):
        self.column = name
        super().__init__(f"column {name!r} not found in input")


class RowError(ConcernScanError):
    """Validation problem tied to one data row of a corpus file."""

    def __init__(self, row: int, message: str):
        self.row = row
        super().__init__(f"row {row}: {message}")


class BadDate(RowError):
    def __init__(self, row: int, value: str):
        self.value = value
        super().__init__(row, f"unusable date {value!r}")


class BadYear(RowError):
    def __init__(self, row: int, value: str):
        self.value = value
        super().__init__(row, f"unusable year {value!r}")


class EmptyText(RowError):
    def __init__(self, row: int):
        super().__init__(row, "narrative text is empty")


class BadId(RowError):
    def __init__(self, row: int):
        super().__init__(row, "record id is empty")


class DuplicateId(RowError):
    def __init__(self, row: int, record_id: str):
        self.record_id = record_id
        super().__init__(row, f"duplicate record id {record_id!r}")


class LexiconError(ConcernScanError):
    """Problem in a lexicon file, tied to a 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ParseError(LexiconError):
    pass


class RangeError(LexiconError):
    def __init__(self, line: int, field: str, value: float):
        self.field = field
        self.value = value
        super().__init__(line, f"{field} value {value} out of range")


class UnknownEmotion(LexiconError):
    def __init__(self, line: int, name: str):
        self.name = name
        super().__init__(line, f"unknown emotion {name!r}")


class EmptyReport(ConcernScanError):
    pass


class EmptyCorpus(ConcernScanError):
    pass


class NotNegativeSentence(ConcernScanError):
    pass


class TooFewPoints(ConcernScanError):
    pass


class DegenerateX(ConcernScanError):
    pass
