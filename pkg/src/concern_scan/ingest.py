"""Loading, validation, and deduplication of report corpora.

Input is a delimited UTF-8 text file (RFC-4180 quoting), one record per
line. Duplicate rows are byte-identical across the *configured* columns
only; the first occurrence wins. Rows that fail validation are collected
into the load result instead of aborting, unless strict mode is on.
"""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .errors import (
    BadDate,
    BadId,
    BadYear,
    DuplicateId,
    EmptyText,
    FileNotReadable,
    MissingColumn,
    RowError,
)

YEAR_MIN = 1900
YEAR_MAX = 2100

ColumnRef = Union[str, int]


@dataclass(frozen=True, slots=True)
class ReportRecord:
    """One narrative: identifier, calendar date (optional), year, raw text."""

    id: str
    date: Optional[dt.date]
    year: int
    text: str


@dataclass(frozen=True)
class IngestConfig:
    """Column mapping for a corpus file.

    Column references are header names, or 0-based positions when
    ``has_header`` is false. ``text_column`` is required and at least one of
    ``date_column``/``year_column`` must be set. Without an ``id_column``,
    ids are synthesized from the data row number.
    """

    text_column: ColumnRef = "text"
    id_column: Optional[ColumnRef] = "id"
    date_column: Optional[ColumnRef] = "date"
    year_column: Optional[ColumnRef] = None
    delimiter: str = ","
    has_header: bool = True

    def __post_init__(self):
        if self.text_column in (None, ""):
            raise ValueError("text_column is required")
        if self.date_column in (None, "") and self.year_column in (None, ""):
            raise ValueError("at least one of date_column/year_column is required")
        if len(self.delimiter) != 1:
            raise ValueError("delimiter must be a single character")

    def columns(self) -> list[ColumnRef]:
        cols: list[ColumnRef] = []
        for col in (self.id_column, self.date_column, self.year_column, self.text_column):
            if col not in (None, ""):
                cols.append(col)
        return cols


@dataclass
class LoadResult:
    records: list[ReportRecord] = field(default_factory=list)
    errors: list[RowError] = field(default_factory=list)
    rows_read: int = 0
    duplicates_removed: int = 0


def load_reports(path, cfg: IngestConfig, strict: bool = False) -> LoadResult:
    """Load and validate a corpus file.

    Returns records in file order after removing exact duplicate rows
    (first occurrence kept). Year is taken from the year column when
    configured, otherwise derived from the date. In strict mode the first
    row-level problem is raised instead of collected.
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as handle:
            raw_rows = list(csv.reader(handle, delimiter=cfg.delimiter))
    except OSError as exc:
        raise FileNotReadable(path, str(exc)) from exc

    resolve = _build_resolver(raw_rows, cfg)
    data_rows = raw_rows[1:] if cfg.has_header else raw_rows

    result = LoadResult()
    seen_rows: set[tuple[str, ...]] = set()
    seen_ids: set[str] = set()
    for row_index, row in enumerate(data_rows):
        if not row or all(cell.strip() == "" for cell in row):
            continue
        result.rows_read += 1
        key = tuple(resolve(row, col) for col in cfg.columns())
        if key in seen_rows:
            result.duplicates_removed += 1
            continue
        seen_rows.add(key)
        try:
            record = _validate_row(row_index, row, cfg, resolve, seen_ids)
        except RowError as err:
            if strict:
                raise
            result.errors.append(err)
            continue
        seen_ids.add(record.id)
        result.records.append(record)
    return result


def _build_resolver(raw_rows: list[list[str]], cfg: IngestConfig):
    """Map column references to cell values, checking they exist up front."""
    if cfg.has_header:
        if not raw_rows:
            header: list[str] = []
        else:
            header = [h.strip() for h in raw_rows[0]]
        positions = {name: i for i, name in enumerate(header)}
        for col in cfg.columns():
            if col not in positions:
                raise MissingColumn(col)

        def resolve(row: list[str], col: ColumnRef) -> str:
            i = positions[col]
            return row[i] if i < len(row) else ""

        return resolve

    for col in cfg.columns():
        if not isinstance(col, int):
            raise MissingColumn(col)

    def resolve_positional(row: list[str], col: ColumnRef) -> str:
        return row[col] if col < len(row) else ""

    return resolve_positional


def _validate_row(row_index, row, cfg, resolve, seen_ids) -> ReportRecord:
    text = resolve(row, cfg.text_column).strip()
    if not text:
        raise EmptyText(row_index)

    date: Optional[dt.date] = None
    if cfg.date_column not in (None, ""):
        date_cell = resolve(row, cfg.date_column).strip()
        if date_cell:
            try:
                date = dt.date.fromisoformat(date_cell)
            except ValueError:
                raise BadDate(row_index, date_cell) from None

    year: Optional[int] = None
    if cfg.year_column not in (None, ""):
        year_cell = resolve(row, cfg.year_column).strip()
        if year_cell:
            try:
                year = int(year_cell)
            except ValueError:
                raise BadYear(row_index, year_cell) from None

    if year is None:
        if date is None:
            if cfg.date_column not in (None, ""):
                raise BadDate(row_index, "")
            raise BadYear(row_index, "")
        year = date.year
    elif date is not None and date.year != year:
        raise BadYear(row_index, f"{year} (date says {date.year})")
    if not YEAR_MIN <= year <= YEAR_MAX:
        raise BadYear(row_index, str(year))

    if cfg.id_column in (None, ""):
        record_id = f"row-{row_index:06d}"
    else:
        record_id = resolve(row, cfg.id_column).strip()
        if not record_id:
            raise BadId(row_index)
    if record_id in seen_ids:
        raise DuplicateId(row_index, record_id)

    return ReportRecord(record_id, date, year, text)


def dump_reports(records, path, cfg: IngestConfig = IngestConfig()) -> None:
    """Write records back out as a delimited file that reloads identically."""
    header = []
    if cfg.id_column not in (None, ""):
        header.append(str(cfg.id_column))
    if cfg.date_column not in (None, ""):
        header.append(str(cfg.date_column))
    if cfg.year_column not in (None, ""):
        header.append(str(cfg.year_column))
    header.append(str(cfg.text_column))

    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, delimiter=cfg.delimiter, lineterminator="\n")
        if cfg.has_header:
            writer.writerow(header)
        for rec in records:
            row = []
            if cfg.id_column not in (None, ""):
                row.append(rec.id)
            if cfg.date_column not in (None, ""):
                row.append(rec.date.isoformat() if rec.date else "")
            if cfg.year_column not in (None, ""):
                row.append(str(rec.year))
            row.append(rec.text)
            writer.writerow(row)
