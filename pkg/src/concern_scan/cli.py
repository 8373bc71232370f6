"""Command-line interface.

Subcommands: ``analyze`` runs the full pipeline and writes the export set;
``trends``, ``regress`` and ``wordfreq`` emit single analytics surfaces in
csv, json, or table form, either computed from a raw corpus or replayed from
a previous export directory via ``--from-run``.

Exit codes: 0 success, 1 data errors (including strict-mode validation
failures), 2 usage errors. The environment variable
``CONCERN_SCAN_LEXICON_DIR`` supplies a default directory searched for
``polarity.csv`` and ``emotions.tsv`` when the lexicon flags are omitted.
"""

from __future__ import annotations

import argparse
import csv as _csv
import json
import os
import sys
from pathlib import Path

from . import pipeline
from .concern import ConcernThresholds
from .errors import ConcernScanError, FileNotReadable
from .ingest import IngestConfig
from .sentiment import NEGATION_FACTOR
from .textprep import PrepConfig, load_wordlist
from .trends import round_percentages

LEXICON_DIR_ENV = "CONCERN_SCAN_LEXICON_DIR"
DEFAULT_POLARITY_NAME = "polarity.csv"
DEFAULT_EMOTION_NAME = "emotions.tsv"

FORMATS = ("csv", "json", "table")

_BOOL_WORDS = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}


def _parse_bool(text: str) -> bool:
    try:
        return _BOOL_WORDS[text.strip().lower()]
    except KeyError:
        raise ValueError(f"not a boolean: {text!r}") from None


# Converters applied to values read from a --config file.
_CONFIG_TYPES = {
    "delta1": float,
    "delta2": float,
    "delta3": float,
    "negation_factor": float,
    "jobs": int,
    "top": int,
    "strict": _parse_bool,
    "no_header": _parse_bool,
    "literal_polarity_rule": _parse_bool,
}


def load_config_file(path) -> dict:
    """Parse a key=value configuration file (# comments, blank lines ok)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileNotReadable(path, str(exc)) from exc
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConcernScanError(f"{path}:{lineno}: expected key=value, got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip().strip("\"'")
        converter = _CONFIG_TYPES.get(key, str)
        try:
            values[key] = converter(value)
        except ValueError as exc:
            raise ConcernScanError(f"{path}:{lineno}: {exc}") from None
    return values


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="key=value file; explicit flags override it")
    parser.add_argument("--input", help="corpus file (delimited text)")
    parser.add_argument("--polarity-lexicon", dest="polarity_lexicon")
    parser.add_argument("--emotion-lexicon", dest="emotion_lexicon")
    parser.add_argument("--delta1", type=float, default=None)
    parser.add_argument("--delta2", type=float, default=None)
    parser.add_argument("--delta3", type=float, default=None)
    parser.add_argument("--negation-factor", dest="negation_factor", type=float, default=None)
    parser.add_argument(
        "--literal-polarity-rule",
        dest="literal_polarity_rule",
        action="store_const",
        const=True,
        help="read the mean-polarity branch literally (a_pol > delta3)",
    )
    parser.add_argument("--jobs", type=int, default=None, help="worker count (output unchanged)")
    parser.add_argument("--strict", action="store_const", const=True, help="abort on first bad row")
    parser.add_argument("--format", choices=FORMATS, default=None)
    parser.add_argument("--delimiter", default=None)
    parser.add_argument("--text-column", dest="text_column", default=None)
    parser.add_argument("--id-column", dest="id_column", default=None)
    parser.add_argument("--date-column", dest="date_column", default=None)
    parser.add_argument("--year-column", dest="year_column", default=None)
    parser.add_argument(
        "--no-header",
        dest="no_header",
        action="store_const",
        const=True,
        help="corpus has no header row; column flags are 0-based positions",
    )
    parser.add_argument("--stopwords", help="stopword list file override")
    parser.add_argument("--negators", help="negator list file override")
    parser.add_argument("--abbreviations", help="abbreviation list file override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concern-scan",
        description="Lexicon-based sentiment, emotion, and concern-report analytics.",
    )
    sub = parser.add_subparsers(dest="command")

    p_analyze = sub.add_parser("analyze", help="run the full pipeline and export all surfaces")
    _add_common(p_analyze)
    p_analyze.add_argument("--out", default=".", help="export directory (default: .)")
    p_analyze.add_argument("--top", type=int, default=None, help="word-frequency list size")
    p_analyze.set_defaults(handler=cmd_analyze)

    for name, handler, extra_help in (
        ("trends", cmd_trends, "yearly sentiment distribution series"),
        ("regress", cmd_regress, "concern-vs-volume regression fit"),
        ("wordfreq", cmd_wordfreq, "top words from concern reports"),
    ):
        p = sub.add_parser(name, help=extra_help)
        _add_common(p)
        p.add_argument("--from-run", dest="from_run", help="replay a previous export directory")
        p.add_argument("--out", default=None, help="also export the full run to this directory")
        if name == "wordfreq":
            p.add_argument("--top", type=int, default=None, help="list size (default 100)")
        p.set_defaults(handler=handler)

    return parser


class _Options:
    """Resolved options: explicit flag, then config file, then default."""

    def __init__(self, args: argparse.Namespace, parser: argparse.ArgumentParser):
        self.args = args
        self.parser = parser
        self.config = load_config_file(args.config) if getattr(args, "config", None) else {}

    def get(self, key: str, default=None):
        value = getattr(self.args, key, None)
        if value is None:
            value = self.config.get(key, default)
        return value

    def thresholds(self) -> ConcernThresholds:
        try:
            return ConcernThresholds(
                delta1=self.get("delta1", 0.35),
                delta2=self.get("delta2", 0.4),
                delta3=self.get("delta3", 0.4),
                literal_polarity_rule=bool(self.get("literal_polarity_rule", False)),
            )
        except ValueError as exc:
            self.parser.error(str(exc))

    def ingest_config(self) -> IngestConfig:
        no_header = bool(self.get("no_header", False))
        columns = {}
        for key, fallback in (
            ("text_column", "text"),
            ("id_column", "id"),
            ("date_column", "date"),
            ("year_column", None),
        ):
            value = self.get(key, fallback)
            if value in (None, ""):
                columns[key] = None
                continue
            if no_header:
                try:
                    value = int(value)
                except (TypeError, ValueError):
                    self.parser.error(f"--no-header requires numeric column positions; got {value!r}")
            columns[key] = value
        try:
            return IngestConfig(
                text_column=columns["text_column"],
                id_column=columns["id_column"],
                date_column=columns["date_column"],
                year_column=columns["year_column"],
                delimiter=self.get("delimiter", ","),
                has_header=not no_header,
            )
        except ValueError as exc:
            self.parser.error(str(exc))

    def prep_config(self) -> PrepConfig:
        kwargs = {}
        if self.get("stopwords"):
            kwargs["stopword_list"] = load_wordlist(self.get("stopwords"))
        if self.get("negators"):
            kwargs["negator_list"] = load_wordlist(self.get("negators"))
        if self.get("abbreviations"):
            kwargs["abbreviation_list"] = load_wordlist(self.get("abbreviations"))
        return PrepConfig(**kwargs)

    def lexicon_paths(self) -> tuple[str, str]:
        polarity = self.get("polarity_lexicon")
        emotion = self.get("emotion_lexicon")
        search_dir = os.environ.get(LEXICON_DIR_ENV)
        if search_dir:
            if not polarity and (Path(search_dir) / DEFAULT_POLARITY_NAME).exists():
                polarity = str(Path(search_dir) / DEFAULT_POLARITY_NAME)
            if not emotion and (Path(search_dir) / DEFAULT_EMOTION_NAME).exists():
                emotion = str(Path(search_dir) / DEFAULT_EMOTION_NAME)
        if not polarity or not emotion:
            self.parser.error(
                "--polarity-lexicon and --emotion-lexicon are required "
                f"(or set {LEXICON_DIR_ENV})"
            )
        return polarity, emotion

    def require_input(self) -> str:
        value = self.get("input")
        if not value:
            self.parser.error("--input is required")
        return value

    def run_pipeline(self, top_default: int = pipeline.DEFAULT_TOP_WORDS) -> pipeline.AnalysisRun:
        polarity, emotion = self.lexicon_paths()
        return pipeline.run_analysis(
            self.require_input(),
            polarity,
            emotion,
            ingest_cfg=self.ingest_config(),
            prep_cfg=self.prep_config(),
            thresholds=self.thresholds(),
            negation_factor=self.get("negation_factor", NEGATION_FACTOR),
            top_words=self.get("top", top_default) or top_default,
            jobs=int(self.get("jobs", 1) or 1),
            strict=bool(self.get("strict", False)),
        )


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _render_table(columns, rows) -> str:
    cells = [[str(c) for c in columns]] + [[str(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = []
    for i, row in enumerate(cells):
        lines.append("  ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * widths[j] for j in range(len(columns))))
    return "\n".join(lines) + "\n"


def _read_export(from_run: str, name: str) -> str:
    path = Path(from_run) / name
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FileNotReadable(path, str(exc)) from exc


def _parse_csv_text(text: str) -> tuple[list[str], list[list[str]]]:
    rows = list(_csv.reader(text.splitlines()))
    if not rows:
        return [], []
    return rows[0], rows[1:]


def cmd_analyze(opts: _Options) -> int:
    run = opts.run_pipeline()
    out_dir = opts.get("out", ".")
    pipeline.export_run(run, out_dir)
    fmt = opts.get("format", "table")
    if fmt == "json":
        _emit(pipeline.json_text(pipeline.run_payload(run)))
    elif fmt == "csv":
        _emit(pipeline.csv_text(pipeline.REPORT_COLUMNS, pipeline.report_rows(run)))
    else:
        meta = run.meta
        concern_total = sum(s.concern_count for s in run.yearly)
        lines = [
            f"reports analyzed: {meta.reports_analyzed}",
            f"rows read: {meta.rows_read} "
            f"(duplicates removed: {meta.duplicates_removed}, rejected: {meta.rows_rejected})",
            f"sentences analyzed: {meta.sentences_analyzed}",
            f"concern reports: {concern_total}",
            f"exports written to: {out_dir}",
        ]
        _emit("\n".join(lines) + "\n")
    return 0


def _trend_table_rows(header: list[str], raw_rows: list[list[str]]) -> list[dict]:
    rows = []
    for raw in raw_rows:
        record = dict(zip(header, raw))
        pcts = round_percentages(
            (
                float(record["Negative (%)"]),
                float(record["Positive (%)"]),
                float(record["Neutral (%)"]),
            )
        )
        rows.append(
            {
                "Year": record["Year"],
                "Total Reports": record["Total Reports"],
                "Negative (%)": pcts[0],
                "Positive (%)": pcts[1],
                "Neutral (%)": pcts[2],
                "Mean Polarity Score": f"{float(record['Mean Polarity Score']):.6f}",
            }
        )
    return rows


def cmd_trends(opts: _Options) -> int:
    fmt = opts.get("format", "table")
    if opts.get("from_run"):
        source = opts.get("from_run")
        if fmt == "csv":
            _emit(_read_export(source, pipeline.FILES["trends_csv"]))
            return 0
        if fmt == "json":
            payload = json.loads(_read_export(source, pipeline.FILES["trends_json"]))
            _emit(pipeline.json_text(payload))
            return 0
        header, raw_rows = _parse_csv_text(_read_export(source, pipeline.FILES["trends_csv"]))
        _emit(_render_table(pipeline.TREND_COLUMNS, _trend_table_rows(header, raw_rows)))
        return 0

    run = opts.run_pipeline()
    if opts.get("out"):
        pipeline.export_run(run, opts.get("out"))
    if fmt == "csv":
        _emit(pipeline.csv_text(pipeline.TREND_COLUMNS, pipeline.trend_rows(run)))
    elif fmt == "json":
        _emit(pipeline.json_text(pipeline.trends_payload(run)))
    else:
        header = list(pipeline.TREND_COLUMNS)
        raw = [
            [pipeline.fmt_value(row[c]) for c in header] for row in pipeline.trend_rows(run)
        ]
        _emit(_render_table(pipeline.TREND_COLUMNS, _trend_table_rows(header, raw)))
    return 0


def cmd_regress(opts: _Options) -> int:
    fmt = opts.get("format", "table")
    if opts.get("from_run"):
        payload = json.loads(_read_export(opts.get("from_run"), pipeline.FILES["regression_json"]))
    else:
        run = opts.run_pipeline()
        if opts.get("out"):
            pipeline.export_run(run, opts.get("out"))
        payload = pipeline.regression_payload(run)

    if not payload.get("available"):
        print(f"regression unavailable: {payload.get('reason', 'unknown')}", file=sys.stderr)
        return 1
    if fmt == "json":
        _emit(pipeline.json_text(payload))
    elif fmt == "csv":
        _emit(pipeline.csv_text(pipeline.REGRESSION_COLUMNS, pipeline.regression_rows(payload)))
    else:
        lines = [
            f"slope: {payload['slope']!r}",
            f"intercept: {payload['intercept']!r}",
            f"r_squared: {payload['r_squared']!r}",
            f"outlier years: {', '.join(str(y) for y in payload['outlier_years']) or 'none'}",
        ]
        _emit("\n".join(lines) + "\n")
        rows = [
            {k: pipeline.fmt_value(v) for k, v in row.items()}
            for row in pipeline.regression_rows(payload)
        ]
        _emit(_render_table(pipeline.REGRESSION_COLUMNS, rows))
    return 0


def cmd_wordfreq(opts: _Options) -> int:
    fmt = opts.get("format", "table")
    top = int(opts.get("top", pipeline.DEFAULT_TOP_WORDS) or pipeline.DEFAULT_TOP_WORDS)
    if opts.get("from_run"):
        header, raw_rows = _parse_csv_text(
            _read_export(opts.get("from_run"), pipeline.FILES["wordfreq_csv"])
        )
        rows = [{"word": w, "count": int(c)} for w, c in raw_rows][:top]
    else:
        run = opts.run_pipeline(top_default=top)
        if opts.get("out"):
            pipeline.export_run(run, opts.get("out"))
        rows = pipeline.wordfreq_rows(run)[:top]

    if fmt == "json":
        _emit(pipeline.json_text(rows))
    elif fmt == "csv":
        _emit(pipeline.csv_text(pipeline.WORDFREQ_COLUMNS, rows))
    else:
        _emit(_render_table(pipeline.WORDFREQ_COLUMNS, rows))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "command", None) is None:
            parser.error("a subcommand is required (analyze, trends, regress, wordfreq)")
        opts = _Options(args, parser)
        return args.handler(opts)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    except ConcernScanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
