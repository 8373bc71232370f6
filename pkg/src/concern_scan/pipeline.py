"""End-to-end corpus analysis: ingest, prepare, score, flag, aggregate.

A run is fully deterministic: identical inputs and configuration produce
byte-identical exports, regardless of the worker count. Reports are ordered
by id ascending and years ascending in every output.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from .concern import ConcernThresholds, ReportAnalysis, analyze_report
from .emotion import sentence_emotions
from .errors import EmptyCorpus
from .ingest import IngestConfig, ReportRecord, load_reports
from .lexicons import (
    EMOTIONS,
    EmotionLexicon,
    PolarityLexicon,
    load_emotion_lexicon,
    load_polarity_lexicon,
)
from .sentiment import NEGATION_FACTOR, SentimentClass, score_sentence
from .textprep import PrepConfig, prepare
from .trends import RegressionFit, YearlySummary, aggregate_by_year, fit_linear, rank_word_counts

DEFAULT_TOP_WORDS = 100

FILES = {
    "reports_csv": "reports.csv",
    "reports_json": "reports.json",
    "trends_csv": "trends.csv",
    "trends_json": "trends.json",
    "emotions_csv": "emotions.csv",
    "concern_csv": "concern_by_year.csv",
    "regression_json": "regression.json",
    "wordfreq_csv": "wordfreq.csv",
    "run_json": "run.json",
}

TREND_COLUMNS = (
    "Year",
    "Total Reports",
    "Negative (%)",
    "Positive (%)",
    "Neutral (%)",
    "Mean Polarity Score",
)
REPORT_COLUMNS = (
    "id",
    "year",
    "s_total",
    "r_neg",
    "a_neg",
    "a_pol",
    "sentiment_class",
    "is_concern",
)
EMOTION_COLUMNS = ("year", "emotion", "sentence_hits", "share_of_sentences")
CONCERN_COLUMNS = ("year", "total_reports", "negative_reports", "concern_reports")
REGRESSION_COLUMNS = (
    "year",
    "total_reports",
    "concern_reports",
    "predicted",
    "residual",
    "std_residual",
    "is_outlier",
)
WORDFREQ_COLUMNS = ("word", "count")


@dataclass(frozen=True)
class RunMeta:
    rows_read: int
    duplicates_removed: int
    rows_rejected: int
    reports_analyzed: int
    sentences_analyzed: int
    row_errors: tuple[str, ...]


@dataclass(frozen=True)
class ReportResult:
    record: ReportRecord
    analysis: ReportAnalysis
    concern_words: Optional[Mapping[str, int]]


@dataclass(frozen=True)
class AnalysisRun:
    corpus_path: str
    polarity_lexicon_path: str
    emotion_lexicon_path: str
    thresholds: ConcernThresholds
    negation_factor: float
    top_words: int
    results: tuple[ReportResult, ...]
    yearly: tuple[YearlySummary, ...]
    regression: Optional[RegressionFit]
    regression_note: str
    word_freq: list[tuple[str, int]]
    meta: RunMeta


def _empty_report_analysis() -> ReportAnalysis:
    """Stand-in for reports whose text vanishes entirely under preparation.

    Such reports are neutral with zero mean polarity, never concern-flagged,
    and contribute nothing to sentence-level metrics.
    """
    return ReportAnalysis(
        s_total=0,
        neg_flags=(),
        neg_scores=(),
        n=0,
        r_neg=0.0,
        a_neg=0.0,
        a_pol=0.0,
        sentiment_class=SentimentClass.NEUTRAL,
        is_concern=False,
        emotion_hit_counts={emotion: 0 for emotion in EMOTIONS},
    )


def _analyze_record(
    record: ReportRecord,
    prep_cfg: PrepConfig,
    polarity: PolarityLexicon,
    emotions: EmotionLexicon,
    thresholds: ConcernThresholds,
    negation_factor: float,
) -> ReportResult:
    sentences = prepare(record.text, prep_cfg)
    if not sentences:
        return ReportResult(record, _empty_report_analysis(), None)
    scores = [score_sentence(s.tokens, polarity, negation_factor) for s in sentences]
    profiles = [sentence_emotions(s.tokens, emotions) for s in sentences]
    analysis = analyze_report(scores, profiles, thresholds)
    concern_words = None
    if analysis.is_concern:
        counter: Counter[str] = Counter()
        for sentence in sentences:
            counter.update(t.surface for t in sentence.tokens if not t.is_stopword)
        concern_words = dict(counter)
    return ReportResult(record, analysis, concern_words)


def run_analysis(
    corpus_path,
    polarity_lexicon_path,
    emotion_lexicon_path,
    *,
    ingest_cfg: Optional[IngestConfig] = None,
    prep_cfg: Optional[PrepConfig] = None,
    thresholds: Optional[ConcernThresholds] = None,
    negation_factor: float = NEGATION_FACTOR,
    top_words: int = DEFAULT_TOP_WORDS,
    jobs: int = 1,
    strict: bool = False,
) -> AnalysisRun:
    """Analyze a whole corpus file and return every analytics surface."""
    ingest_cfg = ingest_cfg or IngestConfig()
    prep_cfg = prep_cfg or PrepConfig()
    thresholds = thresholds or ConcernThresholds()

    polarity = load_polarity_lexicon(polarity_lexicon_path)
    emotions = load_emotion_lexicon(emotion_lexicon_path)
    loaded = load_reports(corpus_path, ingest_cfg, strict=strict)
    if not loaded.records:
        raise EmptyCorpus(f"no analyzable reports in {corpus_path}")

    def work(record: ReportRecord) -> ReportResult:
        return _analyze_record(record, prep_cfg, polarity, emotions, thresholds, negation_factor)

    if jobs <= 1:
        results = [work(record) for record in loaded.records]
    else:
        # Pure per-report work over shared immutable lexicons. Each worker
        # takes one contiguous slice and slices are merged in input order,
        # so the result is independent of scheduling.
        def work_slice(records):
            return [work(record) for record in records]

        step = -(-len(loaded.records) // jobs)
        chunks = [loaded.records[i : i + step] for i in range(0, len(loaded.records), step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(work_slice, chunk) for chunk in chunks]
            results = [result for future in futures for result in future.result()]

    results.sort(key=lambda res: res.record.id)
    yearly = aggregate_by_year((res.record, res.analysis) for res in results)

    regression = None
    note = ""
    points = [(float(s.total_reports), float(s.concern_count)) for s in yearly]
    if len(points) < 3:
        note = f"regression needs at least 3 years, corpus has {len(points)}"
    elif len({x for x, _ in points}) == 1:
        note = "regression undefined: every year has the same report total"
    else:
        regression = fit_linear(points, [s.year for s in yearly])

    merged: Counter[str] = Counter()
    for res in results:
        if res.concern_words:
            merged.update(res.concern_words)
    word_freq = rank_word_counts(merged, top_words)

    meta = RunMeta(
        rows_read=loaded.rows_read,
        duplicates_removed=loaded.duplicates_removed,
        rows_rejected=len(loaded.errors),
        reports_analyzed=len(results),
        sentences_analyzed=sum(res.analysis.s_total for res in results),
        row_errors=tuple(str(e) for e in loaded.errors),
    )
    return AnalysisRun(
        corpus_path=str(corpus_path),
        polarity_lexicon_path=str(polarity_lexicon_path),
        emotion_lexicon_path=str(emotion_lexicon_path),
        thresholds=thresholds,
        negation_factor=negation_factor,
        top_words=top_words,
        results=tuple(results),
        yearly=tuple(yearly),
        regression=regression,
        regression_note=note,
        word_freq=word_freq,
        meta=meta,
    )


def _norm(value: float) -> float:
    # Collapse IEEE negative zero so exports are stable.
    return 0.0 if value == 0.0 else value


def fmt_value(value) -> str:
    """Canonical text form for export cells."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(_norm(value))
    return str(value)


def report_rows(run: AnalysisRun) -> list[dict]:
    rows = []
    for res in run.results:
        a = res.analysis
        rows.append(
            {
                "id": res.record.id,
                "year": res.record.year,
                "s_total": a.s_total,
                "r_neg": _norm(a.r_neg),
                "a_neg": _norm(a.a_neg),
                "a_pol": _norm(a.a_pol),
                "sentiment_class": a.sentiment_class.value,
                "is_concern": a.is_concern,
            }
        )
    return rows


def trend_rows(run: AnalysisRun) -> list[dict]:
    """Rows shaped like the yearly sentiment-distribution table."""
    rows = []
    for summary in run.yearly:
        rows.append(
            {
                "Year": summary.year,
                "Total Reports": summary.total_reports,
                "Negative (%)": _norm(summary.pct_negative),
                "Positive (%)": _norm(summary.pct_positive),
                "Neutral (%)": _norm(summary.pct_neutral),
                "Mean Polarity Score": _norm(summary.mean_polarity),
            }
        )
    return rows


def trends_payload(run: AnalysisRun) -> list[dict]:
    payload = []
    for summary in run.yearly:
        payload.append(
            {
                "year": summary.year,
                "total_reports": summary.total_reports,
                "negative_reports": summary.n_negative,
                "positive_reports": summary.n_positive,
                "neutral_reports": summary.n_neutral,
                "negative_pct": _norm(summary.pct_negative),
                "positive_pct": _norm(summary.pct_positive),
                "neutral_pct": _norm(summary.pct_neutral),
                "mean_polarity": _norm(summary.mean_polarity),
                "concern_reports": summary.concern_count,
                "total_sentences": summary.total_sentences,
                "emotion_hits": dict(summary.emotion_hits),
            }
        )
    return payload


def emotion_rows(run: AnalysisRun) -> list[dict]:
    """Long-format emotion series: raw sentence hits plus per-year shares."""
    rows = []
    for summary in run.yearly:
        for emotion in EMOTIONS:
            hits = summary.emotion_hits[emotion]
            share = hits / summary.total_sentences if summary.total_sentences else 0.0
            rows.append(
                {
                    "year": summary.year,
                    "emotion": emotion,
                    "sentence_hits": hits,
                    "share_of_sentences": _norm(share),
                }
            )
    return rows


def concern_rows(run: AnalysisRun) -> list[dict]:
    return [
        {
            "year": s.year,
            "total_reports": s.total_reports,
            "negative_reports": s.n_negative,
            "concern_reports": s.concern_count,
        }
        for s in run.yearly
    ]


def regression_payload(run: AnalysisRun) -> dict:
    fit = run.regression
    if fit is None:
        return {"available": False, "reason": run.regression_note}
    points = [
        [float(s.total_reports), float(s.concern_count)] for s in run.yearly
    ]
    return {
        "available": True,
        "slope": _norm(fit.slope),
        "intercept": _norm(fit.intercept),
        "r_squared": _norm(fit.r_squared),
        "years": list(fit.years),
        "points": points,
        "residuals": [_norm(r) for r in fit.residuals],
        "std_residuals": [_norm(r) for r in fit.std_residuals],
        "outlier_years": list(fit.outlier_years),
    }


def regression_rows(payload: dict) -> list[dict]:
    """Per-year regression rows derived from a regression payload."""
    if not payload.get("available"):
        return []
    rows = []
    slope = payload["slope"]
    intercept = payload["intercept"]
    outliers = set(payload["outlier_years"])
    for year, (x, y), residual, std_residual in zip(
        payload["years"], payload["points"], payload["residuals"], payload["std_residuals"]
    ):
        rows.append(
            {
                "year": year,
                "total_reports": int(x),
                "concern_reports": int(y),
                "predicted": _norm(intercept + slope * x),
                "residual": _norm(residual),
                "std_residual": _norm(std_residual),
                "is_outlier": year in outliers,
            }
        )
    return rows


def wordfreq_rows(run: AnalysisRun) -> list[dict]:
    return [{"word": word, "count": count} for word, count in run.word_freq]


def run_payload(run: AnalysisRun) -> dict:
    t = run.thresholds
    return {
        "corpus": run.corpus_path,
        "polarity_lexicon": run.polarity_lexicon_path,
        "emotion_lexicon": run.emotion_lexicon_path,
        "thresholds": {
            "delta1": t.delta1,
            "delta2": t.delta2,
            "delta3": t.delta3,
            "neg_emotion_cut": t.neg_emotion_cut,
            "neg_polarity_cut": t.neg_polarity_cut,
            "literal_polarity_rule": t.literal_polarity_rule,
        },
        "negation_factor": run.negation_factor,
        "top_words": run.top_words,
        "counts": {
            "rows_read": run.meta.rows_read,
            "duplicates_removed": run.meta.duplicates_removed,
            "rows_rejected": run.meta.rows_rejected,
            "reports_analyzed": run.meta.reports_analyzed,
            "sentences_analyzed": run.meta.sentences_analyzed,
        },
        "row_errors": list(run.meta.row_errors),
        "regression_note": run.regression_note,
    }


def csv_text(columns, rows) -> str:
    """Render rows as RFC-4180 CSV text with a trailing newline."""
    import csv as _csv
    import io

    buffer = io.StringIO()
    writer = _csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt_value(row[col]) for col in columns])
    return buffer.getvalue()


def json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def export_run(run: AnalysisRun, out_dir) -> dict[str, Path]:
    """Write the full export set to a directory; returns written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    reg_payload = regression_payload(run)
    contents = {
        FILES["reports_csv"]: csv_text(REPORT_COLUMNS, report_rows(run)),
        FILES["reports_json"]: json_text(report_rows(run)),
        FILES["trends_csv"]: csv_text(TREND_COLUMNS, trend_rows(run)),
        FILES["trends_json"]: json_text(trends_payload(run)),
        FILES["emotions_csv"]: csv_text(EMOTION_COLUMNS, emotion_rows(run)),
        FILES["concern_csv"]: csv_text(CONCERN_COLUMNS, concern_rows(run)),
        FILES["regression_json"]: json_text(reg_payload),
        FILES["wordfreq_csv"]: csv_text(WORDFREQ_COLUMNS, wordfreq_rows(run)),
        FILES["run_json"]: json_text(run_payload(run)),
    }
    written = {}
    for name, text in contents.items():
        path = out / name
        path.write_text(text, encoding="utf-8")
        written[name] = path
    return written
