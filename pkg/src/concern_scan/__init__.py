"""Deterministic lexicon-based triage analytics for free-text adverse event reports."""

from .concern import (
    ConcernThresholds,
    ReportAnalysis,
    analyze_report,
    is_negative_sentence,
    sentence_negative_score,
)
from .emotion import emotion_hits, sentence_emotions, zero_profile
from .ingest import IngestConfig, LoadResult, ReportRecord, dump_reports, load_reports
from .lexicons import (
    EMOTIONS,
    EmotionLexicon,
    PolarityEntry,
    PolarityLexicon,
    dump_emotion_lexicon,
    dump_polarity_lexicon,
    load_emotion_lexicon,
    load_polarity_lexicon,
    lookup_emotions,
    lookup_polarity,
)
from .pipeline import AnalysisRun, export_run, run_analysis
from .sentiment import (
    SentenceScore,
    SentimentClass,
    classify_polarity,
    report_mean_polarity,
    score_sentence,
)
from .textprep import (
    PrepConfig,
    Sentence,
    Token,
    lemmatize,
    load_wordlist,
    prepare,
    split_sentences,
    tokenize,
)
from .trends import (
    RegressionFit,
    YearlySummary,
    aggregate_by_year,
    fit_linear,
    word_frequencies,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisRun",
    "ConcernThresholds",
    "EMOTIONS",
    "EmotionLexicon",
    "IngestConfig",
    "LoadResult",
    "PolarityEntry",
    "PolarityLexicon",
    "PrepConfig",
    "RegressionFit",
    "ReportAnalysis",
    "ReportRecord",
    "Sentence",
    "SentenceScore",
    "SentimentClass",
    "Token",
    "YearlySummary",
    "aggregate_by_year",
    "analyze_report",
    "classify_polarity",
    "dump_emotion_lexicon",
    "dump_polarity_lexicon",
    "dump_reports",
    "emotion_hits",
    "export_run",
    "fit_linear",
    "is_negative_sentence",
    "lemmatize",
    "load_emotion_lexicon",
    "load_polarity_lexicon",
    "load_reports",
    "load_wordlist",
    "lookup_emotions",
    "lookup_polarity",
    "prepare",
    "report_mean_polarity",
    "run_analysis",
    "score_sentence",
    "sentence_emotions",
    "sentence_negative_score",
    "split_sentences",
    "tokenize",
    "word_frequencies",
    "zero_profile",
]
