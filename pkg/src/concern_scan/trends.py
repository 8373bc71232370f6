"""Yearly aggregation, linear regression with outlier diagnostics, and
word-frequency extraction from concern reports."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .concern import ReportAnalysis
from .errors import DegenerateX, TooFewPoints
from .ingest import ReportRecord
from .lexicons import EMOTIONS
from .sentiment import SentimentClass
from .textprep import Sentence

OUTLIER_CUT = 2.0


def round_percentages(exact: Sequence[float]) -> tuple[int, ...]:
    """Round percentages to integers that still sum to exactly 100.

    Largest-remainder rounding: floors first, then the leftover points go to
    the largest fractional parts (ties broken by position).
    """
    floors = [math.floor(p) for p in exact]
    leftover = 100 - sum(floors)
    order = sorted(range(len(exact)), key=lambda i: (-(exact[i] - floors[i]), i))
    for i in order[:leftover]:
        floors[i] += 1
    return tuple(floors)


@dataclass(frozen=True)
class YearlySummary:
    year: int
    total_reports: int
    n_negative: int
    n_positive: int
    n_neutral: int
    mean_polarity: float
    emotion_hits: Mapping[str, int]
    concern_count: int
    total_sentences: int

    @property
    def pct_negative(self) -> float:
        return 100.0 * self.n_negative / self.total_reports

    @property
    def pct_positive(self) -> float:
        return 100.0 * self.n_positive / self.total_reports

    @property
    def pct_neutral(self) -> float:
        return 100.0 * self.n_neutral / self.total_reports

    def rounded_percentages(self) -> tuple[int, int, int]:
        """Integer (negative, positive, neutral) percentages summing to 100."""
        return round_percentages((self.pct_negative, self.pct_positive, self.pct_neutral))


@dataclass(frozen=True)
class RegressionFit:
    slope: float
    intercept: float
    r_squared: float
    years: tuple[int, ...]
    residuals: tuple[float, ...]
    std_residuals: tuple[float, ...]
    outlier_years: tuple[int, ...]

    def predict(self, x: float) -> float:
        return self.intercept + self.slope * x


def aggregate_by_year(
    analyses: Iterable[tuple[ReportRecord, ReportAnalysis]],
) -> list[YearlySummary]:
    """One summary per distinct year, ascending. Years with no reports are
    omitted rather than emitted as zero rows."""
    by_year: dict[int, list[ReportAnalysis]] = {}
    for record, analysis in analyses:
        by_year.setdefault(record.year, []).append(analysis)

    summaries = []
    for year in sorted(by_year):
        group = by_year[year]
        classes = Counter(a.sentiment_class for a in group)
        hits = {emotion: 0 for emotion in EMOTIONS}
        for analysis in group:
            for emotion in EMOTIONS:
                hits[emotion] += analysis.emotion_hit_counts[emotion]
        summaries.append(
            YearlySummary(
                year=year,
                total_reports=len(group),
                n_negative=classes[SentimentClass.NEGATIVE],
                n_positive=classes[SentimentClass.POSITIVE],
                n_neutral=classes[SentimentClass.NEUTRAL],
                mean_polarity=math.fsum(a.a_pol for a in group) / len(group),
                emotion_hits=hits,
                concern_count=sum(1 for a in group if a.is_concern),
                total_sentences=sum(a.s_total for a in group),
            )
        )
    return summaries


def fit_linear(
    points: Sequence[tuple[float, float]],
    years: Optional[Sequence[int]] = None,
) -> RegressionFit:
    """Ordinary least squares fit of y on x with outlier years.

    ``years`` labels the points for the outlier report; indices are used
    when omitted. Outliers are points whose residual exceeds twice the
    sample standard deviation of the residuals in magnitude.
    """
    n = len(points)
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    if years is None:
        years = range(n)
    years = tuple(years)
    if len(years) != n:
        raise ValueError(f"{n} points but {len(years)} year labels")

    xs = [float(x) for x, _ in points]
    ys = [float(y) for _, y in points]
    x_mean = math.fsum(xs) / n
    y_mean = math.fsum(ys) / n
    sxx = math.fsum((x - x_mean) ** 2 for x in xs)
    if sxx == 0.0:
        raise DegenerateX("all x values are equal; slope is undefined")
    sxy = math.fsum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean

    residuals = tuple(y - (intercept + slope * x) for x, y in zip(xs, ys))
    sse = math.fsum(r * r for r in residuals)
    sst = math.fsum((y - y_mean) ** 2 for y in ys)
    if sst == 0.0:
        r_squared = 1.0
    else:
        r_squared = min(1.0, max(0.0, 1.0 - sse / sst))

    r_mean = math.fsum(residuals) / n
    variance = math.fsum((r - r_mean) ** 2 for r in residuals) / (n - 1)
    sd = math.sqrt(variance)
    if sd == 0.0:
        std_residuals = tuple(0.0 for _ in residuals)
    else:
        std_residuals = tuple(r / sd for r in residuals)
    outliers = tuple(
        year for year, sr in zip(years, std_residuals) if abs(sr) > OUTLIER_CUT
    )
    return RegressionFit(slope, intercept, r_squared, years, residuals, std_residuals, outliers)


def word_frequencies(
    concern_reports: Iterable[tuple[ReportRecord, Sequence[Sentence]]],
    top_n: int,
) -> list[tuple[str, int]]:
    """Top-N non-stopword surface counts across concern-report sentences.

    Ranked by count descending, ties broken alphabetically.
    """
    counts: Counter[str] = Counter()
    for _, sentences in concern_reports:
        for sentence in sentences:
            counts.update(t.surface for t in sentence.tokens if not t.is_stopword)
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:top_n]


def rank_word_counts(counts: Mapping[str, int], top_n: int) -> list[tuple[str, int]]:
    """Apply the word-frequency ordering to an existing counts mapping."""
    ranked = sorted(
        ((w, c) for w, c in counts.items() if c > 0),
        key=lambda item: (-item[1], item[0]),
    )
    return ranked[:top_n]
