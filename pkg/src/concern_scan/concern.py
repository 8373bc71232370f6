"""Negative-sentence detection and the per-report concern flag.

A sentence is negative when any of the four distress emotions (fear, anger,
sadness, disgust) reaches the emotion cut, or its polarity falls at or below
the polarity cut. Per report, three metrics follow: the negativity ratio
(negative sentences over all sentences), the mean negative score (mean
intensity-of-negativity over negative sentences), and the mean polarity.

A report is a concern report when it is classified negative overall and,
with strict comparisons throughout, its negativity ratio exceeds delta1 and
either its mean negative score exceeds delta2 or its mean polarity is more
negative than -delta3. Concern reports are drawn from the negative-class
reports only; positive and neutral reports are never flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyReport, NotNegativeSentence
from .lexicons import EMOTIONS
from .sentiment import SentenceScore, SentimentClass, classify_polarity, report_mean_polarity

NEGATIVE_EMOTIONS = ("fear", "anger", "sadness", "disgust")

DELTA_MIN = 0.0
DELTA_MAX = 0.5


@dataclass(frozen=True, slots=True)
class ConcernThresholds:
    """Decision thresholds. The deltas must lie in [0.0, 0.5].

    ``literal_polarity_rule`` switches the mean-polarity branch to the
    literal reading ``a_pol > delta3`` instead of the default
    ``-a_pol > delta3`` (mean polarity more negative than -delta3).
    """

    delta1: float = 0.35
    delta2: float = 0.4
    delta3: float = 0.4
    neg_emotion_cut: float = 0.05
    neg_polarity_cut: float = -0.05
    literal_polarity_rule: bool = False

    def __post_init__(self):
        for name in ("delta1", "delta2", "delta3"):
            value = getattr(self, name)
            if not DELTA_MIN <= value <= DELTA_MAX:
                raise ValueError(f"{name} must be in [{DELTA_MIN}, {DELTA_MAX}], got {value}")
        if not 0.0 <= self.neg_emotion_cut <= 1.0:
            raise ValueError(f"neg_emotion_cut must be in [0, 1], got {self.neg_emotion_cut}")
        if not -1.0 <= self.neg_polarity_cut <= 0.0:
            raise ValueError(f"neg_polarity_cut must be in [-1, 0], got {self.neg_polarity_cut}")


DEFAULT_THRESHOLDS = ConcernThresholds()


@dataclass(frozen=True)
class ReportAnalysis:
    """Per-report metrics and flags. ``n`` counts negative sentences."""

    s_total: int
    neg_flags: tuple[bool, ...]
    neg_scores: tuple[float, ...]
    n: int
    r_neg: float
    a_neg: float
    a_pol: float
    sentiment_class: SentimentClass
    is_concern: bool
    emotion_hit_counts: Mapping[str, int]


def is_negative_sentence(
    score: SentenceScore,
    profile: Mapping[str, float],
    thresholds: ConcernThresholds = DEFAULT_THRESHOLDS,
) -> bool:
    """Inclusive comparisons: fires at exactly the emotion or polarity cut."""
    emotion_peak = max(profile[e] for e in NEGATIVE_EMOTIONS)
    return emotion_peak >= thresholds.neg_emotion_cut or score.polarity <= thresholds.neg_polarity_cut


def sentence_negative_score(
    score: SentenceScore,
    profile: Mapping[str, float],
    thresholds: ConcernThresholds = DEFAULT_THRESHOLDS,
) -> float:
    """Intensity of negativity for a sentence already flagged negative.

    The larger of the peak distress-emotion intensity and the magnitude of
    negative polarity (positive polarity contributes zero).
    """
    if not is_negative_sentence(score, profile, thresholds):
        raise NotNegativeSentence(
            f"sentence with polarity {score.polarity} is not negative under the given cuts"
        )
    emotion_peak = max(profile[e] for e in NEGATIVE_EMOTIONS)
    return max(emotion_peak, -score.polarity, 0.0)


def analyze_report(
    sentence_scores: Sequence[SentenceScore],
    profiles: Sequence[Mapping[str, float]],
    thresholds: ConcernThresholds = DEFAULT_THRESHOLDS,
) -> ReportAnalysis:
    """Compute all report-level metrics and the concern flag."""
    if not sentence_scores:
        raise EmptyReport("cannot analyze a report with no sentences")
    if len(sentence_scores) != len(profiles):
        raise ValueError(
            f"{len(sentence_scores)} sentence scores but {len(profiles)} emotion profiles"
        )

    flags = tuple(
        is_negative_sentence(score, profile, thresholds)
        for score, profile in zip(sentence_scores, profiles)
    )
    neg_scores = tuple(
        sentence_negative_score(score, profile, thresholds)
        for score, profile, flagged in zip(sentence_scores, profiles, flags)
        if flagged
    )
    s_total = len(sentence_scores)
    n = len(neg_scores)
    r_neg = n / s_total
    a_neg = math.fsum(neg_scores) / n if n else 0.0
    a_pol = report_mean_polarity(sentence_scores)
    sentiment_class = classify_polarity(a_pol)

    if thresholds.literal_polarity_rule:
        polarity_branch = a_pol > thresholds.delta3
    else:
        polarity_branch = -a_pol > thresholds.delta3
    severity = r_neg > thresholds.delta1 and (a_neg > thresholds.delta2 or polarity_branch)
    is_concern = severity and sentiment_class is SentimentClass.NEGATIVE

    hit_counts = {
        emotion: sum(1 for profile in profiles if profile[emotion] > 0.0)
        for emotion in EMOTIONS
    }
    return ReportAnalysis(
        s_total=s_total,
        neg_flags=flags,
        neg_scores=neg_scores,
        n=n,
        r_neg=r_neg,
        a_neg=a_neg,
        a_pol=a_pol,
        sentiment_class=sentiment_class,
        is_concern=is_concern,
        emotion_hit_counts=hit_counts,
    )
