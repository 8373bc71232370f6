"""Sentence-level polarity scoring and three-way sentiment classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyReport
from .lexicons import PolarityLexicon, lookup_polarity
from .textprep import Token

# A matched word is damped (sign-flipped and halved) when a negator occurs
# within this many tokens before it in the sentence.
NEGATION_FACTOR = -0.5
NEGATION_WINDOW = 3

POSITIVE_CUT = 0.05
NEGATIVE_CUT = -0.05


class SentimentClass(enum.Enum):
    POSITIVE = "positive"
    NEUTRAL = "neutral"
    NEGATIVE = "negative"


@dataclass(frozen=True, slots=True)
class SentenceScore:
    polarity: float
    subjectivity: float
    matched_count: int


def score_sentence(
    tokens: Sequence[Token],
    lexicon: PolarityLexicon,
    negation_factor: float = NEGATION_FACTOR,
    negation_window: int = NEGATION_WINDOW,
) -> SentenceScore:
    """Score one tokenized sentence against the polarity lexicon.

    Polarity is the mean of matched word polarities; a match preceded by a
    negator inside the window contributes its polarity times
    ``negation_factor`` (multiple negators in one window count once).
    Subjectivity is the mean of matched subjectivities, unmodified by
    negation. No matches gives (0, 0, 0).
    """
    contributions: list[float] = []
    subjectivities: list[float] = []
    for i, token in enumerate(tokens):
        entry = lookup_polarity(lexicon, token)
        if entry is None:
            continue
        polarity = entry.polarity
        start = i - negation_window if i > negation_window else 0
        for j in range(start, i):
            if tokens[j].is_negator:
                polarity *= negation_factor
                break
        contributions.append(polarity)
        subjectivities.append(entry.subjectivity)
    if not contributions:
        return SentenceScore(0.0, 0.0, 0)
    count = len(contributions)
    return SentenceScore(
        math.fsum(contributions) / count,
        math.fsum(subjectivities) / count,
        count,
    )


def classify_polarity(polarity: float) -> SentimentClass:
    """Three-way classification with inclusive +/-0.05 bounds."""
    if polarity >= POSITIVE_CUT:
        return SentimentClass.POSITIVE
    if polarity <= NEGATIVE_CUT:
        return SentimentClass.NEGATIVE
    return SentimentClass.NEUTRAL


def report_mean_polarity(scores: Sequence[SentenceScore]) -> float:
    """Mean sentence polarity over a report."""
    if not scores:
        raise EmptyReport("report has no scored sentences")
    return math.fsum(s.polarity for s in scores) / len(scores)
