"""Eight-emotion profiling of tokenized sentences.

A profile is a plain dict with all eight emotion keys always present.
Intensity is matched-mass density: the summed lexicon intensity for an
emotion across a sentence's non-stopword tokens, divided by the count of
non-stopword tokens. With a binary lexicon this reads as the share of
content words carrying the emotion.
"""

from __future__ import annotations

from typing import Sequence

from .lexicons import EMOTIONS, EmotionLexicon, lookup_emotions
from .textprep import Token


def zero_profile() -> dict[str, float]:
    return {emotion: 0.0 for emotion in EMOTIONS}


def sentence_emotions(tokens: Sequence[Token], lexicon: EmotionLexicon) -> dict[str, float]:
    """Emotion intensity profile of one sentence.

    Negators neither gain nor lose weight: they count as content tokens and
    their own lexicon entries (if any) are tallied, but they do not modify
    other tokens' emotions.
    """
    profile = zero_profile()
    content_tokens = 0
    for token in tokens:
        if token.is_stopword:
            continue
        content_tokens += 1
        emotions = lookup_emotions(lexicon, token)
        if emotions is None:
            continue
        for emotion, value in emotions.items():
            profile[emotion] += value
    if content_tokens == 0:
        return zero_profile()
    for emotion in profile:
        profile[emotion] /= content_tokens
    return profile


def emotion_hits(profile: dict[str, float]) -> set[str]:
    """Emotions present in a sentence (intensity strictly above zero)."""
    return {emotion for emotion, value in profile.items() if value > 0.0}
