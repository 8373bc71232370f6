"""Polarity and emotion lexicons with surface-then-lemma lookup.

Both lexicons are immutable after loading and safe to share across threads.
The polarity lexicon is a CSV of ``word,polarity,subjectivity`` rows; the
emotion lexicon accepts the flat word/emotion/value TSV layout used by the
published eight-emotion association lists (binary 0/1 values or real
intensities in [0, 1]).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Optional

from .errors import FileNotReadable, ParseError, RangeError, UnknownEmotion
from .textprep import Token

EMOTIONS = (
    "anger",
    "fear",
    "anticipation",
    "trust",
    "surprise",
    "sadness",
    "joy",
    "disgust",
)

# Sentiment rows present in the standard distribution alongside the eight
# emotions; dropped on load because polarity comes from the sentence scorer.
_SENTIMENT_ROWS = frozenset({"positive", "negative"})


@dataclass(frozen=True, slots=True)
class PolarityEntry:
    polarity: float
    subjectivity: float


@dataclass(frozen=True)
class PolarityLexicon:
    entries: Mapping[str, PolarityEntry]
    overwrites: int = 0

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolarityLexicon):
            return NotImplemented
        return dict(self.entries) == dict(other.entries)


@dataclass(frozen=True)
class EmotionLexicon:
    entries: Mapping[str, Mapping[str, float]]
    overwrites: int = 0

    def __post_init__(self):
        frozen = {w: MappingProxyType(dict(emos)) for w, emos in self.entries.items()}
        object.__setattr__(self, "entries", MappingProxyType(frozen))

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmotionLexicon):
            return NotImplemented
        return {w: dict(v) for w, v in self.entries.items()} == {
            w: dict(v) for w, v in other.entries.items()
        }


def _read_lines(path) -> list[str]:
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FileNotReadable(path, str(exc)) from exc


def load_polarity_lexicon(path) -> PolarityLexicon:
    """Load a polarity lexicon from ``word,polarity,subjectivity`` CSV.

    ``#`` comment lines and blank lines are skipped; there is no header.
    A repeated word overwrites the earlier entry and bumps the lexicon's
    overwrite counter.
    """
    entries: dict[str, PolarityEntry] = {}
    overwrites = 0
    for lineno, line in enumerate(_read_lines(path), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = next(csv.reader([stripped]))
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 3 fields, got {len(fields)}")
        word = fields[0].strip().lower()
        if not word:
            raise ParseError(lineno, "empty word")
        try:
            polarity = float(fields[1])
            subjectivity = float(fields[2])
        except ValueError:
            raise ParseError(lineno, f"non-numeric score in {stripped!r}") from None
        if not -1.0 <= polarity <= 1.0:
            raise RangeError(lineno, "polarity", polarity)
        if not 0.0 <= subjectivity <= 1.0:
            raise RangeError(lineno, "subjectivity", subjectivity)
        if word in entries:
            overwrites += 1
        entries[word] = PolarityEntry(polarity, subjectivity)
    return PolarityLexicon(entries, overwrites)


def load_emotion_lexicon(path) -> EmotionLexicon:
    """Load an emotion lexicon from ``word<TAB>emotion<TAB>value`` lines.

    Values may be binary 0/1 (a 1 loads as intensity 1.0) or reals in [0, 1].
    Zero-value rows are dropped, positive/negative sentiment rows are skipped
    silently, and any other emotion name outside the eight known ones is an
    error. Blank lines and ``#`` comments are allowed.
    """
    entries: dict[str, dict[str, float]] = {}
    overwrites = 0
    for lineno, line in enumerate(_read_lines(path), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t")
        if len(parts) != 3:
            raise ParseError(lineno, f"expected 3 tab-separated fields, got {len(parts)}")
        word = parts[0].strip().lower()
        emotion = parts[1].strip().lower()
        if not word:
            raise ParseError(lineno, "empty word")
        if emotion in _SENTIMENT_ROWS:
            continue
        if emotion not in EMOTIONS:
            raise UnknownEmotion(lineno, emotion)
        try:
            value = float(parts[2])
        except ValueError:
            raise ParseError(lineno, f"non-numeric value in {stripped!r}") from None
        if not 0.0 <= value <= 1.0:
            raise RangeError(lineno, "intensity", value)
        if value == 0.0:
            continue
        slot = entries.setdefault(word, {})
        if emotion in slot:
            overwrites += 1
        slot[emotion] = value
    return EmotionLexicon(entries, overwrites)


def dump_polarity_lexicon(lex: PolarityLexicon, path) -> None:
    """Write a polarity lexicon back to its CSV format, sorted by word."""
    lines = [
        f"{word},{entry.polarity!r},{entry.subjectivity!r}"
        for word, entry in sorted(lex.entries.items())
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def dump_emotion_lexicon(lex: EmotionLexicon, path) -> None:
    """Write an emotion lexicon back to its TSV format, sorted rows."""
    lines = []
    for word in sorted(lex.entries):
        for emotion in sorted(lex.entries[word]):
            lines.append(f"{word}\t{emotion}\t{lex.entries[word][emotion]!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def lookup_polarity(lex: PolarityLexicon, token: Token) -> Optional[PolarityEntry]:
    """Look up a token: surface first, then lemma.

    Stopwords are never looked up, and negators return nothing here because
    they modify sentiment rather than carry it.
    """
    if token.is_stopword or token.is_negator:
        return None
    entry = lex.entries.get(token.surface)
    if entry is None:
        entry = lex.entries.get(token.lemma)
    return entry


def lookup_emotions(lex: EmotionLexicon, token: Token) -> Optional[Mapping[str, float]]:
    """Emotion lookup with the same surface-then-lemma discipline.

    Stopwords return nothing; negators are looked up normally (negation does
    not rewrite emotional content).
    """
    if token.is_stopword:
        return None
    emos = lex.entries.get(token.surface)
    if emos is None:
        emos = lex.entries.get(token.lemma)
    return emos
