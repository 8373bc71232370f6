"""Narrative preparation: sentence splitting, tokenization, lemma reduction.

Sentences are split before any punctuation stripping so that sentence-level
metrics keep their boundaries. Tokens are lowercase ASCII words (internal
apostrophes allowed); purely numeric or punctuation runs are dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import FileNotReadable

DEFAULT_NEGATORS = frozenset({"no", "not", "never", "none", "cannot", "n't", "without"})

DEFAULT_ABBREVIATIONS = frozenset(
    {"dr", "mr", "mrs", "ms", "prof", "vs", "e.g", "i.e", "etc", "fig", "approx", "st"}
)

_SENTENCE_END = frozenset(".!?")
_WORDISH = re.compile(r"[a-z0-9']+")
_DIGITS = re.compile(r"[0-9]+")


def load_wordlist(path) -> frozenset[str]:
    """Read a plain-text word list: one entry per line, ``#`` comments allowed.

    Entries are lowercased and stripped; blank lines are ignored.
    """
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileNotReadable(path, str(exc)) from exc
    words = set()
    for line in raw.splitlines():
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        words.add(entry.lower())
    return frozenset(words)


def default_stopwords() -> frozenset[str]:
    text = resources.files("concern_scan").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


@dataclass(frozen=True)
class PrepConfig:
    """Word lists steering preparation. All entries must be lowercase."""

    stopword_list: frozenset[str] = field(default_factory=default_stopwords)
    negator_list: frozenset[str] = DEFAULT_NEGATORS
    abbreviation_list: frozenset[str] = DEFAULT_ABBREVIATIONS

    def __post_init__(self):
        for name in ("stopword_list", "negator_list", "abbreviation_list"):
            entries = getattr(self, name)
            bad = [w for w in entries if w != w.lower()]
            if bad:
                raise ValueError(f"{name} entries must be lowercase: {bad[:5]}")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    lemma: str
    is_stopword: bool
    is_negator: bool


@dataclass(frozen=True, slots=True)
class Sentence:
    index: int
    raw: str
    tokens: tuple[Token, ...]


def split_sentences(text: str, cfg: PrepConfig) -> list[str]:
    """Split a narrative into sentences on ``.``, ``!`` or ``?``.

    A terminator only ends a sentence when followed by whitespace or the end
    of the text, and a period is ignored when the word before it is a known
    abbreviation or when it sits between digits. Text without a terminator is
    one sentence. No empty sentences are returned.
    """
    sentences: list[str] = []
    start = 0
    n = len(text)
    for i, ch in enumerate(text):
        if ch not in _SENTENCE_END:
            continue
        if i + 1 < n and not text[i + 1].isspace():
            continue
        if ch == "." and 0 < i < n - 1 and text[i - 1].isdigit() and text[i + 1].isdigit():
            continue
        if ch == "." and _abbreviation_before(text, i, cfg.abbreviation_list):
            continue
        chunk = text[start : i + 1].strip()
        if chunk:
            sentences.append(chunk)
        start = i + 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _abbreviation_before(text: str, period_index: int, abbreviations: frozenset[str]) -> bool:
    j = period_index
    while j > 0 and not text[j - 1].isspace():
        j -= 1
    if j == period_index:
        return False
    word = text[j:period_index].lower().strip("\"'()[]{}<>,;:")
    return word in abbreviations


def tokenize(sentence_raw: str, cfg: PrepConfig) -> list[Token]:
    """Lowercase and tokenize one sentence.

    Splits on whitespace and punctuation (hyphenated words split apart),
    drops purely numeric or punctuation runs, strips digits out of mixed
    runs, and splits trailing ``n't`` contractions into their own token.
    Negators stay negators even when they also appear in the stopword list.
    """
    tokens: list[Token] = []
    for match in _WORDISH.finditer(sentence_raw.lower()):
        for surface in _surfaces(match.group()):
            tokens.append(_make_token(surface, cfg))
    return tokens


@lru_cache(maxsize=262144)
def _make_token(surface: str, cfg: PrepConfig) -> Token:
    # Tokens are immutable, so identical surfaces under one config share
    # a single object.
    is_negator = surface in cfg.negator_list
    is_stopword = not is_negator and surface in cfg.stopword_list
    return Token(surface, lemmatize(surface), is_stopword, is_negator)


def _surfaces(candidate: str):
    if candidate.isalpha():
        word = candidate
    else:
        word = _DIGITS.sub("", candidate).strip("'")
        if not word or not any(c.isalpha() for c in word):
            return ()
    if word.endswith("n't") and len(word) > 3:
        return (word[:-3], "n't")
    return (word,)


def prepare(text: str, cfg: PrepConfig) -> list[Sentence]:
    """Full preparation of one narrative: split, tokenize, drop empty sentences.

    Sentences whose tokens all vanish under normalization (e.g. pure numbers)
    carry no analyzable content and are dropped; indices are reassigned so
    they stay contiguous from 0.
    """
    sentences: list[Sentence] = []
    for raw in split_sentences(text, cfg):
        tokens = tokenize(raw, cfg)
        if tokens:
            sentences.append(Sentence(len(sentences), raw, tuple(tokens)))
    return sentences


_EXCEPTIONS = {
    "worse": "bad",
    "worst": "bad",
    "felt": "feel",
    "fell": "fall",
    "went": "go",
    "gone": "go",
    "made": "make",
    "said": "say",
    "saw": "see",
    "seen": "see",
    "took": "take",
    "taken": "take",
    "broke": "break",
    "broken": "break",
    "swollen": "swell",
    "children": "child",
    "men": "man",
    "women": "woman",
    "feet": "foot",
    "teeth": "tooth",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "nothing": "nothing",
    "something": "something",
    "anything": "anything",
    "everything": "everything",
}

_VOWELS = "aeiou"
# Doubled final consonants kept as-is when stripping -ed/-ing (fall -> falling,
# pass -> passing, buzz -> buzzing, stuff -> stuffing).
_KEEP_DOUBLED = "aeioulszf"


@lru_cache(maxsize=65536)
def lemmatize(surface: str) -> str:
    """Reduce a token surface to a lookup lemma with deterministic rules.

    Applies, in order: irregular-form table, possessive stripping, plural
    stripping, then -ed/-ing stripping with undoubling and silent-e
    restoration. Passes repeat until the word is stable, so the result is
    always a fixpoint: lemmatize(lemmatize(w)) == lemmatize(w).
    """
    word = surface
    if word.endswith("'s") and len(word) > 2:
        word = word[:-2]
    if "'" in word or not word:
        return word or surface
    for _ in range(10):
        reduced = _reduce_once(word)
        if reduced == word:
            break
        word = reduced
    return word


def _reduce_once(word: str) -> str:
    if word in _EXCEPTIONS:
        return _EXCEPTIONS[word]
    if len(word) >= 5 and word.endswith("ies"):
        return word[:-3] + "y"
    if word.endswith(("sses", "xes", "zes", "ches", "shes")):
        return word[:-2]
    if len(word) >= 4 and word.endswith("oes"):
        return word[:-2]
    if len(word) >= 4 and word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    if len(word) >= 5 and word.endswith("ied"):
        return word[:-3] + "y"
    if word.endswith("eed"):
        return word
    if len(word) >= 4 and word.endswith("ed") and _has_vowel(word[:-2]):
        return _restore(word[:-2])
    if len(word) >= 5 and word.endswith("ing") and _has_vowel(word[:-3]):
        return _restore(word[:-3])
    return word


def _restore(stem: str) -> str:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in _KEEP_DOUBLED:
        return stem[:-1]
    if stem.endswith("i"):
        return stem + "e"
    if _measure(stem) == 1 and _ends_cvc(stem):
        return stem + "e"
    return stem


def _has_vowel(stem: str) -> bool:
    return any(_is_vowel(stem, i) for i in range(len(stem)))


def _is_vowel(word: str, i: int) -> bool:
    c = word[i]
    if c in _VOWELS:
        return True
    return c == "y" and i > 0 and word[i - 1] not in _VOWELS


def _measure(stem: str) -> int:
    """Count vowel-consonant run transitions (the classic stemmer measure)."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        vowel = _is_vowel(stem, i)
        if prev_vowel and not vowel:
            m += 1
        prev_vowel = vowel
    return m


def _ends_cvc(stem: str) -> bool:
    if len(stem) < 3:
        return False
    return (
        not _is_vowel(stem, len(stem) - 3)
        and _is_vowel(stem, len(stem) - 2)
        and not _is_vowel(stem, len(stem) - 1)
        and stem[-1] not in "wxy"
    )
