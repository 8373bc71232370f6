from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings

from concern_scan.lexicons import load_emotion_lexicon, load_polarity_lexicon
from concern_scan.pipeline import run_analysis
from concern_scan.textprep import PrepConfig

settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def corpus_path() -> Path:
    return FIXTURES / "corpus.csv"


@pytest.fixture(scope="session")
def polarity_path() -> Path:
    return FIXTURES / "polarity.csv"


@pytest.fixture(scope="session")
def emotion_path() -> Path:
    return FIXTURES / "emotions.tsv"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return FIXTURES / "golden"


@pytest.fixture(scope="session")
def prep_cfg() -> PrepConfig:
    return PrepConfig()


@pytest.fixture(scope="session")
def polarity_lex(polarity_path):
    return load_polarity_lexicon(polarity_path)


@pytest.fixture(scope="session")
def emotion_lex(emotion_path):
    return load_emotion_lexicon(emotion_path)


@pytest.fixture(scope="session")
def fixture_run(corpus_path, polarity_path, emotion_path):
    """One shared full-pipeline run over the bundled corpus."""
    return run_analysis(corpus_path, polarity_path, emotion_path)
