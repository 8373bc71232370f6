from __future__ import annotations

import pytest

from concern_scan.concern import ConcernThresholds
from concern_scan.errors import EmptyCorpus
from concern_scan.pipeline import FILES, export_run, run_analysis
from concern_scan.sentiment import SentimentClass

# Hand-computed per-report expectations for the bundled corpus:
# id -> (s_total, r_neg, a_neg, a_pol, class, is_concern). Each entry was
# worked out token by token against the bundled mini-lexicons (see
# fixtures/NOTES.md for the arithmetic).
HAND_EXPECTED = {
    "R001": (2, 0.0, 0.0, 0.0, "neutral", False),
    "R002": (2, 0.0, 0.0, 0.6, "positive", False),
    "R003": (2, 1.0, 0.65, -0.65, "negative", True),
    "R004": (2, 0.5, 0.4, -0.2, "negative", False),
    "R005": (2, 0.0, 0.0, 0.0, "neutral", False),
    "R006": (2, 0.0, 0.0, 0.8, "positive", False),
    "R007": (3, 1 / 3, 0.6, (0 - 0.6 + 0.4) / 3, "negative", False),
    "R008": (0, 0.0, 0.0, 0.0, "neutral", False),
    "R009": (3, 1 / 3, 0.4, -0.4 / 3, "negative", False),
    "R010": (3, 1.0, (0.8 + 0.6 + 1.0) / 3, (-0.8 - 0.6 - 0.9) / 3, "negative", True),
    "R011": (2, 0.0, 0.0, 0.475, "positive", False),
    "R012": (2, 0.0, 0.0, 0.0, "neutral", False),
    "R013": (3, 1.0, (0.5 + 0.6 + 0.9) / 3, (-0.5 - 0.6 - 0.9) / 3, "negative", True),
    "R014": (3, 1 / 3, 0.7, -0.7 / 3, "negative", False),
    "R015": (2, 0.0, 0.0, 0.0, "neutral", False),
    "R016": (3, 1.0, (0.55 + 0.55 + 0.8) / 3, (-0.55 - 0.55 - 0.8) / 3, "negative", True),
    "R017": (2, 0.0, 0.0, 0.4, "positive", False),
    "R018": (3, 1 / 3, 0.6, (-0.6 + 0 + 0.4) / 3, "negative", False),
    "R019": (3, 2 / 3, 0.9, (-0.8 - 0.55 + 0) / 3, "negative", True),
    "R020": (2, 0.0, 0.0, 0.0, "neutral", False),
    "R021": (2, 0.0, 0.0, 0.4, "positive", False),
    "R022": (3, 1.0, (0.6 + 0.5 + 0.75) / 3, (-0.6 - 0.5 - 0.75) / 3, "negative", True),
    "R023": (2, 0.0, 0.0, 0.0, "neutral", False),
    "R024": (3, 1 / 3, 0.45, -0.45 / 3, "negative", False),
    "R025": (2, 0.0, 0.0, 0.75, "positive", False),
    "R026": (2, 0.0, 0.0, 0.0, "neutral", False),
    "R027": (3, 1.0, (0.75 + 0.6 + 0.5) / 3, (-0.65 - 0.6 - 0.5) / 3, "negative", True),
    "R028": (2, 0.5, 0.35, -0.125, "negative", False),
    "R029": (2, 0.5, 1 / 3, 0.4875, "positive", False),
    "R030": (2, 0.0, 0.0, 0.0, "neutral", False),
}

# Hand-counted sentence-level emotion hits per year.
HAND_EMOTION_HITS = {
    2010: {"anger": 0, "fear": 3, "anticipation": 2, "trust": 3, "surprise": 0,
           "sadness": 3, "joy": 2, "disgust": 0},
    2011: {"anger": 1, "fear": 11, "anticipation": 1, "trust": 1, "surprise": 0,
           "sadness": 9, "joy": 1, "disgust": 3},
    2012: {"anger": 1, "fear": 6, "anticipation": 3, "trust": 2, "surprise": 1,
           "sadness": 5, "joy": 2, "disgust": 3},
}


def test_every_report_matches_hand_computation(fixture_run):
    assert len(fixture_run.results) == 30
    for res in fixture_run.results:
        a = res.analysis
        s_total, r_neg, a_neg, a_pol, cls, concern = HAND_EXPECTED[res.record.id]
        assert a.s_total == s_total, res.record.id
        assert abs(a.r_neg - r_neg) <= 1e-12, res.record.id
        assert abs(a.a_neg - a_neg) <= 1e-12, res.record.id
        assert abs(a.a_pol - a_pol) <= 1e-12, res.record.id
        assert a.sentiment_class.value == cls, res.record.id
        assert a.is_concern == concern, res.record.id


def test_yearly_summaries_match_hand_computation(fixture_run):
    by_year = {s.year: s for s in fixture_run.yearly}
    assert sorted(by_year) == [2010, 2011, 2012]
    assert (by_year[2010].total_reports, by_year[2011].total_reports,
            by_year[2012].total_reports) == (8, 12, 10)
    assert (by_year[2010].n_negative, by_year[2010].n_positive, by_year[2010].n_neutral) == (3, 2, 3)
    assert (by_year[2011].n_negative, by_year[2011].n_positive, by_year[2011].n_neutral) == (7, 2, 3)
    assert (by_year[2012].n_negative, by_year[2012].n_positive, by_year[2012].n_neutral) == (4, 3, 3)
    assert (by_year[2010].concern_count, by_year[2011].concern_count,
            by_year[2012].concern_count) == (1, 4, 2)
    assert (by_year[2010].total_sentences, by_year[2011].total_sentences,
            by_year[2012].total_sentences) == (15, 31, 23)
    for year, hits in HAND_EMOTION_HITS.items():
        assert dict(by_year[year].emotion_hits) == hits
    # mean polarity = hand-summed per-report means / report count
    assert by_year[2010].mean_polarity == pytest.approx(
        (0.6 - 0.65 - 0.2 + 0.8 + (0 - 0.6 + 0.4) / 3) / 8, abs=1e-12
    )
    assert by_year[2012].mean_polarity == pytest.approx(
        (0.4 + (-0.6 - 0.5 - 0.75) / 3 - 0.15 + 0.75 + (-0.65 - 0.6 - 0.5) / 3
         - 0.125 + 0.4875) / 10,
        abs=1e-12,
    )


def test_regression_matches_hand_computation(fixture_run):
    fit = fixture_run.regression
    # points: (8,1), (12,4), (10,2) -> slope 3/4, intercept -31/6, r^2 27/28
    assert fit.slope == pytest.approx(0.75, abs=1e-12)
    assert fit.intercept == pytest.approx(-31 / 6, abs=1e-12)
    assert fit.r_squared == pytest.approx(27 / 28, abs=1e-12)
    assert fit.outlier_years == ()


def test_run_metadata_counts(fixture_run):
    meta = fixture_run.meta
    assert meta.rows_read == 32
    assert meta.duplicates_removed == 2
    assert meta.rows_rejected == 0
    assert meta.reports_analyzed == 30
    assert meta.reports_analyzed == meta.rows_read - meta.duplicates_removed - meta.rows_rejected
    assert meta.sentences_analyzed == 69


def test_empty_prep_report_is_neutral_and_counted(fixture_run):
    res = {r.record.id: r for r in fixture_run.results}["R008"]
    assert res.analysis.s_total == 0
    assert res.analysis.sentiment_class is SentimentClass.NEUTRAL
    assert res.analysis.a_pol == 0.0
    assert not res.analysis.is_concern
    years = {s.year: s for s in fixture_run.yearly}
    assert years[2010].total_reports == 8  # includes R008


def test_results_ordered_by_id(fixture_run):
    ids = [res.record.id for res in fixture_run.results]
    assert ids == sorted(ids)


def test_every_loaded_id_appears_once(fixture_run):
    ids = [res.record.id for res in fixture_run.results]
    assert len(ids) == len(set(ids)) == 30
    assert sum(s.total_reports for s in fixture_run.yearly) == 30


def test_degenerate_thresholds_flag_all_negative_reports(
    corpus_path, polarity_path, emotion_path
):
    run = run_analysis(
        corpus_path,
        polarity_path,
        emotion_path,
        thresholds=ConcernThresholds(delta1=0.0, delta2=0.0, delta3=0.0),
    )
    flagged = {res.record.id for res in run.results if res.analysis.is_concern}
    negative_with_signal = {
        res.record.id
        for res in run.results
        if res.analysis.sentiment_class is SentimentClass.NEGATIVE and res.analysis.n > 0
    }
    assert flagged == negative_with_signal
    assert len(flagged) == 14


def test_empty_corpus_raises(tmp_path, polarity_path, emotion_path):
    corpus = tmp_path / "empty.csv"
    corpus.write_text("id,date,text\n", encoding="utf-8")
    with pytest.raises(EmptyCorpus):
        run_analysis(corpus, polarity_path, emotion_path)


def test_determinism_across_runs_and_jobs(tmp_path, corpus_path, polarity_path, emotion_path):
    runs = {}
    for label, jobs in (("a", 1), ("b", 1), ("c", 4)):
        run = run_analysis(corpus_path, polarity_path, emotion_path, jobs=jobs)
        out = tmp_path / label
        export_run(run, out)
        runs[label] = {name: (out / name).read_bytes() for name in FILES.values()}
    assert runs["a"] == runs["b"]
    assert runs["a"] == runs["c"]


def test_golden_export_byte_identical(tmp_path, fixture_run, golden_dir):
    out = tmp_path / "export"
    export_run(fixture_run, out)
    for name in FILES.values():
        if name == "run.json":  # embeds caller-supplied paths
            continue
        assert (out / name).read_bytes() == (golden_dir / name).read_bytes(), name


def test_strict_mode_propagates_row_errors(tmp_path, polarity_path, emotion_path):
    corpus = tmp_path / "bad.csv"
    corpus.write_text("id,date,text\nA,bogus,Pain.\n", encoding="utf-8")
    from concern_scan.errors import BadDate

    with pytest.raises(BadDate):
        run_analysis(corpus, polarity_path, emotion_path, strict=True)
    # non-strict: the row is rejected, leaving zero records -> EmptyCorpus
    with pytest.raises(EmptyCorpus):
        run_analysis(corpus, polarity_path, emotion_path)
