from __future__ import annotations

import datetime as dt
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from concern_scan.concern import ReportAnalysis
from concern_scan.errors import DegenerateX, TooFewPoints
from concern_scan.ingest import ReportRecord
from concern_scan.lexicons import EMOTIONS
from concern_scan.sentiment import SentimentClass
from concern_scan.textprep import PrepConfig, prepare
from concern_scan.trends import (
    aggregate_by_year,
    fit_linear,
    round_percentages,
    word_frequencies,
)


def record(year, rid="R"):
    return ReportRecord(rid, dt.date(year, 1, 1), year, "text")


def analysis(a_pol=-0.3, sentiment=SentimentClass.NEGATIVE, concern=False, s_total=2, hits=None):
    return ReportAnalysis(
        s_total=s_total,
        neg_flags=(True,) * s_total,
        neg_scores=(0.5,) * s_total,
        n=s_total,
        r_neg=1.0,
        a_neg=0.5,
        a_pol=a_pol,
        sentiment_class=sentiment,
        is_concern=concern,
        emotion_hit_counts=hits or {e: 0 for e in EMOTIONS},
    )


def test_all_negative_year_percentages():
    items = [
        (record(2005, "A"), analysis()),
        (record(2005, "B"), analysis()),
    ]
    (summary,) = aggregate_by_year(items)
    assert summary.pct_negative == 100.0
    assert summary.pct_positive == 0.0
    assert summary.pct_neutral == 0.0
    assert summary.rounded_percentages() == (100, 0, 0)


def test_singleton_mean_polarity():
    (summary,) = aggregate_by_year([(record(2010, "A"), analysis(a_pol=-0.3))])
    assert summary.mean_polarity == -0.3


def test_years_ascending_and_zero_years_omitted():
    items = [
        (record(2012, "A"), analysis()),
        (record(2000, "B"), analysis()),
        (record(2012, "C"), analysis()),
    ]
    summaries = aggregate_by_year(items)
    assert [s.year for s in summaries] == [2000, 2012]
    assert [s.total_reports for s in summaries] == [1, 2]


def test_aggregate_matches_brute_force_recount(fixture_run):
    items = [(res.record, res.analysis) for res in fixture_run.results]
    recount = oracles.recount_yearly(items)
    for summary in fixture_run.yearly:
        bucket = recount[summary.year]
        assert summary.total_reports == bucket["total"]
        assert summary.n_negative == bucket["negative"]
        assert summary.n_positive == bucket["positive"]
        assert summary.n_neutral == bucket["neutral"]
        assert summary.concern_count == bucket["concern"]
        assert summary.total_sentences == bucket["sentences"]
        assert abs(summary.mean_polarity - bucket["polarity_sum"] / bucket["total"]) <= 1e-12
        assert dict(summary.emotion_hits) == bucket["emotion_hits"]
    assert len(fixture_run.yearly) == len(recount)


def test_aggregate_is_order_independent(fixture_run):
    items = [(res.record, res.analysis) for res in fixture_run.results]
    baseline = aggregate_by_year(items)
    for seed in (1, 2, 3):
        shuffled = list(items)
        random.Random(seed).shuffle(shuffled)
        assert aggregate_by_year(shuffled) == baseline


def test_exact_line_fit():
    points = [(x, 2.0 * x + 3.0) for x in range(10)]
    fit = fit_linear(points)
    assert fit.slope == pytest.approx(2.0, abs=1e-9)
    assert fit.intercept == pytest.approx(3.0, abs=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-9)
    assert fit.outlier_years == ()


def test_too_few_points_and_degenerate_x():
    with pytest.raises(TooFewPoints):
        fit_linear([(0, 0), (1, 1)])
    with pytest.raises(DegenerateX):
        fit_linear([(2, 0), (2, 1), (2, 2)])


def test_random_points_match_normal_equation_oracle():
    rng = random.Random(42)
    points = [(rng.uniform(0, 300), rng.uniform(0, 120)) for _ in range(10)]
    fit = fit_linear(points)
    slope, intercept, r_squared, residuals = oracles.ols_fit(points)
    assert fit.slope == pytest.approx(slope, abs=1e-9)
    assert fit.intercept == pytest.approx(intercept, abs=1e-9)
    assert fit.r_squared == pytest.approx(r_squared, abs=1e-9)
    for mine, theirs in zip(fit.residuals, residuals):
        assert mine == pytest.approx(theirs, abs=1e-9)


def test_residuals_sum_to_zero():
    rng = random.Random(9)
    points = [(float(i), rng.uniform(-50, 50)) for i in range(25)]
    fit = fit_linear(points)
    scale = max(abs(y) for _, y in points)
    assert abs(math.fsum(fit.residuals)) <= 1e-9 * max(scale, 1.0)


def test_translation_consistency():
    rng = random.Random(5)
    points = [(float(i), rng.uniform(0, 40)) for i in range(12)]
    shift = 17.5
    base = fit_linear(points)
    moved = fit_linear([(x, y + shift) for x, y in points])
    assert moved.slope == pytest.approx(base.slope, abs=1e-9)
    assert moved.intercept == pytest.approx(base.intercept + shift, abs=1e-9)
    assert moved.r_squared == pytest.approx(base.r_squared, abs=1e-9)
    for a, b in zip(moved.residuals, base.residuals):
        assert a == pytest.approx(b, abs=1e-9)


def test_outlier_detection_flags_injected_year():
    years = list(range(2000, 2022))
    noise = [0.5 if i % 2 == 0 else -0.5 for i in range(22)]
    points = []
    for i, year in enumerate(years):
        x = 40.0 + 3.0 * i
        y = 2.0 * x + 3.0 + noise[i]
        if year == 2011:
            y += 2.5  # five noise standard deviations above the line
        points.append((x, y))
    fit = fit_linear(points, years)
    assert fit.outlier_years == (2011,)


def test_fit_years_default_to_indices():
    points = [(0.0, 0.0), (1.0, 1.0), (2.0, 2.5)]
    fit = fit_linear(points)
    assert fit.years == (0, 1, 2)


def test_word_frequencies_from_fixture(fixture_run, prep_cfg):
    concern = [
        (res.record, prepare(res.record.text, prep_cfg))
        for res in fixture_run.results
        if res.analysis.is_concern
    ]
    ranked = word_frequencies(concern, top_n=100)
    assert ranked[0] == ("pain", 7)
    assert ranked[1:4] == [("fear", 3), ("mesh", 3), ("scared", 3)]
    counts = dict(ranked)
    recount = oracles.recount_words([sentences for _, sentences in concern])
    assert counts == recount
    # strictly ordered by (count desc, word asc)
    for earlier, later in zip(ranked, ranked[1:]):
        assert (-earlier[1], earlier[0]) < (-later[1], later[0])


def test_word_frequencies_empty_and_topn():
    assert word_frequencies([], top_n=5) == []
    cfg = PrepConfig()
    reports = [(record(2011, "A"), prepare("mesh fear mesh fear fear pain", cfg))]
    assert word_frequencies(reports, top_n=2) == [("fear", 3), ("mesh", 2)]


@given(
    st.lists(st.integers(min_value=0, max_value=500), min_size=3, max_size=3).filter(
        lambda counts: sum(counts) > 0
    )
)
@settings(deadline=None)
def test_rounded_percentages_sum_to_100(counts):
    total = sum(counts)
    exact = [100.0 * c / total for c in counts]
    rounded = round_percentages(exact)
    assert sum(rounded) == 100
    for r, e in zip(rounded, exact):
        assert abs(r - e) < 1.0
