"""Independent straight-line recomputation used to cross-check the engine.

Everything here is deliberately written as naive, direct arithmetic (plain
sums, no shared helpers from the package) so the tests compare two separate
routes to the same numbers.
"""

from __future__ import annotations

import numpy as np

DISTRESS = ("fear", "anger", "sadness", "disgust")


def report_metrics(
    polarities,
    profiles,
    delta1=0.35,
    delta2=0.4,
    delta3=0.4,
    emotion_cut=0.05,
    polarity_cut=-0.05,
):
    """Recompute the negative-sentence rule, the three report metrics, and
    the concern flag. Concern reports are drawn from the reports classified
    negative overall (mean polarity at or below -0.05)."""
    s_total = len(polarities)
    flags = []
    neg_scores = []
    for polarity, profile in zip(polarities, profiles):
        peak = max(profile[e] for e in DISTRESS)
        negative = peak >= emotion_cut or polarity <= polarity_cut
        flags.append(negative)
        if negative:
            magnitude = -polarity if polarity < 0.0 else 0.0
            neg_scores.append(peak if peak > magnitude else magnitude)
    n = len(neg_scores)
    r_neg = n / s_total
    a_neg = sum(neg_scores) / n if n > 0 else 0.0
    a_pol = sum(polarities) / s_total
    negative_class = a_pol <= -0.05
    concern = negative_class and r_neg > delta1 and (a_neg > delta2 or -a_pol > delta3)
    return flags, r_neg, a_neg, a_pol, concern


def ols_fit(points):
    """Closed-form normal-equation regression via numpy."""
    xs = np.asarray([p[0] for p in points], dtype=float)
    ys = np.asarray([p[1] for p in points], dtype=float)
    design = np.vstack([xs, np.ones(len(xs))]).T
    coef, *_ = np.linalg.lstsq(design, ys, rcond=None)
    slope, intercept = float(coef[0]), float(coef[1])
    predictions = design @ coef
    residuals = ys - predictions
    sse = float(np.sum(residuals**2))
    sst = float(np.sum((ys - ys.mean()) ** 2))
    r_squared = 1.0 - sse / sst if sst > 0 else 1.0
    return slope, intercept, r_squared, residuals.tolist()


def recount_yearly(records_and_analyses):
    """Brute-force group-by recount of the yearly summary numbers."""
    out = {}
    for record, analysis in records_and_analyses:
        bucket = out.setdefault(
            record.year,
            {
                "total": 0,
                "negative": 0,
                "positive": 0,
                "neutral": 0,
                "polarity_sum": 0.0,
                "concern": 0,
                "sentences": 0,
                "emotion_hits": {},
            },
        )
        bucket["total"] += 1
        bucket[analysis.sentiment_class.value] += 1
        bucket["polarity_sum"] += analysis.a_pol
        bucket["concern"] += 1 if analysis.is_concern else 0
        bucket["sentences"] += analysis.s_total
        for emotion, hits in analysis.emotion_hit_counts.items():
            bucket["emotion_hits"][emotion] = bucket["emotion_hits"].get(emotion, 0) + hits
    return out


def recount_words(sentences_by_report):
    """Naive full recount of non-stopword surfaces."""
    counts = {}
    for sentences in sentences_by_report:
        for sentence in sentences:
            for token in sentence.tokens:
                if token.is_stopword:
                    continue
                counts[token.surface] = counts.get(token.surface, 0) + 1
    return counts
