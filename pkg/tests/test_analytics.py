from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_corpus, make_record
from oracles import count_items
from tweetsent.analytics import (
    DEFAULT_DEVICE_CATEGORIES,
    daily_emotion_series,
    device_group_report,
    polarity_distribution,
    rank_hashtags,
    rank_locations,
    rank_mentions,
)
from tweetsent.emotion import EMOTION_CLASSES, EmotionProfile, classify
from tweetsent.errors import EmptyInputError
from tweetsent.polarity import PolarityScore
from tweetsent.textprep import clean_text, prepare, remove_stopwords


def _scores(values):
    return [PolarityScore(v, 1, [v]) for v in values]


# ---------------------------------------------------------------------------
# rankings


def test_rank_mentions_counts_and_ranks():
    c = make_corpus(
        [
            make_record(rid="1", mentions=["a"]),
            make_record(rid="2", mentions=["a"]),
            make_record(rid="3", mentions=["b"]),
        ]
    )
    table = rank_mentions(c, 2)
    assert table.rows == [("a", 2, 1), ("b", 1, 2)]


def test_rank_mentions_empty():
    c = make_corpus([make_record(rid="1")])
    assert rank_mentions(c, 5).rows == []


def test_rank_hashtags_two_tags():
    c = make_corpus(
        [
            make_record(rid="1", hashtags=["covid19", "reopen"]),
            make_record(rid="2", hashtags=["covid19"]),
        ]
    )
    table = rank_hashtags(c, 5)
    assert table.rows == [("covid19", 2, 1), ("reopen", 1, 2)]


def test_rank_ties_break_lexicographically():
    c = make_corpus(
        [
            make_record(rid="1", hashtags=["zeta"]),
            make_record(rid="2", hashtags=["alpha"]),
        ]
    )
    assert rank_hashtags(c, 5).rows == [("alpha", 1, 1), ("zeta", 1, 2)]


def test_rank_locations_variants():
    c = make_corpus(
        [
            make_record(rid="1", location="Austin, TX", country="US"),
            make_record(rid="2", location="Austin, TX", country=None),
            make_record(rid="3", location=None, country="US"),
        ]
    )
    stated = rank_locations(c, 5, "stated")
    tagged = rank_locations(c, 5, "tagged")
    assert stated.rows == [("Austin, TX", 2, 1)]
    assert tagged.rows == [("Austin, TX", 1, 1)]


def test_rank_locations_all_absent():
    c = make_corpus([make_record(rid="1", location=None)])
    assert rank_locations(c, 5, "stated").rows == []


def test_rank_locations_bad_field():
    c = make_corpus([make_record(rid="1")])
    with pytest.raises(ValueError):
        rank_locations(c, 5, "geocoded")


def test_rankings_match_count_oracle(synth_corpus):
    mention_counts = count_items([r.mentions for r in synth_corpus.records])
    hashtag_counts = count_items([r.hashtags for r in synth_corpus.records])
    for table, expected in (
        (rank_mentions(synth_corpus, 10_000), mention_counts),
        (rank_hashtags(synth_corpus, 10_000), hashtag_counts),
    ):
        assert {key: count for key, count, _ in table.rows} == expected
        counts = [count for _, count, _ in table.rows]
        assert counts == sorted(counts, reverse=True)
        assert [rank for *_, rank in table.rows] == list(range(1, len(table.rows) + 1))

    location_counts = count_items(
        [[r.user_location] for r in synth_corpus.records if r.user_location is not None]
    )
    table = rank_locations(synth_corpus, 10_000, "stated")
    assert {key: count for key, count, _ in table.rows} == location_counts


# ---------------------------------------------------------------------------
# device grouping


def test_device_ratio_normalized_within_group():
    records = [
        make_record(rid="1", text="reopen the economy", device="Twitter for iPhone"),
        make_record(rid="2", text="the economy matters", device="Twitter for iPhone"),
        make_record(rid="3", text="stay home", device="Twitter for iPhone"),
        make_record(rid="4", text="nothing here", device="Twitter for iPhone"),
        make_record(rid="5", text="reopen now", device="Twitter Web App"),
    ]
    report = device_group_report(make_corpus(records), {"economy": ["econom"]})
    n, ratios = report.groups["Twitter for iPhone"]
    assert n == 4
    assert ratios["economy"] == 0.5
    assert "Twitter Web App" not in report.groups  # smaller classes ignored


def test_device_zero_matches_zero_ratio():
    records = [make_record(rid="1", text="stay home", device="Twitter for Android")]
    report = device_group_report(make_corpus(records), {"trump": ["trump"]})
    assert report.groups["Twitter for Android"][1]["trump"] == 0.0


def test_device_report_matches_bruteforce(synth_corpus):
    report = device_group_report(synth_corpus, DEFAULT_DEVICE_CATEGORIES)
    for device in ("Twitter for iPhone", "Twitter for Android"):
        group = [r for r in synth_corpus.records if r.source_device == device]
        n, ratios = report.groups[device]
        assert n == len(group)
        for name, keywords in DEFAULT_DEVICE_CATEGORIES.items():
            hits = 0
            for r in group:
                cleaned = clean_text(r.text)
                if any(kw in cleaned for kw in keywords):
                    hits += 1
            assert ratios[name] == (hits / n if n else 0.0)


def test_device_ratios_invariant_under_group_duplication():
    records = [
        make_record(rid="1", text="reopen the economy", device="Twitter for iPhone"),
        make_record(rid="2", text="stay home", device="Twitter for iPhone"),
    ]
    doubled = records + [
        make_record(rid="3", text="reopen the economy", device="Twitter for iPhone"),
        make_record(rid="4", text="stay home", device="Twitter for iPhone"),
    ]
    categories = {"reopen": ["reopen"]}
    once = device_group_report(make_corpus(records), categories)
    twice = device_group_report(make_corpus(doubled), categories)
    assert once.groups["Twitter for iPhone"][1] == twice.groups["Twitter for iPhone"][1]


# ---------------------------------------------------------------------------
# daily series


def _profile(**counts):
    p = EmotionProfile()
    for k, v in counts.items():
        p.counts[k] = v
    return p


def test_daily_proportions():
    c = make_corpus(
        [
            make_record(rid="1", created="2020-05-02T01:00:00+00:00"),
            make_record(rid="2", created="2020-05-02T23:00:00+00:00"),
        ]
    )
    series = daily_emotion_series(c, [_profile(trust=3), _profile(fear=1)])
    assert len(series.days) == 1
    assert series.values["trust"] == [0.75]
    assert series.values["fear"] == [0.25]


def test_daily_zero_hit_day_emits_zeros():
    c = make_corpus([make_record(rid="1", created="2020-05-02T01:00:00+00:00")])
    series = daily_emotion_series(c, [EmotionProfile()])
    assert all(series.values[cls] == [0.0] for cls in EMOTION_CLASSES)


def test_daily_alignment_required():
    c = make_corpus([make_record(rid="1")])
    with pytest.raises(ValueError):
        daily_emotion_series(c, [])


def test_daily_series_matches_recount(synth_corpus, emo_lex, stoplist):
    profiles = [
        classify(remove_stopwords(prepare(r.text), stoplist), emo_lex)
        for r in synth_corpus.records
    ]
    series = daily_emotion_series(synth_corpus, profiles)
    assert [d.isoformat() for d in series.days] == sorted(d.isoformat() for d in series.days)
    assert len(series.days) == 9

    # independent recount per day
    by_day = {}
    for record, profile in zip(synth_corpus.records, profiles):
        day = record.created_at.date()
        bucket = by_day.setdefault(day, {cls: 0 for cls in EMOTION_CLASSES})
        for cls in EMOTION_CLASSES:
            bucket[cls] += profile.counts[cls]
    for i, day in enumerate(series.days):
        total = sum(by_day[day].values())
        for cls in EMOTION_CLASSES:
            want = by_day[day][cls] / total if total else 0.0
            assert series.values[cls][i] == want
        if total:
            assert sum(series.values[cls][i] for cls in EMOTION_CLASSES) == pytest.approx(1.0)


# ---------------------------------------------------------------------------
# polarity distribution


def test_distribution_thirds():
    dist = polarity_distribution(_scores([1.0, -1.0, 0.0]))
    assert dist.pos_share == pytest.approx(1 / 3)
    assert dist.neg_share == pytest.approx(1 / 3)
    assert dist.neu_share == pytest.approx(1 / 3)


def test_distribution_all_positive():
    dist = polarity_distribution(_scores([0.5, 1.5]))
    assert (dist.pos_share, dist.neg_share, dist.neu_share) == (1.0, 0.0, 0.0)


def test_distribution_empty():
    with pytest.raises(EmptyInputError):
        polarity_distribution([])


def test_distribution_matches_counting_oracle():
    rng = random.Random(11)
    values = [rng.choice([-1.2, -0.3, 0.0, 0.4, 1.1]) for _ in range(500)]
    dist = polarity_distribution(_scores(values))
    n_pos = sum(1 for v in values if v > 0)
    n_neg = sum(1 for v in values if v < 0)
    n_neu = sum(1 for v in values if v == 0)
    assert dist.pos_share == n_pos / 500
    assert dist.neg_share == n_neg / 500
    assert dist.neu_share == n_neu / 500
    assert abs(dist.pos_share + dist.neg_share + dist.neu_share - 1.0) < 1e-9


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.floats(min_value=-5, max_value=5, allow_nan=False), min_size=1, max_size=60),
    st.randoms(use_true_random=False),
)
def test_distribution_permutation_invariant(values, rng):
    shuffled = list(values)
    rng.shuffle(shuffled)
    a = polarity_distribution(_scores(values))
    b = polarity_distribution(_scores(shuffled))
    assert (a.pos_share, a.neg_share, a.neu_share) == (b.pos_share, b.neg_share, b.neu_share)
    assert a.histogram.counts == b.histogram.counts
    assert abs(a.pos_share + a.neg_share + a.neu_share - 1.0) < 1e-9


def test_histogram_bins_quarter_width():
    dist = polarity_distribution(_scores([-0.9, -0.1, 0.3, 1.0]))
    hist = dist.histogram
    assert hist.lo == -1.0
    assert hist.width == 0.25
    assert len(hist.counts) == 8  # [-1, 1] in 0.25 steps
    assert sum(hist.counts) == 4
    assert hist.counts[-1] == 1  # the value at the top edge lands in the last bin
    assert hist.edges()[0] == -1.0 and hist.edges()[-1] == 1.0


def test_histogram_degenerate_all_zero():
    dist = polarity_distribution(_scores([0.0, 0.0]))
    assert dist.histogram.counts == [2]
