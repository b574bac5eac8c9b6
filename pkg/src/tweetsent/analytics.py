"""Descriptive, grouped, and temporal aggregations over a filtered corpus.

Covers mention/hashtag/location rankings, device-grouped keyword ratios
(normalized within each device group so unequal group sizes stay
comparable), the daily emotion-share series, and the signed-score
distribution with its positive/negative/neutral split.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from datetime import date
from typing import NamedTuple

from .corpus import Corpus
from .emotion import EMOTION_CLASSES, EmotionProfile
from .errors import EmptyInputError
from .polarity import PolarityScore, classify_polarity
from .textprep import CleanOptions, clean_text

DEVICE_CLASSES = ("Twitter for iPhone", "Twitter for Android")

# keyword groups behind the device-usage comparison; "abuvs" catches mask tokens
DEFAULT_DEVICE_CATEGORIES: dict[str, list[str]] = {
    "reopen": ["reopen"],
    "business": ["business"],
    "time": ["time"],
    "work": ["work"],
    "trump": ["trump"],
    "politics": ["politic"],
    "covid": ["covid"],
    "economy": ["econom"],
    "abusive": ["abuvs"],
}

HISTOGRAM_BIN_WIDTH = 0.25


@dataclass
class RankedTable:
    label: str
    rows: list[tuple[str, int, int]]  # (key, count, rank)


@dataclass
class DeviceGroupReport:
    groups: dict[str, tuple[int, dict[str, float]]]  # device -> (n_records, ratios)


@dataclass
class DailySeries:
    days: list[date]
    values: dict[str, list[float]]


@dataclass
class Histogram:
    lo: float
    width: float
    counts: list[int]

    def edges(self) -> list[float]:
        return [self.lo + i * self.width for i in range(len(self.counts) + 1)]


class PolarityDistribution(NamedTuple):
    pos_share: float
    neg_share: float
    neu_share: float
    histogram: Histogram


def _ranked(label: str, counter: Counter, k: int) -> RankedTable:
    ordered = sorted(counter.items(), key=lambda item: (-item[1], item[0]))[:k]
    rows = [(key, count, rank) for rank, (key, count) in enumerate(ordered, start=1)]
    return RankedTable(label=label, rows=rows)


def rank_mentions(c: Corpus, k: int) -> RankedTable:
    counter: Counter[str] = Counter()
    for record in c.records:
        counter.update(record.mentions)
    return _ranked("mentions", counter, k)


def rank_hashtags(c: Corpus, k: int) -> RankedTable:
    counter: Counter[str] = Counter()
    for record in c.records:
        counter.update(record.hashtags)
    return _ranked("hashtags", counter, k)


def rank_locations(c: Corpus, k: int, field: str = "stated") -> RankedTable:
    """Rank user_location strings verbatim (they are unreliable; no cleanup).

    field="tagged" restricts to country-tagged records, field="stated" uses
    every record with a location string.
    """
    if field not in ("tagged", "stated"):
        raise ValueError(f"field must be 'tagged' or 'stated', got {field!r}")
    counter: Counter[str] = Counter()
    for record in c.records:
        if record.user_location is None:
            continue
        if field == "tagged" and record.country_code is None:
            continue
        counter[record.user_location] += 1
    return _ranked(f"locations_{field}", counter, k)


def device_group_report(
    c: Corpus, categories: dict[str, list[str]] | None = None
) -> DeviceGroupReport:
    """Within-group share of records mentioning each keyword category.

    Only the two major device classes are reported; smaller classes are
    ignored. A record matches a category when its cleaned text contains any
    of the category's keywords.
    """
    categories = categories if categories is not None else DEFAULT_DEVICE_CATEGORIES
    if not categories:
        raise ValueError("categories must be non-empty")
    options = CleanOptions()
    per_device: dict[str, list[str]] = {d: [] for d in DEVICE_CLASSES}
    for record in c.records:
        if record.source_device in per_device:
            per_device[record.source_device].append(clean_text(record.text, options))

    groups: dict[str, tuple[int, dict[str, float]]] = {}
    for device, texts in per_device.items():
        n = len(texts)
        ratios = {}
        for name, keywords in categories.items():
            if n == 0:
                ratios[name] = 0.0
                continue
            hits = sum(1 for t in texts if any(kw in t for kw in keywords))
            ratios[name] = hits / n
        groups[device] = (n, ratios)
    return DeviceGroupReport(groups=groups)


def daily_emotion_series(c: Corpus, profiles: list[EmotionProfile]) -> DailySeries:
    """Per-day share of each emotion class among that day's emotion hits.

    Days bucket on the UTC calendar date. A day whose records hit no emotion
    terms reports zero for every class.
    """
    if len(profiles) != len(c.records):
        raise ValueError("profiles must align 1:1 with corpus records")
    per_day: dict[date, dict[str, int]] = {}
    for record, profile in zip(c.records, profiles):
        day = record.created_at.date()
        bucket = per_day.setdefault(day, {cls: 0 for cls in EMOTION_CLASSES})
        for cls in EMOTION_CLASSES:
            bucket[cls] += profile.counts[cls]

    days = sorted(per_day)
    values: dict[str, list[float]] = {cls: [] for cls in EMOTION_CLASSES}
    for day in days:
        bucket = per_day[day]
        total = sum(bucket.values())
        for cls in EMOTION_CLASSES:
            values[cls].append(bucket[cls] / total if total else 0.0)
    return DailySeries(days=days, values=values)


def polarity_distribution(scores: list[PolarityScore]) -> PolarityDistribution:
    """Positive/negative/neutral shares plus a fixed-width score histogram.

    Bins are 0.25 wide spanning [floor(min), ceil(max)]; a value equal to the
    upper edge lands in the last bin.
    """
    if not scores:
        raise EmptyInputError("distribution over empty score list")
    labels = Counter(classify_polarity(s) for s in scores)
    n = len(scores)

    values = [s.value for s in scores]
    lo = float(math.floor(min(values)))
    hi = float(math.ceil(max(values)))
    n_bins = max(1, round((hi - lo) / HISTOGRAM_BIN_WIDTH))
    counts = [0] * n_bins
    for v in values:
        idx = min(int((v - lo) / HISTOGRAM_BIN_WIDTH), n_bins - 1)
        counts[idx] += 1

    return PolarityDistribution(
        pos_share=labels["positive"] / n,
        neg_share=labels["negative"] / n,
        neu_share=labels["neutral"] / n,
        histogram=Histogram(lo=lo, width=HISTOGRAM_BIN_WIDTH, counts=counts),
    )
