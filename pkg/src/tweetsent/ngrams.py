"""Ranked word-frequency and n-gram (n = 1..4) tables over token streams.

Grams never cross sentence boundaries. Tables order entries by count
descending, ties broken lexicographically on the space-joined gram, which
makes every table a total order and re-runs byte-identical.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InvalidNError
from .textprep import TokenStream

MAX_N = 4


@dataclass
class NgramTable:
    n: int
    entries: list[tuple[tuple[str, ...], int]]
    total_grams: int


def extract_ngrams(ts: TokenStream, n: int) -> list[tuple[str, ...]]:
    """Width-n sliding windows per sentence; a sentence shorter than n yields none."""
    if not 1 <= n <= MAX_N:
        raise InvalidNError(f"n must be in 1..{MAX_N}, got {n}")
    grams: list[tuple[str, ...]] = []
    for sentence in ts.sentences():
        for i in range(len(sentence) - n + 1):
            grams.append(tuple(sentence[i : i + n]))
    return grams


def build_table(corpus_streams: list[TokenStream], n: int) -> NgramTable:
    """Exact counts over all streams with deterministic ordering."""
    counts: Counter[tuple[str, ...]] = Counter()
    for ts in corpus_streams:
        counts.update(extract_ngrams(ts, n))
    entries = sorted(counts.items(), key=lambda item: (-item[1], " ".join(item[0])))
    return NgramTable(n=n, entries=entries, total_grams=sum(counts.values()))


def word_cloud_weights(table: NgramTable, k: int) -> list[tuple[str, float]]:
    """Top-k unigrams weighted by count / max count, heaviest first."""
    if table.n != 1:
        raise InvalidNError(f"word cloud needs a unigram table, got n={table.n}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if not table.entries:
        return []
    top = table.entries[:k]
    max_count = top[0][1]
    return [(gram[0], count / max_count) for gram, count in top]
