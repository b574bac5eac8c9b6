"""End-to-end run: ingest, filter, mask, tokenize, analyze, write reports.

Stage order: load -> date_range -> keyword -> country -> bot/duplicate
removal -> abusive masking -> tokenization -> stopword removal -> n-gram
tables, emotion profiles, polarity scores, descriptive reports, and the
scenario-ready sentiment summary.

Stream policy: unigram/bigram tables and emotion classification use the
stopword-removed streams; trigram/quadgram tables and polarity scoring use
the full streams, since function words carry both the longer word sequences
and the valence shifters.

A run writes every report plus a manifest (stage counts, config echo,
sha256 per output). Outputs are computed before anything is written and any
write failure removes the files already written, so a failed run leaves no
partial outputs. Identical config and input produce byte-identical outputs.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import asdict, dataclass, field
from datetime import date
from pathlib import Path

from . import analytics, emotion, ngrams, polarity, textprep
from .corpus import (
    BotPolicy,
    Corpus,
    filter_bots_and_duplicates,
    filter_country,
    filter_date_range,
    filter_keyword,
    load_corpus,
    mask_corpus,
    write_corpus_jsonl,
)
from .errors import ConfigError, PipelineStageError
from .exports import (
    daily_series_to_csv,
    device_report_to_dict,
    distribution_to_dict,
    ngram_table_to_csv,
    ranked_table_to_csv,
    word_cloud_to_dict,
    write_json,
)

VERSION = "0.1.0"


@dataclass
class RunConfig:
    """Flat run configuration; unset lexicon paths fall back to bundled data."""

    input: str
    format: str = "csv"
    start_date: str = "2020-04-30"
    end_date: str = "2020-05-08"
    keyword: str = "reopen"
    country: str = "US"
    stopwords_path: str | None = None
    abusive_lexicon_path: str | None = None
    emotion_lexicon_path: str | None = None
    polarity_lexicon_path: str | None = None
    shifter_lexicon_path: str | None = None
    window_before: int = 4
    window_after: int = 2
    amplifier_weight: float = 0.8
    adversative_weight: float = 0.85
    dup_window_seconds: float = 3600.0
    burst_per_minute: int = 10
    min_distinct_tokens: int = 3
    ngram_top: int = 100
    wordcloud_top: int = 100
    rank_top: int = 10
    device_categories: dict[str, list[str]] | None = None
    output_dir: str = "out"
    seed: int = 42

    @classmethod
    def from_dict(cls, values: dict) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(values) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if "input" not in values:
            raise ConfigError("config requires 'input'")
        return cls(**values)

    def validate(self) -> None:
        if self.format not in ("csv", "jsonl"):
            raise ConfigError(f"format must be csv or jsonl, got {self.format!r}")
        if not Path(self.input).exists():
            raise ConfigError(f"input file not found: {self.input}")
        for label in (
            "stopwords_path",
            "abusive_lexicon_path",
            "emotion_lexicon_path",
            "polarity_lexicon_path",
            "shifter_lexicon_path",
        ):
            value = getattr(self, label)
            if value is not None and not Path(value).exists():
                raise ConfigError(f"{label} not found: {value}")
        try:
            start, end = self.dates()
        except ValueError as exc:
            raise ConfigError(f"bad date: {exc}") from exc
        if start > end:
            raise ConfigError(f"start_date {start} after end_date {end}")
        if not self.keyword:
            raise ConfigError("keyword must be non-empty")
        if not (len(self.country) == 2 and self.country.isalpha()):
            raise ConfigError(f"country must be a two-letter code, got {self.country!r}")
        if not 0 <= self.window_before <= 20 or not 0 <= self.window_after <= 20:
            raise ConfigError("context windows must be in 0..20")
        if not 0 <= self.amplifier_weight <= 2:
            raise ConfigError("amplifier_weight must be in [0, 2]")
        if not 0 <= self.adversative_weight <= 2:
            raise ConfigError("adversative_weight must be in [0, 2]")
        if self.dup_window_seconds < 0:
            raise ConfigError("dup_window_seconds must be >= 0")
        if self.burst_per_minute < 1:
            raise ConfigError("burst_per_minute must be >= 1")
        if self.min_distinct_tokens < 0:
            raise ConfigError("min_distinct_tokens must be >= 0")
        if min(self.ngram_top, self.wordcloud_top, self.rank_top) < 1:
            raise ConfigError("top-k values must be >= 1")

    def dates(self) -> tuple[date, date]:
        return date.fromisoformat(self.start_date), date.fromisoformat(self.end_date)

    def scoring_params(self) -> polarity.ScoringParams:
        return polarity.ScoringParams(
            window_before=self.window_before,
            window_after=self.window_after,
            amplifier_weight=self.amplifier_weight,
            adversative_weight=self.adversative_weight,
        )

    def bot_policy(self) -> BotPolicy:
        return BotPolicy(
            dup_window_seconds=self.dup_window_seconds,
            burst_per_minute=self.burst_per_minute,
            min_distinct_tokens=self.min_distinct_tokens,
        )


@dataclass
class RunManifest:
    config: dict
    stages: dict
    outputs: dict[str, str] = field(default_factory=dict)
    version: str = VERSION

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "stages": self.stages,
            "outputs": self.outputs,
            "version": self.version,
        }


def _run_stage(stage: str, fn):
    try:
        return fn()
    except Exception as exc:
        raise PipelineStageError(stage, exc) from exc


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def run_pipeline(cfg: RunConfig) -> RunManifest:
    cfg.validate()
    start, end = cfg.dates()

    corpus = _run_stage("load", lambda: load_corpus(cfg.input, cfg.format))
    corpus = _run_stage("date_range", lambda: filter_date_range(corpus, start, end))
    corpus = _run_stage("keyword", lambda: filter_keyword(corpus, cfg.keyword))
    corpus = _run_stage("country", lambda: filter_country(corpus, cfg.country))
    corpus = _run_stage(
        "bots", lambda: filter_bots_and_duplicates(corpus, cfg.bot_policy())
    )

    abusive = _run_stage(
        "mask", lambda: textprep.load_abusive_lexicon(cfg.abusive_lexicon_path)
    )
    ledger = textprep.MaskLedger()
    corpus = _run_stage("mask", lambda: mask_corpus(corpus, abusive, ledger))

    stoplist = _run_stage(
        "tokenize", lambda: textprep.load_stoplist(cfg.stopwords_path)
    )
    full_streams = _run_stage(
        "tokenize", lambda: [textprep.prepare(r.text) for r in corpus.records]
    )
    stopped_streams = _run_stage(
        "stopwords",
        lambda: [textprep.remove_stopwords(ts, stoplist) for ts in full_streams],
    )

    tables = {}
    for n in (1, 2, 3, 4):
        streams = stopped_streams if n <= 2 else full_streams
        tables[n] = _run_stage(f"ngrams_{n}", lambda n=n, s=streams: ngrams.build_table(s, n))
    cloud = _run_stage(
        "wordcloud", lambda: ngrams.word_cloud_weights(tables[1], cfg.wordcloud_top)
    )

    emo_lex = _run_stage(
        "emotion", lambda: emotion.load_emotion_lexicon(cfg.emotion_lexicon_path)
    )
    profiles = _run_stage(
        "emotion", lambda: [emotion.classify(ts, emo_lex) for ts in stopped_streams]
    )
    totals = _run_stage("emotion", lambda: emotion.aggregate_profiles(profiles))

    pol_lex = _run_stage(
        "polarity",
        lambda: polarity.load_polarity_lexicon(
            cfg.polarity_lexicon_path, cfg.shifter_lexicon_path
        ),
    )
    params = cfg.scoring_params()
    scores = _run_stage(
        "polarity",
        lambda: [polarity.score_text(ts, pol_lex, params) for ts in full_streams],
    )

    mentions = _run_stage("report", lambda: analytics.rank_mentions(corpus, cfg.rank_top))
    hashtags = _run_stage("report", lambda: analytics.rank_hashtags(corpus, cfg.rank_top))
    loc_tagged = _run_stage(
        "report", lambda: analytics.rank_locations(corpus, cfg.rank_top, "tagged")
    )
    loc_stated = _run_stage(
        "report", lambda: analytics.rank_locations(corpus, cfg.rank_top, "stated")
    )
    devices = _run_stage(
        "report", lambda: analytics.device_group_report(corpus, cfg.device_categories)
    )
    daily = _run_stage("report", lambda: analytics.daily_emotion_series(corpus, profiles))
    dist = _run_stage("distribution", lambda: analytics.polarity_distribution(scores))
    extreme_pair = _run_stage("distribution", lambda: polarity.extremes(scores))

    out_dir = Path(cfg.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, writer) -> None:
        path = out_dir / name
        writer(path)
        written.append(path)

    manifest = RunManifest(
        config=asdict(cfg),
        stages={
            "provenance": corpus.provenance.to_dict(),
            "records_final": len(corpus.records),
            "mask": {"distinct_terms": ledger.counter, "occurrences": ledger.occurrences},
        },
    )

    manifest_path = out_dir / "manifest.json"
    try:
        emit("provenance.json", lambda p: write_json(corpus.provenance.to_dict(), p))
        emit("filtered_corpus.jsonl", lambda p: write_corpus_jsonl(corpus, p))
        for n in (1, 2, 3, 4):
            emit(f"ngrams_{n}.csv", lambda p, n=n: ngram_table_to_csv(tables[n], p, cfg.ngram_top))
        emit("wordcloud.json", lambda p: write_json(word_cloud_to_dict(cloud), p))
        emit("mentions.csv", lambda p: ranked_table_to_csv(mentions, p))
        emit("hashtags.csv", lambda p: ranked_table_to_csv(hashtags, p))
        emit("locations_tagged.csv", lambda p: ranked_table_to_csv(loc_tagged, p))
        emit("locations_stated.csv", lambda p: ranked_table_to_csv(loc_stated, p))
        emit("devices.json", lambda p: write_json(device_report_to_dict(devices), p))
        emit("emotion_totals.json", lambda p: write_json(totals.to_dict(), p))
        emit("emotion_daily.csv", lambda p: daily_series_to_csv(daily, p))
        emit(
            "polarity_scores.csv",
            lambda p: _write_scores(corpus, scores, p),
        )
        emit(
            "distribution.json",
            lambda p: write_json(distribution_to_dict(dist, totals, extreme_pair), p),
        )
        for path in written:
            manifest.outputs[path.name] = _sha256(path)
        with open(manifest_path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(manifest.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    except Exception as exc:
        for path in written:
            path.unlink(missing_ok=True)
        manifest_path.unlink(missing_ok=True)
        raise PipelineStageError("write", exc) from exc

    return manifest


def _write_scores(corpus: Corpus, scores, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["status_id", "value", "n_sentences", "label"])
        for record, score in zip(corpus.records, scores):
            writer.writerow(
                [record.id, score.value, score.n_sentences, polarity.classify_polarity(score)]
            )
