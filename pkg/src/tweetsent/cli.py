"""Command-line front end.

Subcommands: ingest, ngrams, sentiment, report, scenario, run, synth.
Exit codes: 0 success, 2 configuration error (bad flags, paths, parameter
ranges), 3 data error (schema violations, empty corpora, ties), 4 internal
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import analytics, emotion, ngrams, polarity, scenario, textprep
from .corpus import (
    BotPolicy,
    filter_bots_and_duplicates,
    filter_country,
    filter_date_range,
    filter_keyword,
    load_corpus,
    mask_corpus,
    write_corpus_jsonl,
)
from .errors import (
    ConfigError,
    EmptyCorpusError,
    EmptyInputError,
    InvalidNError,
    InvalidRangeError,
    PipelineStageError,
    SchemaError,
    TiedTrendError,
)
from .exports import (
    daily_series_to_csv,
    daily_series_to_dict,
    device_report_to_dict,
    distribution_to_dict,
    ngram_table_to_csv,
    ngram_table_to_rows,
    ranked_table_to_csv,
    ranked_table_to_dict,
    write_json,
)
from .pipeline import RunConfig, run_pipeline
from .synth import write_synthetic_corpus

_CONFIG_ERRORS = (ConfigError, FileNotFoundError, InvalidRangeError, InvalidNError)
_DATA_ERRORS = (SchemaError, EmptyCorpusError, EmptyInputError, TiedTrendError)


def _parse_date(value: str):
    from datetime import date

    try:
        return date.fromisoformat(value)
    except ValueError as exc:
        raise ConfigError(f"bad date {value!r}: expected YYYY-MM-DD") from exc


def _load_filtered(args) -> "tuple":
    """Load a corpus and apply whichever filters the flags request."""
    if bool(args.start) != bool(args.end):
        raise ConfigError("--start and --end must be given together")
    if args.keyword is not None and not args.keyword:
        raise ConfigError("--keyword must be non-empty")
    if args.country is not None and not (len(args.country) == 2 and args.country.isalpha()):
        raise ConfigError("--country must be a two-letter code")
    corpus = load_corpus(args.input, args.format)
    if args.start:
        corpus = filter_date_range(corpus, _parse_date(args.start), _parse_date(args.end))
    if args.keyword:
        corpus = filter_keyword(corpus, args.keyword)
    if args.country:
        corpus = filter_country(corpus, args.country)
    if args.bots:
        policy = BotPolicy(
            dup_window_seconds=args.dup_window,
            burst_per_minute=args.burst_per_minute,
            min_distinct_tokens=args.min_distinct_tokens,
        )
        corpus = filter_bots_and_duplicates(corpus, policy)
    return corpus


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="corpus file (CSV or JSONL)")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")


def _add_filter_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--start", help="inclusive start date YYYY-MM-DD")
    p.add_argument("--end", help="inclusive end date YYYY-MM-DD")
    p.add_argument("--keyword", help="keep records containing this keyword")
    p.add_argument("--country", help="keep records tagged with this country code")
    p.add_argument("--bots", action="store_true", help="apply bot/duplicate removal")
    p.add_argument("--dup-window", type=float, default=3600.0)
    p.add_argument("--burst-per-minute", type=int, default=10)
    p.add_argument("--min-distinct-tokens", type=int, default=3)


def _prepare_streams(corpus, args):
    abusive = textprep.load_abusive_lexicon(getattr(args, "abusive_lexicon", None))
    corpus = mask_corpus(corpus, abusive, textprep.MaskLedger())
    return corpus, [textprep.prepare(r.text) for r in corpus.records]


def cmd_ingest(args) -> None:
    corpus = _load_filtered(args)
    write_corpus_jsonl(corpus, args.output)
    if args.provenance:
        prov_path = Path(args.output).with_suffix(".provenance.json")
        write_json(corpus.provenance.to_dict(), prov_path)
        print(f"wrote {args.output} and {prov_path}")
    else:
        print(f"wrote {args.output}")
    print(f"records: {len(corpus.records)}")


def cmd_ngrams(args) -> None:
    corpus = load_corpus(args.input, args.format)
    corpus, streams = _prepare_streams(corpus, args)
    if args.n <= 2:
        stoplist = textprep.load_stoplist(args.stopwords)
        streams = [textprep.remove_stopwords(ts, stoplist) for ts in streams]
    table = ngrams.build_table(streams, args.n)
    if args.output:
        if args.export == "csv":
            ngram_table_to_csv(table, args.output, args.top)
        else:
            write_json(ngram_table_to_rows(table, args.top), args.output)
        print(f"wrote {args.output}")
    else:
        for rank, (gram, count) in enumerate(table.entries[: args.top], start=1):
            print(f"{rank}\t{' '.join(gram)}\t{count}")


def cmd_sentiment(args) -> None:
    corpus = load_corpus(args.input, args.format)
    corpus, full_streams = _prepare_streams(corpus, args)
    stoplist = textprep.load_stoplist(args.stopwords)
    stopped = [textprep.remove_stopwords(ts, stoplist) for ts in full_streams]

    emo_lex = emotion.load_emotion_lexicon(args.emotion_lexicon)
    profiles = [emotion.classify(ts, emo_lex) for ts in stopped]
    pol_lex = polarity.load_polarity_lexicon(args.polarity_lexicon, args.shifter_lexicon)
    scores = [polarity.score_text(ts, pol_lex) for ts in full_streams]

    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["status_id", "value", "n_sentences", "label"] + list(emotion.ALL_CATEGORIES)
        )
        for record, score, profile in zip(corpus.records, scores, profiles):
            writer.writerow(
                [record.id, score.value, score.n_sentences, polarity.classify_polarity(score)]
                + [profile.counts[c] for c in emotion.ALL_CATEGORIES]
            )
    dist = analytics.polarity_distribution(scores)
    print(f"wrote {args.output}")
    print(
        f"shares positive={dist.pos_share:.4f} negative={dist.neg_share:.4f} "
        f"neutral={dist.neu_share:.4f}"
    )


def cmd_report(args) -> None:
    corpus = load_corpus(args.input, args.format)
    what = args.what

    if what in ("mentions", "hashtags", "locations"):
        if what == "mentions":
            table = analytics.rank_mentions(corpus, args.top)
        elif what == "hashtags":
            table = analytics.rank_hashtags(corpus, args.top)
        else:
            table = analytics.rank_locations(corpus, args.top, args.field)
        if args.export == "csv":
            ranked_table_to_csv(table, args.output)
        else:
            write_json(ranked_table_to_dict(table), args.output)
        print(f"wrote {args.output}")
        return

    if what == "devices":
        corpus, _ = _prepare_streams(corpus, args)
        report = analytics.device_group_report(corpus)
        payload = device_report_to_dict(report)
        if args.export == "csv":
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["device", "n_records", "category", "ratio"])
                for device, body in payload.items():
                    for name, ratio in body["category_ratios"].items():
                        writer.writerow([device, body["n_records"], name, ratio])
        else:
            write_json(payload, args.output)
        print(f"wrote {args.output}")
        return

    # daily and distribution need the lexicons
    corpus, full_streams = _prepare_streams(corpus, args)
    stoplist = textprep.load_stoplist(args.stopwords)
    stopped = [textprep.remove_stopwords(ts, stoplist) for ts in full_streams]
    emo_lex = emotion.load_emotion_lexicon(args.emotion_lexicon)
    profiles = [emotion.classify(ts, emo_lex) for ts in stopped]

    if what == "daily":
        series = analytics.daily_emotion_series(corpus, profiles)
        if args.export == "csv":
            daily_series_to_csv(series, args.output)
        else:
            write_json(daily_series_to_dict(series), args.output)
        print(f"wrote {args.output}")
        return

    pol_lex = polarity.load_polarity_lexicon(args.polarity_lexicon, args.shifter_lexicon)
    scores = [polarity.score_text(ts, pol_lex) for ts in full_streams]
    dist = analytics.polarity_distribution(scores)
    totals = emotion.aggregate_profiles(profiles)
    payload = distribution_to_dict(dist, totals, polarity.extremes(scores))
    if args.export == "csv":
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["key", "value"])
            for key in ("positive_share", "negative_share", "neutral_share"):
                writer.writerow([key, payload[key]])
            for i, count in enumerate(payload["histogram"]["counts"]):
                lo = payload["histogram"]["lo"] + i * payload["histogram"]["width"]
                writer.writerow([f"bin[{lo},{lo + payload['histogram']['width']})", count])
    else:
        write_json(payload, args.output)
    print(f"wrote {args.output}")


def cmd_scenario(args) -> None:
    with open(args.input, encoding="utf-8") as fh:
        try:
            report = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"scenario input is not valid JSON: {exc}") from exc
    try:
        pos = float(report["positive_share"])
        neg = float(report["negative_share"])
        neu = float(report.get("neutral_share", 0.0))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("scenario input needs positive_share and negative_share") from exc

    profile = emotion.EmotionProfile()
    emo_counts = (report.get("emotion_totals") or {}).get("counts") or {}
    for category, value in emo_counts.items():
        if category in profile.counts:
            profile.counts[category] = int(value)

    dist = analytics.PolarityDistribution(
        pos_share=pos,
        neg_share=neg,
        neu_share=neu,
        histogram=analytics.Histogram(lo=0.0, width=0.25, counts=[]),
    )
    trend = scenario.derive_trend(dist, profile)
    outcome = scenario.classify_scenario(trend, args.timing)
    payload = {
        "id": outcome.id,
        "label": outcome.label,
        "narrative_key": outcome.narrative_key,
        "inputs": {
            "pos_share": trend.pos_share,
            "neg_share": trend.neg_share,
            "dominant_emotions": trend.dominant_emotions,
            "timing": args.timing,
        },
    }
    if args.output:
        write_json(payload, args.output)
        print(f"wrote {args.output}")
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_run(args) -> None:
    values: dict = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                values = json.load(fh)
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {args.config}")
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(values, dict):
            raise ConfigError("config file must hold a flat JSON object")
    overrides = {
        "input": args.input,
        "format": args.format,
        "output_dir": args.output_dir,
        "start_date": args.start,
        "end_date": args.end,
        "keyword": args.keyword,
        "country": args.country,
        "stopwords_path": args.stopwords,
        "abusive_lexicon_path": args.abusive_lexicon,
        "emotion_lexicon_path": args.emotion_lexicon,
        "polarity_lexicon_path": args.polarity_lexicon,
        "shifter_lexicon_path": args.shifter_lexicon,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    cfg = RunConfig.from_dict(values)
    manifest = run_pipeline(cfg)
    print(f"wrote {Path(cfg.output_dir) / 'manifest.json'}")
    prov = manifest.stages["provenance"]
    print(
        f"parsed={prov['parsed']} skipped={prov['skipped']} "
        f"final={manifest.stages['records_final']}"
    )


def cmd_synth(args) -> None:
    ledger = write_synthetic_corpus(
        args.output,
        seed=args.seed,
        n=args.n,
        format=args.format,
        ledger_path=args.ledger,
    )
    print(f"wrote {args.output} ({args.n} records)")
    if args.ledger:
        print(f"wrote {args.ledger}")
    counts = ledger["counts"]
    print(
        f"planted duplicates={counts['duplicates']} burst={counts['burst_records']} "
        f"low_token={counts['low_token']}"
    )


def _add_lexicon_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--stopwords", help="stopword list path (default: bundled)")
    p.add_argument("--abusive-lexicon", dest="abusive_lexicon", help="abusive word list path")
    p.add_argument("--emotion-lexicon", dest="emotion_lexicon", help="emotion lexicon TSV path")
    p.add_argument("--polarity-lexicon", dest="polarity_lexicon", help="polarity lexicon CSV path")
    p.add_argument("--shifter-lexicon", dest="shifter_lexicon", help="shifter lexicon CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tweetsent", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load, filter, and export a corpus")
    _add_corpus_args(p)
    _add_filter_args(p)
    p.add_argument("--output", required=True, help="filtered corpus JSONL path")
    p.add_argument("--provenance", action="store_true", help="also write provenance JSON")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("ngrams", help="ranked n-gram frequency table")
    _add_corpus_args(p)
    p.add_argument("--n", type=int, required=True, help="gram order, 1..4")
    p.add_argument("--top", type=int, default=25)
    p.add_argument("--export", choices=["csv", "json"], default="csv")
    p.add_argument("--output", help="write table here instead of stdout")
    p.add_argument("--stopwords", help="stopword list path (default: bundled)")
    p.add_argument("--abusive-lexicon", dest="abusive_lexicon")
    p.set_defaults(func=cmd_ngrams)

    p = sub.add_parser("sentiment", help="per-record emotion and polarity scores")
    _add_corpus_args(p)
    _add_lexicon_args(p)
    p.add_argument("--output", required=True, help="per-record scores CSV path")
    p.set_defaults(func=cmd_sentiment)

    p = sub.add_parser("report", help="descriptive and distribution reports")
    _add_corpus_args(p)
    _add_lexicon_args(p)
    p.add_argument(
        "--what",
        required=True,
        choices=["mentions", "hashtags", "locations", "devices", "daily", "distribution"],
    )
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--field", choices=["tagged", "stated"], default="stated")
    p.add_argument("--export", choices=["csv", "json"], default="json")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("scenario", help="map sentiment trend and timing to a scenario")
    p.add_argument("--input", required=True, help="distribution report JSON")
    p.add_argument("--timing", required=True, choices=["now", "later"])
    p.add_argument("--output", help="write scenario JSON here instead of stdout")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("run", help="full pipeline from a config file")
    p.add_argument("--config", help="flat JSON config; flags override its values")
    p.add_argument("--input")
    p.add_argument("--format", choices=["csv", "jsonl"])
    p.add_argument("--output-dir", dest="output_dir")
    p.add_argument("--start")
    p.add_argument("--end")
    p.add_argument("--keyword")
    p.add_argument("--country")
    _add_lexicon_args(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("synth", help="deterministic synthetic corpus generator")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--ledger", help="write the planting ledger JSON here")
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except PipelineStageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc.cause, _CONFIG_ERRORS):
            return 2
        if isinstance(exc.cause, _DATA_ERRORS):
            return 3
        return 4
    except _CONFIG_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - boundary of the CLI
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
