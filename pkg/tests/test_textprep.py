from __future__ import annotations

import re

from hypothesis import given, settings
from hypothesis import strategies as st

from tweetsent.synth import ABUSIVE_POOL
from tweetsent.textprep import (
    CleanOptions,
    MaskLedger,
    TokenStream,
    clean_text,
    mask_abusive,
    prepare,
    remove_stopwords,
    tokenize,
)


# ---------------------------------------------------------------------------
# cleaning


def test_clean_url_mention_punctuation():
    assert clean_text("Reopen NOW!! https://t.co/x @gov") == "reopen now"


def test_clean_hash_strip():
    assert clean_text("#reopen the economy") == "reopen the economy"


def test_clean_empty():
    assert clean_text("") == ""


def test_clean_keeps_contractions():
    assert clean_text("It can't happen forever!") == "it can't happen forever"


def test_clean_drops_emoji_and_edge_quotes():
    assert clean_text("'great' day ❤️") == "great day"


def test_clean_mentions_kept_when_disabled():
    assert clean_text("@gov said so", CleanOptions(remove_mentions=False)) == "gov said so"


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=200))
def test_clean_idempotent(raw):
    once = clean_text(raw)
    assert clean_text(once) == once


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=200))
def test_clean_output_alphabet(raw):
    cleaned = clean_text(raw)
    assert re.fullmatch(r"[a-z0-9' ]*", cleaned)
    assert "  " not in cleaned


# ---------------------------------------------------------------------------
# tokenization


def test_tokenize_single_sentence():
    ts = tokenize("reopen the economy")
    assert ts.tokens == ["reopen", "the", "economy"]
    assert ts.sentence_boundaries == [0]


def test_tokenize_boundaries():
    ts = tokenize("open now. stay safe.")
    assert ts.tokens == ["open", "now", "stay", "safe"]
    assert ts.sentence_boundaries == [0, 2]


def test_tokenize_empty():
    ts = tokenize("")
    assert ts.tokens == []
    assert ts.sentence_boundaries == []


def test_prepare_full_path():
    ts = prepare("Reopen NOW!! Stay safe @gov https://t.co/ab.cd")
    assert ts.tokens == ["reopen", "now", "stay", "safe"]
    assert ts.sentence_boundaries == [0, 2]


def test_prepare_url_dots_do_not_split_sentences():
    ts = prepare("check https://x.co/a.b?q=1 reopen plans")
    assert ts.sentence_boundaries == [0]
    assert "reopen" in ts.tokens


def test_sentences_view():
    ts = TokenStream(tokens=["a", "b", "c", "d"], sentence_boundaries=[0, 3])
    assert ts.sentences() == [["a", "b", "c"], ["d"]]


@settings(max_examples=150, deadline=None)
@given(st.text(max_size=200))
def test_prepare_invariants(raw):
    ts = prepare(raw)
    assert all(not re.search(r"\s", t) and t for t in ts.tokens)
    bounds = ts.sentence_boundaries
    assert bounds == sorted(set(bounds))
    if ts.tokens:
        assert bounds and bounds[0] == 0
        assert bounds[-1] < len(ts.tokens)
    else:
        assert bounds == []


# ---------------------------------------------------------------------------
# stopwords


def test_remove_stopwords_basic():
    ts = tokenize("reopen the economy")
    out = remove_stopwords(ts, {"the"})
    assert out.tokens == ["reopen", "economy"]
    assert out.sentence_boundaries == [0]


def test_remove_stopwords_all_gone():
    out = remove_stopwords(tokenize("the a an"), {"the", "a", "an"})
    assert out.tokens == []
    assert out.sentence_boundaries == []


def test_remove_stopwords_empty_stoplist_identity():
    ts = tokenize("open now. stay safe.")
    out = remove_stopwords(ts, set())
    assert out.tokens == ts.tokens
    assert out.sentence_boundaries == ts.sentence_boundaries


def test_remove_stopwords_reindexes_boundaries():
    ts = tokenize("the and. reopen now.")
    out = remove_stopwords(ts, {"the", "and"})
    assert out.tokens == ["reopen", "now"]
    assert out.sentence_boundaries == [0]


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.sampled_from(["reopen", "the", "now", "a", "economy"]), max_size=30),
    st.sets(st.sampled_from(["the", "a", "now"])),
)
def test_remove_stopwords_order_and_count(tokens, stoplist):
    ts = TokenStream(tokens=list(tokens), sentence_boundaries=[0] if tokens else [])
    out = remove_stopwords(ts, stoplist)
    assert out.tokens == [t for t in tokens if t not in stoplist]  # order preserved
    assert len(out.tokens) <= len(tokens)
    hits = sum(1 for t in tokens if t in stoplist)
    assert (len(out.tokens) == len(tokens)) == (hits == 0)


def test_stoplist_fixture_size(stoplist):
    assert len(stoplist) == 174


# ---------------------------------------------------------------------------
# masking


def test_mask_counter_starts_at_one():
    masked, ledger = mask_abusive("you badword01 loser", {"badword01"}, MaskLedger())
    assert masked == "you abuvs1 loser"
    assert ledger.replacements == [("badword01", "abuvs1")]


def test_mask_same_word_same_token():
    text = "badword01 again Badword01!"
    masked, ledger = mask_abusive(text, {"badword01"}, MaskLedger())
    assert masked == "abuvs1 again abuvs1!"
    assert ledger.counter == 1
    assert ledger.occurrences == 2


def test_mask_distinct_words_distinct_tokens():
    masked, ledger = mask_abusive(
        "badword02 then badword01 then badword02",
        {"badword01", "badword02"},
        MaskLedger(),
    )
    assert masked == "abuvs1 then abuvs2 then abuvs1"
    assert ledger.replacements == [("badword02", "abuvs1"), ("badword01", "abuvs2")]


def test_mask_no_hits_unchanged():
    ledger = MaskLedger()
    masked, ledger = mask_abusive("nothing to see", {"badword01"}, ledger)
    assert masked == "nothing to see"
    assert ledger.replacements == []


def test_mask_whole_word_only():
    masked, _ = mask_abusive("notbadword01here badword01", {"badword01"}, MaskLedger())
    assert masked == "notbadword01here abuvs1"


def test_masking_completeness_on_synthetic_corpus(synth_corpus):
    lexicon = set(ABUSIVE_POOL)
    assert len(lexicon) == 50
    ledger = MaskLedger()
    masked_texts = []
    for record in synth_corpus.records:
        masked, ledger = mask_abusive(record.text, lexicon, ledger)
        masked_texts.append(masked)
    scan = re.compile(r"\b(?:" + "|".join(sorted(lexicon)) + r")\b", re.IGNORECASE)
    assert not any(scan.search(t) for t in masked_texts)
    assert ledger.occurrences > 0  # the generator did plant some
