"""Text normalization: cleaning, tokenization, stopword removal, abusive-word masking.

Cleaning keeps intra-word apostrophes so contractions ("can't") survive as
single tokens. Sentence boundaries come from terminal punctuation (., !, ?)
in the raw text; a tweet without terminal punctuation is one sentence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_MENTION_RE = re.compile(r"@\w+")
_SENTENCE_SPLIT_RE = re.compile(r"[.!?]+")
# everything outside ASCII alphanumerics, apostrophe and whitespace is punctuation;
# emoji and other non-ASCII symbols fall under this rule and are dropped
_PUNCT_RE = re.compile(r"[^a-z0-9'\s]+")
_EDGE_APOSTROPHE_RE = re.compile(r"(?<![a-z0-9])'|'(?![a-z0-9])")
_WS_RE = re.compile(r"\s+")


@dataclass
class CleanOptions:
    remove_mentions: bool = True


@dataclass
class TokenStream:
    """Ordered tokens plus indices of the first token of each sentence."""

    tokens: list[str]
    sentence_boundaries: list[int]

    def sentences(self) -> list[list[str]]:
        """Token slices per sentence, in order."""
        out = []
        bounds = self.sentence_boundaries
        for i, start in enumerate(bounds):
            end = bounds[i + 1] if i + 1 < len(bounds) else len(self.tokens)
            out.append(self.tokens[start:end])
        return out


def clean_text(raw: str, options: CleanOptions | None = None) -> str:
    """Normalize raw tweet text to lowercase space-separated words.

    Rules, in order: strip URLs; strip @mentions (when enabled); strip '#'
    keeping the tag word; drop punctuation except intra-word apostrophes;
    lowercase; collapse whitespace. Idempotent.
    """
    options = options or CleanOptions()
    text = _URL_RE.sub(" ", raw)
    if options.remove_mentions:
        text = _MENTION_RE.sub(" ", text)
    text = text.replace("#", "")
    text = text.lower()
    text = _PUNCT_RE.sub(" ", text)
    text = _EDGE_APOSTROPHE_RE.sub(" ", text)
    return _WS_RE.sub(" ", text).strip()


def tokenize(clean: str) -> TokenStream:
    """Split cleaned text on whitespace.

    Terminal punctuation (., !, ?) still present in the input marks sentence
    boundaries and is not emitted as token content. Fully cleaned input is a
    single sentence.
    """
    tokens: list[str] = []
    boundaries: list[int] = []
    for chunk in _SENTENCE_SPLIT_RE.split(clean):
        words = chunk.split()
        if not words:
            continue
        boundaries.append(len(tokens))
        tokens.extend(words)
    return TokenStream(tokens=tokens, sentence_boundaries=boundaries)


def prepare(raw: str, options: CleanOptions | None = None) -> TokenStream:
    """Raw text to TokenStream: sentence-split on raw terminal punctuation,
    then clean and whitespace-tokenize each sentence.

    URLs are stripped before sentence splitting so dots inside links do not
    spawn spurious boundaries.
    """
    without_urls = _URL_RE.sub(" ", raw)
    tokens: list[str] = []
    boundaries: list[int] = []
    for chunk in _SENTENCE_SPLIT_RE.split(without_urls):
        words = clean_text(chunk, options).split()
        if not words:
            continue
        boundaries.append(len(tokens))
        tokens.extend(words)
    return TokenStream(tokens=tokens, sentence_boundaries=boundaries)


def remove_stopwords(ts: TokenStream, stoplist: set[str]) -> TokenStream:
    """Drop stoplist tokens; re-index boundaries to the surviving tokens.

    Sentences emptied entirely lose their boundary entry.
    """
    tokens: list[str] = []
    boundaries: list[int] = []
    for sentence in ts.sentences():
        kept = [t for t in sentence if t not in stoplist]
        if not kept:
            continue
        boundaries.append(len(tokens))
        tokens.extend(kept)
    return TokenStream(tokens=tokens, sentence_boundaries=boundaries)


def load_stoplist(path=None) -> set[str]:
    """One lowercase word per line; defaults to the bundled 174-word list."""
    if path is None:
        text = (resources.files("tweetsent") / "data" / "stopwords.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return {line.strip() for line in text.splitlines() if line.strip()}


def load_abusive_lexicon(path=None) -> set[str]:
    """One lowercase word per line; the bundled default is an empty placeholder."""
    if path is None:
        text = (resources.files("tweetsent") / "data" / "abusive_words.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return {line.strip() for line in text.splitlines() if line.strip()}


@dataclass
class MaskLedger:
    """Stable mapping from distinct abusive words to mask tokens.

    Masks are "abuvs" plus a counter that numbers distinct words by first
    appearance, starting at 1; the same word always maps to the same mask
    within one run.
    """

    replacements: list[tuple[str, str]] = field(default_factory=list)
    counter: int = 0
    occurrences: int = 0
    _by_word: dict[str, str] = field(default_factory=dict, repr=False)

    def mask_for(self, word: str) -> str:
        self.occurrences += 1
        mask = self._by_word.get(word)
        if mask is None:
            self.counter += 1
            mask = f"abuvs{self.counter}"
            self._by_word[word] = mask
            self.replacements.append((word, mask))
        return mask


_mask_pattern_cache: dict[frozenset, re.Pattern | None] = {}


def _mask_pattern(lexicon: frozenset) -> re.Pattern | None:
    if lexicon not in _mask_pattern_cache:
        if lexicon:
            # longest-first so longer entries win over prefixes
            words = sorted(lexicon, key=len, reverse=True)
            _mask_pattern_cache[lexicon] = re.compile(
                r"\b(?:" + "|".join(re.escape(w) for w in words) + r")\b",
                re.IGNORECASE,
            )
        else:
            _mask_pattern_cache[lexicon] = None
    return _mask_pattern_cache[lexicon]


def mask_abusive(
    raw: str, abusive_lexicon: set[str], ledger: MaskLedger
) -> tuple[str, MaskLedger]:
    """Replace each whole-word, case-insensitive lexicon hit with its mask token.

    Runs on raw text, before tokenization, so downstream analysis only ever
    sees masks. The ledger is updated in place and returned.
    """
    pattern = _mask_pattern(frozenset(abusive_lexicon))
    if pattern is None:
        return raw, ledger
    masked = pattern.sub(lambda m: ledger.mask_for(m.group(0).lower()), raw)
    return masked, ledger
