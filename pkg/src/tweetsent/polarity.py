"""Signed sentence polarity with valence shifters.

Each polarized word is weighted by the shifters found in a context cluster
around it (default 4 tokens back, 2 forward, clipped to the sentence):

* negators flip the sign; an odd negator count also demotes amplifiers to
  deamplifiers,
* amplifiers add z per hit, deamplifiers subtract z per hit with the total
  deamplification floored at -1,
* adversative conjunctions reweight by (1 + w/4) before the word and
  (1 - w/4) after it.

The sentence score is the sum of weighted polarities divided by the square
root of the sentence's token count; text scores sum over sentences and may
leave [-1, 1].
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from importlib import resources

from .errors import EmptyInputError, SchemaError
from .textprep import TokenStream

NEGATOR = "negator"
AMPLIFIER = "amplifier"
DEAMPLIFIER = "deamplifier"
ADVERSATIVE = "adversative"

_SHIFTER_CODES = {"1": NEGATOR, "2": AMPLIFIER, "3": DEAMPLIFIER, "4": ADVERSATIVE}


@dataclass
class PolarityLexicon:
    entries: dict[str, float]
    shifters: dict[str, str]


@dataclass
class ScoringParams:
    window_before: int = 4
    window_after: int = 2
    amplifier_weight: float = 0.8
    adversative_weight: float = 0.85


@dataclass
class PolarityScore:
    value: float
    n_sentences: int
    per_sentence: list[float] = field(default_factory=list)


def load_polarity_lexicon(polarity_path=None, shifter_path=None) -> PolarityLexicon:
    """Load term scores and shifter kinds from the two CSV files.

    Shifter kinds use the numeric coding 1=negator, 2=amplifier,
    3=deamplifier, 4=adversative. A term may not be both polarized and a
    shifter.
    """
    if polarity_path is None:
        pol_text = (resources.files("tweetsent") / "data" / "polarity_lexicon.csv").read_text("utf-8")
    else:
        with open(polarity_path, encoding="utf-8") as fh:
            pol_text = fh.read()
    if shifter_path is None:
        shift_text = (resources.files("tweetsent") / "data" / "shifters.csv").read_text("utf-8")
    else:
        with open(shifter_path, encoding="utf-8") as fh:
            shift_text = fh.read()

    entries: dict[str, float] = {}
    for row in csv.DictReader(pol_text.splitlines()):
        term = (row.get("term") or "").strip().lower()
        if not term:
            raise SchemaError("polarity lexicon: empty term")
        try:
            score = float(row.get("score") or "")
        except ValueError as exc:
            raise SchemaError(f"polarity lexicon: bad score for {term!r}") from exc
        if score == 0 or not math.isfinite(score):
            raise SchemaError(f"polarity lexicon: score for {term!r} must be finite and non-zero")
        entries[term] = score

    shifters: dict[str, str] = {}
    for row in csv.DictReader(shift_text.splitlines()):
        term = (row.get("term") or "").strip().lower()
        kind_code = (row.get("kind") or "").strip()
        if kind_code not in _SHIFTER_CODES:
            raise SchemaError(f"shifter lexicon: kind for {term!r} must be 1..4")
        if term in entries:
            raise SchemaError(f"{term!r} appears in both polarity and shifter lexicons")
        shifters[term] = _SHIFTER_CODES[kind_code]

    return PolarityLexicon(entries=entries, shifters=shifters)


def score_sentence(tokens: list[str], lex: PolarityLexicon, params: ScoringParams | None = None) -> float:
    """Score one sentence of lowercase tokens; empty sentences score 0."""
    if not tokens:
        return 0.0
    params = params or ScoringParams()
    entries = lex.entries
    shifters = lex.shifters
    z = params.amplifier_weight
    adv_up = 1.0 + params.adversative_weight * 0.25
    adv_down = 1.0 - params.adversative_weight * 0.25

    total = 0.0
    for i, token in enumerate(tokens):
        polarity = entries.get(token)
        if polarity is None:
            continue
        lo = max(0, i - params.window_before)
        hi = min(len(tokens), i + params.window_after + 1)
        negators = 0
        amplifiers = 0
        deamplifiers = 0
        adv_factor = 1.0
        for j in range(lo, hi):
            kind = shifters.get(tokens[j])
            if kind is None:
                continue
            if kind == NEGATOR:
                negators += 1
            elif kind == AMPLIFIER:
                amplifiers += 1
            elif kind == DEAMPLIFIER:
                deamplifiers += 1
            else:
                adv_factor *= adv_up if j < i else adv_down
        if negators % 2 == 1:
            # odd negation demotes amplification into damping
            deamplifiers += amplifiers
            amplifiers = 0
        amp = z * amplifiers
        damp = max(-1.0, -z * deamplifiers)
        weighted = (1.0 + amp + damp) * polarity * (-1.0) ** negators
        total += weighted * adv_factor
    return total / math.sqrt(len(tokens))


def score_text(ts: TokenStream, lex: PolarityLexicon, params: ScoringParams | None = None) -> PolarityScore:
    """Sum of per-sentence scores; the total may exceed 1 in magnitude."""
    per_sentence = [score_sentence(s, lex, params) for s in ts.sentences()]
    return PolarityScore(
        value=sum(per_sentence),
        n_sentences=len(per_sentence),
        per_sentence=per_sentence,
    )


def classify_polarity(score: PolarityScore) -> str:
    if score.value > 0:
        return "positive"
    if score.value < 0:
        return "negative"
    return "neutral"


def extremes(scores: list[PolarityScore]) -> tuple[PolarityScore, PolarityScore]:
    """Scores attaining the minimum and maximum value, first occurrence on ties."""
    if not scores:
        raise EmptyInputError("extremes over empty score list")
    lowest = scores[0]
    highest = scores[0]
    for s in scores[1:]:
        if s.value < lowest.value:
            lowest = s
        if s.value > highest.value:
            highest = s
    return lowest, highest
