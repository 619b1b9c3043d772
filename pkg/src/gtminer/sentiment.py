"""Lexicon-and-rule sentiment scoring (VADER heuristics).

Per-word valences come from ``sentiment_lexicon.tsv``. They are adjusted by
capitalized emphasis, a preceding booster/dampener word and negation in the
three preceding words, re-weighted around a contrastive ``but`` and summed.
Exclamation marks push the sum away from zero and the total is squashed into
[-1, 1] by ``s / sqrt(s**2 + 15)``.
"""

import math
from dataclasses import dataclass

from .nlp.lexicon import sentiment_lexicon
from .nlp.sentences import split_sentences
from .nlp.tokenize import tokenize

BOOST = 0.293
CAPS_BOOST = 0.733
NEGATION_SCALAR = -0.74
EXCLAMATION_BOOST = 0.292
MAX_EXCLAMATIONS = 3
ALPHA = 15.0
BUT_BEFORE = 0.5
BUT_AFTER = 1.5
THRESHOLD = 0.05
NEGATION_WINDOW = 3

NEGATIONS = frozenset("""
not n't no never none nobody nothing neither nor nowhere cannot without hardly rarely seldom
aint arent cant couldnt didnt doesnt dont hadnt hasnt havent isnt mightnt mustnt neednt
shant shouldnt wasnt werent wont wouldnt
""".split())

BOOSTERS = {w: BOOST for w in """
absolutely amazingly awfully completely considerably decidedly deeply enormously entirely especially
exceptionally extremely fabulously flipping fully greatly highly hugely incredibly intensely largely
majorly more most particularly purely quite really remarkably so substantially thoroughly totally
tremendously uber unbelievably unusually utterly very
""".split()}
BOOSTERS.update({w: -BOOST for w in """
almost barely hardly just kinda less little marginally occasionally partly scarcely slightly somewhat
sorta
""".split()})


@dataclass(frozen=True)
class SentimentScore:
    pos: float
    neg: float
    neu: float
    compound: float


NEUTRAL = SentimentScore(0.0, 0.0, 1.0, 0.0)


def normalize(score, alpha=ALPHA):
    """Map an unbounded valence sum into [-1, 1]."""
    value = score / math.sqrt(score * score + alpha)
    return max(-1.0, min(1.0, value))


def _words(text):
    return [t.surface.replace("’", "'") for t in tokenize(text) if any(ch.isalnum() for ch in t.surface)]


def _caps_differential(words):
    shouted = sum(1 for w in words if w.isupper())
    return 0 < shouted < len(words)


def _word_valences(words, lexicon):
    caps_diff = _caps_differential(words)
    valences = []
    for i, word in enumerate(words):
        low = word.lower()
        valence = lexicon.get(low, 0.0)
        if valence == 0.0 or low in BOOSTERS:
            valences.append(0.0)
            continue
        if caps_diff and word.isupper():
            valence += CAPS_BOOST if valence > 0 else -CAPS_BOOST
        if i > 0:
            prev = words[i - 1]
            scalar = BOOSTERS.get(prev.lower(), 0.0)
            if scalar:
                if valence < 0:
                    scalar = -scalar
                if caps_diff and prev.isupper():
                    scalar += CAPS_BOOST if valence > 0 else -CAPS_BOOST
                valence += scalar
        window = words[max(0, i - NEGATION_WINDOW):i]
        if any(w.lower() in NEGATIONS for w in window):
            valence *= NEGATION_SCALAR
        valences.append(valence)
    lowered = [w.lower() for w in words]
    if "but" in lowered:
        pivot = lowered.index("but")
        valences = [
            v * BUT_BEFORE if i < pivot else v * BUT_AFTER if i > pivot else v
            for i, v in enumerate(valences)
        ]
    return valences


def score_text(text, lexicon=None):
    """Score a piece of text; returns a :class:`SentimentScore`."""
    lexicon = sentiment_lexicon() if lexicon is None else lexicon
    words = _words(text)
    if not words:
        return NEUTRAL
    valences = _word_valences(words, lexicon)
    total = math.fsum(valences)
    amplifier = 0.0
    if total != 0.0:
        amplifier = min(text.count("!"), MAX_EXCLAMATIONS) * EXCLAMATION_BOOST
        total += amplifier if total > 0 else -amplifier
    compound = normalize(total)

    pos_sum = math.fsum(v + 1.0 for v in valences if v > 0)
    neg_sum = math.fsum(v - 1.0 for v in valences if v < 0)
    neu_count = sum(1 for v in valences if v == 0)
    if pos_sum > -neg_sum:
        pos_sum += amplifier
    elif pos_sum < -neg_sum:
        neg_sum -= amplifier
    neg_mass = abs(neg_sum)
    mass = pos_sum + neg_mass + neu_count
    return SentimentScore(pos_sum / mass, neg_mass / mass, neu_count / mass, compound)


def label(score):
    """``pos``, ``neg`` or ``neu`` from the compound score (boundaries inclusive)."""
    compound = score.compound if isinstance(score, SentimentScore) else float(score)
    if compound >= THRESHOLD:
        return "pos"
    if compound <= -THRESHOLD:
        return "neg"
    return "neu"


def score_document(document):
    return score_text(document.text)


def score_sentences(document):
    """Per-sentence scores in document order as ``(sentence_text, score)``."""
    text = document.text if hasattr(document, "text") else document
    return [(s.text, score_text(s.text)) for s in split_sentences(text)]
