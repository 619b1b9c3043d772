"""Named-entity spans from runs of proper nouns."""

from dataclasses import dataclass
from typing import Tuple

from .lexicon import gazetteer
from .tagger import clause_initial


@dataclass(frozen=True)
class Entity:
    text: str
    span: Tuple[int, int]
    token_indices: Tuple[int, int]  # half-open [first, last + 1)


def extract_entities(sentence, proper_names=frozenset()):
    """Maximal contiguous PROPN runs of a tagged sentence.

    A capitalized token that opens the sentence (or a clause after a colon or
    opening quote) joins an entity only when it is a known given/place name or
    appears capitalized mid-sentence elsewhere (``proper_names``).
    """
    tokens = sentence.tokens if hasattr(sentence, "tokens") else sentence
    tokens = list(tokens)
    starts = clause_initial(tokens)
    names = gazetteer()
    runs = []
    start = None
    for i, tok in enumerate(list(tokens) + [None]):
        ok = tok is not None and tok.pos == "PROPN"
        if ok and i in starts:
            low = tok.surface.lower()
            ok = low in names or low in proper_names
        if ok and start is None:
            start = i
        elif not ok and start is not None:
            runs.append((start, i))
            start = None
    out = []
    for lo, hi in runs:
        run = tokens[lo:hi]
        out.append(Entity(
            text=" ".join(t.surface for t in run),
            span=(run[0].span[0], run[-1].span[1]),
            token_indices=(lo, hi),
        ))
    return out
