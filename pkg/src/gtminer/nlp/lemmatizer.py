"""Table-plus-suffix-rule lemmatizer."""

from functools import lru_cache

from .lexicon import lemma_exceptions, open_class

INFLECTING = {"VERB", "AUX", "NOUN", "ADJ", "ADV"}
_VOWELS = set("aeiouy")
_NO_UNDOUBLE = set("lsz")


@lru_cache(maxsize=None)
def _lemma_values():
    return frozenset(lemma_exceptions().values())


def _known_base(word, pos):
    entry = open_class().get(word)
    if entry is None:
        return False
    if pos == "VERB":
        return entry.penn in ("VB", "VBP") or (entry.tag != "VERB" and "VERB" in entry.alternatives)
    if pos == "NOUN":
        return entry.penn == "NN" or (entry.tag != "NOUN" and "NOUN" in entry.alternatives)
    return False


def _verb_candidates(w):
    cands = []
    if w.endswith("ies") and len(w) > 4:
        cands.append(w[:-3] + "y")
    if w.endswith("ied") and len(w) > 4:
        cands.append(w[:-3] + "y")
    for suffix in ("ing", "ed"):
        if w.endswith(suffix) and len(w) > len(suffix) + 1:
            stem = w[: -len(suffix)]
            if not _VOWELS & set(stem):
                continue
            if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS | _NO_UNDOUBLE:
                cands.append(stem[:-1])
            cands.append(stem)
            cands.append(stem + "e")
    if w.endswith("es") and len(w) > 3:
        cands.append(w[:-2])
        cands.append(w[:-1])
    if w.endswith("s") and not w.endswith("ss") and len(w) > 2:
        cands.append(w[:-1])
    return cands


def _noun_candidates(w):
    cands = []
    if w.endswith("ies") and len(w) > 4:
        cands.append(w[:-3] + "y")
    if w.endswith("es") and len(w) > 3 and w[:-2].endswith(("s", "x", "z", "ch", "sh", "o")):
        cands.append(w[:-2])
    if w.endswith("s") and not w.endswith(("ss", "us", "is")) and len(w) > 2:
        cands.append(w[:-1])
    return cands


def _one_step(w, pos):
    """Strip one inflection using only the suffix rules (no lexicon)."""
    cands = _verb_candidates(w) if pos == "VERB" else _noun_candidates(w)
    # prefer the first candidate that does not itself need another e-restoration
    for c in cands:
        if not c.endswith("e") or pos != "VERB":
            return c
    return cands[0] if cands else w


def lemmatize(surface, pos):
    """Lowercased dictionary form of ``surface`` given its coarse tag."""
    w = surface.lower().replace("’", "'")
    if pos not in INFLECTING:
        return lemma_exceptions().get((w, "*"), w)
    return _lemma(w, pos)


def _lemma(w, pos):
    if w in _lemma_values():
        return w
    table = lemma_exceptions()
    for key in ((w, pos), (w, "*")):
        if key in table:
            return table[key]
    if pos not in ("VERB", "NOUN") or _known_base(w, pos):
        return w
    cands = _verb_candidates(w) if pos == "VERB" else _noun_candidates(w)
    for c in cands:
        if c in _lemma_values():
            return c
        if _known_base(c, pos) and (c, pos) not in table and (c, "*") not in table:
            return c
    nxt = _one_step(w, pos)
    if nxt == w or len(nxt) < 2:
        return w
    # unknown word: keep stripping until stable so the result is its own lemma
    return _lemma(nxt, pos)
