"""Deterministic part-of-speech tagging cascade.

Order of evidence, first match wins:

1. punctuation and numbers
2. closed-class lexicon (determiners, prepositions, pronouns, auxiliaries, ...)
3. capitalization: mid-sentence capitalized words and known names are PROPN
4. open-class lexicon (most frequent tag)
5. suffix rules for unknown words
6. left-context repair
7. NOUN
"""

import re

from .lexicon import closed_class, gazetteer, open_class

_NUMBER = re.compile(r"^[+-]?\d+(?:[.,]\d+)*(?:st|nd|rd|th|s)?$", re.IGNORECASE)
SUBJECT_PRONOUNS = frozenset({"i", "you", "he", "she", "it", "we", "they", "who"})
MODALS = frozenset({"will", "would", "shall", "should", "can", "could", "may", "might", "must",
                    "'ll", "'d", "ca", "wo", "sha"})
BE_FORMS = frozenset({"be", "am", "is", "are", "was", "were", "been", "being", "'m", "'re"})
DO_FORMS = frozenset({"do", "does", "did"})
POSSESSIVES = frozenset({"my", "your", "his", "her", "its", "our", "their"})
NEGATORS = frozenset({"not", "n't", "never"})

_SUFFIX_RULES = (
    ("ly", "ADV"),
    ("ous", "ADJ"), ("ful", "ADJ"), ("able", "ADJ"), ("ible", "ADJ"), ("ive", "ADJ"), ("al", "ADJ"),
    ("tion", "NOUN"), ("sion", "NOUN"), ("ness", "NOUN"), ("ment", "NOUN"), ("ity", "NOUN"),
    ("er", "NOUN"), ("ism", "NOUN"),
    ("ize", "VERB"), ("ise", "VERB"), ("ify", "VERB"),
)


def _is_punct(surface):
    return not any(ch.isalnum() for ch in surface)


def _is_capitalized(surface):
    return surface[:1].isupper()


def _is_shouted(surface):
    return len(surface) > 1 and surface.isupper()


def clause_initial(tokens):
    """Indices of words that open a sentence or a quoted/colon-introduced clause.

    Capitalization at these positions says nothing about proper names.
    """
    starts = set()
    started = False
    for i, tok in enumerate(tokens):
        s = tok.surface
        if _is_punct(s):
            continue
        prev = tokens[i - 1].surface if i else None
        before = tokens[i - 2].surface if i > 1 else None
        if not started or prev in (":", "“") or (prev == '"' and before in (None, ":", ",")):
            starts.add(i)
        started = True
    return starts


def proper_name_evidence(sentences):
    """Lowercased words seen capitalized at a mid-sentence position.

    ``sentences`` is an iterable of token sequences. All-caps words whose
    lowercase form is in the lexicon are treated as emphasis, not names.
    """
    closed = closed_class()
    lexicon = open_class()
    seen = set()
    for tokens in sentences:
        tokens = list(tokens)
        starts = clause_initial(tokens)
        for i, tok in enumerate(tokens):
            s = tok.surface
            if _is_punct(s) or i in starts:
                continue
            if _is_capitalized(s) and s.lower() not in closed:
                if not (_is_shouted(s) and s.lower() in lexicon):
                    seen.add(s.lower())
    return frozenset(seen)


def _suffix_tag(word, prev_tag):
    for suffix, tag in _SUFFIX_RULES:
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            return tag
    if (word.endswith("ing") and len(word) > 4) or (word.endswith("ed") and len(word) > 3):
        return "ADJ" if prev_tag == "DET" else "VERB"
    return None


def _initial_tags(tokens, proper_names):
    closed = closed_class()
    lexicon = open_class()
    names = gazetteer()
    tags = []
    unknown = []
    starts = clause_initial(tokens)
    for i, tok in enumerate(tokens):
        s = tok.surface
        low = s.lower().replace("’", "'")
        prev = tags[-1] if tags else None
        is_unknown = False
        if _is_punct(s):
            tag = "PUNCT"
        elif _NUMBER.match(s):
            tag = "NUM"
        elif low in closed:
            tag = closed[low]
            if low == "'s":
                tag = "PART" if prev in ("NOUN", "PROPN") else "AUX"
            elif low == "i" or s == "I":
                tag = "PRON"
        elif _is_capitalized(s) and not (_is_shouted(s) and low in lexicon):
            entry = lexicon.get(low)
            if i not in starts:
                tag = "PROPN"
            elif low in proper_names:
                tag = "PROPN"
            elif low in names and (entry is None or entry.tag in ("NOUN", "PROPN")) and not _next_is_det(tokens, i):
                tag = "PROPN"
            elif low in names and _next_is_capitalized(tokens, i):
                tag = "PROPN"
            elif entry is not None:
                tag = entry.tag
            else:
                tag = _suffix_tag(low, prev)
                is_unknown = tag is None
        elif low in lexicon:
            tag = lexicon[low].tag
        else:
            tag = _suffix_tag(low, prev)
            is_unknown = tag is None
        tags.append(tag)
        unknown.append(is_unknown)
    return tags, unknown


def _next_is_capitalized(tokens, i):
    # "Peter Smith ..." : a known given name followed by another capitalized word
    return i + 1 < len(tokens) and _is_capitalized(tokens[i + 1].surface) and tokens[i + 1].surface != "I"


def _next_is_det(tokens, i):
    if i + 1 >= len(tokens):
        return False
    return closed_class().get(tokens[i + 1].surface.lower()) == "DET"


def _inflected_verb(low, lexicon, prev_tag, next_tag):
    # unknown "-s" form of a verb-capable stem, followed by an object or adjunct
    if not low.endswith("s") or next_tag not in ("DET", "PRON", "ADP", "ADV"):
        return False
    if prev_tag not in ("NOUN", "PROPN", "VERB", "PRON"):
        return False
    for stem in (low[:-1], low[:-2]):
        entry = lexicon.get(stem)
        if entry is not None and (entry.tag == "VERB" or "VERB" in entry.alternatives):
            return True
    return False


def _repair(tokens, tags, unknown):
    lexicon = open_class()
    for i, tok in enumerate(tokens):
        low = tok.surface.lower().replace("’", "'")
        prev_tag = tags[i - 1] if i else None
        prev_low = tokens[i - 1].surface.lower().replace("’", "'") if i else ""
        prev2_low = tokens[i - 2].surface.lower().replace("’", "'") if i > 1 else ""
        verb_slot = (
            (prev_tag == "PRON" and prev_low in SUBJECT_PRONOUNS)
            or prev_low == "to"
            or prev_low in MODALS
            or (prev_low in NEGATORS and prev2_low in DO_FORMS | MODALS)
            or (prev_tag == "ADV" and prev2_low in SUBJECT_PRONOUNS)
        )
        noun_slot = prev_tag in ("DET", "ADJ", "ADP") or prev_low in POSSESSIVES
        if unknown[i]:
            if noun_slot:
                tags[i] = "NOUN"
            elif verb_slot or _inflected_verb(low, lexicon, prev_tag, tags[i + 1] if i + 1 < len(tags) else None):
                tags[i] = "VERB"
            else:
                tags[i] = "NOUN"
            continue
        if low == "like" and (prev_low in BE_FORMS or prev_tag in ("VERB", "PUNCT", "ADV") or i == 0):
            tags[i] = "ADP"
            continue
        entry = lexicon.get(low)
        if entry is None or tags[i] == "PROPN":
            continue
        next_tag = tags[i + 1] if i + 1 < len(tags) else None
        third_person = (
            tags[i] == "NOUN" and low.endswith("s") and "VERB" in entry.alternatives
            and prev_tag in ("NOUN", "PROPN") and not prev_low.endswith("s")
            and next_tag in ("DET", "PRON", "ADP", "ADV", "ADJ", "NUM")
        )
        if third_person or (verb_slot and tags[i] in ("NOUN", "ADJ") and "VERB" in entry.alternatives):
            tags[i] = "VERB"
        elif noun_slot and tags[i] == "VERB" and (entry.penn in ("VB", "VBP") or "NOUN" in entry.alternatives):
            tags[i] = "NOUN"
        elif prev_low in BE_FORMS and tags[i] == "VERB" and entry.penn == "VBN" and i + 1 < len(tokens) \
                and tokens[i + 1].surface.lower() in ("about", "of", "with"):
            tags[i] = "ADJ"
    return tags


def pos_tag(tokens, proper_names=frozenset()):
    """Return ``tokens`` (one sentence) with ``pos`` set on every token.

    ``proper_names`` holds lowercased words known to be capitalized mid-sentence
    elsewhere in the corpus; they make a sentence-initial capitalized word PROPN.
    """
    tokens = list(tokens)
    tags, unknown = _initial_tags(tokens, proper_names)
    tags = _repair(tokens, tags, unknown)
    return [tok.with_tag(tag) for tok, tag in zip(tokens, tags)]
