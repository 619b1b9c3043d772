"""Whitespace-and-punctuation tokenizer with character spans."""

import re
from dataclasses import dataclass, replace
from typing import Optional, Tuple

_CHUNK = re.compile(r"\S+")
_NUMBER = re.compile(r"^\d+(?:[.,]\d+)*$")
_CLITICS = ("'s", "'re", "'ve", "'ll", "'d", "'m")
APOSTROPHES = "'’"


@dataclass(frozen=True)
class Token:
    surface: str
    span: Tuple[int, int]
    pos: Optional[str] = None
    lemma: Optional[str] = None

    def with_tag(self, pos, lemma=None):
        return replace(self, pos=pos, lemma=lemma if lemma is not None else self.lemma)


def _is_word_char(ch):
    return ch.isalnum()


def _split_runs(text, start):
    """Split a punctuation-only string into runs of identical characters."""
    out = []
    i = 0
    while i < len(text):
        j = i + 1
        while j < len(text) and text[j] == text[i]:
            j += 1
        out.append((text[i:j], start + i))
        i = j
    return out


def _split_core(core, start):
    if _NUMBER.match(core):
        return [(core, start)]
    folded = core.lower().replace("’", "'")
    if folded.endswith("n't") and len(core) > 3:
        cut = len(core) - 3
        return [(core[:cut], start), (core[cut:], start + cut)]
    for clitic in _CLITICS:
        if folded.endswith(clitic) and len(core) > len(clitic):
            cut = len(core) - len(clitic)
            return [(core[:cut], start), (core[cut:], start + cut)]
    return [(core, start)]


def tokenize(text, offset=0):
    """Split ``text`` into tokens; spans are offset by ``offset``.

    Leading and trailing punctuation is split off (runs of the same mark stay
    together), contractions are split at the clitic, hyphens and inner
    periods are kept.
    """
    tokens = []
    for m in _CHUNK.finditer(text):
        chunk = m.group()
        base = m.start()
        lo, hi = 0, len(chunk)
        while lo < hi and not _is_word_char(chunk[lo]):
            lo += 1
        if lo == hi:
            pieces = _split_runs(chunk, base)
        else:
            while hi > lo and not _is_word_char(chunk[hi - 1]):
                hi -= 1
            pieces = _split_runs(chunk[:lo], base)
            pieces += _split_core(chunk[lo:hi], base + lo)
            pieces += _split_runs(chunk[hi:], base + hi)
        for surface, start in pieces:
            tokens.append(Token(surface, (offset + start, offset + start + len(surface))))
    return tokens
