"""Rule-based sentence boundary detection."""

import re
from dataclasses import dataclass
from typing import Tuple

from .lexicon import abbreviations
from .tokenize import Token, tokenize

# terminal mark(s), optional closing quotes/brackets, then whitespace or end of text
_TERMINAL = re.compile(r"[.!?]+[\"'”’)\]]*(?=\s|$)")
_PARAGRAPH = re.compile(r"\n[ \t\r\f\v]*\n")


@dataclass(frozen=True)
class Sentence:
    tokens: Tuple[Token, ...]
    span: Tuple[int, int]
    text: str

    def __len__(self):
        return len(self.tokens)


def _is_abbreviation(text, end):
    """True when the whitespace-delimited word ending at ``end`` is a listed abbreviation."""
    start = end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    return text[start:end].lower().lstrip("(\"'") in abbreviations()


def _boundaries(text):
    cuts = set()
    for m in _PARAGRAPH.finditer(text):
        cuts.add(m.start())
    for m in _TERMINAL.finditer(text):
        end = m.end()
        rest = text[end:]
        stripped = rest.lstrip().lstrip("\"'“‘([")
        if stripped and not (stripped[0].isupper() or stripped[0].isdigit()):
            continue
        if m.group().startswith(".") and len(m.group().rstrip("\"'”’)]")) == 1 and _is_abbreviation(text, m.start() + 1):
            continue
        cuts.add(end)
    return sorted(cuts)


def sentence_spans(text):
    spans = []
    start = 0
    for cut in _boundaries(text) + [len(text)]:
        seg = text[start:cut]
        lead = len(seg) - len(seg.lstrip())
        trail = len(seg.rstrip())
        if trail > lead:
            spans.append((start + lead, start + trail))
        start = cut
    return spans


def split_sentences(text):
    """Split ``text`` into sentences carrying untagged tokens with absolute spans."""
    out = []
    for lo, hi in sentence_spans(text):
        chunk = text[lo:hi]
        out.append(Sentence(tuple(tokenize(chunk, offset=lo)), (lo, hi), chunk))
    return out
