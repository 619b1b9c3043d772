"""Loading of the bundled linguistic data files.

Each file is plain text, one entry per line, tab separated, ``#`` comments.
Files are read once per process and cached.
"""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, FrozenSet, Tuple

TAGS = (
    "NOUN", "PROPN", "VERB", "AUX", "ADJ", "ADV", "PRON",
    "DET", "ADP", "CONJ", "NUM", "PUNCT", "PART", "OTHER",
)


def _lines(name):
    text = resources.files(__package__).joinpath("data").joinpath(name).read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        yield line


@dataclass(frozen=True)
class OpenEntry:
    tag: str
    penn: str
    alternatives: Tuple[str, ...]


@lru_cache(maxsize=None)
def closed_class() -> Dict[str, str]:
    return {w: t for w, t in (line.split("\t")[:2] for line in _lines("closed_class.tsv"))}


@lru_cache(maxsize=None)
def open_class() -> Dict[str, OpenEntry]:
    out = {}
    for line in _lines("open_class.tsv"):
        parts = line.split("\t")
        word, tag = parts[0], parts[1]
        penn = parts[2] if len(parts) > 2 else ""
        alts = tuple(a for a in (parts[3].split(",") if len(parts) > 3 else ()) if a)
        out[word] = OpenEntry(tag, penn, alts)
    return out


@lru_cache(maxsize=None)
def lemma_exceptions() -> Dict[Tuple[str, str], str]:
    """Map ``(surface, pos)`` to lemma; pos ``*`` applies to every tag."""
    out = {}
    for line in _lines("lemma_exceptions.tsv"):
        surface, lemma, pos = line.split("\t")[:3]
        out[(surface, pos)] = lemma
    return out


@lru_cache(maxsize=None)
def stopwords() -> FrozenSet[str]:
    return frozenset(line.strip() for line in _lines("stopwords.txt"))


@lru_cache(maxsize=None)
def gazetteer() -> FrozenSet[str]:
    return frozenset(line.strip() for line in _lines("gazetteer.txt"))


@lru_cache(maxsize=None)
def abbreviations() -> FrozenSet[str]:
    return frozenset(line.strip() for line in _lines("abbreviations.txt"))


@lru_cache(maxsize=None)
def sentiment_lexicon() -> Dict[str, float]:
    out = {}
    for line in _lines("sentiment_lexicon.tsv"):
        token, valence = line.split("\t")[:2]
        value = float(valence)
        if not -4.0 <= value <= 4.0:
            raise ValueError(f"valence out of range for {token!r}: {value}")
        out[token] = value
    return out


def is_stopword(lemma):
    return lemma.lower() in stopwords()
