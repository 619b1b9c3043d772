"""Annotate corpora: sentence split, tag, lemmatize."""

from dataclasses import dataclass
from typing import Tuple

from .lemmatizer import lemmatize
from .sentences import Sentence, split_sentences
from .tagger import pos_tag, proper_name_evidence


@dataclass(frozen=True)
class TaggedDocument:
    title: str
    text: str
    sentences: Tuple[Sentence, ...]

    @property
    def tokens(self):
        return [t for s in self.sentences for t in s.tokens]


@dataclass(frozen=True)
class TaggedCorpus:
    documents: Tuple[TaggedDocument, ...]
    proper_names: frozenset = frozenset()

    def __iter__(self):
        return iter(self.documents)

    def __len__(self):
        return len(self.documents)

    @property
    def sentences(self):
        return [s for d in self.documents for s in d.sentences]


def tag_sentence(sentence, proper_names=frozenset()):
    tagged = pos_tag(sentence.tokens, proper_names)
    tokens = tuple(t.with_tag(t.pos, lemmatize(t.surface, t.pos)) for t in tagged)
    return Sentence(tokens, sentence.span, sentence.text)


def annotate_text(text, proper_names=None):
    """Split, tag and lemmatize one text. Name evidence defaults to the text itself."""
    raw = split_sentences(text)
    if proper_names is None:
        proper_names = proper_name_evidence(s.tokens for s in raw)
    return [tag_sentence(s, proper_names) for s in raw]


def annotate_corpus(corpus):
    """Tag every document of a :class:`~gtminer.corpus.Corpus`.

    Capitalization evidence for sentence-initial names is pooled over the
    whole corpus before tagging.
    """
    raw = [(doc, split_sentences(doc.text)) for doc in corpus.documents]
    names = proper_name_evidence(s.tokens for _, sents in raw for s in sents)
    docs = tuple(
        TaggedDocument(doc.title, doc.text, tuple(tag_sentence(s, names) for s in sents))
        for doc, sents in raw
    )
    return TaggedCorpus(docs, names)
