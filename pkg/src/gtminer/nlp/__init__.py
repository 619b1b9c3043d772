"""Linguistic primitives driven by bundled lexicons."""

from .entities import Entity, extract_entities
from .lemmatizer import lemmatize
from .lexicon import TAGS, is_stopword
from .pipeline import TaggedCorpus, TaggedDocument, annotate_corpus, annotate_text, tag_sentence
from .sentences import Sentence, split_sentences
from .tagger import pos_tag, proper_name_evidence
from .tokenize import Token, tokenize

__all__ = [
    "TAGS", "Entity", "Sentence", "TaggedCorpus", "TaggedDocument", "Token",
    "annotate_corpus", "annotate_text", "extract_entities", "is_stopword", "lemmatize",
    "pos_tag", "proper_name_evidence", "split_sentences", "tag_sentence", "tokenize",
]
