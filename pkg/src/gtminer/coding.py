"""Grounded-theory coding aids: categories, coding dictionary, triads, summaries.

Open coding categories are repeated verb lemmas. The coding dictionary relates
each category to the nouns that share a sentence with it (properties) and to the
adjectives and adverbs near those nouns and verbs (dimensions).
"""

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .corpus import Corpus, Document
from .nlp import annotate_corpus, extract_entities, is_stopword
from .nlp.pipeline import TaggedCorpus, TaggedDocument

NOMINAL = ("NOUN", "PROPN")
WINDOW = 2


@dataclass(frozen=True)
class Property:
    noun_lemma: str
    cooccurrence: int
    dimensions: Tuple[Tuple[str, int], ...] = ()


@dataclass(frozen=True)
class Category:
    verb_lemma: str
    count: int
    properties: Tuple[Property, ...] = ()


@dataclass(frozen=True)
class CodingDictionary:
    categories: Tuple[Category, ...]
    corpus_summary_stats: Tuple[int, int, int]  # documents, sentences, word tokens


@dataclass(frozen=True)
class Triad:
    subject: str
    verb: str
    object: Optional[str]
    sentence_span: Tuple[int, int]


def as_tagged(corpus):
    """Accept a Corpus, a single Document or an already tagged corpus."""
    if isinstance(corpus, TaggedCorpus):
        return corpus
    if isinstance(corpus, TaggedDocument):
        return TaggedCorpus((corpus,))
    if isinstance(corpus, Document):
        corpus = Corpus((corpus,))
    return annotate_corpus(corpus)


def _is_category_verb(tok):
    return tok.pos == "VERB" and not is_stopword(tok.lemma)


def _ranked(counter, n=None):
    items = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    return items if n is None else items[:n]


def verb_lemmas(document):
    """Category-eligible verb lemmas of one document (used by category filters)."""
    doc = as_tagged(document).documents[0]
    return {t.lemma for t in doc.tokens if _is_category_verb(t)}


def top_categories(corpus, n=10):
    """Most frequent content-verb lemmas as ``[(lemma, count), ...]``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    tagged = as_tagged(corpus)
    counts = Counter(t.lemma for s in tagged.sentences for t in s.tokens if _is_category_verb(t))
    return _ranked(counts, n)


def _dimension_positions(tokens, centers, tag):
    found = set()
    for c in centers:
        for j in range(max(0, c - WINDOW), min(len(tokens), c + WINDOW + 1)):
            if j != c and tokens[j].pos == tag and not is_stopword(tokens[j].lemma):
                found.add(j)
    return found


def build_coding_dictionary(corpus, n_categories=10, n_properties=5, n_dimensions=5):
    """Category -> property -> dimension dictionary for axial coding.

    * properties: NOUN/PROPN tokens in sentences that contain the category
      verb; each such token counts once.
    * dimensions of a property: ADJ tokens within two positions of the
      property's occurrences, plus ADV tokens within two positions of the
      category verb in the same sentences. Each token counts once per
      sentence; stopwords are skipped. Ties keep first-seen order.
    """
    for value in (n_categories, n_properties, n_dimensions):
        if value < 1:
            raise ValueError("dictionary sizes must be >= 1")
    tagged = as_tagged(corpus)
    sentences = tagged.sentences
    categories = []
    for verb, count in top_categories(tagged, n_categories):
        noun_counts = Counter()
        dim_counts = {}
        first_seen = {}
        order = 0
        for sent in sentences:
            toks = sent.tokens
            verb_at = [i for i, t in enumerate(toks) if _is_category_verb(t) and t.lemma == verb]
            if not verb_at:
                continue
            nouns = {}
            for i, t in enumerate(toks):
                if t.pos in NOMINAL:
                    nouns.setdefault(t.lemma, []).append(i)
            adverbs = _dimension_positions(toks, verb_at, "ADV")
            for noun, positions in nouns.items():
                noun_counts[noun] += len(positions)
                dims = dim_counts.setdefault(noun, Counter())
                hits = _dimension_positions(toks, positions, "ADJ") | adverbs
                for j in sorted(hits):
                    lemma = toks[j].lemma
                    dims[lemma] += 1
                    if (noun, lemma) not in first_seen:
                        first_seen[(noun, lemma)] = order
                        order += 1
        properties = []
        for noun, co in _ranked(noun_counts, n_properties):
            dims = sorted(dim_counts[noun].items(), key=lambda kv: (-kv[1], first_seen[(noun, kv[0])]))
            properties.append(Property(noun, co, tuple(dims[:n_dimensions])))
        categories.append(Category(verb, count, tuple(properties)))
    stats = (
        len(tagged.documents),
        len(sentences),
        sum(1 for s in sentences for t in s.tokens if t.pos != "PUNCT"),
    )
    return CodingDictionary(tuple(categories), stats)


def extract_svo_triads(sentence):
    """Subject-verb-object triads by nearest-neighbour search around each verb.

    The subject is the closest NOUN/PROPN/PRON before the verb and the object
    the closest NOUN/PROPN after it, neither crossing another verb. Verbs
    without a subject yield nothing.
    """
    toks = sentence.tokens
    triads = []
    for j, tok in enumerate(toks):
        if tok.pos != "VERB":
            continue
        subject = None
        for i in range(j - 1, -1, -1):
            if toks[i].pos == "VERB":
                break
            if toks[i].pos in NOMINAL + ("PRON",):
                subject = toks[i].lemma
                break
        if subject is None:
            continue
        obj = None
        for k in range(j + 1, len(toks)):
            if toks[k].pos == "VERB":
                break
            if toks[k].pos in NOMINAL:
                obj = toks[k].lemma
                break
        triads.append(Triad(subject, tok.lemma, obj, sentence.span))
    return triads


def _content_lemmas(sentence):
    return [t.lemma for t in sentence.tokens if t.pos != "PUNCT" and not is_stopword(t.lemma)]


def summarize(target, n_sentences=3, corpus=None):
    """Extractive summary: the ``n_sentences`` best sentences of ``target``.

    A sentence scores the summed frequency of its content lemmas divided by
    its word count; frequencies are taken over ``corpus`` (default: ``target``).
    The selection is returned in document order.
    """
    if n_sentences < 1:
        raise ValueError("n_sentences must be >= 1")
    tagged = as_tagged(target)
    reference = tagged if corpus is None else as_tagged(corpus)
    freq = Counter(l for s in reference.sentences for l in _content_lemmas(s))
    sentences = tagged.sentences
    scored = []
    for idx, sent in enumerate(sentences):
        words = sum(1 for t in sent.tokens if t.pos != "PUNCT")
        score = sum(freq[l] for l in _content_lemmas(sent)) / words if words else 0.0
        scored.append((-score, idx))
    keep = sorted(idx for _, idx in sorted(scored)[:n_sentences])
    return [sentences[i] for i in keep]


def corpus_concepts(corpus, n=10):
    """Most frequent named entities as ``[(lowercased text, count), ...]``."""
    tagged = as_tagged(corpus)
    counts = Counter(
        e.text.lower()
        for s in tagged.sentences
        for e in extract_entities(s, tagged.proper_names)
    )
    return _ranked(counts, n)
