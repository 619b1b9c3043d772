"""LDA topic modelling by collapsed Gibbs sampling."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .coding import as_tagged
from .errors import ParameterError
from .nlp import is_stopword
from .prng import Xoshiro256

EXCLUDED_TAGS = ("PUNCT", "NUM")


@dataclass(frozen=True)
class DocTermMatrix:
    vocabulary: Tuple[str, ...]
    doc_term_counts: np.ndarray  # docs x vocabulary, int64
    doc_titles: Tuple[str, ...]

    @property
    def shape(self):
        return self.doc_term_counts.shape


@dataclass(frozen=True)
class TopicModel:
    K: int
    phi: np.ndarray  # K x vocabulary
    theta: np.ndarray  # docs x K
    assignments: Tuple[Tuple[int, ...], ...]  # per document, tokens in vocabulary order
    vocabulary: Tuple[str, ...]
    doc_titles: Tuple[str, ...]
    seed: int
    iterations: int
    alpha: float
    beta: float


def build_doc_term_matrix(corpus, min_doc_freq=2):
    """Raw lemma counts per document over a pruned vocabulary.

    Lemmas must not be stopwords, punctuation or numbers, and must occur in at
    least ``min_doc_freq`` documents. If that leaves nothing for a non-empty
    corpus the threshold drops to 1.
    """
    tagged = as_tagged(corpus)
    per_doc = []
    for doc in tagged.documents:
        lemmas = [
            t.lemma for t in doc.tokens
            if t.pos not in EXCLUDED_TAGS and not is_stopword(t.lemma) and any(c.isalnum() for c in t.lemma)
        ]
        per_doc.append(lemmas)
    doc_freq = {}
    for lemmas in per_doc:
        for lemma in set(lemmas):
            doc_freq[lemma] = doc_freq.get(lemma, 0) + 1
    vocab = sorted(l for l, df in doc_freq.items() if df >= min_doc_freq)
    if not vocab and per_doc:
        vocab = sorted(doc_freq)
    index = {l: i for i, l in enumerate(vocab)}
    counts = np.zeros((len(per_doc), len(vocab)), dtype=np.int64)
    for d, lemmas in enumerate(per_doc):
        for lemma in lemmas:
            if lemma in index:
                counts[d, index[lemma]] += 1
    return DocTermMatrix(tuple(vocab), counts, tuple(d.title for d in tagged.documents))


def fit_lda(dtm, K, seed=42, iterations=500, alpha=None, beta=0.01, on_sweep=None):
    """Fit LDA to ``dtm`` with a collapsed Gibbs sampler.

    Every token starts in a uniformly drawn topic; each sweep resamples every
    token from ``(n_dk + alpha) * (n_kv + beta) / (n_k + V * beta)`` with the
    token's own assignment removed. ``phi`` and ``theta`` are read off the
    final state. ``alpha`` defaults to ``50 / K``.

    ``on_sweep(sweep, n_dk, n_kv, n_k)`` is called after every sweep with the
    live count tables (lists of lists); it must not modify them.
    """
    counts = np.asarray(dtm.doc_term_counts)
    if counts.ndim != 2 or counts.shape[0] == 0 or counts.shape[1] == 0 or counts.sum() == 0:
        raise ParameterError("topic model needs at least one document and one vocabulary term")
    n_docs, V = counts.shape
    if K < 1:
        raise ParameterError("number of topics must be >= 1")
    if K > V:
        raise ParameterError(f"number of topics ({K}) exceeds vocabulary size ({V})")
    if iterations < 0:
        raise ParameterError("iterations must be >= 0")
    alpha = 50.0 / K if alpha is None else float(alpha)
    beta = float(beta)
    rng = Xoshiro256(seed)

    docs = []
    for d in range(n_docs):
        words = []
        for v in range(V):
            words.extend([v] * int(counts[d, v]))
        docs.append(words)

    n_dk = [[0] * K for _ in range(n_docs)]
    n_kv = [[0] * V for _ in range(K)]
    n_k = [0] * K
    z = []
    for d, words in enumerate(docs):
        zd = []
        for v in words:
            k = rng.randbelow(K)
            zd.append(k)
            n_dk[d][k] += 1
            n_kv[k][v] += 1
            n_k[k] += 1
        z.append(zd)

    v_beta = V * beta
    topics = range(K)
    weights = [0.0] * K
    for sweep in range(iterations):
        for d, words in enumerate(docs):
            zd = z[d]
            ndk = n_dk[d]
            for i, v in enumerate(words):
                k = zd[i]
                ndk[k] -= 1
                n_kv[k][v] -= 1
                n_k[k] -= 1
                total = 0.0
                for t in topics:
                    total += (ndk[t] + alpha) * (n_kv[t][v] + beta) / (n_k[t] + v_beta)
                    weights[t] = total
                u = rng.random() * total
                k = K - 1
                for t in topics:
                    if u < weights[t]:
                        k = t
                        break
                zd[i] = k
                ndk[k] += 1
                n_kv[k][v] += 1
                n_k[k] += 1
        if on_sweep is not None:
            on_sweep(sweep, n_dk, n_kv, n_k)

    nkv = np.array(n_kv, dtype=float)
    phi = (nkv + beta) / (np.array(n_k, dtype=float)[:, None] + v_beta)
    ndk = np.array(n_dk, dtype=float)
    lengths = np.array([len(w) for w in docs], dtype=float)
    theta = (ndk + alpha) / (lengths[:, None] + K * alpha)
    return TopicModel(
        K=K, phi=phi, theta=theta,
        assignments=tuple(tuple(zd) for zd in z),
        vocabulary=tuple(dtm.vocabulary), doc_titles=tuple(dtm.doc_titles),
        seed=seed, iterations=iterations, alpha=alpha, beta=beta,
    )


def top_terms(model, topic_index, m=10):
    """``m`` most probable terms of a topic as ``[(lemma, probability), ...]``."""
    if not 0 <= topic_index < model.K:
        raise ParameterError(f"topic index {topic_index} out of range 0..{model.K - 1}")
    if m < 1:
        raise ParameterError("m must be >= 1")
    row = model.phi[topic_index]
    order = sorted(range(len(row)), key=lambda v: (-row[v], model.vocabulary[v]))
    return [(model.vocabulary[v], float(row[v])) for v in order[:m]]


def assign_documents(model, dtm=None):
    """Dominant topic per document: ``[(title, topic, theta), ...]``."""
    titles = model.doc_titles if dtm is None else dtm.doc_titles
    out = []
    for title, row in zip(titles, model.theta):
        k = int(np.argmax(row))  # first maximum wins ties
        out.append((title, k, float(row[k])))
    return out
