"""Grounded-theory coding support and computational triangulation.

Library modules:

* :mod:`gtminer.corpus` - transcript and CSV ingestion, filtering
* :mod:`gtminer.nlp` - tokenizer, sentence splitter, tagger, lemmatizer, entities
* :mod:`gtminer.coding` - categories, coding dictionary, triads, summaries
* :mod:`gtminer.topics` - LDA by collapsed Gibbs sampling
* :mod:`gtminer.sentiment` - rule-based sentiment scoring
* :mod:`gtminer.ml` - standardization, oversampling, MLP, SVM, k-means, KNN, PCA
* :mod:`gtminer.cli` - the ``gtminer`` command
"""

__version__ = "0.1.0"
