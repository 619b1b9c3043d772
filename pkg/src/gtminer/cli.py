"""Command-line entry point: ``gtminer``.

Text actions run over break-tagged transcripts given with ``-i``; numeric
actions run over a CSV given with ``--csv``. One modality per invocation.
"""

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from . import coding, render
from . import sentiment as senti
from . import topics as topic_model
from .corpus import FilterSpec, filter_documents, load_corpus, load_numeric_csv, parse_filters, select_columns
from .errors import GTMinerError, InputError, ParameterError, UsageError
from .ml import (SplitSpec, evaluate_classifier, find_record, fit_linear_svm, fit_mlp, kmeans,
                 knn_neighbors, oversample, pca, train_test_split)

TEXT_ACTIONS = ("cat", "codedict", "topics", "assign", "sentiment", "sentence", "summary", "concepts")
NUMERIC_ACTIONS = ("nnet", "svm", "kmeans", "knn", "pca")
ACTIONS = TEXT_ACTIONS + NUMERIC_ACTIONS
# default -n per text action; numeric actions that take -n require it explicitly
DEFAULT_N = {"cat": 10, "codedict": 10, "concepts": 10, "summary": 3, "topics": 3, "assign": 3}
REQUIRES_N = ("nnet", "kmeans", "knn", "pca")
SEED_ENV = "GTMINER_SEED"

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_PARAMETER = 0, 2, 3, 4


@dataclass
class CliConfig:
    inputs: List[str] = field(default_factory=list)
    output: Optional[str] = None
    csv: Optional[str] = None
    n: Optional[int] = None
    rec: Optional[str] = None
    titles: List[str] = field(default_factory=list)
    filters: List[str] = field(default_factory=list)
    actions: List[str] = field(default_factory=list)
    oversample: bool = False
    seed: int = 42
    lda_iterations: int = 500
    lda_alpha: Optional[float] = None
    lda_beta: float = 0.01
    min_doc_freq: int = 2
    learning_rate: float = 0.1
    svm_epochs: int = 1000
    svm_lambda: float = 1e-3
    test_fraction: float = 0.2

    def n_for(self, action):
        return self.n if self.n is not None else DEFAULT_N.get(action)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(
        prog="gtminer",
        description="Grounded-theory coding support for transcripts and ML triangulation for CSV data.",
        add_help=True,
    )
    io = p.add_argument_group("input/output")
    io.add_argument("-i", "--input", dest="inputs", action="append", default=[], metavar="PATH",
                    help="break-tagged transcript file (repeatable)")
    io.add_argument("-o", "--output", metavar="PATH", help="write the report to PATH instead of stdout")
    io.add_argument("--csv", metavar="PATH", help="numeric CSV: id first, outcome last")
    sel = p.add_argument_group("selection")
    sel.add_argument("-n", type=int, metavar="N",
                     help="top-N for text actions; epochs (nnet), clusters (kmeans), factors (pca), neighbours (knn)")
    sel.add_argument("-r", "--rec", metavar="ID", help="record for --knn (identifier, else 0-based row)")
    sel.add_argument("-t", "--titles", action="append", default=[], metavar="TITLE",
                     help="document titles (text) or CSV columns (numeric), repeatable")
    sel.add_argument("-f", "--filters", action="append", default=[], metavar="FILTER",
                     help="pos, neg, neu or category:<lemma> (repeatable, combined with AND)")
    act = p.add_argument_group("actions")
    helps = {
        "cat": "top verb categories (open coding)",
        "codedict": "coding dictionary (axial coding)",
        "topics": "LDA topics",
        "assign": "assign documents to topics",
        "sentiment": "document sentiment",
        "sentence": "sentence-level sentiment",
        "summary": "extractive summary",
        "concepts": "frequent named entities",
        "nnet": "neural network; -n epochs",
        "svm": "linear SVM with confusion matrix",
        "kmeans": "k-means; -n clusters",
        "knn": "nearest rows to -r; -n neighbours",
        "pca": "principal components; -n factors",
    }
    for name in ACTIONS:
        act.add_argument(f"--{name}", action="store_true", help=helps[name])
    tune = p.add_argument_group("tuning")
    tune.add_argument("--oversample", action="store_true", help="balance outcome classes in the training split")
    tune.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV} or 42)")
    tune.add_argument("--lda-iterations", type=int, default=500)
    tune.add_argument("--lda-alpha", type=float, default=None, help="default 50/K")
    tune.add_argument("--lda-beta", type=float, default=0.01)
    tune.add_argument("--min-doc-freq", type=int, default=2)
    tune.add_argument("--learning-rate", type=float, default=0.1)
    tune.add_argument("--svm-epochs", type=int, default=1000)
    tune.add_argument("--svm-lambda", type=float, default=1e-3)
    tune.add_argument("--test-fraction", type=float, default=0.2)
    return p


def _normalize_argv(argv):
    # tolerate a dangling "-i" directly followed by "--csv", as in "gtminer -i --csv data.csv"
    out = []
    for i, arg in enumerate(argv):
        if arg in ("-i", "--input") and i + 1 < len(argv) and argv[i + 1] == "--csv":
            continue
        out.append(arg)
    return out


def parse_args(argv, environ=None):
    """Turn an argument vector into a validated :class:`CliConfig`."""
    environ = os.environ if environ is None else environ
    argv = _normalize_argv(list(argv))
    if not argv:
        raise UsageError("no action given")
    ns = build_parser().parse_args(argv)
    seed = ns.seed
    if seed is None:
        env = environ.get(SEED_ENV)
        try:
            seed = int(env) if env not in (None, "") else 42
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    cfg = CliConfig(
        inputs=ns.inputs, output=ns.output, csv=ns.csv, n=ns.n, rec=ns.rec,
        titles=ns.titles, filters=ns.filters,
        actions=[a for a in ACTIONS if getattr(ns, a)],
        oversample=ns.oversample, seed=seed,
        lda_iterations=ns.lda_iterations, lda_alpha=ns.lda_alpha, lda_beta=ns.lda_beta,
        min_doc_freq=ns.min_doc_freq, learning_rate=ns.learning_rate,
        svm_epochs=ns.svm_epochs, svm_lambda=ns.svm_lambda, test_fraction=ns.test_fraction,
    )
    _validate(cfg)
    return cfg


def _validate(cfg):
    if not cfg.actions:
        raise UsageError("no action given")
    text = [a for a in cfg.actions if a in TEXT_ACTIONS]
    numeric = [a for a in cfg.actions if a in NUMERIC_ACTIONS]
    if text and numeric:
        raise UsageError("text and numeric actions cannot be combined in one invocation")
    if text and not cfg.inputs:
        raise UsageError(f"--{text[0]} needs at least one transcript (-i PATH)")
    if numeric and not cfg.csv:
        raise UsageError(f"--{numeric[0]} needs a CSV file (--csv PATH)")
    if numeric and cfg.filters:
        raise UsageError("-f/--filters applies to text actions only")
    if cfg.n is not None and cfg.n < 1:
        raise UsageError("-n must be a positive integer")
    if cfg.n is None:
        missing = [a for a in numeric if a in REQUIRES_N]
        if missing:
            raise UsageError(f"--{missing[0]} requires -n")
        defaults = {DEFAULT_N[a] for a in text if a in DEFAULT_N}
        if len(defaults) > 1:
            users = ", ".join(f"--{a}" for a in text if a in DEFAULT_N)
            raise UsageError(f"{users} use different default -n values; pass -n explicitly")
    if "knn" in numeric and cfg.rec is None:
        raise UsageError("--knn requires --rec/-r")
    if cfg.filters:
        parse_filters(cfg.filters)


# -- orchestration -------------------------------------------------------------


def _text_report(cfg):
    corpus = load_corpus(cfg.inputs)
    known = set(corpus.titles)
    unknown = [t for t in cfg.titles if t not in known]
    if unknown:
        raise UsageError(f"unknown title(s): {', '.join(unknown)}; available: {', '.join(corpus.titles)}")
    spec = parse_filters(cfg.filters, cfg.titles)
    if not spec.is_empty():
        needs_tags = spec.category is not None
        tagged_all = coding.as_tagged(corpus) if needs_tags else None
        by_title = {d.title: d for d in tagged_all.documents} if needs_tags else {}
        corpus = filter_documents(
            corpus, spec,
            sentiment_scorer=lambda d: senti.label(senti.score_document(d)),
            category_index=lambda d: coding.verb_lemmas(by_title[d.title]),
        )
    tagged = coding.as_tagged(corpus)
    sections = []
    for action in cfg.actions:
        n = cfg.n_for(action)
        if action == "cat":
            sections.append(render.categories(coding.top_categories(tagged, n)))
        elif action == "codedict":
            sections.append(render.coding_dictionary(coding.build_coding_dictionary(tagged, n_categories=n)))
        elif action in ("topics", "assign"):
            sections.append(_topics(cfg, tagged, action, n))
        elif action == "sentiment":
            blocks = []
            for doc in corpus.documents:
                score = senti.score_document(doc)
                blocks.append((doc.title, score, senti.label(score)))
            sections.append(render.sentiment(blocks))
        elif action == "sentence":
            blocks = []
            for doc in corpus.documents:
                rows = [(text, s, senti.label(s)) for text, s in senti.score_sentences(doc)]
                blocks.append((doc.title, rows))
            sections.append(render.sentence_sentiment(blocks))
        elif action == "summary":
            sections.append(render.summary(coding.summarize(tagged, n) if len(tagged) else []))
        elif action == "concepts":
            sections.append(render.concepts(coding.corpus_concepts(tagged, n)))
    return sections


def _topics(cfg, tagged, action, n):
    cache = cfg.__dict__.setdefault("_lda_cache", {})
    if n not in cache:
        dtm = topic_model.build_doc_term_matrix(tagged, cfg.min_doc_freq)
        model = topic_model.fit_lda(
            dtm, n, seed=cfg.seed, iterations=cfg.lda_iterations, alpha=cfg.lda_alpha, beta=cfg.lda_beta,
        )
        cache[n] = (dtm, model)
    dtm, model = cache[n]
    if action == "topics":
        terms = [topic_model.top_terms(model, k, 10) for k in range(model.K)]
        return render.topics(model, terms)
    return render.assignments(topic_model.assign_documents(model, dtm))


def _numeric_report(cfg):
    table = load_numeric_csv(cfg.csv)
    if cfg.titles:
        table = select_columns(table, cfg.titles)
    if table.n_rows == 0:
        raise ParameterError("the CSV has no data rows")
    sections = []
    for action in cfg.actions:
        if action in ("nnet", "svm"):
            train, test = train_test_split(table, SplitSpec(cfg.test_fraction, cfg.seed))
            if cfg.oversample:
                train = oversample(train, cfg.seed)
            if action == "nnet":
                model = fit_mlp(train, cfg.n, seed=cfg.seed, learning_rate=cfg.learning_rate)
                acc, cm = evaluate_classifier(model, test)
                sections.append(render.nnet(model, cfg.n, acc, cm, train.n_rows, test.n_rows))
            else:
                model = fit_linear_svm(train, epochs=cfg.svm_epochs, lam=cfg.svm_lambda, seed=cfg.seed)
                acc, cm = evaluate_classifier(model, test)
                sections.append(render.svm(model, table.feature_names, acc, cm, train.n_rows, test.n_rows))
        elif action == "kmeans":
            result = kmeans(table.feature_matrix(), cfg.n, seed=cfg.seed)
            sections.append(render.kmeans(result, table.ids, cfg.n))
        elif action == "knn":
            r = find_record(table, cfg.rec)
            sections.append(render.knn(table.ids[r], knn_neighbors(table, r, cfg.n), table.ids))
        elif action == "pca":
            sections.append(render.pca(pca(table.feature_matrix(), cfg.n), table.feature_names, table.ids))
    return sections


def run(cfg, stdout=None):
    """Execute ``cfg``; returns ``(exit_code, report_text)``."""
    if any(a in TEXT_ACTIONS for a in cfg.actions):
        sections = _text_report(cfg)
    else:
        sections = _numeric_report(cfg)
    text = render.render(sections)
    if cfg.output:
        try:
            with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {cfg.output}: {exc}") from exc
    else:
        out = sys.stdout if stdout is None else stdout
        out.write(text)
        out.flush()
    return EXIT_OK, text


def exit_code_for(exc):
    if isinstance(exc, UsageError):
        return EXIT_USAGE
    if isinstance(exc, InputError):
        return EXIT_INPUT
    return EXIT_PARAMETER


def main(argv=None, stdout=None, stderr=None):
    argv = sys.argv[1:] if argv is None else argv
    stderr = sys.stderr if stderr is None else stderr
    try:
        cfg = parse_args(argv)
        code, _ = run(cfg, stdout=stdout)
        return code
    except UsageError as exc:
        parser = build_parser()
        stderr.write(parser.format_help() if not argv else parser.format_usage())
        stderr.write(f"gtminer: error: {exc}\n")
        return EXIT_USAGE
    except GTMinerError as exc:
        stderr.write(f"gtminer: error: {exc}\n")
        return exit_code_for(exc)


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
