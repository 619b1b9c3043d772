"""Plain-text report templates.

Every renderer returns a list of lines; :func:`render` joins sections with a
blank line and ends the report with a newline. No timestamps or
machine-dependent content.
"""

ARROW = "→"


def _num(x, places=4):
    text = f"{x:.{places}f}"
    return "0." + "0" * places if text == "-0." + "0" * places else text


def _signed(x, places=4):
    text = _num(x, places)
    return text if text.startswith("-") else "+" + text


def render(sections):
    blocks = ["\n".join(lines) for lines in sections if lines]
    return "\n\n".join(blocks) + "\n"


def categories(items):
    lines = ["Categories (open coding)"]
    if not items:
        return lines + ["No categories found."]
    return lines + [f"{rank}. {lemma} ({count})" for rank, (lemma, count) in enumerate(items, 1)]


def coding_dictionary(cd):
    docs, sents, toks = cd.corpus_summary_stats
    lines = [f"Coding dictionary (axial coding): {docs} documents, {sents} sentences, {toks} tokens"]
    if not cd.categories:
        return lines + ["No categories found."]
    for rank, cat in enumerate(cd.categories, 1):
        lines.append(f"{rank}. {cat.verb_lemma} ({cat.count})")
        if not cat.properties:
            lines.append("   (no properties)")
        for prop in cat.properties:
            dims = ", ".join(f"{lemma} ({n})" for lemma, n in prop.dimensions) or "-"
            lines.append(f"   - {prop.noun_lemma} ({prop.cooccurrence}): {dims}")
    return lines


def topics(model, terms_per_topic):
    lines = ["Topics"]
    for k in range(model.K):
        terms = ", ".join(f"{t} ({_num(p)})" for t, p in terms_per_topic[k])
        lines.append(f"Topic {k}: {terms}")
    return lines


def assignments(rows):
    return ["Topic assignments"] + [f"{title} {ARROW} topic {k} ({_num(v)})" for title, k, v in rows]


def _score(s):
    return f"compound={_signed(s.compound)} pos={_num(s.pos)} neg={_num(s.neg)} neu={_num(s.neu)}"


def sentiment(blocks):
    """``blocks`` is ``[(title, score, label), ...]``."""
    lines = ["Sentiment"]
    for title, score, lab in blocks:
        lines.append(f"{title}: {lab} ({_score(score)})")
    return lines


def sentence_sentiment(blocks):
    """``blocks`` is ``[(title, [(sentence, score, label), ...]), ...]``."""
    lines = ["Sentence sentiment"]
    for title, rows in blocks:
        lines.append(f"{title}:")
        if not rows:
            lines.append("  (no sentences)")
        for text, score, lab in rows:
            flat = " ".join(text.split())
            lines.append(f"  [{lab}] {_signed(score.compound)} {flat}")
    return lines


def summary(sentences):
    lines = ["Summary"]
    if not sentences:
        return lines + ["(empty corpus)"]
    return lines + [" ".join(s.text.split()) for s in sentences]


def concepts(items):
    lines = ["Concepts (named entities)"]
    if not items:
        return lines + ["No concepts found."]
    return lines + [f"{rank}. {text} ({count})" for rank, (text, count) in enumerate(items, 1)]


def confusion(cm):
    width = max(11, len(str(max(cm.tp, cm.fp, cm.fn, cm.tn))))
    head = " " * 10 + f"{'predicted 0':>{width}}  {'predicted 1':>{width}}"
    return [
        head,
        f"{'actual 0':<10}{cm.tn:>{width}}  {cm.fp:>{width}}",
        f"{'actual 1':<10}{cm.fn:>{width}}  {cm.tp:>{width}}",
    ]


def nnet(model, epochs, test_accuracy, cm, n_train, n_test):
    lines = [f"Neural network: {model.layer_sizes[0]}-{model.layer_sizes[1]}-1, "
             f"{n_train} training / {n_test} test records"]
    for e, (acc, loss) in enumerate(model.curve, 1):
        lines.append(f"Epoch {e}/{epochs}: accuracy={_num(acc)} loss={_num(loss)}")
    lines.append(f"Test accuracy: {_num(test_accuracy)}")
    return lines + ["Confusion matrix:"] + confusion(cm)


def svm(model, feature_names, accuracy, cm, n_train, n_test):
    lines = [f"Linear SVM: {n_train} training / {n_test} test records"]
    lines.append("Weights: " + ", ".join(f"{name}={_signed(w)}" for name, w in zip(feature_names, model.weights)) +
                 f", bias={_signed(model.bias)}")
    lines.append(f"Test accuracy: {_num(accuracy)}")
    return lines + ["Confusion matrix:"] + confusion(cm)


def kmeans(result, ids, k):
    sizes = [int((result.labels == j).sum()) for j in range(k)]
    lines = [f"K-means: {k} clusters, inertia={_num(result.inertia)}, iterations={result.iterations_run}"]
    lines.append("Cluster sizes: " + ", ".join(f"{j}={n}" for j, n in enumerate(sizes)))
    lines += [f"{ident} {ARROW} {int(label)}" for ident, label in zip(ids, result.labels)]
    return lines


def knn(record_id, rows, ids):
    lines = [f"Nearest neighbours of record {record_id}"]
    return lines + [f"{rank}. {ids[i]} ({_num(d)})" for rank, (i, d) in enumerate(rows, 1)]


def pca(result, feature_names, ids):
    n = result.components.shape[0]
    lines = [f"PCA: {n} factors"]
    lines.append("Loadings:")
    for j in range(n):
        loads = ", ".join(f"{name}={_signed(v)}" for name, v in zip(feature_names, result.components[j]))
        lines.append(f"PC{j + 1}: {loads}")
    ratio = result.explained_ratio
    lines.append("Explained variance: " + ", ".join(
        f"PC{j + 1}={_num(result.explained_variance[j])} ({_num(100 * ratio[j], 2)}%)" for j in range(n)))
    lines.append("Scores:")
    for ident, row in zip(ids, result.scores):
        lines.append(f"{ident}: " + ", ".join(f"PC{j + 1}={_signed(v)}" for j, v in enumerate(row)))
    return lines
