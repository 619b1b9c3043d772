"""Transcript and numeric table ingestion.

Transcripts are plain UTF-8 text where a ``<break>TITLE</break>`` tag closes the
segment of text that precedes it. Segments sharing a title are merged into one
document. Numeric data is a comma separated table: identifier first, dependent
variable last, numeric features in between.
"""

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, FrozenSet, Optional, Sequence, Tuple

from .errors import InputError, ParseError, SchemaError, UsageError, ValidationError

BREAK_TAG = re.compile(r"<break>([^<>]*)</break>")
UNTAGGED = "UNTAGGED"
SENTIMENT_LABELS = ("pos", "neg", "neu")


@dataclass(frozen=True)
class Document:
    title: str
    text: str
    source_order: int


@dataclass(frozen=True)
class Corpus:
    documents: Tuple[Document, ...] = ()

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    @property
    def titles(self):
        return [d.title for d in self.documents]

    def get(self, title):
        for doc in self.documents:
            if doc.title == title:
                return doc
        raise KeyError(title)


@dataclass(frozen=True)
class NumericTable:
    id_name: str
    ids: Tuple[str, ...]
    feature_names: Tuple[str, ...]
    features: Tuple[Tuple[float, ...], ...]
    dv_name: str
    dv: Tuple[float, ...]
    # full header/columns of the source file, kept so columns can be reselected
    source_header: Tuple[str, ...] = field(default=(), compare=False, repr=False)
    source_columns: Tuple[Tuple[str, ...], ...] = field(default=(), compare=False, repr=False)

    @property
    def n_rows(self):
        return len(self.ids)

    @property
    def n_features(self):
        return len(self.feature_names)

    def feature_matrix(self):
        import numpy as np

        return np.array(self.features, dtype=float).reshape(self.n_rows, self.n_features)

    def take(self, rows):
        """New table holding ``rows`` (indices, repeats allowed) in the given order."""
        return NumericTable(
            id_name=self.id_name,
            ids=tuple(self.ids[i] for i in rows),
            feature_names=self.feature_names,
            features=tuple(self.features[i] for i in rows),
            dv_name=self.dv_name,
            dv=tuple(self.dv[i] for i in rows),
        )


@dataclass(frozen=True)
class FilterSpec:
    titles: Optional[FrozenSet[str]] = None
    sentiment_label: Optional[str] = None
    category: Optional[str] = None

    def is_empty(self):
        return self.titles is None and self.sentiment_label is None and self.category is None


# -- transcripts ---------------------------------------------------------------


def _segments(raw):
    """Yield ``(title_or_None, text)`` pairs in file order."""
    pending = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        pos = 0
        for match in BREAK_TAG.finditer(line):
            before = line[pos:match.start()]
            _check_stray(before, lineno)
            pending.append(before)
            title = match.group(1).strip()
            if not title:
                raise ParseError("empty break tag title", lineno)
            yield title, "\n".join(pending).strip()
            pending = []
            pos = match.end()
        rest = line[pos:]
        _check_stray(rest, lineno)
        pending.append(rest)
    tail = "\n".join(pending).strip()
    if tail:
        yield None, tail


def _check_stray(fragment, lineno):
    if "<break>" in fragment:
        raise ParseError("unclosed <break> tag", lineno)
    if "</break>" in fragment:
        raise ParseError("</break> without matching <break>", lineno)


def _merge(segment_lists):
    """Merge ``[(title, text), ...]`` lists from several files into a Corpus."""
    order = []
    texts = {}
    untagged = 0
    for segments in segment_lists:
        for title, text in segments:
            if title is None:
                untagged += 1
                title = f"{UNTAGGED}_{untagged}"
            if title not in texts:
                order.append(title)
                texts[title] = [text]
            else:
                texts[title].append(text)
    docs = tuple(
        Document(title=t, text="\n".join(texts[t]), source_order=i) for i, t in enumerate(order)
    )
    return Corpus(docs)


def parse_transcript(raw):
    """Parse one break-tagged transcript into a :class:`Corpus`.

    Text after the final tag (or in a file without tags) becomes a document
    titled ``UNTAGGED_1``.
    """
    return _merge([list(_segments(raw))])


def load_corpus(paths):
    """Read and merge several transcript files, in the order given."""
    if not paths:
        raise UsageError("no input files given (use -i PATH)")
    segment_lists = []
    for path in paths:
        try:
            raw = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        try:
            segment_lists.append(list(_segments(raw)))
        except ParseError as exc:
            raise ParseError(f"{path}: {exc}") from exc
    return _merge(segment_lists)


def render_transcript(segments):
    """Inverse of :func:`parse_transcript` for ``(title, text)`` segment lists."""
    return "\n".join(f"{text}\n<break>{title}</break>" for title, text in segments) + "\n"


# -- numeric tables --------------------------------------------------------------


def _parse_cell(cell, row, column):
    if not cell:
        raise ValidationError("empty cell", row, column)
    try:
        value = float(cell)
    except ValueError:
        raise ValidationError(f"not a number: {cell!r}", row, column) from None
    if not math.isfinite(value):
        raise ValidationError(f"not a finite number: {cell!r}", row, column)
    return value


def _table_from_columns(header, columns, titles):
    index = {name: i for i, name in enumerate(header)}
    n_rows = len(columns[0]) if columns else 0
    picked = [index[t] for t in titles]
    numeric = {}
    for col in picked[1:]:
        values = []
        for r in range(n_rows):
            # data rows are numbered from 2: row 1 is the header
            values.append(_parse_cell(columns[col][r], r + 2, header[col]))
        numeric[col] = values
    feature_cols = picked[1:-1]
    return NumericTable(
        id_name=header[picked[0]],
        ids=tuple(columns[picked[0]]),
        feature_names=tuple(header[c] for c in feature_cols),
        features=tuple(tuple(numeric[c][r] for c in feature_cols) for r in range(n_rows)),
        dv_name=header[picked[-1]],
        dv=tuple(numeric[picked[-1]]),
        source_header=tuple(header),
        source_columns=tuple(tuple(c) for c in columns),
    )


def parse_numeric_csv(raw):
    """Parse CSV text into a :class:`NumericTable`.

    Comma separated, no quoting, first row is the header. Every cell outside the
    identifier column must be a finite decimal number.
    """
    lines = [line for line in raw.splitlines() if line.strip()]
    if not lines:
        raise SchemaError("empty CSV: a header row is required")
    header = [h.strip() for h in lines[0].split(",")]
    if len(header) < 3:
        raise SchemaError(f"need at least 3 columns (id, feature, outcome), got {len(header)}")
    if any(not h for h in header):
        raise SchemaError("empty column name in header")
    dupes = sorted({h for h in header if header.count(h) > 1})
    if dupes:
        raise SchemaError(f"duplicate column names: {', '.join(dupes)}")
    columns = [[] for _ in header]
    for lineno, line in enumerate(lines[1:], start=2):
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != len(header):
            raise ValidationError(
                f"expected {len(header)} cells, found {len(cells)}", lineno, header[min(len(cells), len(header)) - 1]
            )
        for col, cell in zip(columns, cells):
            col.append(cell)
    return _table_from_columns(header, columns, header)


def load_numeric_csv(path):
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_numeric_csv(raw)


def select_columns(table, titles):
    """Reselect columns by header name: first is the id, last the outcome.

    Header matching is exact first, then case-insensitive when unambiguous.
    """
    titles = list(titles)
    if len(titles) < 3:
        raise SchemaError("select at least 3 columns: id, one or more features, outcome")
    header = list(table.source_header)
    resolved = []
    for t in titles:
        if t in header:
            resolved.append(t)
            continue
        folded = [h for h in header if h.lower() == t.lower()]
        if len(folded) != 1:
            raise SchemaError(f"unknown column {t!r}; available: {', '.join(header)}")
        resolved.append(folded[0])
    if len(set(resolved)) != len(resolved):
        raise SchemaError("a column was selected more than once")
    return _table_from_columns(header, [list(c) for c in table.source_columns], resolved)


# -- filtering -------------------------------------------------------------------


def parse_filters(values, titles=None):
    """Build a FilterSpec from ``-f`` values (``pos|neg|neu`` or ``category:LEMMA``)."""
    sentiment = None
    category = None
    for value in values:
        v = value.strip()
        if v in SENTIMENT_LABELS:
            if sentiment is not None and sentiment != v:
                raise UsageError("conflicting sentiment filters")
            sentiment = v
        elif v.startswith("category:") and v[len("category:"):].strip():
            lemma = v[len("category:"):].strip().lower()
            if category is not None and category != lemma:
                raise UsageError("only one category filter is supported")
            category = lemma
        else:
            raise UsageError(f"bad filter {value!r}: expected pos, neg, neu or category:<lemma>")
    return FilterSpec(
        titles=frozenset(titles) if titles else None,
        sentiment_label=sentiment,
        category=category,
    )


def filter_documents(
    corpus: Corpus,
    spec: FilterSpec,
    sentiment_scorer: Callable[[Document], str] = None,
    category_index: Callable[[Document], set] = None,
) -> Corpus:
    """Keep the documents matching every field set in ``spec``."""
    if spec.is_empty():
        raise UsageError("filter has no criteria")
    if spec.sentiment_label is not None and sentiment_scorer is None:
        raise UsageError("sentiment filter needs a sentiment scorer")
    if spec.category is not None and category_index is None:
        raise UsageError("category filter needs a category index")
    kept = []
    for doc in corpus.documents:
        if spec.titles is not None and doc.title not in spec.titles:
            continue
        if spec.sentiment_label is not None and sentiment_scorer(doc) != spec.sentiment_label:
            continue
        if spec.category is not None and spec.category not in category_index(doc):
            continue
        kept.append(doc)
    return Corpus(tuple(kept))
