"""Term frequency x inverse document frequency, in both directions.

``rank_documents`` is the usual use: score documents for given keywords.
``rank_keywords`` runs it the other way round and scores every word of a
result set as a candidate keyword for the field those documents represent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .composition import multiply_scores
from .corpus import Corpus, Document, ScoredItem, StopwordList, NO_STOPWORDS
from .errors import EmptyDocumentError, EmptyVocabularyError, InvalidArgumentError, UnseenTermError


@dataclass(frozen=True)
class TfIdfScore:
    term: str
    tf: Fraction
    idf: float
    value: float


@dataclass(frozen=True)
class KeywordScore:
    term: str
    aggregate_tf: float
    idf: float
    value: float


def tf(doc: Document, term: str) -> Fraction:
    if doc.total_terms == 0:
        raise EmptyDocumentError(f"document {doc.id!r} has no terms")
    return Fraction(doc.count(term), doc.total_terms)


def idf(corpus: Corpus, term: str) -> float:
    """Natural-log inverse document frequency, unsmoothed."""
    df = corpus.df(term)
    if df == 0:
        raise UnseenTermError(term)
    return math.log(corpus.doc_count / df)


def tfidf(corpus: Corpus, doc: Document, term: str) -> TfIdfScore:
    t = tf(doc, term)
    i = idf(corpus, term)
    return TfIdfScore(term, t, i, multiply_scores(float(t), i))


def rank_documents(corpus: Corpus, keywords: Sequence[str]) -> list[ScoredItem]:
    """Sum of per-keyword TfIdf per document; keywords absent from the corpus are skipped.

    Documents without any terms score 0.
    """
    if not keywords:
        raise InvalidArgumentError("at least one keyword is required")
    known = [k for k in dict.fromkeys(keywords) if corpus.df(k) > 0]
    if not known:
        raise EmptyVocabularyError("none of the keywords occur in the corpus")
    ranked = []
    for doc in corpus:
        if doc.total_terms == 0:
            parts = {}
        else:
            parts = {k: tfidf(corpus, doc, k) for k in known}
        ranked.append(ScoredItem(doc.id, sum(p.value for p in parts.values()), parts))
    ranked.sort(key=lambda it: (-it.value, it.id))
    return ranked


def rank_keywords(results: Corpus, stopwords: StopwordList = NO_STOPWORDS,
                  exclude: Sequence[str] = ()) -> list[KeywordScore]:
    """Score each result-set word by idf times its tf summed over documents."""
    if results.doc_count < 1:
        raise InvalidArgumentError("cannot rank keywords of an empty result set")
    excluded = set(exclude)
    tf_sum = {}
    for doc in results:
        if doc.total_terms == 0:
            continue
        for term, n in doc.term_counts.items():
            tf_sum[term] = tf_sum.get(term, 0) + n / doc.total_terms
    scores = []
    for term, agg in tf_sum.items():
        if term in excluded or term in stopwords:
            continue
        i = idf(results, term)
        scores.append(KeywordScore(term, agg, i, multiply_scores(agg, i)))
    scores.sort(key=lambda s: (-s.value, s.term))
    return scores
