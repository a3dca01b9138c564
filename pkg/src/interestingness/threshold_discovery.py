"""Keyword discovery with a low threshold followed by a high threshold.

The unexpectedness stage collects words that are rare (total count <= lowT)
in the result set of an ordinary query.  The relevance stage re-runs the
query with each rare word appended and keeps the word only if it is now
frequent (total count >= highT) in the new result set.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Protocol, Sequence

from .composition import BipolarPipeline, compose
from .corpus import Corpus, ResultSet, StopwordList, aggregate_term_counts, NO_STOPWORDS
from .errors import InvalidArgumentError, SearchError

DEFAULT_LOW_T = 1
DEFAULT_MAX_RESULTS = 100


@dataclass(frozen=True)
class Thresholds:
    low_t: int = DEFAULT_LOW_T
    high_t: int = 20
    max_results: int = DEFAULT_MAX_RESULTS

    def __post_init__(self):
        if self.low_t < 0 or self.high_t < 0:
            raise InvalidArgumentError("thresholds must be nonnegative")
        if self.max_results < 1:
            raise InvalidArgumentError(f"max_results must be >= 1, got {self.max_results}")
        if self.low_t >= self.high_t:
            raise InvalidArgumentError(
                f"low threshold ({self.low_t}) must be below high threshold ({self.high_t})")


class SearchProvider(Protocol):
    def search(self, query: Sequence[str], max_results: int) -> ResultSet: ...


@dataclass(frozen=True)
class CandidateWord:
    term: str
    low_count: int


@dataclass(frozen=True)
class DiscoveredKeyword:
    term: str
    low_count: int
    high_count: int


def local_search(corpus: Corpus, query: Sequence[str], max_results: int = DEFAULT_MAX_RESULTS) -> ResultSet:
    """Documents matching any query term, most distinct terms matched first."""
    if not query:
        raise InvalidArgumentError("query must contain at least one term")
    if max_results < 1:
        raise InvalidArgumentError(f"max_results must be >= 1, got {max_results}")
    terms = frozenset(query)
    hits = []
    for doc in corpus:
        matched = len(terms & doc.term_set)
        if matched:
            hits.append((-matched, doc.id, doc))
    hits.sort(key=lambda h: h[:2])
    return Corpus(doc for _, _, doc in hits[:max_results])


class LocalSearchProvider:
    """Search provider over an in-memory corpus."""

    def __init__(self, corpus: Corpus):
        self.corpus = corpus

    def search(self, query, max_results=DEFAULT_MAX_RESULTS):
        return local_search(self.corpus, query, max_results)


def extract_low_frequency(results: ResultSet, stopwords: StopwordList = NO_STOPWORDS,
                          low_t: int = DEFAULT_LOW_T, exclude: Sequence[str] = ()) -> list[CandidateWord]:
    excluded = set(exclude)
    counts = aggregate_term_counts(results)
    cands = [CandidateWord(t, n) for t, n in counts.items()
             if n <= low_t and t not in excluded and t not in stopwords]
    cands.sort(key=lambda c: (c.low_count, c.term))
    return cands


def verify_candidate(provider: SearchProvider, original_query: Sequence[str], candidate: CandidateWord,
                     high_t: int, max_results: int = DEFAULT_MAX_RESULTS) -> DiscoveredKeyword | None:
    if candidate.term in original_query:
        raise InvalidArgumentError(f"candidate {candidate.term!r} is already a query term")
    try:
        results = provider.search([*original_query, candidate.term], max_results)
    except Exception as exc:
        raise SearchError(candidate.term, exc) from exc
    high = sum(doc.count(candidate.term) for doc in results)
    if high >= high_t:
        return DiscoveredKeyword(candidate.term, candidate.low_count, high)
    return None


def verification_counts(provider: SearchProvider, query: Sequence[str], candidates,
                        max_results: int = DEFAULT_MAX_RESULTS) -> list[tuple[str, int]]:
    """Per-candidate occurrence counts in the re-search results (histogram data)."""
    rows = []
    for cand in candidates:
        results = provider.search([*query, cand.term], max_results)
        rows.append((cand.term, sum(doc.count(cand.term) for doc in results)))
    return rows


def _sort_discovered(found):
    return sorted(found, key=lambda k: (-k.high_count, k.term))


def discover_keywords(provider: SearchProvider, query: Sequence[str], thresholds: Thresholds = Thresholds(),
                      stopwords: StopwordList = NO_STOPWORDS, workers: int = 1) -> list[DiscoveredKeyword]:
    if not query:
        raise InvalidArgumentError("query must contain at least one term")
    query = list(query)
    initial = provider.search(query, thresholds.max_results)
    candidates = extract_low_frequency(initial, stopwords, thresholds.low_t, exclude=query)

    def check(cand):
        return verify_candidate(provider, query, cand, thresholds.high_t, thresholds.max_results)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(check, candidates))
    else:
        verdicts = [check(c) for c in candidates]
    return _sort_discovered(v for v in verdicts if v is not None)


def discovery_pipeline(provider: SearchProvider, query: Sequence[str], thresholds: Thresholds = Thresholds(),
                       stopwords: StopwordList = NO_STOPWORDS) -> BipolarPipeline:
    """The same discovery expressed as an explicit relevance-after-unexpectedness pipeline.

    The pipeline input is the initial result set of ``query``.
    """
    query = list(query)

    def unexpectedness(results):
        return extract_low_frequency(results, stopwords, thresholds.low_t, exclude=query)

    def relevance(candidates):
        found = (verify_candidate(provider, query, c, thresholds.high_t, thresholds.max_results)
                 for c in candidates)
        return _sort_discovered(k for k in found if k is not None)

    return compose(relevance, unexpectedness)
