"""Interestingness scoring: relevance composed with unexpectedness.

Three concrete scorers share one framework: Match x Mismatch over keyword
sets, low/high threshold keyword discovery over a search provider, and
TfIdf for ranking documents or, reciprocally, keywords.
"""

__version__ = "0.1.0"

from .composition import BipolarPipeline, compose, evaluate, multiply_scores
from .corpus import (
    Corpus,
    Document,
    ResultSet,
    ScoredItem,
    StopwordList,
    TokenizerConfig,
    aggregate_term_counts,
    build_corpus,
    build_document,
    load_corpus,
    tokenize,
)
from .match_mismatch import FieldMetadata, MMScore, interestingness_mm, match_boolean, match_count, mismatch, rank_items
from .threshold_discovery import (
    CandidateWord,
    DiscoveredKeyword,
    LocalSearchProvider,
    SearchProvider,
    Thresholds,
    discover_keywords,
    discovery_pipeline,
    extract_low_frequency,
    local_search,
    verify_candidate,
)
from .tfidf import KeywordScore, TfIdfScore, idf, rank_documents, rank_keywords, tf, tfidf
