"""Match x Mismatch scoring of items against a field-of-interest keyword set.

Match is the relevance pole (shared keywords), Mismatch the unexpectedness
pole (size of the symmetric difference).  The normalized product is zero
unless an item is both on-topic and carries something the field lacks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .composition import multiply_scores
from .corpus import ScoredItem, TokenizerConfig, _read_lines, tokenize
from .errors import InputFileError, InvalidArgumentError

BOOLEAN = "boolean"
COUNT = "count"
MATCH_MODES = (BOOLEAN, COUNT)


@dataclass(frozen=True)
class FieldMetadata:
    keywords: frozenset
    label: str = ""

    def __post_init__(self):
        kw = frozenset(self.keywords)
        if not kw:
            raise InvalidArgumentError("field metadata needs at least one keyword")
        object.__setattr__(self, "keywords", kw)

    @classmethod
    def from_terms(cls, terms: Iterable[str], label: str = "") -> FieldMetadata:
        """Normalize raw keywords with the default tokenizer rules."""
        cfg = TokenizerConfig(min_token_len=1, strip_stopwords=False)
        kw = set()
        for term in terms:
            kw.update(tokenize(term, cfg))
        return cls(frozenset(kw), label)


def load_field(path) -> FieldMetadata:
    """Read a field file: optional ``label: ...`` header, then one keyword per line."""
    label = ""
    words = []
    cfg = TokenizerConfig(min_token_len=1, strip_stopwords=False)
    for lineno, raw in enumerate(_read_lines(path), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("label:"):
            if words or label:
                raise InputFileError(path, lineno, "'label:' must be the first entry")
            label = line.split(":", 1)[1].strip()
            continue
        if len(line.split()) != 1:
            raise InputFileError(path, lineno, f"expected one keyword per line, got {raw!r}")
        if tokenize(line, cfg) != [line.lower()]:
            raise InputFileError(path, lineno, f"keyword {line!r} is not a single normalized term")
        words.append(line.lower())
    if not words:
        raise InputFileError(path, None, "no keywords found")
    return FieldMetadata(frozenset(words), label)


def match_boolean(field: FieldMetadata, item: Iterable[str]) -> int:
    return 1 if not field.keywords.isdisjoint(item) else 0


def match_count(field: FieldMetadata, item: Iterable[str]) -> int:
    return len(field.keywords.intersection(item))


def mismatch(field: FieldMetadata, item: Iterable[str]) -> int:
    return len(field.keywords.symmetric_difference(item))


@dataclass(frozen=True)
class MMScore:
    match: int
    mismatch: int
    norm: int
    value: Fraction

    def __float__(self):
        return float(self.value)


def interestingness_mm(field: FieldMetadata, item: Iterable[str], mode: str = COUNT) -> MMScore:
    """Score one item; the normalization is the item's distinct-term count (min 1)."""
    if mode not in MATCH_MODES:
        raise InvalidArgumentError(f"unknown match mode {mode!r}")
    item = frozenset(item)
    m = match_boolean(field, item) if mode == BOOLEAN else match_count(field, item)
    mm = mismatch(field, item)
    norm = max(len(item), 1)
    value = multiply_scores(m, mm, norm)
    return MMScore(m, mm, norm, value)


def rank_items(field: FieldMetadata, items, mode: str = COUNT) -> list[ScoredItem]:
    """Rank documents by descending Match x Mismatch, ties by id."""
    scored = [ScoredItem(doc.id, s.value, s)
              for doc in items
              for s in [interestingness_mm(field, doc.term_set, mode)]]
    scored.sort(key=lambda it: (-it.value, it.id))
    return scored
