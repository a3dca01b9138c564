"""Documents, corpora, tokenization and the on-disk formats that feed them.

A :class:`Document` is the scored unit: its text is the title followed by the
summary, reduced to a multiset of terms.  A :class:`Corpus` is an ordered,
immutable collection of documents with a document-frequency index.  Search
result sets are corpora too (``ResultSet`` is an alias).
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DuplicateIdError, InputFileError, InvalidArgumentError

_TOKEN_RE = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class TokenizerConfig:
    lowercase: bool = True
    min_token_len: int = 2
    strip_stopwords: bool = True

    def __post_init__(self):
        if self.min_token_len < 1:
            raise InvalidArgumentError(
                f"min_token_len must be >= 1, got {self.min_token_len}")


DEFAULT_TOKENIZER = TokenizerConfig()


@dataclass(frozen=True)
class StopwordList:
    words: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(w.lower() for w in self.words))

    def __contains__(self, token):
        return token.lower() in self.words

    def __len__(self):
        return len(self.words)

    @classmethod
    def default(cls) -> StopwordList:
        text = resources.files("interestingness").joinpath("data/stopwords.txt").read_text("utf-8")
        return cls(frozenset(_parse_word_lines(text.splitlines(), "<default stopwords>")))

    @classmethod
    def load(cls, path) -> StopwordList:
        return cls(frozenset(_parse_word_lines(_read_lines(path), path)))


NO_STOPWORDS = StopwordList()


def _read_lines(path):
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputFileError(path, None, f"cannot read file ({exc})") from exc


def _parse_word_lines(lines, path):
    words = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line.split()) != 1:
            raise InputFileError(path, lineno, f"expected one word per line, got {raw!r}")
        words.append(line.lower())
    return words


def tokenize(text: str, config: TokenizerConfig = DEFAULT_TOKENIZER,
             stopwords: StopwordList = NO_STOPWORDS) -> list[str]:
    """Split ``text`` into terms on every non-alphanumeric codepoint.

    Lowercasing happens before splitting, so characters whose lowercase form
    is not alphanumeric (e.g. a combining dot) act as separators and the
    result is stable under re-tokenization.
    """
    if config.lowercase:
        text = text.lower()
    tokens = []
    for tok in _TOKEN_RE.findall(text):
        if len(tok) < config.min_token_len:
            continue
        if config.strip_stopwords and tok in stopwords:
            continue
        tokens.append(tok)
    return tokens


@dataclass(frozen=True)
class Document:
    id: str
    title: str = ""
    summary: str = ""
    term_counts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.id:
            raise InvalidArgumentError("document id must be non-empty")
        counts = {t: int(n) for t, n in self.term_counts.items()}
        if any(n < 1 for n in counts.values()):
            raise InvalidArgumentError(f"document {self.id!r} has a non-positive term count")
        object.__setattr__(self, "term_counts", MappingProxyType(counts))
        object.__setattr__(self, "_total", sum(counts.values()))
        object.__setattr__(self, "_terms", frozenset(counts))

    def __hash__(self):
        return hash((self.id, self.title, self.summary, frozenset(self.term_counts.items())))

    @property
    def total_terms(self) -> int:
        return self._total

    @property
    def term_set(self) -> frozenset:
        return self._terms

    def count(self, term: str) -> int:
        return self.term_counts.get(term, 0)

    @property
    def text(self) -> str:
        return f"{self.title} {self.summary}"


def build_document(id: str, title: str = "", summary: str = "",
                   config: TokenizerConfig = DEFAULT_TOKENIZER,
                   stopwords: StopwordList = NO_STOPWORDS) -> Document:
    if not id:
        raise InvalidArgumentError("document id must be non-empty")
    counts = Counter(tokenize(f"{title} {summary}", config, stopwords))
    return Document(id, title, summary, counts)


class Corpus:
    """Ordered documents plus the document-frequency index over them."""

    def __init__(self, documents: Iterable[Document] = ()):
        docs = tuple(documents)
        seen = set()
        for doc in docs:
            if doc.id in seen:
                raise DuplicateIdError(doc.id)
            seen.add(doc.id)
        self._documents = docs
        self._doc_freq = MappingProxyType(compute_doc_freq(docs))

    @property
    def documents(self) -> tuple[Document, ...]:
        return self._documents

    @property
    def doc_count(self) -> int:
        return len(self._documents)

    N = doc_count

    @property
    def doc_freq(self) -> Mapping[str, int]:
        return self._doc_freq

    @property
    def vocabulary(self) -> frozenset:
        return frozenset(self._doc_freq)

    @property
    def ids(self) -> list[str]:
        return [d.id for d in self._documents]

    def df(self, term: str) -> int:
        return self._doc_freq.get(term, 0)

    def __len__(self):
        return len(self._documents)

    def __iter__(self):
        return iter(self._documents)

    def __getitem__(self, i):
        return self._documents[i]

    def __eq__(self, other):
        return isinstance(other, Corpus) and self._documents == other._documents

    def __hash__(self):
        return hash(self._documents)

    def __repr__(self):
        return f"Corpus(N={self.doc_count}, vocabulary={len(self._doc_freq)})"


ResultSet = Corpus


@dataclass(frozen=True)
class ScoredItem:
    """A ranked document id with its score and the components behind it."""

    id: str
    value: float
    detail: object = None


def compute_doc_freq(documents: Iterable[Document]) -> dict[str, int]:
    df = Counter()
    for doc in documents:
        df.update(doc.term_set)
    return dict(df)


def build_corpus(documents: Iterable[Document]) -> Corpus:
    return Corpus(documents)


def aggregate_term_counts(result_set: Iterable[Document]) -> dict[str, int]:
    """Total occurrences of each term summed over every document."""
    total = Counter()
    for doc in result_set:
        total.update(doc.term_counts)
    return dict(total)


# --- corpus files: one JSON object per line with id, title, summary ---

def parse_corpus_lines(lines, path="<corpus>", config=DEFAULT_TOKENIZER,
                       stopwords=NO_STOPWORDS) -> Corpus:
    docs = []
    seen = {}
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        try:
            rec = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputFileError(path, lineno, f"invalid JSON ({exc.msg})") from exc
        if not isinstance(rec, dict):
            raise InputFileError(path, lineno, "record must be a JSON object")
        doc_id = rec.get("id")
        if not isinstance(doc_id, str) or not doc_id:
            raise InputFileError(path, lineno, "missing or empty 'id'")
        fields = {}
        for name in ("title", "summary", "body"):
            value = rec.get(name, "")
            if not isinstance(value, str):
                raise InputFileError(path, lineno, f"field {name!r} must be a string")
            fields[name] = value
        if doc_id in seen:
            raise InputFileError(path, lineno,
                                 f"duplicate id {doc_id!r} (first seen on line {seen[doc_id]})")
        seen[doc_id] = lineno
        summary = fields["summary"]
        if fields["body"]:
            summary = f"{summary} {fields['body']}" if summary else fields["body"]
        docs.append(build_document(doc_id, fields["title"], summary, config, stopwords))
    return Corpus(docs)


def load_corpus(path, config=DEFAULT_TOKENIZER, stopwords=NO_STOPWORDS) -> Corpus:
    return parse_corpus_lines(_read_lines(path), path, config, stopwords)


def dump_corpus_records(records) -> str:
    """Serialize ``(id, title, summary)`` triples in corpus-file format."""
    out = []
    for doc_id, title, summary in records:
        out.append(json.dumps({"id": doc_id, "title": title, "summary": summary},
                              ensure_ascii=False, sort_keys=False))
    return "".join(line + "\n" for line in out)
