"""Command-line front end.

Every command reads a corpus file, scores it and prints a table as CSV
(default) or JSON on stdout.  Exit status is 0 on success, 2 for bad usage or
unreadable input, 1 for anything unexpected.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .corpus import DEFAULT_TOKENIZER, StopwordList, load_corpus, tokenize, TokenizerConfig
from .errors import InterestingnessError, InvalidArgumentError
from .match_mismatch import MATCH_MODES, COUNT, load_field, rank_items
from .synthetic import load_recipe, render
from .threshold_discovery import (
    DEFAULT_LOW_T,
    DEFAULT_MAX_RESULTS,
    LocalSearchProvider,
    Thresholds,
    discover_keywords,
    extract_low_frequency,
    verification_counts,
)
from .tfidf import rank_documents, rank_keywords

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(value):
    if isinstance(value, (float, Fraction)):
        return f"{float(value):.6f}"
    return value


def _json_value(value):
    if isinstance(value, (float, Fraction)):
        return float(f"{float(value):.6f}")
    return value


def format_table(header, rows, fmt):
    if fmt == "json":
        return json.dumps([{h: _json_value(v) for h, v in zip(header, row)} for row in rows],
                          indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([_fmt(v) for v in row] for row in rows)
    return buf.getvalue()


def _terms(text):
    return tokenize(text or "", TokenizerConfig(min_token_len=1, strip_stopwords=False))


def _top(rows, n):
    return rows if n is None else rows[:n]


def _load_inputs(args):
    stopwords = StopwordList.load(args.stopwords) if args.stopwords else StopwordList.default()
    if not args.corpus:
        raise UsageError("--corpus is required")
    return load_corpus(args.corpus, DEFAULT_TOKENIZER, stopwords), stopwords


def cmd_rank_mm(args):
    corpus, _ = _load_inputs(args)
    field = load_field(args.field)
    ranking = _top(rank_items(field, corpus, args.match), args.top)
    rows = [(i, it.id, it.detail.match, it.detail.mismatch, it.detail.norm, it.value)
            for i, it in enumerate(ranking, 1)]
    return format_table(["rank", "id", "match", "mismatch", "norm", "value"], rows, args.output)


def cmd_discover(args):
    query = _terms(args.query)
    if not query:
        raise UsageError("--query must contain at least one term")
    try:
        thresholds = Thresholds(args.low_t, args.high_t, args.max_results)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from exc
    corpus, stopwords = _load_inputs(args)
    provider = LocalSearchProvider(corpus)
    found = _top(discover_keywords(provider, query, thresholds, stopwords), args.top)
    header = ["term", "low_count", "high_count"]
    rows = [(k.term, k.low_count, k.high_count) for k in found]

    candidates = extract_low_frequency(provider.search(query, thresholds.max_results), stopwords,
                                       thresholds.low_t, exclude=query)
    histogram = verification_counts(provider, query, candidates, thresholds.max_results)
    if args.output == "json":
        payload = {
            "keywords": [dict(zip(header, r)) for r in rows],
            "histogram": [{"term": t, "count": c} for t, c in histogram],
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if args.histogram:
        Path(args.histogram).write_text(format_table(["term", "count"], histogram, "csv"),
                                        encoding="utf-8", newline="\n")
    return format_table(header, rows, "csv")


def cmd_tfidf_rank(args):
    keywords = _terms(args.keywords)
    if not keywords:
        raise UsageError("tfidf-rank needs --keywords")
    corpus, _ = _load_inputs(args)
    ranking = _top(rank_documents(corpus, keywords), args.top)
    rows = [(i, it.id, it.value) for i, it in enumerate(ranking, 1)]
    return format_table(["rank", "id", "score"], rows, args.output)


def cmd_tfidf_keywords(args):
    corpus, stopwords = _load_inputs(args)
    results = corpus
    if args.query:
        query = _terms(args.query)
        results = LocalSearchProvider(corpus).search(query, args.max_results)
    header = ["rank", "term", "tf_sum", "idf", "value"]
    if results.doc_count == 0:
        return format_table(header, [], args.output)
    scores = _top(rank_keywords(results, stopwords, _terms(args.exclude)), args.top)
    rows = [(i, s.term, s.aggregate_tf, s.idf, s.value) for i, s in enumerate(scores, 1)]
    return format_table(header, rows, args.output)


def cmd_gen_corpus(args):
    if not args.recipe:
        raise UsageError("gen-corpus needs --recipe")
    text = render(load_recipe(args.recipe), args.seed)
    if args.corpus:
        Path(args.corpus).write_text(text, encoding="utf-8", newline="\n")
        return ""
    return text


def _positive(value):
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return n


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--corpus", help="corpus file (JSON lines with id, title, summary)")
    common.add_argument("--stopwords", help="stopword file; the built-in list is used if omitted")
    common.add_argument("--output", choices=("csv", "json"), default="csv")
    common.add_argument("--top", type=_positive, default=None, help="emit only the first N rows")

    parser = argparse.ArgumentParser(prog="interestingness",
                                     description="Relevance x unexpectedness scoring of text corpora.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank-mm", parents=[common], help="rank items by Match x Mismatch")
    p.add_argument("--field", required=True, help="field keyword file")
    p.add_argument("--match", choices=MATCH_MODES, default=COUNT)
    p.set_defaults(func=cmd_rank_mm)

    p = sub.add_parser("discover", parents=[common], help="low/high threshold keyword discovery")
    p.add_argument("--query", required=True)
    p.add_argument("--low-t", type=int, default=DEFAULT_LOW_T)
    p.add_argument("--high-t", type=int, required=True)
    p.add_argument("--max-results", type=_positive, default=DEFAULT_MAX_RESULTS)
    p.add_argument("--histogram", help="CSV path for per-candidate re-search counts")
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("tfidf-rank", parents=[common], help="rank documents for keywords")
    p.add_argument("--keywords", required=True)
    p.set_defaults(func=cmd_tfidf_rank)

    p = sub.add_parser("tfidf-keywords", parents=[common], help="rank words of a result set")
    p.add_argument("--query", help="search the corpus first and score only the results")
    p.add_argument("--max-results", type=_positive, default=DEFAULT_MAX_RESULTS)
    p.add_argument("--exclude", default="", help="terms to leave out of the ranking")
    p.set_defaults(func=cmd_tfidf_keywords)

    p = sub.add_parser("gen-corpus", parents=[common], help="write a synthetic corpus from a recipe")
    p.add_argument("--recipe", required=True)
    p.add_argument("--seed", type=int, default=None, help="overrides the recipe's seed")
    p.set_defaults(func=cmd_gen_corpus)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out = args.func(args)
    except (UsageError, InterestingnessError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"{parser.prog} {args.command}: internal error: {exc!r}", file=stderr)
        return EXIT_INTERNAL
    stdout.write(out)
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
