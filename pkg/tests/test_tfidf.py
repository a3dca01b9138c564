import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import FOUR_DOCS
from interestingness.corpus import Corpus, Document, StopwordList
from interestingness.errors import EmptyDocumentError, EmptyVocabularyError, InvalidArgumentError, UnseenTermError
from interestingness.tfidf import idf, rank_documents, rank_keywords, tf, tfidf

LN2 = 0.6931471805599453


def brute_scores(docs, keywords):
    """Reference document scores straight from raw count dictionaries."""
    n = len(docs)
    out = {}
    for doc_id, counts in docs.items():
        total = sum(counts.values())
        score = 0.0
        for k in keywords:
            df = sum(1 for c in docs.values() if k in c)
            if df:
                score += counts.get(k, 0) / total * math.log(n / df)
        out[doc_id] = score
    return out


def test_tf_examples():
    doc = Document("d", term_counts={"k": 3, "x": 9})
    assert tf(doc, "k") == Fraction(1, 4)
    assert tf(doc, "absent") == 0
    assert tf(Document("e", term_counts={"k": 4}), "k") == 1


def test_tf_empty_document():
    with pytest.raises(EmptyDocumentError):
        tf(Document("e"), "k")


def test_idf_examples(four_docs):
    assert idf(four_docs, "pattern") == 0.0
    hundred = Corpus([Document("rare", term_counts={"k": 1})]
                     + [Document(f"d{i}", term_counts={"x": 1}) for i in range(99)])
    assert idf(hundred, "k") == pytest.approx(4.605170185988092, rel=1e-12)
    with pytest.raises(UnseenTermError):
        idf(four_docs, "nowhere")


def test_tfidf_hand_computed(four_docs):
    s = tfidf(four_docs, four_docs[0], "observer")
    assert s.tf == Fraction(1, 5)
    assert s.idf == pytest.approx(LN2, rel=1e-12)
    assert s.value == pytest.approx(0.13862943611198905, rel=1e-12)
    assert s.value == float(s.tf) * s.idf


def test_tfidf_zero_cases(four_docs):
    for doc in four_docs:
        assert tfidf(four_docs, doc, "pattern").value == 0
    assert tfidf(four_docs, four_docs[3], "observer").value == 0


def test_rank_documents_hand_computed(four_docs):
    ranking = rank_documents(four_docs, ["observer", "mediator"])
    assert [r.id for r in ranking] == ["d3", "d1", "d2", "d4"]
    # d3: 3/8 ln2, d1: (2+1)/10 ln2, d2: 1/6 ln2, d4: 0
    expected = [0.25993019270997947, 0.20794415416798358, 0.11552453009332421, 0.0]
    assert [r.value for r in ranking] == pytest.approx(expected, rel=1e-9)
    oracle = brute_scores(FOUR_DOCS, ["observer", "mediator"])
    for r in ranking:
        assert r.value == pytest.approx(oracle[r.id], rel=1e-9, abs=1e-15)


def test_rank_documents_single_hit():
    c = Corpus([Document("d1", term_counts={"k": 1, "a": 1}), Document("d2", term_counts={"a": 2})])
    ranking = rank_documents(c, ["k"])
    assert ranking[0].id == "d1" and ranking[0].value > 0
    assert ranking[1].value == 0


def test_rank_documents_ubiquitous_keyword(four_docs):
    ranking = rank_documents(four_docs, ["pattern"])
    assert [r.id for r in ranking] == ["d1", "d2", "d3", "d4"]
    assert all(r.value == 0 for r in ranking)


def test_rank_documents_skips_unseen_and_errors_when_all_unseen(four_docs):
    with_unseen = rank_documents(four_docs, ["observer", "nowhere"])
    assert with_unseen == rank_documents(four_docs, ["observer"])
    with pytest.raises(EmptyVocabularyError):
        rank_documents(four_docs, ["nowhere"])
    with pytest.raises(InvalidArgumentError):
        rank_documents(four_docs, [])


def test_rank_documents_tolerates_empty_document():
    c = Corpus([Document("a", term_counts={"k": 1}), Document("b"), Document("c", term_counts={"x": 1})])
    assert [(r.id, r.value) for r in rank_documents(c, ["k"])] == [
        ("a", pytest.approx(math.log(3))), ("b", 0), ("c", 0)]


def test_rank_keywords_reversal(reversal_corpus):
    scores = {s.term: s for s in rank_keywords(reversal_corpus)}
    total_observer = sum(d.count("observer") for d in reversal_corpus)
    assert total_observer == 50 and reversal_corpus[0].count("concatenate") == 8
    assert scores["concatenate"].value > scores["observer"].value
    assert scores["observer"].value == 0


def test_rank_keywords_single_document():
    c = Corpus([Document("only", term_counts={"a": 2, "b": 1})])
    assert all(s.value == 0 for s in rank_keywords(c))


def test_rank_keywords_exclusions_and_stopwords(four_docs):
    terms = [s.term for s in rank_keywords(four_docs, StopwordList(frozenset({"code"})), ["java"])]
    assert "code" not in terms and "java" not in terms and "observer" in terms


def test_rank_keywords_empty_results():
    with pytest.raises(InvalidArgumentError):
        rank_keywords(Corpus())


def test_rank_keywords_matches_brute_force(four_docs):
    n = len(FOUR_DOCS)
    for s in rank_keywords(four_docs):
        tf_sum = sum(c.get(s.term, 0) / sum(c.values()) for c in FOUR_DOCS.values())
        df = sum(s.term in c for c in FOUR_DOCS.values())
        assert s.value == pytest.approx(tf_sum * math.log(n / df), rel=1e-9, abs=1e-15)
    values = [(-s.value, s.term) for s in rank_keywords(four_docs)]
    assert values == sorted(values)


term = st.sampled_from(["alpha", "beta", "gamma", "delta", "eps"])
corpora = st.lists(st.dictionaries(term, st.integers(1, 6), min_size=1, max_size=5), min_size=1, max_size=7)


@given(corpora)
def test_tf_sums_to_one(counts):
    c = Corpus(Document(f"d{i}", term_counts=tc) for i, tc in enumerate(counts))
    for doc in c:
        assert sum(tf(doc, t) for t in c.vocabulary) == 1


@given(st.integers(1, 200), st.data())
def test_idf_strictly_decreasing(n, data):
    df = data.draw(st.integers(1, n))
    docs = [Document(f"d{i}", term_counts={"k" if i < df else "x": 1, "pad": 1}) for i in range(n)]
    c = Corpus(docs)
    assert idf(c, "k") == pytest.approx(math.log(n / df))
    if df < n:
        more = Corpus(docs[:df] + [Document("extra", term_counts={"k": 1})] + docs[df + 1:])
        assert idf(more, "k") < idf(c, "k")
    else:
        assert idf(c, "k") == 0


@given(corpora, term)
def test_single_keyword_order_follows_tf(counts, k):
    c = Corpus(Document(f"d{i}", term_counts=tc) for i, tc in enumerate(counts))
    if c.df(k) == 0:
        return
    by_tf = sorted(c, key=lambda d: (-tf(d, k), d.id))
    ranked = [r.id for r in rank_documents(c, [k])]
    if idf(c, k) > 0:
        assert ranked == [d.id for d in by_tf]
    else:
        assert ranked == sorted(c.ids)


@given(corpora)
def test_rank_keywords_reproducible_by_pairs(counts):
    c = Corpus(Document(f"d{i}", term_counts=tc) for i, tc in enumerate(counts))
    for s in rank_keywords(c):
        pairs = [(d, s.term) for d in c]
        agg = sum(d.count(t) / d.total_terms for d, t in pairs)
        assert s.value == pytest.approx(agg * math.log(c.N / c.df(s.term)), rel=1e-9, abs=1e-15)
