"""Per-phrase meaningfulness: averaged n-gram TF-IDF within one meeting.

Documents are the syntactic phrases of a single meeting. For each phrase
the score is the mean of tf*idf over every contiguous 1-3-gram occurrence,
with a smoothed idf = ln((1+|D|)/(1+df)) + 1 so single-document corpora
still score positively.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .phrases import SyntacticPhrase

NGRAM_SIZES = (1, 2, 3)


def ngrams(tokens: list[str], n: int) -> list[str]:
    """Contiguous n-grams as space-joined strings, in scan order."""
    return [" ".join(tokens[i:i + n]) for i in range(len(tokens) - n + 1)]


@dataclass
class PhraseCorpus:
    phrases: list[SyntacticPhrase]
    doc_count: int
    df: dict[str, int]


@dataclass
class MeaningfulnessScore:
    phrase_id: int
    stfidf: float
    ngram_count: int


def build_corpus(phrases: list[SyntacticPhrase]) -> PhraseCorpus:
    """Count phrase-level presence (not multiplicity) of every 1-3-gram."""
    if not phrases:
        raise ValueError("cannot build a corpus from zero phrases")
    df: Counter[str] = Counter()
    for phrase in phrases:
        seen: set[str] = set()
        for n in NGRAM_SIZES:
            seen.update(ngrams(phrase.tokens, n))
        df.update(seen)
    return PhraseCorpus(phrases=phrases, doc_count=len(phrases), df=dict(df))


def tfidf(term: str, phrase: SyntacticPhrase, corpus: PhraseCorpus) -> float:
    """tf * idf for one n-gram in one phrase; the term must occur there."""
    n = len(term.split())
    tf = ngrams(phrase.tokens, n).count(term)
    if tf == 0:
        raise ValueError(f"term {term!r} does not occur in phrase {phrase.phrase_id}")
    idf = math.log((1 + corpus.doc_count) / (1 + corpus.df.get(term, 0))) + 1.0
    return tf * idf


def stfidf(
    phrase: SyntacticPhrase,
    corpus: PhraseCorpus,
    max_ngram: int = 3,
) -> MeaningfulnessScore:
    """Mean tf*idf over every n-gram occurrence, n in 1..max_ngram."""
    total = 0.0
    count = 0
    for n in NGRAM_SIZES[:max_ngram]:
        grams = ngrams(phrase.tokens, n)
        occurrences = Counter(grams)
        idf_cache = {
            g: math.log((1 + corpus.doc_count) / (1 + corpus.df.get(g, 0))) + 1.0
            for g in occurrences
        }
        for g in grams:
            total += occurrences[g] * idf_cache[g]
        count += len(grams)
    return MeaningfulnessScore(
        phrase_id=phrase.phrase_id,
        stfidf=total / count if count else 0.0,
        ngram_count=max(count, 1),
    )


def score_all(
    phrases: list[SyntacticPhrase],
    corpus: PhraseCorpus,
    max_ngram: int = 3,
) -> list[MeaningfulnessScore]:
    return [stfidf(p, corpus, max_ngram) for p in phrases]
