import json

import numpy as np
import pytest

from minuteforge.embedding import (
    EmbeddingSet,
    builtin_embed,
    fnv1a_64,
    load_embeddings,
    phrase_digest,
    similarity_matrix,
)
from minuteforge.errors import (
    EmbeddingCountMismatch,
    EmbeddingDigestMismatch,
    EmbeddingDimensionMismatch,
)
from minuteforge.meaningfulness import build_corpus
from minuteforge.phrases import SyntacticPhrase


def make_phrases(token_lists):
    return [SyntacticPhrase(i, 0, toks, toks) for i, toks in enumerate(token_lists)]


FIVE = make_phrases([
    ["budget", "review", "friday"],
    ["servers", "down", "twice"],
    ["wait", "until", "june"],
    ["hiring", "paused", "indefinitely"],
    ["metrics", "improved", "again"],
])


def write_embeddings(path, phrases, dim=8, mutate=None, manifest=True):
    records = []
    rng = np.random.RandomState(0)
    for p in phrases:
        records.append({
            "phrase_id": p.phrase_id,
            "sha256": phrase_digest(p.text),
            "dim": dim,
            "vector": [round(float(x), 8) for x in rng.randn(dim)],
        })
    if mutate:
        mutate(records)
    with open(path, "w", encoding="utf-8") as fh:
        if manifest:
            fh.write(json.dumps({"model": "test-model"}) + "\n")
        for rec in records:
            fh.write(json.dumps(rec) + "\n")
    return path


class TestLoadEmbeddings:
    def test_valid_file(self, tmp_path):
        path = write_embeddings(tmp_path / "emb.jsonl", FIVE)
        got = load_embeddings(path, FIVE)
        assert got.dim == 8
        assert got.source == "external-file"
        assert got.vectors.shape == (5, 8)

    def test_digest_mismatch_names_phrase(self, tmp_path):
        def corrupt(records):
            records[3]["sha256"] = "0" * 64
        path = write_embeddings(tmp_path / "emb.jsonl", FIVE, mutate=corrupt)
        with pytest.raises(EmbeddingDigestMismatch) as err:
            load_embeddings(path, FIVE)
        assert err.value.phrase_id == 3

    def test_count_mismatch(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text('{"model": "x"}\n', encoding="utf-8")
        with pytest.raises(EmbeddingCountMismatch):
            load_embeddings(path, FIVE[:1])

    def test_dimension_mismatch(self, tmp_path):
        def corrupt(records):
            records[2]["vector"] = records[2]["vector"][:-1]
        path = write_embeddings(tmp_path / "emb.jsonl", FIVE, mutate=corrupt)
        with pytest.raises(EmbeddingDimensionMismatch) as err:
            load_embeddings(path, FIVE)
        assert err.value.phrase_id == 2

    def test_no_manifest_accepted(self, tmp_path):
        path = write_embeddings(tmp_path / "emb.jsonl", FIVE, manifest=False)
        assert load_embeddings(path, FIVE).dim == 8


class TestBuiltinEmbed:
    def test_identical_phrases_cosine_one(self):
        phrases = make_phrases([["wait", "until", "june"], ["wait", "until", "june"]])
        emb = builtin_embed(phrases, build_corpus(phrases))
        cos = float(emb.vectors[0] @ emb.vectors[1])
        assert cos == pytest.approx(1.0, abs=1e-12)

    def test_norms_zero_or_one(self):
        corpus = build_corpus(FIVE)
        emb = builtin_embed(FIVE, corpus)
        norms = np.linalg.norm(emb.vectors, axis=1)
        assert all(abs(n - 1.0) < 1e-9 or n == 0.0 for n in norms)

    def test_disjoint_ngrams_orthogonal(self):
        # two unigram-only "phrases" with verified distinct buckets
        a, b = ["budget"], ["deadline"]
        dim = 256
        assert fnv1a_64(b"budget") % dim != fnv1a_64(b"deadline") % dim
        phrases = make_phrases([a, b])
        emb = builtin_embed(phrases, build_corpus(phrases), dim=dim)
        assert float(emb.vectors[0] @ emb.vectors[1]) == pytest.approx(0.0, abs=1e-12)

    def test_bit_stable(self):
        corpus = build_corpus(FIVE)
        v1 = builtin_embed(FIVE, corpus).vectors
        v2 = builtin_embed(FIVE, corpus).vectors
        assert np.array_equal(v1, v2)


class TestSimilarityMatrix:
    def test_identical_vectors_zero(self):
        emb = EmbeddingSet(2, np.array([[1.0, 0.0], [1.0, 0.0]]), "builtin-hash")
        s = similarity_matrix(emb)
        assert s[0, 1] == 0.0

    def test_orthogonal_unit_vectors(self):
        emb = EmbeddingSet(2, np.array([[1.0, 0.0], [0.0, 1.0]]), "builtin-hash")
        assert similarity_matrix(emb)[0, 1] == pytest.approx(-2.0)

    def test_singleton(self):
        emb = EmbeddingSet(1, np.array([[0.5]]), "builtin-hash")
        assert similarity_matrix(emb).shape == (1, 1)

    def test_symmetric_and_nonpositive(self):
        corpus = build_corpus(FIVE)
        s = similarity_matrix(builtin_embed(FIVE, corpus))
        assert np.array_equal(s, s.T)
        assert np.all(s <= 0)

    def test_nonfinite_rejected(self):
        emb = EmbeddingSet(2, np.array([[np.nan, 0.0], [0.0, 1.0]]), "builtin-hash")
        with pytest.raises(ValueError):
            similarity_matrix(emb)


def test_fnv1a_64_known_vectors():
    # published FNV-1a test vectors
    assert fnv1a_64(b"") == 0xCBF29CE484222325
    assert fnv1a_64(b"a") == 0xAF63DC4C8601EC8C
    assert fnv1a_64(b"foobar") == 0x85944171F73967E8
