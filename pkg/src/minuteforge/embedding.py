"""Phrase vectors: external interchange file or builtin hashed-n-gram fallback.

The interchange format is JSON Lines: an optional manifest first line
({"model": ...}) followed by one record per phrase,
{"phrase_id", "sha256", "dim", "vector"}, sorted by phrase_id. Records are
verified against the local phrase texts through a SHA-256 digest handshake
so stale exports fail loudly.

The builtin fallback is a signed feature-hashing embedding: every 1-3-gram
occurrence lands in an FNV-1a-64 bucket with a hash-derived sign, weighted
by its tf-idf, then the vector is L2-normalized. Fully deterministic, no
model download.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    EmbeddingCountMismatch,
    EmbeddingDigestMismatch,
    EmbeddingDimensionMismatch,
    EmbeddingHandshakeError,
)
from .meaningfulness import NGRAM_SIZES, PhraseCorpus, ngrams, tfidf
from .phrases import SyntacticPhrase

logger = logging.getLogger(__name__)

DEFAULT_BUILTIN_DIM = 256

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_U64 = (1 << 64) - 1


def fnv1a_64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & _U64
    return h


def phrase_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class EmbeddingSet:
    dim: int
    vectors: np.ndarray  # shape (n_phrases, dim), float64
    source: str  # "external-file" | "builtin-hash"


def load_embeddings(path: str | Path, phrases: list[SyntacticPhrase]) -> EmbeddingSet:
    """Load and validate an interchange file against the local phrases."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            if line_no == 0 and "phrase_id" not in obj:
                logger.info("embeddings file manifest: %s", obj)
                continue
            records.append(obj)

    if len(records) != len(phrases):
        raise EmbeddingCountMismatch(
            f"embeddings file has {len(records)} records for {len(phrases)} phrases"
        )
    if not records:
        return EmbeddingSet(dim=0, vectors=np.zeros((0, 0)), source="external-file")

    dim = int(records[0]["dim"])
    vectors = np.zeros((len(phrases), dim), dtype=np.float64)
    for rec, phrase in zip(records, phrases):
        pid = int(rec["phrase_id"])
        if pid != phrase.phrase_id:
            raise EmbeddingHandshakeError(
                f"record order mismatch: expected phrase_id {phrase.phrase_id}, got {pid}",
                phrase_id=phrase.phrase_id,
            )
        if int(rec["dim"]) != dim or len(rec["vector"]) != dim:
            raise EmbeddingDimensionMismatch(
                f"phrase {pid}: vector dimension {rec['dim']}/{len(rec['vector'])} != {dim}",
                phrase_id=pid,
            )
        if rec["sha256"] != phrase_digest(phrase.text):
            raise EmbeddingDigestMismatch(
                f"phrase {pid}: text digest mismatch (stale export?)", phrase_id=pid
            )
        vec = np.asarray(rec["vector"], dtype=np.float64)
        if not np.all(np.isfinite(vec)):
            raise EmbeddingHandshakeError(
                f"phrase {pid}: non-finite vector component", phrase_id=pid
            )
        vectors[phrase.phrase_id - phrases[0].phrase_id] = vec
    return EmbeddingSet(dim=dim, vectors=vectors, source="external-file")


def builtin_embed(
    phrases: list[SyntacticPhrase],
    corpus: PhraseCorpus,
    dim: int = DEFAULT_BUILTIN_DIM,
) -> EmbeddingSet:
    """Deterministic signed hashed-n-gram embedding weighted by tf-idf."""
    vectors = np.zeros((len(phrases), dim), dtype=np.float64)
    for row, phrase in enumerate(phrases):
        vec = vectors[row]
        for n in NGRAM_SIZES:
            for gram in ngrams(phrase.tokens, n):
                h = fnv1a_64(gram.encode("utf-8"))
                sign = 1.0 if (h >> 63) == 0 else -1.0
                vec[h % dim] += sign * tfidf(gram, phrase, corpus)
        norm = math.sqrt(float(vec @ vec))
        if norm > 0.0:
            vec /= norm
        else:
            logger.warning(
                "phrase %d: hashed embedding cancelled to zero; left unnormalized",
                phrase.phrase_id,
            )
    return EmbeddingSet(dim=dim, vectors=vectors, source="builtin-hash")


def similarity_matrix(embeddings: EmbeddingSet) -> np.ndarray:
    """Negative squared Euclidean distances; diagonal left at 0 for the preference."""
    vectors = embeddings.vectors
    if vectors.shape[0] < 1:
        raise ValueError("similarity matrix needs at least one vector")
    if not np.all(np.isfinite(vectors)):
        raise ValueError("non-finite embedding vector")
    sq = np.sum(vectors * vectors, axis=1)
    s = -(sq[:, None] + sq[None, :] - 2.0 * (vectors @ vectors.T))
    s = (s + s.T) / 2.0  # enforce exact symmetry against FP noise
    np.minimum(s, 0.0, out=s)
    np.fill_diagonal(s, 0.0)
    return s
