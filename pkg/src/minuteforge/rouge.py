"""Self-contained ROUGE engine: N (1/2/4), L, W-1.2, S4, SU4.

Texts are stripped of punctuation and case before scoring. ROUGE-L is
summary-level (a single LCS over the whole token sequences). Multiple
references are aggregated by max (best match) or mean.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

METRIC_NAMES = (
    "rouge-1", "rouge-2", "rouge-4", "rouge-l",
    "rouge-w-1.2", "rouge-s4", "rouge-su4",
)

_TOKEN = re.compile(r"[a-z0-9]+")

# Marker prepended for SU so leading unigrams pair with a pseudo-start token.
_BEGIN = "<s>"


@dataclass
class Triple:
    precision: float
    recall: float
    f1: float


@dataclass
class RougeReport:
    per_metric: dict[str, Triple]
    per_reference: list[dict[str, Triple]]
    aggregation: str

    def to_dict(self) -> dict:
        def tri(t: Triple) -> dict:
            return {"precision": t.precision, "recall": t.recall, "f1": t.f1}

        return {
            "aggregation": self.aggregation,
            "metrics": {m: tri(t) for m, t in self.per_metric.items()},
            "per_reference": [
                {m: tri(t) for m, t in ref.items()} for ref in self.per_reference
            ],
        }


def metric_tokenize(text: str) -> list[str]:
    """Lowercase and split on non-alphanumeric runs."""
    return _TOKEN.findall(text.lower())


def _prf(overlap: float, cand_total: float, ref_total: float) -> Triple:
    p = overlap / cand_total if cand_total > 0 else 0.0
    r = overlap / ref_total if ref_total > 0 else 0.0
    f1 = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return Triple(p, r, f1)


def _ngram_counts(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: list[str], reference: list[str], n: int) -> Triple:
    """Clipped multiset n-gram overlap."""
    cand = _ngram_counts(candidate, n)
    ref = _ngram_counts(reference, n)
    overlap = sum((cand & ref).values())
    return _prf(overlap, sum(cand.values()), sum(ref.values()))


def _lcs_length(a: list[str], b: list[str]) -> int:
    # rolling single-row DP
    prev = [0] * (len(b) + 1)
    for ai in a:
        curr = [0]
        for j, bj in enumerate(b, 1):
            curr.append(prev[j - 1] + 1 if ai == bj else max(prev[j], curr[j - 1]))
        prev = curr
    return prev[len(b)]


def rouge_l(candidate: list[str], reference: list[str]) -> Triple:
    """Summary-level LCS over the full token sequences."""
    lcs = _lcs_length(candidate, reference)
    return _prf(lcs, len(candidate), len(reference))


def rouge_w(candidate: list[str], reference: list[str], weight: float = 1.2) -> Triple:
    """Weighted LCS rewarding consecutive matches with f(k) = k**weight."""
    if weight <= 1.0:
        raise ValueError(f"weight must exceed 1, got {weight}")
    m, n = len(candidate), len(reference)
    if m == 0 or n == 0:
        return Triple(0.0, 0.0, 0.0)

    def f(k: float) -> float:
        return k ** weight

    # best[i][j]: max sum of f(run length) over common subsequences of the
    # prefixes. A run of length k ending at (i, j) extends best[i-k][j-k];
    # scanning every k up to the diagonal match length gives the true
    # optimum (the classic forced-match recurrence can undershoot).
    best = [[0.0] * (n + 1) for _ in range(m + 1)]
    run = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            value = max(best[i - 1][j], best[i][j - 1])
            if candidate[i - 1] == reference[j - 1]:
                length = run[i - 1][j - 1] + 1
                run[i][j] = length
                for k in range(1, length + 1):
                    extended = best[i - k][j - k] + f(k)
                    if extended > value:
                        value = extended
            best[i][j] = value
    wlcs = best[m][n]
    inv = 1.0 / weight
    p = (wlcs / f(m)) ** inv
    r = (wlcs / f(n)) ** inv
    f1 = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return Triple(p, r, f1)


def _skip_bigrams(tokens: list[str], max_skip: int) -> Counter:
    pairs: Counter = Counter()
    for i in range(len(tokens)):
        for j in range(i + 1, min(i + 2 + max_skip, len(tokens))):
            pairs[(tokens[i], tokens[j])] += 1
    return pairs


def rouge_s(
    candidate: list[str],
    reference: list[str],
    max_skip: int = 4,
    with_unigrams: bool = False,
) -> Triple:
    """Skip-bigram overlap with at most max_skip intervening tokens.

    with_unigrams (the SU variant) prepends a begin marker to both texts
    so single-token matches near the start also count.
    """
    if max_skip < 0:
        raise ValueError("max_skip must be >= 0")
    if with_unigrams:
        candidate = [_BEGIN] + candidate
        reference = [_BEGIN] + reference
    cand = _skip_bigrams(candidate, max_skip)
    ref = _skip_bigrams(reference, max_skip)
    overlap = sum((cand & ref).values())
    return _prf(overlap, sum(cand.values()), sum(ref.values()))


def _score_pair(candidate: list[str], reference: list[str]) -> dict[str, Triple]:
    return {
        "rouge-1": rouge_n(candidate, reference, 1),
        "rouge-2": rouge_n(candidate, reference, 2),
        "rouge-4": rouge_n(candidate, reference, 4),
        "rouge-l": rouge_l(candidate, reference),
        "rouge-w-1.2": rouge_w(candidate, reference, 1.2),
        "rouge-s4": rouge_s(candidate, reference, 4, with_unigrams=False),
        "rouge-su4": rouge_s(candidate, reference, 4, with_unigrams=True),
    }


def evaluate(
    candidate: str,
    references: list[str],
    aggregation: str = "max",
) -> RougeReport:
    """Score a candidate against every reference and aggregate P/R/F1."""
    if not references:
        raise ValueError("need at least one reference")
    if aggregation not in ("max", "mean"):
        raise ValueError(f"unknown aggregation {aggregation!r}")

    cand_tokens = metric_tokenize(candidate)
    per_reference = [
        _score_pair(cand_tokens, metric_tokenize(ref)) for ref in references
    ]

    agg: dict[str, Triple] = {}
    for metric in METRIC_NAMES:
        triples = [ref[metric] for ref in per_reference]
        if aggregation == "max":
            best = max(triples, key=lambda t: t.f1)
            agg[metric] = Triple(best.precision, best.recall, best.f1)
        else:
            k = len(triples)
            agg[metric] = Triple(
                sum(t.precision for t in triples) / k,
                sum(t.recall for t in triples) / k,
                sum(t.f1 for t in triples) / k,
            )
    return RougeReport(per_metric=agg, per_reference=per_reference, aggregation=aggregation)
