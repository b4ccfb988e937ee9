"""Cluster ranking and minutes assembly.

Clusters are ranked by the mean meaningfulness of their members; the top
10% (ceil, at least one) contribute their exemplar phrases, emitted in
chronological order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .affinity import ClusterSolution
from .meaningfulness import MeaningfulnessScore
from .phrases import SyntacticPhrase

DEFAULT_SELECTION_RATIO = 0.10


@dataclass
class RankedCluster:
    exemplar_phrase_id: int
    member_phrase_ids: list[int]
    meaningfulness: float


@dataclass
class MinuteLine:
    phrase_id: int
    text: str
    meaningfulness: float
    cluster_size: int


@dataclass
class Minutes:
    meeting_id: str
    lines: list[MinuteLine]
    selection_ratio: float


def rank_clusters(
    solution: ClusterSolution,
    scores: list[MeaningfulnessScore],
) -> list[RankedCluster]:
    """One cluster per exemplar, sorted by mean member score (desc).

    Ties go to the earlier exemplar.
    """
    by_id = {s.phrase_id: s.stfidf for s in scores}
    members: dict[int, list[int]] = {k: [] for k in solution.exemplars}
    for point, exemplar in enumerate(solution.assignment):
        members[exemplar].append(point)
    ranked = [
        RankedCluster(
            exemplar_phrase_id=exemplar,
            member_phrase_ids=sorted(ids),
            meaningfulness=sum(by_id[i] for i in ids) / len(ids),
        )
        for exemplar, ids in members.items()
    ]
    ranked.sort(key=lambda c: (-c.meaningfulness, c.exemplar_phrase_id))
    return ranked


def select_minutes(
    ranked: list[RankedCluster],
    ratio: float,
    phrases: list[SyntacticPhrase],
    meeting_id: str = "",
    ordering: str = "exemplar",
) -> Minutes:
    """Keep the top ceil(ratio*K) clusters and order their exemplars in time.

    ordering="earliest-member" sorts by the cluster's earliest member
    instead of the exemplar position.
    """
    if not (0.0 < ratio <= 1.0):
        raise ValueError(f"selection ratio must be in (0, 1], got {ratio}")
    if ordering not in ("exemplar", "earliest-member"):
        raise ValueError(f"unknown ordering {ordering!r}")
    take = max(1, math.ceil(ratio * len(ranked)))
    chosen = ranked[:take]
    if ordering == "exemplar":
        chosen = sorted(chosen, key=lambda c: c.exemplar_phrase_id)
    else:
        chosen = sorted(chosen, key=lambda c: min(c.member_phrase_ids))
    by_id = {p.phrase_id: p for p in phrases}
    lines = [
        MinuteLine(
            phrase_id=c.exemplar_phrase_id,
            text=by_id[c.exemplar_phrase_id].text,
            meaningfulness=c.meaningfulness,
            cluster_size=len(c.member_phrase_ids),
        )
        for c in chosen
    ]
    return Minutes(meeting_id=meeting_id, lines=lines, selection_ratio=ratio)


def render(minutes: Minutes, fmt: str = "text") -> str:
    """text: one phrase per line; json: full per-line metadata."""
    if fmt == "text":
        return "".join(line.text + "\n" for line in minutes.lines)
    if fmt == "json":
        payload = [
            {
                "phrase_id": line.phrase_id,
                "text": line.text,
                "meaningfulness": line.meaningfulness,
                "cluster_size": line.cluster_size,
            }
            for line in minutes.lines
        ]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
