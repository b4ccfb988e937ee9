"""Syntactic phrase extraction and redundant-word deletion.

Sentences are split into clause-like phrases at boundary markers,
conjunctions, and late subject pronouns; interjections, subordinating
conjunctions, determiners and adverbs are then filtered out. Closed-class
lexicons plus an "-ly" suffix heuristic stand in for a parser, so the
whole stage is deterministic and configurable from a JSON file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, asdict
from pathlib import Path

from .errors import EmptyMeetingError
from .ingest import BOUNDARY_MARKER, Transcript, normalize

DEFAULT_MIN_PHRASE_TOKENS = 3

# Tokens since the last boundary before a subject pronoun may open a new phrase.
_SUBJECT_SPLIT_MIN_PREFIX = 3

_PLACEHOLDER = re.compile(r"^(person|organization)\d+$")


@dataclass
class SyntacticPhrase:
    phrase_id: int
    utterance_index: int
    tokens: list[str]
    raw_tokens: list[str]

    @property
    def text(self) -> str:
        return " ".join(self.tokens)


@dataclass
class Lexicons:
    interjections: frozenset[str] = frozenset(
        {"well", "yeah", "yes", "uh", "um", "uhm", "okay", "ok", "oh",
         "hmm", "ha", "right", "like"}
    )
    subordinating_conjunctions: frozenset[str] = frozenset(
        {"that", "because", "if", "while", "when", "which", "who",
         "whether", "since", "although"}
    )
    coordinating_conjunctions: frozenset[str] = frozenset({"and", "but", "or", "so"})
    determiners: frozenset[str] = frozenset({"the", "a", "an", "this", "these", "those"})
    adverb_list: frozenset[str] = frozenset(
        {"very", "really", "actually", "just", "maybe", "probably",
         "basically", "pretty"}
    )
    adverb_suffixes: tuple[str, ...] = ("ly",)
    subject_pronouns: frozenset[str] = frozenset({"i", "we", "you", "he", "she", "it", "they"})
    # Words a naive suffix rule would wrongly delete.
    protected_words: frozenset[str] = frozenset(
        {"family", "only", "early", "july", "italy", "apply", "supply",
         "reply", "assembly", "fly", "rely", "ally", "july"}
    )

    def is_subject(self, token: str) -> bool:
        return token in self.subject_pronouns or bool(_PLACEHOLDER.match(token))

    def is_conjunction(self, token: str) -> bool:
        return (token in self.coordinating_conjunctions
                or token in self.subordinating_conjunctions)

    def is_adverb(self, token: str) -> bool:
        if token in self.adverb_list:
            return True
        if token in self.protected_words:
            return False
        return len(token) >= 4 and any(token.endswith(s) for s in self.adverb_suffixes)

    def is_redundant(self, token: str) -> bool:
        return (token in self.interjections
                or token in self.subordinating_conjunctions
                or token in self.determiners
                or self.is_adverb(token))

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: sorted(v) if isinstance(v, (frozenset, set)) else list(v)
                for k, v in d.items()}

    @classmethod
    def from_dict(cls, data: dict) -> "Lexicons":
        kwargs = {}
        for name in cls.__dataclass_fields__:
            if name in data:
                values = [str(v).lower() for v in data[name]]
                kwargs[name] = tuple(values) if name == "adverb_suffixes" else frozenset(values)
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicons":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def split_phrases(sentence_tokens: list[str], lexicons: Lexicons) -> list[list[str]]:
    """Split a normalized token stream into raw phrase token lists.

    Boundaries open (a) at every boundary marker, (b) before every
    conjunction, (c) before a non-initial subject pronoun preceded by at
    least three tokens since the last boundary. Markers and boundary-initial
    conjunctions are dropped; empty segments discarded.
    """
    segments: list[list[str]] = []
    current: list[str] = []

    def flush():
        if current:
            segments.append(current.copy())
            current.clear()

    for pos, token in enumerate(sentence_tokens):
        if token == BOUNDARY_MARKER:
            flush()
            continue
        if lexicons.is_conjunction(token):
            # every conjunction opens a boundary and is itself dropped
            flush()
            continue
        if (lexicons.is_subject(token) and pos > 0
                and len(current) >= _SUBJECT_SPLIT_MIN_PREFIX):
            flush()
        current.append(token)
    flush()
    return segments


def filter_redundant(raw_tokens: list[str], lexicons: Lexicons) -> list[str]:
    """Drop interjections, subordinating conjunctions, determiners, adverbs."""
    return [t for t in raw_tokens if not lexicons.is_redundant(t)]


def extract_phrases(
    transcript: Transcript,
    lexicons: Lexicons | None = None,
    min_phrase_tokens: int = DEFAULT_MIN_PHRASE_TOKENS,
) -> list[SyntacticPhrase]:
    """Run the full preprocessing stack over a parsed transcript.

    Raises EmptyMeetingError when no phrase survives (clustering needs
    at least one point).
    """
    lexicons = lexicons or Lexicons()
    phrases: list[SyntacticPhrase] = []
    for utterance in transcript.utterances:
        for sentence in utterance.sentences:
            tokens = normalize(sentence).split()
            for raw in split_phrases(tokens, lexicons):
                kept = filter_redundant(raw, lexicons)
                if len(kept) < min_phrase_tokens:
                    continue
                phrases.append(
                    SyntacticPhrase(
                        phrase_id=len(phrases),
                        utterance_index=utterance.index,
                        tokens=kept,
                        raw_tokens=raw,
                    )
                )
    if not phrases:
        raise EmptyMeetingError(
            f"meeting {transcript.meeting_id!r}: no phrases survive preprocessing"
        )
    return phrases
