"""Transcript ingestion: line-oriented parsing, sentence splitting, normalization.

Transcripts are plain UTF-8 text files with one utterance per line. A line
may start with an anonymized speaker tag such as ``(PERSON1)`` or
``( organization13 )``; tagless lines inherit the most recent speaker.

Normalization lowers the text to ASR-like form but keeps clause punctuation
as an internal boundary marker so phrase extraction can still split on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import IngestionError

# Reserved token marking a clause boundary (from , ; :). Consumed by
# phrase extraction, never emitted in final output.
BOUNDARY_MARKER = "<BND>"

_SPEAKER_TAG = re.compile(r"^\(\s*(person|organization)\s*(\d+)\s*\)\s*", re.IGNORECASE)
_SENTENCE_END = re.compile(r"(?<=[.!?])\s+")
_CLAUSE_PUNCT = re.compile(r"[,;:]")
_DASH_SLASH = re.compile(r"[-‐-―/\\]")
_APOSTROPHE = re.compile(r"[’']")
_NON_WORD = re.compile(r"[^\w\s\x00]", re.UNICODE)
_WS = re.compile(r"\s+")


@dataclass
class Utterance:
    index: int
    speaker: str | None
    raw_text: str
    sentences: list[str] = field(default_factory=list)


@dataclass
class Transcript:
    meeting_id: str
    utterances: list[Utterance] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.utterances)


def parse_transcript(text: str | bytes, meeting_id: str = "") -> Transcript:
    """Parse a raw transcript document into ordered utterances.

    Each non-blank line becomes one utterance. A leading ``(PERSONn)`` /
    ``(ORGANIZATIONn)`` tag is stripped into the speaker field; lines
    without a tag inherit the most recent speaker.

    Raises IngestionError on invalid UTF-8, identifying the byte offset.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IngestionError(
                f"invalid UTF-8 at byte offset {exc.start}: {exc.reason}"
            ) from exc

    utterances: list[Utterance] = []
    current_speaker: str | None = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        match = _SPEAKER_TAG.match(line)
        if match:
            current_speaker = (match.group(1) + match.group(2)).upper()
            line = line[match.end():].strip()
            if not line:
                continue
        utterances.append(
            Utterance(
                index=len(utterances),
                speaker=current_speaker,
                raw_text=line,
                sentences=split_sentences(line),
            )
        )
    return Transcript(meeting_id=meeting_id, utterances=utterances)


def split_sentences(utterance_text: str) -> list[str]:
    """Split on ``.!?`` followed by whitespace or end; terminators kept.

    Segments without any word character are dropped, so punctuation-only
    inputs like "..." yield an empty list.
    """
    parts = _SENTENCE_END.split(utterance_text.strip())
    return [p for p in (part.strip() for part in parts) if re.search(r"\w", p)]


def normalize(sentence: str) -> str:
    """Lowercase ASR-style normalization preserving clause boundaries.

    Commas/semicolons/colons become the boundary marker; dashes and slashes
    become spaces; apostrophes are deleted fusing the word ("can't"->"cant");
    all other punctuation is removed; whitespace collapses to single spaces.
    """
    s = sentence.lower()
    s = _APOSTROPHE.sub("", s)
    s = _DASH_SLASH.sub(" ", s)
    # Sentinel keeps the boundary alive while other punctuation is stripped.
    s = _CLAUSE_PUNCT.sub(" \x00 ", s)
    s = _NON_WORD.sub("", s)
    s = s.replace("_", " ")
    s = s.replace("\x00", BOUNDARY_MARKER)
    return _WS.sub(" ", s).strip()


def serialize_utterances(transcript: Transcript) -> list[dict]:
    """JSON-friendly dump used by the `inspect` command."""
    return [
        {
            "index": u.index,
            "speaker": u.speaker,
            "raw_text": u.raw_text,
            "sentences": u.sentences,
        }
        for u in transcript.utterances
    ]
