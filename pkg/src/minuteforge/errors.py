"""Exception hierarchy shared across the pipeline."""


class MinuteForgeError(Exception):
    """Base class for all pipeline errors."""


class IngestionError(MinuteForgeError):
    """Raised when a transcript file cannot be decoded or parsed."""


class EmptyMeetingError(MinuteForgeError):
    """Raised when preprocessing leaves zero usable phrases."""


class EmbeddingHandshakeError(MinuteForgeError):
    """Base class for embeddings interchange-file violations."""

    def __init__(self, message: str, phrase_id: int | None = None):
        super().__init__(message)
        self.phrase_id = phrase_id


class EmbeddingCountMismatch(EmbeddingHandshakeError):
    pass


class EmbeddingDimensionMismatch(EmbeddingHandshakeError):
    pass


class EmbeddingDigestMismatch(EmbeddingHandshakeError):
    pass
