"""Exception types shared across the toolkit."""


class KgAlignError(Exception):
    """Base class for every error raised by this package."""


class InvalidSchema(KgAlignError, ValueError):
    """Schema violates its invariants (empty, duplicate or blank relation names)."""


class InvalidTriple(KgAlignError, ValueError):
    """Triple violates a structural invariant (empty field, self-referencing object)."""


class MalformedTriple(KgAlignError, ValueError):
    """Serialized triple text does not have the ``<subject, predicate, objects>`` shape."""


class EmptyField(KgAlignError, ValueError):
    """A parsed triple field is empty after whitespace normalization."""


class UnknownRelation(KgAlignError, ValueError):
    """Predicate is not part of the governing schema."""


class DocMismatch(KgAlignError, ValueError):
    """Extraction output is paired with a document carrying a different id."""


class UnknownDocId(KgAlignError, ValueError):
    """A doc id references a document that is not in the corpus."""


class FingerprintMismatch(KgAlignError, ValueError):
    """Index fingerprint does not match the knowledge graph it is queried against."""


class IndexFormatError(KgAlignError, ValueError):
    """Index file is truncated or carries an unknown magic/version."""


class ClientFailure(KgAlignError):
    """Base class for external-service failures."""


class EmbeddingFailure(ClientFailure):
    """Embedding backend failed; the transport cause is chained when available."""


class ExtractionFailure(ClientFailure):
    """Extraction backend failed; the transport cause is chained when available."""


class GenerationFailure(ClientFailure):
    """Generation backend failed; the transport cause is chained when available."""


class TransportError(KgAlignError):
    """Network-level failure (connection refused, reset, DNS)."""


class RequestTimeout(TransportError):
    """Request exceeded the configured timeout."""


class ProtocolError(KgAlignError):
    """Remote response is not valid JSON or misses required fields."""


class RemoteError(KgAlignError):
    """Remote returned 4xx, or 5xx after exhausting retries."""

    def __init__(self, status: int, message: str = ""):
        super().__init__(f"HTTP {status}" + (f": {message}" if message else ""))
        self.status = status
