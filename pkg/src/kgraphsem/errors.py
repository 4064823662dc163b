"""Exception types shared across the package."""


class PresentationError(ValueError):
    """The input violates a structural precondition (shapes, ranges, names)."""


class DocumentError(ValueError):
    """A document is structurally unreadable (bad JSON, missing fields)."""


class CertificateError(ValueError):
    """A certificate fails exact re-verification."""


class InternalCheckError(RuntimeError):
    """An internal consistency assertion failed.

    These guard mathematically impossible states (two deciders disagreeing,
    a certificate its own solver cannot re-verify). They indicate a bug in
    the engine, never a property of the input.
    """


class ResourceLimitError(RuntimeError):
    """A configured resource cap (universe size) would be exceeded."""


class ExampleError(ValueError):
    """Unknown or malformed built-in example name."""
