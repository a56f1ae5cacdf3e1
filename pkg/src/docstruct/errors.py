"""Exception types shared across the package."""


class DocstructError(Exception):
    """Base class for all package-specific errors."""


class ConfigurationError(DocstructError):
    """Invalid or inconsistent configuration values."""


class MalformedAnnotationError(DocstructError):
    """An annotation violates a structural invariant."""


class AnnotationConflictError(DocstructError):
    """Two annotations assign conflicting values to the same target."""


class ParseError(DocstructError):
    """A dataset file does not match the expected schema."""

    def __init__(self, path, field, message):
        self.path = str(path)
        self.field = field
        super().__init__(f"{self.path}: field '{field}': {message}")


class IngestionError(DocstructError):
    """A dataset references resources that cannot be loaded."""


class AlignmentError(DocstructError):
    """Parallel inputs that must be aligned have mismatched lengths."""


class GroupingError(DocstructError):
    """A query group that must be non-empty is empty."""
