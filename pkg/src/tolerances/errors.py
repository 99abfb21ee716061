"""Exception hierarchy shared by the library and the CLI."""


class ToleranceError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ToleranceError, ValueError):
    """Input is well formed but violates a structural requirement."""


class UnknownElement(ValidationError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UniverseMismatch(ValidationError):
    pass


class ParseError(ToleranceError):
    """Input file could not be parsed."""


class ResourceLimitError(ToleranceError):
    """An exhaustive search would exceed a configured cap."""


class BlockLimitExceeded(ResourceLimitError):
    pass


class SearchLimitExceeded(ResourceLimitError):
    pass


class UniverseTooLarge(ResourceLimitError):
    pass
