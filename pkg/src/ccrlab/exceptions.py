"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: configuration and domain
problems exit with 2, size-ceiling violations with 3.
"""


class CcrLabError(Exception):
    """Base class for all errors raised by ccrlab."""


class ValidationError(CcrLabError, ValueError):
    """An input matrix or vector violates a structural precondition.

    The message names the violated check and the measured magnitude.
    """


class DomainError(CcrLabError, ValueError):
    """A scalar parameter lies outside its mathematical domain."""


class ConfigError(CcrLabError, ValueError):
    """A scenario or builder configuration is inconsistent."""


class SizeLimitError(CcrLabError):
    """A requested brute-force construction exceeds the dimension ceiling."""
