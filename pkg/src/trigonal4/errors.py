"""Exception types shared across the package.

The CLI maps these onto process exit codes, so raising the right class
matters at the library boundary.
"""


class Trigonal4Error(Exception):
    """Base class for all package errors."""


class InvalidParameters(Trigonal4Error, ValueError):
    """Parameter point lies outside the smooth-family base."""


class ZeroTangent(Trigonal4Error, ValueError):
    """An operation requiring a nonzero tangent direction got zero."""


class DegenerateInput(Trigonal4Error, ValueError):
    """Input outside an operation's domain (zero polynomial, zero form, ...)."""


class StructuralError(Trigonal4Error, RuntimeError):
    """An internal certificate failed: something the mathematics guarantees
    did not hold, indicating a bug or an unsupported configuration."""


class OracleMismatch(Trigonal4Error, RuntimeError):
    """Two independent computations of the same value disagreed."""
