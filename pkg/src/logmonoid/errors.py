"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: InputError -> 1, DomainError -> 2,
InternalCheckError -> 3.
"""


class LogMonoidError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LogMonoidError, ValueError):
    """Malformed or ill-typed input (bad document, wrong shape, bad residue)."""


class DomainError(LogMonoidError, ValueError):
    """Structurally valid input outside an operation's domain.

    Examples: empty ideal, non-toric blowup host, Hilbert basis of a
    non-pointed cone, multiplicity of a non-simplicial cone, composite
    residue characteristic.
    """


class InternalCheckError(LogMonoidError, AssertionError):
    """A runtime self-check failed (multiplicity decrease, fan axioms)."""
