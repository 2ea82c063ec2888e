"""Exception types shared across the package.

Argument errors (malformed or mismatched input) use plain ValueError.
DomainError marks semantically invalid requests on well-formed input,
e.g. asking for the dimension of an empty variety or reflecting at a
loop vertex.  The CLI maps ValueError -> exit 1 and DomainError -> exit 2.
"""


class DomainError(Exception):
    """A precondition on the mathematical domain is violated."""


class InternalConsistencyError(AssertionError):
    """A cross-check that must never fail did fail; indicates a bug."""
