"""Exception hierarchy shared by every module.

The CLI maps the three top-level families onto exit codes, so new errors
should subclass one of them rather than ``Exception`` directly.
"""


class SymTripleError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInput(SymTripleError):
    """Input data violates a type invariant (CLI exit code 2)."""


class SchemaError(MalformedInput):
    """A JSON record does not match its schema; ``path`` locates the field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class PreconditionViolation(SymTripleError):
    """An operation was called outside its domain (CLI exit code 4)."""


class ExceedsBound(SymTripleError):
    """Enumeration passed its configured bound (CLI exit code 5)."""


class NotInvariant(PreconditionViolation):
    """A generator splits a block of a supposedly invariant partition."""


class NotAutomorphism(PreconditionViolation):
    """A generator fails to preserve the edge set or block multiset."""


class NotSelfPaired(PreconditionViolation):
    pass


class NotRegular(PreconditionViolation):
    pass


class RepresentativeDependent(PreconditionViolation):
    """A parameter changed with the choice of block, vertex or edge."""


class PMismatch(PreconditionViolation):
    pass


class TooLarge(PreconditionViolation):
    pass


class RefinementError(PreconditionViolation):
    pass


class EmptyTrace(RefinementError):
    pass


class OverlappingTraces(RefinementError):
    pass


class IncompleteCover(RefinementError):
    pass
