"""Exception hierarchy.

Domain errors (bad inputs for a well-defined operation) derive from
:class:`DomainError`; the CLI maps them to exit status 1.  An
:class:`InternalConsistencyError` means two exact computations that must
agree did not, which is always a bug; the CLI maps it to exit status 3.
"""


class AgrecError(Exception):
    pass


class ParseError(AgrecError, ValueError):
    """Text that does not match the rational / quadratic grammar."""


class DomainError(AgrecError, ValueError):
    pass


class DivergenceError(DomainError):
    pass


class InvalidRatioError(DomainError):
    pass


class InconsistentInitialDataError(DomainError):
    pass


class UnderdeterminedError(DomainError):
    pass


class NoLimitError(DomainError):
    pass


class DegenerateModeError(DomainError):
    pass


class ProbeError(DomainError):
    pass


class UnknownSequenceError(DomainError, LookupError):
    pass


class RadicandMismatchError(AgrecError, ValueError):
    """Two quadratic-field elements from different fields were combined."""


class ExtractionError(AgrecError, ArithmeticError):
    """A quadratic-field element has an irrational residue."""


class InternalConsistencyError(AgrecError, ArithmeticError):
    pass
